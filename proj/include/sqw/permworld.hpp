#pragma once

// Brute-force S4: permutations of four points, their matrix representation and
// the full subgroup lattice.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sqw/errors.hpp"
#include "sqw/linalg.hpp"

namespace sqw::perm {

/// Bijection of {1, 2, 3, 4}. Stored 0-based.
class Perm4 {
 public:
  /// Identity.
  Perm4() : images_{0, 1, 2, 3} {}

  /// From 1-based images: Perm4({2, 3, 1, 4}) sends 1->2, 2->3, 3->1, 4->4.
  Perm4(std::array<int, 4> one_based) {
    std::array<bool, 4> seen{};
    for (std::size_t i = 0; i < 4; ++i) {
      const int v = one_based[i];
      if (v < 1 || v > 4 || seen[v - 1]) {
        throw Error(ErrorKind::PreconditionViolated, v, "Perm4 images must be a bijection on {1,2,3,4}");
      }
      seen[v - 1] = true;
      images_[i] = static_cast<std::uint8_t>(v - 1);
    }
  }

  /// Image of the 1-based point k.
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)) + 1; }

  /// Left-to-right composition: (p * q)(k) = q(p(k)). With this convention
  /// perm_matrix(p * q) = perm_matrix(p) * perm_matrix(q).
  friend Perm4 operator*(const Perm4& p, const Perm4& q) {
    Perm4 r;
    for (std::size_t i = 0; i < 4; ++i) r.images_[i] = q.images_[p.images_[i]];
    return r;
  }

  Perm4 inverse() const {
    Perm4 r;
    for (std::size_t i = 0; i < 4; ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  bool is_identity() const { return *this == Perm4(); }

  int order() const {
    int n = 1;
    for (Perm4 p = *this; !p.is_identity(); p = p * *this) ++n;
    return n;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? " " : "") + std::to_string(images_[i] + 1);
    return s + "]";
  }

  friend bool operator==(const Perm4&, const Perm4&) = default;
  friend auto operator<=>(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> images_;
};

/// All 24 permutations in lexicographic order of their image lists.
inline const std::vector<Perm4>& all_perms() {
  static const std::vector<Perm4> perms = [] {
    std::vector<Perm4> out;
    std::array<int, 4> img{1, 2, 3, 4};
    do {
      out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return perms;
}

/// Row i carries a single 1 in column p(i).
inline Mat4 perm_matrix(const Perm4& p) {
  Mat4 m;
  for (int i = 1; i <= 4; ++i) m(i - 1, p(i) - 1) = 1.0;
  return m;
}

/// A subgroup, stored as its sorted element list. Two subgroups are equal iff
/// their element lists are equal; ordering is by size, then lexicographic.
class Subgroup {
 public:
  /// Closure of the generators under composition.
  static Subgroup generated_by(const std::vector<Perm4>& gens) {
    std::set<Perm4> elems{Perm4()};
    std::vector<Perm4> frontier{Perm4()};
    while (!frontier.empty()) {
      std::vector<Perm4> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          const Perm4 y = x * g;
          if (elems.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    return Subgroup(std::vector<Perm4>(elems.begin(), elems.end()));
  }

  const std::vector<Perm4>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool contains(const Perm4& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool is_closed() const {
    for (const auto& x : elements_) {
      if (!contains(x.inverse())) return false;
      for (const auto& y : elements_)
        if (!contains(x * y)) return false;
    }
    return contains(Perm4());
  }

  bool is_abelian() const {
    for (const auto& x : elements_)
      for (const auto& y : elements_)
        if (x * y != y * x) return false;
    return true;
  }

  bool has_element_of_order(int k) const {
    return std::any_of(elements_.begin(), elements_.end(), [k](const Perm4& p) { return p.order() == k; });
  }

  friend bool operator==(const Subgroup& x, const Subgroup& y) { return x.elements_ == y.elements_; }
  friend bool operator<(const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements_ < y.elements_;
  }

 private:
  explicit Subgroup(std::vector<Perm4> sorted) : elements_(std::move(sorted)) {}
  std::vector<Perm4> elements_;
};

/// Every subgroup of S4, in canonical order. Every subgroup of S4 is generated
/// by at most two elements, so closing all generator sets of size <= 2 is
/// exhaustive.
inline std::vector<Subgroup> enumerate_subgroups() {
  const auto& g = all_perms();
  std::set<Subgroup> found;
  found.insert(Subgroup::generated_by({}));
  for (std::size_t i = 0; i < g.size(); ++i) {
    found.insert(Subgroup::generated_by({g[i]}));
    for (std::size_t j = i + 1; j < g.size(); ++j) found.insert(Subgroup::generated_by({g[i], g[j]}));
  }
  return {found.begin(), found.end()};
}

/// The six permutations fixing the 1-based point k.
inline Subgroup stabilizer(int k) {
  if (k < 1 || k > 4) {
    throw Error(ErrorKind::PreconditionViolated, k, "stabilizer point must be in 1..4");
  }
  std::vector<Perm4> fixing;
  for (const auto& p : all_perms())
    if (p(k) == k) fixing.push_back(p);
  return Subgroup::generated_by(fixing);
}

enum class SubgroupType { Trivial, C2, C3, C4, V4, C6, S3, D4, A4, S4, Unknown };

inline const char* to_string(SubgroupType t) {
  switch (t) {
    case SubgroupType::Trivial: return "1";
    case SubgroupType::C2: return "C2";
    case SubgroupType::C3: return "C3";
    case SubgroupType::C4: return "C4";
    case SubgroupType::V4: return "V4";
    case SubgroupType::C6: return "C6";
    case SubgroupType::S3: return "S3";
    case SubgroupType::D4: return "D4";
    case SubgroupType::A4: return "A4";
    case SubgroupType::S4: return "S4";
    case SubgroupType::Unknown: return "?";
  }
  return "?";
}

/// Isomorphism type, valid for subgroups of S4 (where each order 8, 12, 24
/// admits a single type).
inline SubgroupType classify(const Subgroup& h) {
  switch (h.order()) {
    case 1: return SubgroupType::Trivial;
    case 2: return SubgroupType::C2;
    case 3: return SubgroupType::C3;
    case 4: return h.has_element_of_order(4) ? SubgroupType::C4 : SubgroupType::V4;
    case 6: return h.is_abelian() ? SubgroupType::C6 : SubgroupType::S3;
    case 8: return SubgroupType::D4;
    case 12: return SubgroupType::A4;
    case 24: return SubgroupType::S4;
    default: return SubgroupType::Unknown;
  }
}

}  // namespace sqw::perm
