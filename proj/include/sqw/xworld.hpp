#pragma once

// The X-state world: two-qubit states whose nonzero entries form the letter X,
// spanned by the eight generators {1, E, lambda_i, tau_i}.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "sqw/linalg.hpp"
#include "sqw/relations.hpp"
#include "sqw/twoqubit.hpp"

namespace sqw::xworld {

struct XGenerators {
  Mat4 unit;
  Mat4 E;
  std::array<Mat4, 3> lambda;  // outer block {|00>, |11>}
  std::array<Mat4, 3> tau;     // inner block {|01>, |10>}
};

inline const XGenerators& generators() {
  static const XGenerators g = [] {
    const Complex i = kI;
    XGenerators x;
    x.unit = Mat4::identity();
    x.E = Mat4::diagonal({1.0, -1.0, -1.0, 1.0});
    x.lambda[0] = Mat4{0, 0, 0, 1,
                       0, 0, 0, 0,
                       0, 0, 0, 0,
                       1, 0, 0, 0};
    x.lambda[1] = Mat4{0, 0, 0, -i,
                       0, 0, 0, 0,
                       0, 0, 0, 0,
                       i, 0, 0, 0};
    x.lambda[2] = Mat4::diagonal({1.0, 0.0, 0.0, -1.0});
    x.tau[0] = Mat4{0, 0, 0, 0,
                    0, 0, 1, 0,
                    0, 1, 0, 0,
                    0, 0, 0, 0};
    x.tau[1] = Mat4{0, 0, 0, 0,
                    0, 0, -i, 0,
                    0, i, 0, 0,
                    0, 0, 0, 0};
    x.tau[2] = Mat4::diagonal({0.0, 1.0, -1.0, 0.0});
    return x;
  }();
  return g;
}

namespace detail {

inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // (0,1,2) and its cyclic shifts are even.
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace detail

/// Exact check of the full multiplication table of the X algebra:
/// lambda_i lambda_j = (1+E)/2 delta_ij + i eps_ijk lambda_k, the same for tau
/// with (1-E)/2, lambda tau = tau lambda = 0, and the E absorption rules.
inline RelationReport check_x_relations() {
  const auto& g = generators();
  const Mat4 zero;
  const Mat4 outer_unit = (g.unit + g.E) / 2.0;
  const Mat4 inner_unit = (g.unit - g.E) / 2.0;
  const char* idx[] = {"1", "2", "3"};

  RelationReport report;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      Mat4 lam_rhs = a == b ? outer_unit : zero;
      Mat4 tau_rhs = a == b ? inner_unit : zero;
      for (int c = 0; c < 3; ++c) {
        const int eps = detail::levi_civita(a, b, c);
        if (eps == 0) continue;
        lam_rhs = lam_rhs + Complex(0.0, eps) * g.lambda[c];
        tau_rhs = tau_rhs + Complex(0.0, eps) * g.tau[c];
      }
      const std::string ab = std::string(idx[a]) + idx[b];
      report.expect_equal("lambda" + ab, g.lambda[a] * g.lambda[b], lam_rhs);
      report.expect_equal("tau" + ab, g.tau[a] * g.tau[b], tau_rhs);
      report.expect_equal("lambda" + std::string(idx[a]) + " tau" + idx[b],
                          g.lambda[a] * g.tau[b], zero);
      report.expect_equal("tau" + std::string(idx[b]) + " lambda" + idx[a],
                          g.tau[b] * g.lambda[a], zero);
    }
  }
  for (int a = 0; a < 3; ++a) {
    const std::string i = idx[a];
    report.expect_equal("E lambda" + i, g.E * g.lambda[a], g.lambda[a]);
    report.expect_equal("lambda" + i + " E", g.lambda[a] * g.E, g.lambda[a]);
    report.expect_equal("E tau" + i, g.E * g.tau[a], -g.tau[a]);
    report.expect_equal("tau" + i + " E", g.tau[a] * g.E, -g.tau[a]);
  }
  return report;
}

/// Coefficients of rho = (1 + e E + P_i lambda_i + S_i tau_i) / 4.
struct XCoeffs {
  double e = 0.0;
  std::array<double, 3> P{};
  std::array<double, 3> S{};
};

inline double norm3(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline Mat4 x_matrix(const XCoeffs& c) {
  const auto& g = generators();
  Mat4 m = g.unit + c.e * g.E;
  for (int i = 0; i < 3; ++i) m = m + c.P[i] * g.lambda[i] + c.S[i] * g.tau[i];
  return m / 4.0;
}

/// Throws NotPSD (via validate_density) when the coefficients leave the
/// physical region |P| <= 1 + e, |S| <= 1 - e.
inline DensityMatrix assemble_x(const XCoeffs& c) { return validate_density(x_matrix(c)); }

/// {(1+e-|P|)/4, (1+e+|P|)/4, (1-e-|S|)/4, (1-e+|S|)/4}, ascending.
inline std::array<double, 4> x_spectrum(const XCoeffs& c) {
  const double p = norm3(c.P);
  const double s = norm3(c.S);
  std::array<double, 4> out{(1.0 + c.e + p) / 4.0, (1.0 + c.e - p) / 4.0, (1.0 - c.e + s) / 4.0,
                            (1.0 - c.e - s) / 4.0};
  std::sort(out.begin(), out.end());
  return out;
}

enum class XPureClass { Class1, Class2, NotPure };

inline const char* to_string(XPureClass k) {
  switch (k) {
    case XPureClass::Class1: return "Class1";
    case XPureClass::Class2: return "Class2";
    case XPureClass::NotPure: return "NotPure";
  }
  return "?";
}

/// Class1: e = 1, |P| = 2, S = 0 (pure states in the outer block).
/// Class2: e = -1, |S| = 2, P = 0 (pure states in the inner block).
inline XPureClass classify_pure_x(const XCoeffs& c, double tol = 1e-9) {
  const double p = norm3(c.P);
  const double s = norm3(c.S);
  if (std::abs(c.e - 1.0) <= tol && std::abs(p - 2.0) <= tol && s <= tol) return XPureClass::Class1;
  if (std::abs(c.e + 1.0) <= tol && std::abs(s - 2.0) <= tol && p <= tol) return XPureClass::Class2;
  return XPureClass::NotPure;
}

/// True when every anti-pattern entry is exactly zero.
inline bool has_x_pattern(const Mat4& m) {
  constexpr std::array<std::pair<int, int>, 8> holes{
      {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}}};
  return std::all_of(holes.begin(), holes.end(),
                     [&](auto rc) { return m(rc.first, rc.second) == Complex{}; });
}

}  // namespace sqw::xworld
