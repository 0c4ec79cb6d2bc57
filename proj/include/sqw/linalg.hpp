#pragma once

// Small dense complex matrix kernel. Everything in the library is 2x2 or 4x4,
// so storage is a flat std::array and all algorithms are unrolled-free loops
// over compile-time sizes.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sqw/errors.hpp"

namespace sqw {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

namespace detail {

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " out of range for dimension " + std::to_string(n));
  }
}

}  // namespace detail

template <std::size_t N>
class Vector {
 public:
  Vector() { data_.fill(Complex{}); }

  Vector(std::initializer_list<Complex> values) {
    if (values.size() != N) {
      throw std::invalid_argument("Vector: expected " + std::to_string(N) + " components");
    }
    std::copy(values.begin(), values.end(), data_.begin());
    for (const auto& z : data_) {
      if (!detail::is_finite(z)) throw Error(ErrorKind::NonFinite, 0.0, "Vector component is not finite");
    }
  }

  static constexpr std::size_t size() { return N; }

  Complex& operator[](std::size_t i) {
    detail::require_index(i, N, "Vector");
    return data_[i];
  }
  const Complex& operator[](std::size_t i) const {
    detail::require_index(i, N, "Vector");
    return data_[i];
  }

  double norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  friend Vector operator*(const Complex& s, Vector v) {
    for (auto& z : v.data_) z *= s;
    return v;
  }
  friend Vector operator+(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < N; ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Vector operator-(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < N; ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::array<Complex, N> data_;
};

// <a|b>, conjugate-linear in the first argument.
template <std::size_t N>
Complex inner(const Vector<N>& a, const Vector<N>& b) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Dense N x N complex matrix, row-major. Equality is exact entrywise.
template <std::size_t N>
class Matrix {
 public:
  Matrix() { data_.fill(Complex{}); }

  /// Row-major list of exactly N*N finite entries.
  Matrix(std::initializer_list<Complex> values) {
    if (values.size() != N * N) {
      throw std::invalid_argument("Matrix: expected " + std::to_string(N * N) + " entries");
    }
    std::copy(values.begin(), values.end(), data_.begin());
    for (const auto& z : data_) {
      if (!detail::is_finite(z)) throw Error(ErrorKind::NonFinite, 0.0, "Matrix entry is not finite");
    }
  }

  static constexpr std::size_t rows() { return N; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m.data_[i * N + i] = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m.data_[i * N + i] = d[i];
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) {
    detail::require_index(r, N, "Matrix row");
    detail::require_index(c, N, "Matrix column");
    return data_[r * N + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    detail::require_index(r, N, "Matrix row");
    detail::require_index(c, N, "Matrix column");
    return data_[r * N + c];
  }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m.data_[c * N + r] = std::conj(data_[r * N + c]);
    return m;
  }

  Matrix conjugate() const {
    Matrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.data_[i] = std::conj(data_[i]);
    return m;
  }

  Matrix transpose() const {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m.data_[c * N + r] = data_[r * N + c];
    return m;
  }

  Complex trace() const {
    Complex s{};
    for (std::size_t i = 0; i < N; ++i) s += data_[i * N + i];
    return s;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  Vector<N> column(std::size_t c) const {
    Vector<N> v;
    for (std::size_t r = 0; r < N; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto& z : a.data_) z = -z;
    return a;
  }
  friend Matrix operator*(const Complex& s, Matrix a) {
    for (auto& z : a.data_) z *= s;
    return a;
  }
  friend Matrix operator*(Matrix a, const Complex& s) { return s * std::move(a); }
  friend Matrix operator/(Matrix a, const Complex& s) {
    for (auto& z : a.data_) z /= s;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a.data_[r * N + k];
        for (std::size_t c = 0; c < N; ++c) m.data_[r * N + c] += ark * b.data_[k * N + c];
      }
    return m;
  }
  friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
    Vector<N> out;
    for (std::size_t r = 0; r < N; ++r) {
      Complex s{};
      for (std::size_t c = 0; c < N; ++c) s += a.data_[r * N + c] * v[c];
      out[r] = s;
    }
    return out;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < N; ++r) {
      os << (r == 0 ? "[" : " ");
      for (std::size_t c = 0; c < N; ++c) {
        const Complex z = m.data_[r * N + c];
        os << (c == 0 ? "" : ", ") << z.real();
        if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
      }
      os << (r + 1 == N ? "]" : "\n");
    }
    return os;
  }

 private:
  std::array<Complex, N * N> data_;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Vec4 = Vector<4>;

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b - b * a;
}

template <std::size_t N>
double frobenius_distance(const Matrix<N>& a, const Matrix<N>& b) {
  return (a - b).frobenius_norm();
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

/// Entrywise |a - b| <= tol.
template <std::size_t N>
bool approx_equal(const Matrix<N>& a, const Matrix<N>& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

template <std::size_t N>
Matrix<N> outer(const Vector<N>& a, const Vector<N>& b) {
  Matrix<N> m;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

namespace pauli {
inline Mat2 x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
inline Mat2 y() { return Mat2{0.0, -kI, kI, 0.0}; }
inline Mat2 z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }
}  // namespace pauli

namespace detail {

// Unitary 2x2 rotation [[c, s], [-s*conj(w), c*conj(w)]] acting on the (p, q)
// plane that diagonalizes the Hermitian block [[app, apq], [conj(apq), aqq]],
// where w = apq / |apq|.
struct PlaneRotation {
  double c = 1.0;
  double s = 0.0;
  Complex phase{1.0, 0.0};  // apq / |apq|
  bool identity = true;
};

inline PlaneRotation hermitian_rotation(double app, double aqq, Complex apq) {
  PlaneRotation rot;
  const double g = std::abs(apq);
  if (g == 0.0) return rot;
  const double theta = (aqq - app) / (2.0 * g);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  rot.c = 1.0 / std::sqrt(t * t + 1.0);
  rot.s = t * rot.c;
  rot.phase = apq / g;
  rot.identity = false;
  return rot;
}

// Column update X <- X * U with U the embedded plane rotation:
//   x_p' = c x_p - s conj(w) x_q,   x_q' = s x_p + c conj(w) x_q
template <std::size_t N>
void rotate_columns(Matrix<N>& x, std::size_t p, std::size_t q, const PlaneRotation& rot) {
  const Complex wbar = std::conj(rot.phase);
  for (std::size_t r = 0; r < N; ++r) {
    const Complex xp = x(r, p);
    const Complex xq = x(r, q);
    x(r, p) = rot.c * xp - rot.s * wbar * xq;
    x(r, q) = rot.s * xp + rot.c * wbar * xq;
  }
}

// Row update X <- U^dagger * X.
template <std::size_t N>
void rotate_rows(Matrix<N>& x, std::size_t p, std::size_t q, const PlaneRotation& rot) {
  const Complex w = rot.phase;
  for (std::size_t c = 0; c < N; ++c) {
    const Complex xp = x(p, c);
    const Complex xq = x(q, c);
    x(p, c) = rot.c * xp - rot.s * w * xq;
    x(q, c) = rot.s * xp + rot.c * w * xq;
  }
}

template <std::size_t N>
double off_diagonal_norm2(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (r != c) s += std::norm(a(r, c));
  return s;
}

}  // namespace detail

template <std::size_t N>
struct HermitianEigen {
  std::array<double, N> values{};      // ascending
  std::array<Vector<N>, N> vectors{};  // vectors[k] pairs with values[k]
};

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Throws NotHermitian when ||m - m^dagger||_F > tol. The input is symmetrized
/// before the sweeps. Output is deterministic for identical input; within a
/// degenerate cluster the eigenvectors only span the eigenspace.
template <std::size_t N>
HermitianEigen<N> herm_eigen(const Matrix<N>& m, double tol = 1e-10) {
  const double asym = frobenius_distance(m, m.adjoint());
  if (!(asym <= tol)) {
    throw Error(ErrorKind::NotHermitian, asym, "||m - m^dagger||_F = " + std::to_string(asym));
  }
  Matrix<N> a = 0.5 * (m + m.adjoint());
  Matrix<N> v = Matrix<N>::identity();

  const double scale = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());
  const double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm2(a) <= (eps * scale) * (eps * scale) * 1e-4) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        if (std::abs(apq) <= eps * eps * scale) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const auto rot = detail::hermitian_rotation(a(p, p).real(), a(q, q).real(), apq);
        detail::rotate_columns(a, p, q, rot);
        detail::rotate_rows(a, p, q, rot);
        detail::rotate_columns(v, p, q, rot);
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    Vector<N> col = v.column(order[k]);
    const double n = col.norm();
    out.vectors[k] = Complex(1.0 / n) * col;
  }
  return out;
}

/// V f(Lambda) V^dagger for a Hermitian decomposition.
template <std::size_t N, typename F>
Matrix<N> spectral_map(const HermitianEigen<N>& eig, F&& f) {
  Matrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out = out + Complex(f(eig.values[k])) * outer(eig.vectors[k], eig.vectors[k]);
  }
  return out;
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything lower is NotPSD.
template <std::size_t N>
Matrix<N> sqrt_psd(const Matrix<N>& m) {
  constexpr double kClamp = -1e-10;
  const auto eig = herm_eigen(m);
  if (eig.values[0] < kClamp) {
    throw Error(ErrorKind::NotPSD, eig.values[0],
                "smallest eigenvalue " + std::to_string(eig.values[0]));
  }
  Matrix<N> r = spectral_map(eig, [](double x) { return std::sqrt(std::max(x, 0.0)); });
  return 0.5 * (r + r.adjoint());
}

/// exp(i h) for Hermitian h.
template <std::size_t N>
Matrix<N> exp_i_hermitian(const Matrix<N>& h) {
  const auto eig = herm_eigen(h);
  Matrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out = out + std::exp(kI * eig.values[k]) * outer(eig.vectors[k], eig.vectors[k]);
  }
  return out;
}

/// Singular values, descending, by one-sided (Hestenes) Jacobi on the columns.
/// Small singular values come out with absolute error ~ eps * ||m||, which is
/// what the concurrence oracle needs on rank-deficient states.
template <std::size_t N>
std::array<double, N> singular_values(const Matrix<N>& m) {
  Matrix<N> x = m;
  const double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (std::size_t r = 0; r < N; ++r) {
          alpha += std::norm(x(r, p));
          beta += std::norm(x(r, q));
          gamma += std::conj(x(r, p)) * x(r, q);
        }
        if (std::abs(gamma) <= eps * std::sqrt(alpha * beta) || std::abs(gamma) == 0.0) continue;
        detail::rotate_columns(x, p, q, detail::hermitian_rotation(alpha, beta, gamma));
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  std::array<double, N> s{};
  for (std::size_t c = 0; c < N; ++c) s[c] = x.column(c).norm();
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace sqw
