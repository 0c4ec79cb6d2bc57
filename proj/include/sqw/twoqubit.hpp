#pragma once

// Generic two-qubit density matrices and the Wootters concurrence pipeline.
// The pipeline here never looks at any closed-form structure of the input and
// serves as the reference against which the S3/X closed forms are checked.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "sqw/errors.hpp"
#include "sqw/linalg.hpp"

namespace sqw {

namespace tolerance {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-9;
}  // namespace tolerance

/// A 4x4 matrix known to be Hermitian, unit-trace and positive semidefinite
/// (within the tolerances above). Only validate_density constructs one.
class DensityMatrix {
 public:
  const Mat4& matrix() const noexcept { return m_; }

 private:
  explicit DensityMatrix(const Mat4& m) : m_(m) {}
  friend DensityMatrix validate_density(const Mat4& m);

  Mat4 m_;
};

/// Checks, in order: Hermitian, unit trace, PSD. The first violated invariant
/// is thrown with its measured magnitude.
inline DensityMatrix validate_density(const Mat4& m) {
  const double asym = frobenius_distance(m, m.adjoint());
  if (!(asym <= tolerance::kHermitian)) {
    throw Error(ErrorKind::NotHermitian, asym, "||rho - rho^dagger||_F = " + std::to_string(asym));
  }
  const double trace_err = std::abs(m.trace() - Complex(1.0));
  if (!(trace_err <= tolerance::kTrace)) {
    throw Error(ErrorKind::TraceNotOne, trace_err, "|Tr rho - 1| = " + std::to_string(trace_err));
  }
  const auto eig = herm_eigen(m, tolerance::kHermitian);
  if (eig.values[0] < -tolerance::kPsd) {
    throw Error(ErrorKind::NotPSD, eig.values[0],
                "smallest eigenvalue " + std::to_string(eig.values[0]));
  }
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

/// Tr(rho^2).
inline double purity(const DensityMatrix& rho) {
  const Mat4& m = rho.matrix();
  double s = 0.0;
  // Tr(rho rho) = sum |rho_ij|^2 for Hermitian rho.
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s += std::norm(m(r, c));
  return s;
}

inline Mat4 sigma_y_sigma_y() { return kron(pauli::y(), pauli::y()); }

/// (sigma_y x sigma_y) rho* (sigma_y x sigma_y)
inline Mat4 spin_flip(const Mat4& rho) {
  const Mat4 yy = sigma_y_sigma_y();
  return yy * rho.conjugate() * yy;
}

inline Mat4 spin_flip(const DensityMatrix& rho) { return spin_flip(rho.matrix()); }

/// Binary-entropy form of the entanglement of formation, log base 2,
/// clamped to [0, 1] with 0 log 0 = 0.
inline double eof_from_concurrence(double concurrence) {
  const double c = std::clamp(concurrence, 0.0, 1.0);
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  const auto h = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  const double e = h((1.0 + root) / 2.0) + h((1.0 - root) / 2.0);
  return std::clamp(e, 0.0, 1.0);
}

struct ConcurrenceReport {
  std::array<double, 4> omegas{};  // descending
  double concurrence = 0.0;
  double eof = 0.0;
};

/// Wootters concurrence of an arbitrary two-qubit state.
///
/// The Omega_i are the eigenvalues of sqrt(rho) rho~ sqrt(rho). They are
/// obtained as squared singular values of M = sqrt(rho) (sy x sy) sqrt(rho)^*,
/// since M M^dagger = sqrt(rho) rho~ sqrt(rho). Working with the singular
/// values of M directly keeps sqrt(Omega_i) accurate to ~1e-16 on
/// rank-deficient states, where taking square roots of eigenvalue noise would
/// cost ~1e-8.
inline ConcurrenceReport concurrence_oracle(const DensityMatrix& rho) {
  const Mat4 root = sqrt_psd(rho.matrix());
  const Mat4 factor = root * sigma_y_sigma_y() * root.conjugate();
  const auto sv = singular_values(factor);

  ConcurrenceReport report;
  for (std::size_t i = 0; i < 4; ++i) report.omegas[i] = sv[i] * sv[i];
  report.concurrence = std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
  report.concurrence = std::min(report.concurrence, 1.0);
  report.eof = eof_from_concurrence(report.concurrence);
  return report;
}

/// 2 |psi_1 psi_4 - psi_2 psi_3| for a normalized pure state.
inline double pure_concurrence(const Vec4& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

}  // namespace sqw
