#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "sqw/linalg.hpp"
#include "sqw/s3world.hpp"
#include "test_support.hpp"

namespace {

using namespace sqw;
using sqw::testing::Rng;

Eigen::Matrix4cd to_eigen(const Mat4& m) {
  Eigen::Matrix4cd e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = m(r, c);
  return e;
}

double residual(const Mat4& m, double lambda, const Vec4& v) {
  return (m * v - Complex(lambda) * v).norm();
}

TEST(Kernel, TraceOfIdentityIsFour) { EXPECT_EQ(Mat4::identity().trace(), Complex(4.0)); }

TEST(Kernel, AdjointIsAnExactInvolution) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = sqw::testing::complex_gaussian(rng);
    EXPECT_EQ(m.adjoint().adjoint(), m);
    EXPECT_EQ(m.conjugate().conjugate(), m);
  }
}

TEST(Kernel, KronSigmaYSigmaYHandExpanded) {
  // sy x sy = [[0*sy, -i*sy], [i*sy, 0*sy]]; (-i)(-i) = -1 in the corners and
  // (-i)(i) = 1 on the inner anti-diagonal.
  const Mat4 expected{0, 0, 0, -1,
                      0, 0, 1, 0,
                      0, 1, 0, 0,
                      -1, 0, 0, 0};
  EXPECT_EQ(kron(pauli::y(), pauli::y()), expected);
}

TEST(Kernel, KronIsBilinearOnSmallIntegers) {
  Rng rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int i = 0; i < 50; ++i) {
    Mat2 a{double(d(rng)), Complex(d(rng), d(rng)), double(d(rng)), double(d(rng))};
    Mat2 b{Complex(d(rng), d(rng)), double(d(rng)), double(d(rng)), double(d(rng))};
    Mat2 c{double(d(rng)), double(d(rng)), Complex(0, d(rng)), double(d(rng))};
    EXPECT_EQ(kron(a + b, c), kron(a, c) + kron(b, c));
    EXPECT_EQ(kron(c, a + b), kron(c, a) + kron(c, b));
  }
}

TEST(Kernel, TraceIsCyclic) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Mat4 a = sqw::testing::random_hermitian(rng);
    const Mat4 b = sqw::testing::random_density(rng) + Complex(0, 0.3) * a;
    EXPECT_LE(std::abs((a * b).trace() - (b * a).trace()), 1e-12);
  }
}

TEST(Kernel, EntryAccessIsBoundsChecked) {
  Mat4 m;
  EXPECT_THROW(m(4, 0), std::out_of_range);
  EXPECT_THROW(m(0, 4), std::out_of_range);
  Vec4 v;
  EXPECT_THROW(v[4], std::out_of_range);
}

TEST(Kernel, RejectsNonFiniteEntries) {
  const double nan = std::nan("");
  EXPECT_THROW((Mat2{1.0, nan, 0.0, 1.0}), Error);
  EXPECT_THROW((Vec4{1.0, 0.0, std::numeric_limits<double>::infinity(), 0.0}), Error);
  EXPECT_THROW((Mat2{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST(Kernel, FrobeniusDistance) {
  EXPECT_DOUBLE_EQ(frobenius_distance(Mat4::identity(), Mat4{}), 2.0);
}

TEST(HermEigen, DiagonalInputIsExact) {
  const auto eig = herm_eigen(Mat4::diagonal({0.5, 0.0, 0.5, 0.0}));
  EXPECT_EQ(eig.values, (std::array<double, 4>{0.0, 0.0, 0.5, 0.5}));
}

TEST(HermEigen, IeMatrixMatchesCharacteristicPolynomial) {
  const Mat4 m = s3::assemble_s3({1.0, -1.0 / 6, -1.0 / 6, -1.0 / 6});
  // Oracle: det(m - x) vanishes at 0 and 1/2; with Tr m = 1 and Tr m^2 = 1/2
  // the multiset is forced to {0, 0, 1/2, 1/2}.
  EXPECT_LE(std::abs(sqw::testing::char_poly(m, 0.0)), 1e-15);
  EXPECT_LE(std::abs(sqw::testing::char_poly(m, 0.5)), 1e-15);
  EXPECT_NEAR(m.trace().real(), 1.0, 1e-15);
  EXPECT_NEAR((m * m).trace().real(), 0.5, 1e-15);

  const auto eig = herm_eigen(m);
  const std::array<double, 4> expected{0.0, 0.0, 0.5, 0.5};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(eig.values[i], expected[i], 1e-12);
}

TEST(HermEigen, PureStateSpectrum) {
  const auto eig = herm_eigen(s3::assemble_s3({1.0, 0.0, -0.5, 0.0}));
  const std::array<double, 4> expected{0.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(eig.values[i], expected[i], 1e-14);
}

TEST(HermEigen, RandomHermitianAgainstEigen) {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Mat4 m = sqw::testing::random_hermitian(rng);
    const auto eig = herm_eigen(m);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> ref(to_eigen(m));
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      EXPECT_NEAR(eig.values[i], ref.eigenvalues()(i), 1e-12);
      EXPECT_LE(residual(m, eig.values[i], eig.vectors[i]), 1e-10);
      sum += eig.values[i];
      for (int j = 0; j < 4; ++j) {
        const Complex ip = inner(eig.vectors[i], eig.vectors[j]);
        EXPECT_LE(std::abs(ip - Complex(i == j ? 1.0 : 0.0)), 1e-10);
      }
    }
    EXPECT_NEAR(sum, m.trace().real(), 1e-10);
    EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
  }
}

TEST(HermEigen, DegenerateClusterProjectorResidual) {
  // Eigenvalue 1/2 with multiplicity 2: compare the spectral projector, not
  // individual vectors.
  const Mat4 m = s3::assemble_s3({1.0, -1.0 / 6, -1.0 / 6, -1.0 / 6});
  const auto eig = herm_eigen(m);
  const Mat4 projector = outer(eig.vectors[2], eig.vectors[2]) + outer(eig.vectors[3], eig.vectors[3]);
  EXPECT_LE(frobenius_distance(Complex(0.5) * projector, m), 1e-12);
}

TEST(HermEigen, IsDeterministic) {
  Rng rng(8);
  const Mat4 m = sqw::testing::random_hermitian(rng);
  const auto x = herm_eigen(m);
  const auto y = herm_eigen(m);
  EXPECT_EQ(x.values, y.values);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(x.vectors[i], y.vectors[i]);
}

TEST(HermEigen, RejectsNonHermitian) {
  Mat4 m = Mat4::identity();
  m(0, 1) = 1.0;
  try {
    herm_eigen(m);
    FAIL() << "expected NotHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
    EXPECT_NEAR(e.magnitude(), std::sqrt(2.0), 1e-15);
  }
}

TEST(SqrtPsd, Identity) { EXPECT_LE(max_abs_diff(sqrt_psd(Mat4::identity()), Mat4::identity()), 1e-15); }

TEST(SqrtPsd, Diagonal) {
  EXPECT_EQ(sqrt_psd(Mat4::diagonal({4.0, 1.0, 0.0, 0.0})), Mat4::diagonal({2.0, 1.0, 0.0, 0.0}));
}

TEST(SqrtPsd, RandomSquaresBack) {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const Mat4 m = sqw::testing::random_density(rng);
    const Mat4 r = sqrt_psd(m);
    EXPECT_LE(frobenius_distance(r * r, m), 1e-9);
    EXPECT_LE(frobenius_distance(r, r.adjoint()), 1e-15);
    EXPECT_GE(herm_eigen(r).values[0], -1e-10);
  }
}

TEST(SqrtPsd, ClampsTinyNegativeEigenvalues) {
  const Mat4 r = sqrt_psd(Mat4::diagonal({-5e-11, 1.0, 0.0, 0.25}));
  EXPECT_EQ(r, Mat4::diagonal({0.0, 1.0, 0.0, 0.5}));
}

TEST(SqrtPsd, RejectsNegativeEigenvalue) {
  try {
    sqrt_psd(Mat4::diagonal({-1e-3, 1.0, 0.0, 0.0}));
    FAIL() << "expected NotPSD";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPSD);
    EXPECT_DOUBLE_EQ(e.magnitude(), -1e-3);
  }
}

TEST(SingularValues, AgainstEigenSvd) {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = sqw::testing::complex_gaussian(rng);
    const auto sv = singular_values(m);
    Eigen::JacobiSVD<Eigen::Matrix4cd> ref(to_eigen(m));
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(sv[i], ref.singularValues()(i), 1e-12);
  }
}

TEST(SingularValues, RankDeficientSmallValuesStayTiny) {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec4 u = sqw::testing::random_pure(rng);
    const Vec4 v = sqw::testing::random_pure(rng);
    const auto sv = singular_values(outer(u, v));
    EXPECT_NEAR(sv[0], 1.0, 1e-14);
    for (int i = 1; i < 4; ++i) EXPECT_LE(sv[i], 1e-14);
  }
}

TEST(ExpIHermitian, IsUnitary) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat4 u = exp_i_hermitian(sqw::testing::random_hermitian(rng));
    EXPECT_LE(max_abs_diff(u * u.adjoint(), Mat4::identity()), 1e-12);
  }
}

}  // namespace
