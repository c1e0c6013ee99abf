#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "svbound/context.hpp"
#include "svbound/errors.hpp"
#include "svbound/matrix.hpp"
#include "svbound/svd_oracle.hpp"
#include "test_support.hpp"

namespace svbound {
namespace {

using namespace std::complex_literals;

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
  EXPECT_THROW(ComplexMatrix(1, 2, {1.0, Complex(NAN, 0.0)}), DomainError);
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(0.0, INFINITY)}), DomainError);
}

TEST(ComplexMatrix, RejectsWrongEntryCount) {
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
  EXPECT_THROW(ComplexMatrix({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST(FrobeniusSq, Examples) {
  EXPECT_DOUBLE_EQ(frobenius_sq(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}), 30.0);
  EXPECT_DOUBLE_EQ(frobenius_sq(ComplexMatrix::identity(5)), 5.0);
  EXPECT_DOUBLE_EQ(frobenius_sq(ComplexMatrix{{1i, 0.0}, {0.0, 2i}}), 5.0);
}

TEST(Gram, Examples) {
  EXPECT_EQ(gram(ComplexMatrix::diagonal({1.0, 2.0})), ComplexMatrix::diagonal({1.0, 4.0}));
  EXPECT_EQ(gram(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}), ComplexMatrix::identity(2));

  const ComplexMatrix g = gram(ComplexMatrix{{1.0, 1.0}, {0.0, std::sqrt(2.0)}});
  const ComplexMatrix want{{1.0, 1.0}, {1.0, 3.0}};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(g(i, j) - want(i, j)), 0.0, 1e-15);
  }
}

TEST(Gram, RejectsNonSquare) {
  EXPECT_THROW(gram(ComplexMatrix(2, 3, std::vector<Complex>(6, 1.0))), DimensionError);
}

TEST(Gram, IsExactlyHermitianAndPsd) {
  Xoshiro256 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.uniform_int(0, 6);
    const ComplexMatrix a = testing::random_complex_matrix(n, n, rng);
    const ComplexMatrix g = gram(a);
    EXPECT_EQ(hermitian_defect(g), 0.0);
    const double s = frobenius_sq(a);
    const std::vector<double> eig = jacobi_hermitian_eigen(g);
    for (double e : eig) EXPECT_GE(e, -1e-12 * s);
    // Trace of the Gram matrix is the squared Frobenius norm.
    const double sum = std::accumulate(eig.begin(), eig.end(), 0.0);
    EXPECT_LE(testing::relative_error(sum, s), 1e-10);
  }
}

TEST(BuildContext, DiagonalExample) {
  const BoundContext ctx = build_context(ComplexMatrix::diagonal({1.0, 2.0}));
  EXPECT_EQ(ctx.n, 2u);
  EXPECT_DOUBLE_EQ(ctx.frob_sq, 5.0);
  EXPECT_NEAR(ctx.log_det_sq.value(), 4.0, 1e-14);
  EXPECT_EQ(ctx.gram, ComplexMatrix::diagonal({1.0, 4.0}));
}

TEST(BuildContext, Identity) {
  const BoundContext ctx = build_context(ComplexMatrix::identity(3));
  EXPECT_EQ(ctx.n, 3u);
  EXPECT_DOUBLE_EQ(ctx.frob_sq, 3.0);
  EXPECT_FALSE(ctx.log_det_sq.is_zero());
  EXPECT_EQ(ctx.log_det_sq.log_mag(), 0.0);
}

TEST(BuildContext, Errors) {
  EXPECT_THROW(build_context(ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}), SingularMatrixError);
  EXPECT_THROW(build_context(ComplexMatrix{{3.0}}), DimensionError);
  EXPECT_THROW(build_context(ComplexMatrix(2, 3, std::vector<Complex>(6, 1.0))), DimensionError);
}

}  // namespace
}  // namespace svbound
