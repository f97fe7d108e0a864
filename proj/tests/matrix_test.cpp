#include <gtest/gtest.h>

#include "yperiod/errors.hpp"
#include "yperiod/matrix.hpp"

using namespace yperiod;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST(Matrix, Product) {
  const SquareMatrix x{{q(1), q(1), q(0)}, {q(0), q(1), q(1)}, {q(0), q(0), q(1)}};
  const SquareMatrix a{{q(2), q(0), q(0)}, {q(1), q(6), q(0)}, {q(0), q(1), q(5)}};
  const SquareMatrix expected{{q(3), q(6), q(0)}, {q(1), q(7), q(5)}, {q(0), q(1), q(5)}};
  EXPECT_EQ(x * a, expected);
  EXPECT_EQ(SquareMatrix::identity(3) * a, a);
  EXPECT_THROW(x * SquareMatrix::identity(2), std::invalid_argument);
}

TEST(Matrix, AntiTriangularPredicates) {
  const SquareMatrix lower{{q(0), q(4)}, {q(1), q(7)}};
  const SquareMatrix not_lower{{q(3), q(4)}, {q(1), q(7)}};
  EXPECT_TRUE(lower.is_anti_lower_triangular());
  EXPECT_FALSE(not_lower.is_anti_lower_triangular());
  EXPECT_FALSE(lower.is_anti_upper_triangular());
  const SquareMatrix upper{{q(1), q(2), q(3)}, {q(4), q(5), q(0)}, {q(6), q(0), q(0)}};
  EXPECT_TRUE(upper.is_anti_upper_triangular());
  EXPECT_FALSE(upper.is_anti_lower_triangular());
  EXPECT_TRUE(SquareMatrix::longest_weyl(4).is_anti_diagonal());
  EXPECT_FALSE(SquareMatrix::identity(2).is_anti_diagonal());
  EXPECT_TRUE(SquareMatrix::identity(1).is_anti_diagonal());
}

TEST(Matrix, NorthwestBound) {
  const SquareMatrix m{{q(0), q(0), q(1)}, {q(0), q(2), q(0)}, {q(3), q(0), q(0)}};
  EXPECT_EQ(m.northwest_vanishing_bound(), 4);
  const SquareMatrix n{{q(0), q(0), q(0)}, {q(0), q(0), q(1)}, {q(0), q(0), q(0)}};
  EXPECT_EQ(n.northwest_vanishing_bound(), 5);
}

TEST(Matrix, PartsAndWeylReversal) {
  const SquareMatrix d = SquareMatrix::diagonal({q(1), q(2), q(3)});
  const SquareMatrix w = SquareMatrix::longest_weyl(3);
  EXPECT_EQ(w * d * w, SquareMatrix::diagonal({q(3), q(2), q(1)}));
  const SquareMatrix anti{{q(0), q(0), q(5)}, {q(0), q(6), q(0)}, {q(7), q(0), q(0)}};
  EXPECT_EQ(anti.anti_diagonal_part(), anti);
  EXPECT_EQ(anti.diagonal_part(), SquareMatrix::diagonal({q(0), q(6), q(0)}));
  const SquareMatrix offdiag{{q(0), q(0), q(5)}, {q(0), q(0), q(0)}, {q(7), q(0), q(0)}};
  EXPECT_EQ(offdiag.diagonal_part(), SquareMatrix(3));
}

TEST(Matrix, DiagonalInverse) {
  const SquareMatrix d = SquareMatrix::diagonal({q(2), q(-3)});
  EXPECT_EQ(d * d.diagonal_inverse(), SquareMatrix::identity(2));
  EXPECT_THROW(SquareMatrix::diagonal({q(0), q(1)}).diagonal_inverse(), DivisionByZero);
  EXPECT_THROW(SquareMatrix::longest_weyl(2).diagonal_inverse(), std::invalid_argument);
}

TEST(Matrix, DirectSumIdentity) {
  const SquareMatrix m{{q(1), q(2)}, {q(0), q(1)}};
  const SquareMatrix expected{{q(1), q(2), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
  EXPECT_EQ(m.direct_sum_identity(1), expected);
}

TEST(Matrix, ToString) {
  const SquareMatrix m{{q(1, 2), q(0)}, {q(-3), q(1)}};
  EXPECT_EQ(m.to_string(), "[[1/2,0],[-3,1]]");
}
