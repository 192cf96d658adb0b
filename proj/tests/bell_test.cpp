#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spivey/bell.hpp"
#include "spivey/combinatorics.hpp"
#include "spivey/moments.hpp"
#include "spivey/series.hpp"

using namespace spivey;

namespace {

const MPoly L = MPoly::lambda();
const MPoly X = MPoly::x();
const MPoly Y = MPoly::y();

MPoly at(const MPoly& p, Rational lambda_value) { return substitute(p, {{Var::lambda, MPoly(lambda_value)}}); }
MPoly at_y_one(const MPoly& p) { return substitute(p, {{Var::y, MPoly(1)}}); }

}  // namespace

TEST(DegFalling, Examples) {
  EXPECT_EQ(deg_falling(X, 0), MPoly(1));
  EXPECT_EQ(deg_falling(X, 2), X * X - L * X);
  EXPECT_EQ(deg_falling(X, 3), X.pow(3) - 3 * L * X * X + 2 * L * L * X);
  // Constant bases: (-2 lambda)_{2,lambda} = (-2 lambda)(-3 lambda).
  EXPECT_EQ(deg_falling(-2 * L, 2), 6 * L * L);
  EXPECT_EQ(at(deg_falling(MPoly(3), 4), 1), MPoly(0));
  EXPECT_EQ(at(deg_falling(X, 5), 1), falling_factorial_x(5));
}

TEST(StirlingDeg, Examples) {
  for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(stirling2_deg(n, n), MPoly(1));
  EXPECT_EQ(stirling2_deg(2, 1), 1 - L);
  EXPECT_EQ(stirling2_deg(2, 1).to_string(), "1 - λ");
  EXPECT_EQ(stirling2_deg(3, 5), MPoly());
  EXPECT_EQ(stirling2_deg(0, 0), MPoly(1));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(stirling2_deg(n, 0), MPoly());
  EXPECT_EQ(at(stirling2_deg(4, 2), 0), MPoly(7));
}

TEST(StirlingDeg, LambdaZeroGivesClassicalNumbers) {
  const auto partitions = oracle::partition_counts_by_blocks(8);
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      EXPECT_EQ(at(stirling2_deg(n, k), 0), MPoly(Rational(partitions[n][k]))) << "n=" << n << " k=" << k;
    }
  }
}

TEST(StirlingDeg, CompositionFormulaAgrees) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      EXPECT_EQ(stirling2_deg(n, k), stirling2_deg_via_compositions(n, k)) << "n=" << n << " k=" << k;
    }
  }
  EXPECT_EQ(stirling2_deg_via_compositions(5, 1), deg_falling(MPoly(1), 5));
  EXPECT_EQ(stirling2_deg_via_compositions(6, 6), MPoly(1));
}

TEST(StirlingDeg, DefiningIdentityRoundTrip) {
  for (unsigned n = 0; n <= 8; ++n) {
    MPoly rebuilt;
    for (unsigned k = 0; k <= n; ++k) rebuilt += stirling2_deg(n, k) * falling_factorial_x(k);
    EXPECT_EQ(rebuilt, deg_falling(X, n)) << "n=" << n;
  }
}

TEST(BellDeg, Examples) {
  EXPECT_EQ(bell_deg(0), MPoly(1));
  EXPECT_EQ(bell_deg(2), Y * Y + (1 - L) * Y);
  EXPECT_EQ(at_y_one(at(bell_deg(4), 0)), MPoly(15));
}

TEST(BellDeg, LambdaZeroBellNumbers) {
  const long expected[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (unsigned n = 0; n < 8; ++n) {
    ASSERT_EQ(oracle::bell_number_by_blocks(n), expected[n]);
    EXPECT_EQ(at_y_one(at(bell_deg(n), 0)), MPoly(expected[n]));
  }
}

TEST(BellDeg, EgfConsistency) {
  // exp(y (e_lambda(t) - 1)) built from the point(1) moment series.
  const std::size_t order = 7;
  TruncSeries inner = egf_truncated(RandomVariableModel::point(1), order);
  inner.set(0, MPoly());
  const TruncSeries h = series_exp(inner * Y);
  for (unsigned n = 0; n <= order; ++n) {
    EXPECT_EQ(h[n], bell_deg(n) * Rational(Integer(1), factorial(n))) << "n=" << n;
  }
}

TEST(StirlingRDeg, Examples) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(stirling2_r_deg(n, n, r), MPoly(1));
    EXPECT_EQ(stirling2_r_deg(1, 0, r), MPoly(static_cast<int>(r)));
  }
  EXPECT_EQ(at(stirling2_r_deg(2, 1, 1), 0), MPoly(3));
  EXPECT_EQ(stirling2_r_deg(2, 3, 1), MPoly());
  EXPECT_THROW(stirling2_r_deg(2, 1, 0), std::invalid_argument);
}

TEST(StirlingRDeg, DefiningIdentityRoundTrip) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 0; n <= 6; ++n) {
      MPoly rebuilt;
      for (unsigned k = 0; k <= n; ++k) rebuilt += stirling2_r_deg(n, k, r) * falling_factorial_x(k);
      EXPECT_EQ(rebuilt, deg_falling(X + MPoly(static_cast<int>(r)), n)) << "n=" << n << " r=" << r;
    }
  }
}

TEST(StirlingRDeg, SumFormAgreesWithBasisConversion) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 0; n <= 6; ++n) {
      const auto row = stirling2_r_deg_row_via_basis(n, r);
      for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(stirling2_r_deg(n, k, r), row[k]);
    }
  }
}

TEST(StirlingRDeg, ZeroShiftLimitIsPlainStirling) {
  // With (0)_{m,lambda} = [m == 0] the r-sum collapses to {n k}_lambda.
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      MPoly sum;
      for (unsigned l = k; l <= n; ++l) {
        sum += Rational(binomial(n, l)) * stirling2_deg(l, k) * deg_falling(MPoly(0), n - l);
      }
      EXPECT_EQ(sum, stirling2_deg(n, k));
    }
  }
}

TEST(BellRDeg, Examples) {
  for (unsigned r = 1; r <= 3; ++r) {
    EXPECT_EQ(bell_r_deg(0, r), MPoly(1));
    EXPECT_EQ(bell_r_deg(1, r), Y + MPoly(static_cast<int>(r)));
  }
  // Fixture from the r-sum evaluated with enumerated classical numbers at
  // lambda = 0, r = 1, y = 1: terms k = 0, 1, 2 give 1 + 3 + 1.
  const auto partitions = oracle::partition_counts_by_blocks(2);
  long fixture = 0;
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned l = k; l <= 2; ++l) fixture += binomial(2, l).get_si() * partitions[l][k] * 1;
  }
  ASSERT_EQ(fixture, 5);
  EXPECT_EQ(at_y_one(at(bell_r_deg(2, 1), 0)), MPoly(5));
}

TEST(Tables, MatchFreeFunctions) {
  const StirlingTableDeg table(7);
  EXPECT_EQ(table.max_n(), 7U);
  for (unsigned n = 0; n <= 7; ++n) {
    EXPECT_EQ(table.bell(n), bell_deg(n));
    for (unsigned k = 0; k <= n + 1; ++k) EXPECT_EQ(table.at(n, k), stirling2_deg(n, k));
  }
  EXPECT_THROW(table.at(8, 0), std::out_of_range);

  const RStirlingTableDeg rtable(6, 2);
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(rtable.bell(n), bell_r_deg(n, 2));
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(rtable.at(n, k), stirling2_r_deg(n, k, 2));
  }
  EXPECT_THROW(RStirlingTableDeg(3, 0), std::invalid_argument);
}
