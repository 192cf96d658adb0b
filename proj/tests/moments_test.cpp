#include <cmath>
#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spivey/bell.hpp"
#include "spivey/combinatorics.hpp"
#include "spivey/moments.hpp"

using namespace spivey;

namespace {

const MPoly L = MPoly::lambda();

MPoly at_lambda_zero(const MPoly& p) { return substitute(p, {{Var::lambda, MPoly()}}); }

Rational q(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(RawMoment, PointAndBernoulli) {
  const auto c = RandomVariableModel::point(q(3, 2));
  for (unsigned m = 0; m <= 6; ++m) EXPECT_EQ(raw_moment(c, m), pow(q(3, 2), m));
  const auto b = RandomVariableModel::bernoulli(q(1, 3));
  EXPECT_EQ(raw_moment(b, 0), 1);
  for (unsigned m = 1; m <= 6; ++m) EXPECT_EQ(raw_moment(b, m), q(1, 3));
}

TEST(RawMoment, PoissonCubeIsTouchard) {
  const Rational a = q(2, 3);
  const auto p = RandomVariableModel::poisson(a);
  EXPECT_EQ(raw_moment(p, 3), a * a * a + 3 * a * a + a);
  EXPECT_EQ(raw_moment(p, 3), q(62, 27));

  // Truncated series sum_k k^3 e^{-a} a^k / k!; the tail beyond k = 40 is
  // far below 1e-30 for a = 2/3.
  double sum = 0;
  double term = std::exp(-2.0 / 3.0);
  for (int k = 0; k <= 40; ++k) {
    if (k > 0) term *= (2.0 / 3.0) / k;
    sum += std::pow(k, 3) * term;
  }
  EXPECT_NEAR(sum, 62.0 / 27.0, 1e-12);
}

TEST(RawMoment, AgreesWithIndependentRoutes) {
  for (const Rational& rate : {Rational(1), q(2, 3), q(5, 2)}) {
    const auto model = RandomVariableModel::poisson(rate);
    const auto expected = oracle::poisson_moments_by_recurrence(rate, 12);
    for (unsigned m = 0; m <= 12; ++m) EXPECT_EQ(raw_moment(model, m), expected[m]) << "m=" << m;
  }
  for (const Rational& p : {q(1, 2), q(1, 4), Rational(1), q(9, 10)}) {
    const auto model = RandomVariableModel::geometric(p);
    for (unsigned m = 0; m <= 12; ++m) {
      EXPECT_EQ(raw_moment(model, m), oracle::geometric_moment_by_eulerian(p, m)) << "m=" << m;
    }
  }
  // Binomial(N, p) against the equivalent finite model built by hand.
  const auto binom = RandomVariableModel::binomial(5, q(1, 3));
  std::vector<std::pair<Rational, Rational>> atoms;
  for (unsigned i = 0; i <= 5; ++i) {
    atoms.emplace_back(Rational(i), Rational(binomial(5, i)) * pow(q(1, 3), i) * pow(q(2, 3), 5 - i));
  }
  const auto finite = RandomVariableModel::finite(atoms);
  for (unsigned m = 0; m <= 12; ++m) EXPECT_EQ(raw_moment(binom, m), raw_moment(finite, m));
  EXPECT_EQ(raw_moment(binom, 1), q(5, 3));
  EXPECT_EQ(raw_moment(binom, 2), q(10, 9) + q(25, 9));  // variance + mean^2
}

TEST(RawMoment, GeometricMeanAndSecondMoment) {
  const auto g = RandomVariableModel::geometric(q(1, 4));
  EXPECT_EQ(raw_moment(g, 1), 4);
  EXPECT_EQ(raw_moment(g, 2), 28);  // (2 - p) / p^2
}

TEST(RawMoment, CacheDoesNotChangeValues) {
  const auto a = RandomVariableModel::poisson(q(3, 4));
  const auto fresh = RandomVariableModel::poisson(q(3, 4));
  std::vector<Rational> first;
  for (unsigned m = 0; m <= 10; ++m) first.push_back(raw_moment(a, m));
  for (unsigned m = 11; m-- > 0;) {
    EXPECT_EQ(raw_moment(a, m), first[m]);
    EXPECT_EQ(raw_moment(fresh, m), first[m]);
  }
}

TEST(RawMoment, ConcurrentFillsAgree) {
  const auto model = RandomVariableModel::geometric(q(1, 3));
  std::vector<std::vector<Rational>> seen(4);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&, t] {
        for (unsigned m = 0; m <= 12; ++m) seen[t].push_back(raw_moment(model, (m * 7 + t) % 13));
      });
    }
  }
  for (int t = 0; t < 4; ++t) {
    for (unsigned m = 0; m <= 12; ++m) {
      EXPECT_EQ(seen[t][m], oracle::geometric_moment_by_eulerian(q(1, 3), (m * 7 + t) % 13));
    }
  }
}

TEST(DegMoment, Examples) {
  const auto one = RandomVariableModel::point(1);
  const auto bern = RandomVariableModel::bernoulli(q(1, 2));
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(deg_moment(one, n), deg_falling(MPoly(1), n));
    if (n >= 1) EXPECT_EQ(deg_moment(bern, n), q(1, 2) * deg_falling(MPoly(1), n));
  }
  EXPECT_EQ(deg_moment(bern, 0), MPoly(1));
}

TEST(DegMoment, PoissonMatchesFactorialMomentRoute) {
  // (x)_{n,lambda} = sum_k {n k}_lambda (x)_k with E[(Y)_k] = rate^k gives
  // E[(Y)_{n,lambda}] = phi_{n,lambda}(rate).
  for (const Rational& rate : {Rational(1), q(2, 3)}) {
    const auto model = RandomVariableModel::poisson(rate);
    for (unsigned n = 0; n <= 8; ++n) {
      EXPECT_EQ(deg_moment(model, n), substitute(bell_deg(n), {{Var::y, MPoly(rate)}})) << "n=" << n;
    }
  }
}

TEST(DegMoment, LambdaZeroIsRawMoment) {
  for (const auto& rv : standard_rv_suite()) {
    for (unsigned n = 0; n <= 10; ++n) {
      EXPECT_EQ(at_lambda_zero(deg_moment(rv, n)), MPoly(raw_moment(rv, n))) << rv.spec() << " n=" << n;
    }
  }
}

TEST(JointDegMoment, Properties) {
  for (const auto& rv : standard_rv_suite()) {
    for (unsigned j = 0; j <= 5; ++j) {
      EXPECT_EQ(joint_deg_moment(rv, j, 0), deg_moment(rv, j));
      EXPECT_EQ(joint_deg_moment(rv, 0, j), deg_moment(rv, j));
      for (unsigned l = 0; l <= 5; ++l) EXPECT_EQ(joint_deg_moment(rv, j, l), joint_deg_moment(rv, l, j));
    }
  }
  const Rational c = q(3, 2);
  const auto point = RandomVariableModel::point(c);
  EXPECT_EQ(joint_deg_moment(point, 2, 3), deg_falling(MPoly(c), 2) * deg_falling(MPoly(c), 3));
  EXPECT_EQ(joint_deg_moment(RandomVariableModel::bernoulli(q(1, 2)), 1, 1), MPoly(q(1, 2)));
}

TEST(EgfTruncated, Coefficients) {
  const auto rv = RandomVariableModel::geometric(q(1, 2));
  const TruncSeries s = egf_truncated(rv, 4);
  EXPECT_EQ(s.order(), 4U);
  EXPECT_EQ(s[0], MPoly(1));
  EXPECT_EQ(s[1], MPoly(raw_moment(rv, 1)));

  // e_lambda(t) = (1 + lambda t)^{1/lambda}: coefficient n is
  // prod_{i<n} (1 - i lambda) / n!, built here factor by factor.
  const TruncSeries e = egf_truncated(RandomVariableModel::point(1), 7);
  MPoly running(1);
  for (unsigned n = 0; n <= 7; ++n) {
    EXPECT_EQ(e[n], running * Rational(Integer(1), factorial(n)));
    running *= MPoly(1) - Rational(n) * L;
  }
}

TEST(ParseRv, AcceptsGrammar) {
  EXPECT_EQ(parse_rv("point:1").spec(), "point:1");
  EXPECT_EQ(parse_rv("point:3/2").spec(), "point:3/2");
  EXPECT_EQ(parse_rv("bernoulli:1/2").spec(), "bernoulli:1/2");
  EXPECT_EQ(parse_rv("binomial:5:1/3").spec(), "binomial:5:1/3");
  EXPECT_EQ(parse_rv("poisson:2/3").spec(), "poisson:2/3");
  EXPECT_EQ(parse_rv("geometric:1/4").spec(), "geometric:1/4");
  EXPECT_EQ(parse_rv("finite:{2:2/3,1:1/3}").spec(), "finite:{1:1/3,2:2/3}");
  EXPECT_EQ(parse_rv("point:-2/4").spec(), "point:-1/2");
}

TEST(ParseRv, ErrorsNameTheToken) {
  auto message = [](const char* text) -> std::string {
    try {
      parse_rv(text);
    } catch (const RvParseError& e) {
      return e.what();
    }
    return "no error";
  };
  EXPECT_NE(message("bogus:1").find("'bogus'"), std::string::npos);
  EXPECT_NE(message("poisson:x").find("'x'"), std::string::npos);
  EXPECT_NE(message("binomial:five:1/2").find("'five'"), std::string::npos);
  EXPECT_NE(message("finite:{1:1/2;2:1/2}").find("'1:1/2;2:1/2'"), std::string::npos);
  EXPECT_NE(message("point").find("'point'"), std::string::npos);
  EXPECT_NE(message("point:1:2").find("'point'"), std::string::npos);
  EXPECT_NE(message("bernoulli:0").find("bernoulli"), std::string::npos);
}

TEST(RandomVariableModel, RejectsInvalidParameters) {
  EXPECT_THROW(RandomVariableModel::bernoulli(0), std::invalid_argument);
  EXPECT_THROW(RandomVariableModel::bernoulli(q(3, 2)), std::invalid_argument);
  EXPECT_NO_THROW(RandomVariableModel::binomial(3, 0));
  EXPECT_THROW(RandomVariableModel::binomial(3, q(-1, 2)), std::invalid_argument);
  EXPECT_THROW(RandomVariableModel::poisson(0), std::invalid_argument);
  EXPECT_THROW(RandomVariableModel::geometric(0), std::invalid_argument);
  EXPECT_THROW(RandomVariableModel::finite({{1, q(1, 2)}}), std::invalid_argument);
  EXPECT_THROW(RandomVariableModel::finite({{1, q(1, 2)}, {1, q(1, 2)}}), std::invalid_argument);
  EXPECT_THROW(RandomVariableModel::finite({{1, 0}, {2, 1}}), std::invalid_argument);
}

TEST(RandomVariableModel, FlagsNegativeSupport) {
  EXPECT_TRUE(parse_rv("finite:{-1:1/2,1:1/2}").has_negative_support());
  EXPECT_FALSE(parse_rv("finite:{0:1/2,1:1/2}").has_negative_support());
  EXPECT_FALSE(parse_rv("poisson:1").has_negative_support());
  // Symmetric +-1 has vanishing odd moments.
  const auto sym = parse_rv("finite:{-1:1/2,1:1/2}");
  EXPECT_EQ(raw_moment(sym, 3), 0);
  EXPECT_EQ(raw_moment(sym, 4), 1);
}
