#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "spivey/mpoly.hpp"
#include "spivey/rational.hpp"
#include "spivey/series.hpp"

namespace spivey {

namespace dist {

struct Point {
  Rational value;
};

struct FiniteDiscrete {
  std::vector<std::pair<Rational, Rational>> support;  // (value, probability)
};

struct Bernoulli {
  Rational p;
};

struct Binomial {
  unsigned trials;
  Rational p;
};

struct Poisson {
  Rational rate;
};

/// Number of trials up to and including the first success, so support is
/// {1, 2, ...}.
struct Geometric {
  Rational p;
};

}  // namespace dist

using Distribution = std::variant<dist::Point, dist::FiniteDiscrete, dist::Bernoulli, dist::Binomial,
                                  dist::Poisson, dist::Geometric>;

/// Write-once memo of raw moments E[Y^m]. Fills are idempotent, so
/// concurrent callers always observe the same values.
class MomentCache {
 public:
  template <typename Compute>
  Rational get_or_compute(unsigned m, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (m < values_.size() && values_[m]) return *values_[m];
    }
    Rational value = compute(m);
    std::lock_guard lock(mutex_);
    if (values_.size() <= m) values_.resize(m + 1);
    if (!values_[m]) values_[m] = std::make_unique<Rational>(value);
    return *values_[m];
  }

 private:
  std::mutex mutex_;
  std::vector<std::unique_ptr<Rational>> values_;
};

/// A discrete random variable with exact rational raw moments.
class RandomVariableModel {
 public:
  /// Throws std::invalid_argument if the parameters violate the model's
  /// constraints (probabilities, rates, duplicate atoms).
  explicit RandomVariableModel(Distribution distribution);

  static RandomVariableModel point(Rational value);
  static RandomVariableModel finite(std::vector<std::pair<Rational, Rational>> support);
  static RandomVariableModel bernoulli(Rational p);
  static RandomVariableModel binomial(unsigned trials, Rational p);
  static RandomVariableModel poisson(Rational rate);
  static RandomVariableModel geometric(Rational p);

  const Distribution& distribution() const { return distribution_; }

  /// Canonical mini-grammar form, e.g. "binomial:5:1/3".
  std::string spec() const;

  /// True when some atom is negative (only possible for finite models).
  bool has_negative_support() const;

  /// E[Y^m], memoized per instance (copies share the memo).
  Rational raw_moment(unsigned m) const;

 private:
  Distribution distribution_;
  std::shared_ptr<MomentCache> cache_;
};

class RvParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `point:1`, `bernoulli:1/2`, `binomial:5:1/3`, `poisson:2/3`,
/// `geometric:1/4`, `finite:{1:1/3,2:2/3}`. Errors name the bad token.
RandomVariableModel parse_rv(std::string_view text);

/// point(1), point(3/2), bernoulli(1/2), finite{1:1/3,2:2/3}, poisson(1),
/// geometric(1/2).
std::vector<RandomVariableModel> standard_rv_suite();

Rational raw_moment(const RandomVariableModel& rv, unsigned m);

/// E[p(Y)] for p a polynomial in x (other variables ride along).
MPoly expect_in_x(const RandomVariableModel& rv, const MPoly& p);

/// E[(Y)_{n,lambda}], a polynomial in lambda.
MPoly deg_moment(const RandomVariableModel& rv, unsigned n);

/// E[(Y)_{j,lambda} (Y)_{l,lambda}].
MPoly joint_deg_moment(const RandomVariableModel& rv, unsigned j, unsigned l);

/// sum_{n=0..order} E[(Y)_{n,lambda}] t^n / n!, i.e. E[e_lambda^Y(t)].
TruncSeries egf_truncated(const RandomVariableModel& rv, std::size_t order);

}  // namespace spivey
