#include "spivey/moments.hpp"

#include "spivey/bell.hpp"
#include "spivey/combinatorics.hpp"

namespace spivey {

namespace {

Rational finite_moment(const std::vector<std::pair<Rational, Rational>>& support, unsigned m) {
  Rational sum = 0;
  for (const auto& [value, prob] : support) sum += prob * pow(value, m);
  return sum;
}

// E[Y^m] = sum_k S(m,k) E[(Y)_k], converting factorial moments to raw ones.
template <typename FactorialMoment>
Rational from_factorial_moments(unsigned m, FactorialMoment&& factorial_moment) {
  Rational sum = 0;
  for (unsigned k = 0; k <= m; ++k) {
    const Integer s = stirling2_classical(m, k);
    if (s == 0) continue;
    sum += Rational(s) * factorial_moment(k);
  }
  return sum;
}

Rational compute_raw_moment(const Distribution& d, unsigned m) {
  if (const auto* p = std::get_if<dist::Point>(&d)) return pow(p->value, m);
  if (const auto* f = std::get_if<dist::FiniteDiscrete>(&d)) return finite_moment(f->support, m);
  if (const auto* b = std::get_if<dist::Bernoulli>(&d)) {
    return m == 0 ? Rational(1) : b->p;
  }
  if (const auto* b = std::get_if<dist::Binomial>(&d)) {
    const Rational q = 1 - b->p;
    Rational sum = 0;
    for (unsigned i = 0; i <= b->trials; ++i) {
      sum += Rational(binomial(b->trials, i)) * pow(b->p, i) * pow(q, b->trials - i) * pow(Rational(i), m);
    }
    return sum;
  }
  if (const auto* p = std::get_if<dist::Poisson>(&d)) {
    // Touchard: E[(Y)_k] = rate^k.
    return from_factorial_moments(m, [&](unsigned k) { return pow(p->rate, k); });
  }
  const auto& g = std::get<dist::Geometric>(d);
  // On {1,2,...}: E[(Y)_k] = k! (1-p)^{k-1} / p^k for k >= 1.
  const Rational q = 1 - g.p;
  return from_factorial_moments(m, [&](unsigned k) -> Rational {
    if (k == 0) return 1;
    return Rational(factorial(k)) * pow(q, k - 1) / pow(g.p, k);
  });
}

}  // namespace

Rational RandomVariableModel::raw_moment(unsigned m) const {
  return cache_->get_or_compute(m, [this](unsigned order) { return compute_raw_moment(distribution_, order); });
}

Rational raw_moment(const RandomVariableModel& rv, unsigned m) { return rv.raw_moment(m); }

MPoly expect_in_x(const RandomVariableModel& rv, const MPoly& p) {
  MPoly out;
  const unsigned degree = p.degree(Var::x);
  for (unsigned d = 0; d <= degree; ++d) {
    MPoly c = p.coefficient(Var::x, d);
    if (c.is_zero()) continue;
    out += c * rv.raw_moment(d);
  }
  return out;
}

MPoly deg_moment(const RandomVariableModel& rv, unsigned n) {
  return expect_in_x(rv, deg_falling(MPoly::x(), n));
}

MPoly joint_deg_moment(const RandomVariableModel& rv, unsigned j, unsigned l) {
  return expect_in_x(rv, deg_falling(MPoly::x(), j) * deg_falling(MPoly::x(), l));
}

TruncSeries egf_truncated(const RandomVariableModel& rv, std::size_t order) {
  TruncSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    const auto k = static_cast<unsigned>(n);
    s.set(n, deg_moment(rv, k) * Rational(Integer(1), factorial(k)));
  }
  return s;
}

}  // namespace spivey
