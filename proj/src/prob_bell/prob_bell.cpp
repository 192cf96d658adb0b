#include "spivey/prob_bell.hpp"

#include <stdexcept>
#include <string>

#include "spivey/bell.hpp"
#include "spivey/series.hpp"

namespace spivey {

namespace {

Rational inverse_factorial(unsigned k) { return Rational(Integer(1), factorial(k)); }

// E[e_lambda^Y(t)] - 1 truncated at the given order.
TruncSeries centered_egf(const RandomVariableModel& rv, std::size_t order) {
  TruncSeries g = egf_truncated(rv, order);
  g.set(0, MPoly());
  return g;
}

TruncSeries bell_egf(const RandomVariableModel& rv, std::size_t order) {
  return series_exp(centered_egf(rv, order) * MPoly::y());
}

}  // namespace

void MixedExpectationSpec::validate() const {
  if (parts.size() != k) {
    throw std::invalid_argument("mixed expectation: " + std::to_string(parts.size()) + " parts for k = " +
                                std::to_string(k));
  }
  for (unsigned p : parts) {
    if (p == 0) throw std::invalid_argument("mixed expectation: parts must be positive");
  }
}

MPoly prob_stirling2_deg(const RandomVariableModel& rv, unsigned n, unsigned k) {
  if (k > n) return {};
  const TruncSeries power = series_pow(centered_egf(rv, n), k);
  return egf_coefficient(power, n) * inverse_factorial(k);
}

std::vector<MPoly> prob_stirling2_deg_row(const RandomVariableModel& rv, unsigned n) {
  const TruncSeries g = centered_egf(rv, n);
  std::vector<MPoly> row;
  row.reserve(n + 1);
  TruncSeries power = TruncSeries::one(n);
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) power = series_mul(power, g);
    row.push_back(egf_coefficient(power, n) * inverse_factorial(k));
  }
  return row;
}

MPoly prob_stirling2_deg_alternating(const RandomVariableModel& rv, unsigned n, unsigned k) {
  if (k > n) return {};
  const TruncSeries egf = egf_truncated(rv, n);
  MPoly sum;
  TruncSeries power = TruncSeries::one(n);
  for (unsigned l = 0; l <= k; ++l) {
    if (l > 0) power = series_mul(power, egf);
    const MPoly moment_of_sum = egf_coefficient(power, n);  // E[(S_l)_{n,lambda}]
    Rational weight(binomial(k, l));
    if ((k - l) % 2 == 1) weight = -weight;
    sum += moment_of_sum * weight;
  }
  return sum * inverse_factorial(k);
}

MPoly prob_bell_deg(const RandomVariableModel& rv, unsigned n) {
  const auto row = prob_stirling2_deg_row(rv, n);
  MPoly out;
  for (unsigned k = 0; k <= n; ++k) out += row[k] * MPoly::variable(Var::y, k);
  return out;
}

MPoly prob_bell_deg_via_exp(const RandomVariableModel& rv, unsigned n) {
  return egf_coefficient(bell_egf(rv, n), n);
}

std::vector<MPoly> prob_bell_deg_upto(const RandomVariableModel& rv, unsigned max_n) {
  const TruncSeries h = bell_egf(rv, max_n);
  std::vector<MPoly> out;
  out.reserve(max_n + 1);
  for (unsigned m = 0; m <= max_n; ++m) out.push_back(egf_coefficient(h, m));
  return out;
}

MPoly sk_mixed_expectation(const MixedExpectationSpec& spec) {
  return sk_mixed_expectation_upto(spec, spec.j)[spec.j];
}

std::vector<MPoly> sk_mixed_expectation_upto(const MixedExpectationSpec& spec, unsigned max_j) {
  spec.validate();

  // (1 + lambda x)^{-n} = sum_m C(-n, m) lambda^m x^m
  TruncSeries product(max_j);
  for (unsigned m = 0; m <= max_j; ++m) {
    product.set(m, Rational(binomial(-static_cast<long>(spec.shift_n), m)) * MPoly::variable(Var::lambda, m));
  }
  for (unsigned part : spec.parts) {
    TruncSeries copy_factor(max_j);
    for (unsigned m = 0; m <= max_j; ++m) {
      copy_factor.set(m, joint_deg_moment(spec.rv, m, part) * inverse_factorial(m));
    }
    product = series_mul(product, copy_factor);
  }
  std::vector<MPoly> out;
  out.reserve(max_j + 1);
  for (unsigned j = 0; j <= max_j; ++j) out.push_back(egf_coefficient(product, j));
  return out;
}

MPoly sk_mixed_expectation_direct(const MixedExpectationSpec& spec) {
  spec.validate();
  const MPoly shifted = deg_falling(MPoly::x() - MPoly::lambda() * Rational(spec.shift_n), spec.j);

  // per_copy[i][a] = E[Y^a (Y)_{l_i,lambda}]
  std::vector<std::vector<MPoly>> per_copy(spec.k);
  for (unsigned i = 0; i < spec.k; ++i) {
    const MPoly falling = deg_falling(MPoly::x(), spec.parts[i]);
    for (unsigned a = 0; a <= spec.j; ++a) {
      per_copy[i].push_back(expect_in_x(spec.rv, MPoly::variable(Var::x, a) * falling));
    }
  }

  MPoly total;
  for (unsigned p = 0; p <= spec.j; ++p) {
    const MPoly coeff = shifted.coefficient(Var::x, p);
    if (coeff.is_zero()) continue;
    MPoly moment_of_power;  // E[S_k^p prod (Y_i)_{l_i,lambda}]
    for (const auto& exps : weak_compositions(p, spec.k)) {
      MPoly term = Rational(multinomial(p, exps));
      for (unsigned i = 0; i < spec.k; ++i) term *= per_copy[i][exps[i]];
      moment_of_power += term;
    }
    total += coeff * moment_of_power;
  }
  return total;
}

TruncSeries deg_exp_series(unsigned r, std::size_t order) {
  TruncSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    const auto m = static_cast<unsigned>(n);
    s.set(n, deg_falling(MPoly(static_cast<int>(r)), m) * inverse_factorial(m));
  }
  return s;
}

MPoly prob_stirling2_r_deg(const RandomVariableModel& rv, unsigned n, unsigned k, unsigned r) {
  if (r == 0) throw std::invalid_argument("r-Stirling numbers need r >= 1");
  if (k > n) return {};
  const TruncSeries power = series_pow(centered_egf(rv, n), k);
  return egf_coefficient(series_mul(power, deg_exp_series(r, n)), n) * inverse_factorial(k);
}

MPoly prob_bell_r_deg(const RandomVariableModel& rv, unsigned n, unsigned r) {
  return prob_bell_r_deg_upto(rv, n, r)[n];
}

std::vector<MPoly> prob_bell_r_deg_upto(const RandomVariableModel& rv, unsigned max_n, unsigned r) {
  if (r == 0) throw std::invalid_argument("r-Bell polynomials need r >= 1");
  const TruncSeries h = series_mul(bell_egf(rv, max_n), deg_exp_series(r, max_n));
  std::vector<MPoly> out;
  out.reserve(max_n + 1);
  for (unsigned m = 0; m <= max_n; ++m) out.push_back(egf_coefficient(h, m));
  return out;
}

MPoly prob_bell_recurrence_rhs(const RandomVariableModel& rv, unsigned n) {
  std::vector<MPoly> bell;
  for (unsigned m = 0; m <= n; ++m) bell.push_back(prob_bell_deg(rv, m));
  MPoly sum;
  for (unsigned k = 0; k <= n; ++k) {
    sum += Rational(binomial(n, k)) * deg_moment(rv, k + 1) * bell[n - k];
  }
  return MPoly::y() * sum;
}

bool prob_bell_recurrence_check(const RandomVariableModel& rv, unsigned n) {
  return prob_bell_deg(rv, n + 1) == prob_bell_recurrence_rhs(rv, n);
}

}  // namespace spivey
