#include "spivey/bell.hpp"

#include <stdexcept>
#include <string>

#include "spivey/combinatorics.hpp"

namespace spivey {

namespace {

const MPoly kZero;

void require_positive_r(unsigned r) {
  if (r == 0) throw std::invalid_argument("r-Stirling numbers need r >= 1");
}

MPoly bell_from_row(const std::vector<MPoly>& row) {
  MPoly out;
  for (std::size_t k = 0; k < row.size(); ++k) {
    out += row[k] * MPoly::variable(Var::y, static_cast<std::uint32_t>(k));
  }
  return out;
}

}  // namespace

MPoly deg_falling(const MPoly& base, unsigned n) {
  MPoly out(1);
  for (unsigned i = 0; i < n; ++i) {
    out *= base - MPoly::lambda() * Rational(i);
  }
  return out;
}

MPoly falling_factorial_x(unsigned n) {
  MPoly out(1);
  for (unsigned i = 0; i < n; ++i) out *= MPoly::x() - MPoly(static_cast<int>(i));
  return out;
}

// Triangular solve from the top degree down: (x)_d is monic of degree d,
// so the current leading x-coefficient is exactly c_d.
std::vector<MPoly> to_falling_factorial_basis(const MPoly& p) {
  const unsigned degree = p.degree(Var::x);
  std::vector<MPoly> coeffs(degree + 1);
  MPoly remainder = p;
  for (unsigned d = degree + 1; d-- > 0;) {
    MPoly lead = remainder.coefficient(Var::x, d);
    if (lead.is_zero()) continue;
    remainder -= lead * falling_factorial_x(d);
    coeffs[d] = std::move(lead);
  }
  if (!remainder.is_zero()) {
    throw std::logic_error("falling-factorial basis conversion left a remainder");
  }
  return coeffs;
}

std::vector<MPoly> stirling2_deg_row(unsigned n) {
  auto row = to_falling_factorial_basis(deg_falling(MPoly::x(), n));
  row.resize(n + 1);
  return row;
}

MPoly stirling2_deg(unsigned n, unsigned k) {
  if (k > n) return {};
  return stirling2_deg_row(n)[k];
}

MPoly stirling2_deg_via_compositions(unsigned n, unsigned k) {
  MPoly sum;
  std::vector<MPoly> unit_falling;  // (1)_{m,lambda}, grown on demand
  for (const auto& parts : compositions(n, k)) {
    MPoly product = Rational(multinomial(n, parts));
    for (unsigned part : parts) {
      while (unit_falling.size() <= part) {
        unit_falling.push_back(deg_falling(MPoly(1), static_cast<unsigned>(unit_falling.size())));
      }
      product *= unit_falling[part];
    }
    sum += product;
  }
  return sum * Rational(Integer(1), factorial(k));
}

MPoly bell_deg(unsigned n) { return bell_from_row(stirling2_deg_row(n)); }

MPoly stirling2_r_deg(unsigned n, unsigned k, unsigned r) {
  require_positive_r(r);
  if (k > n) return {};
  MPoly sum;
  for (unsigned l = k; l <= n; ++l) {
    sum += Rational(binomial(n, l)) * stirling2_deg(l, k) * deg_falling(MPoly(static_cast<int>(r)), n - l);
  }
  return sum;
}

std::vector<MPoly> stirling2_r_deg_row_via_basis(unsigned n, unsigned r) {
  require_positive_r(r);
  auto row = to_falling_factorial_basis(deg_falling(MPoly::x() + MPoly(static_cast<int>(r)), n));
  row.resize(n + 1);
  return row;
}

MPoly bell_r_deg(unsigned n, unsigned r) {
  require_positive_r(r);
  MPoly out;
  for (unsigned k = 0; k <= n; ++k) {
    out += stirling2_r_deg(n, k, r) * MPoly::variable(Var::y, k);
  }
  return out;
}

StirlingTableDeg::StirlingTableDeg(unsigned max_n) {
  rows_.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    rows_.push_back(stirling2_deg_row(n));
    bell_.push_back(bell_from_row(rows_.back()));
  }
}

const MPoly& StirlingTableDeg::at(unsigned n, unsigned k) const {
  const auto& row = rows_.at(n);
  return k < row.size() ? row[k] : kZero;
}

const MPoly& StirlingTableDeg::bell(unsigned n) const { return bell_.at(n); }

RStirlingTableDeg::RStirlingTableDeg(unsigned max_n, unsigned r) : r_(r) {
  require_positive_r(r);
  const StirlingTableDeg plain(max_n);
  std::vector<MPoly> r_falling;
  for (unsigned m = 0; m <= max_n; ++m) r_falling.push_back(deg_falling(MPoly(static_cast<int>(r)), m));

  rows_.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    std::vector<MPoly> row(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned l = k; l <= n; ++l) {
        row[k] += Rational(binomial(n, l)) * plain.at(l, k) * r_falling[n - l];
      }
    }
    rows_.push_back(std::move(row));
    bell_.push_back(bell_from_row(rows_.back()));
  }
}

const MPoly& RStirlingTableDeg::at(unsigned n, unsigned k) const {
  const auto& row = rows_.at(n);
  return k < row.size() ? row[k] : kZero;
}

const MPoly& RStirlingTableDeg::bell(unsigned n) const { return bell_.at(n); }

}  // namespace spivey
