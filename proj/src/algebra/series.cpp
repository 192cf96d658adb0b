#include "spivey/series.hpp"

#include <string>
#include <utility>

namespace spivey {

OrderMismatch::OrderMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("series order mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order + 1) {
    throw std::invalid_argument("series of order " + std::to_string(order) + " needs " +
                                std::to_string(order + 1) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
  }
}

TruncSeries TruncSeries::one(std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = MPoly(1);
  return s;
}

const MPoly& TruncSeries::operator[](std::size_t n) const {
  if (n > order()) {
    throw std::out_of_range("coefficient t^" + std::to_string(n) + " read from series truncated at order " +
                            std::to_string(order()));
  }
  return coeffs_[n];
}

void TruncSeries::set(std::size_t n, MPoly value) {
  if (n > order()) {
    throw std::out_of_range("coefficient t^" + std::to_string(n) + " written to series truncated at order " +
                            std::to_string(order()));
  }
  coeffs_[n] = std::move(value);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const MPoly& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  const std::size_t order = a.order();
  std::vector<MPoly> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return TruncSeries(order, std::move(out));
}

TruncSeries series_pow(const TruncSeries& a, unsigned k) {
  TruncSeries result = TruncSeries::one(a.order());
  TruncSeries base = a;
  while (k > 0) {
    if (k & 1U) result = series_mul(result, base);
    k >>= 1U;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

TruncSeries series_exp(const TruncSeries& g) {
  if (!g[0].is_zero()) {
    throw std::invalid_argument("series_exp needs a zero constant term");
  }
  const std::size_t order = g.order();
  std::vector<MPoly> h(order + 1);
  h[0] = MPoly(1);
  for (std::size_t n = 1; n <= order; ++n) {
    MPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (g[k].is_zero()) continue;
      acc += g[k] * h[n - k] * Rational(static_cast<long>(k));
    }
    h[n] = acc * Rational(1, static_cast<long>(n));
  }
  return TruncSeries(order, std::move(h));
}

MPoly egf_coefficient(const TruncSeries& s, std::size_t n) {
  return s[n] * Rational(factorial(static_cast<unsigned>(n)));
}

}  // namespace spivey
