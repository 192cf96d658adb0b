#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "spivey/mpoly.hpp"

namespace spivey {

/// Raised when two series with different truncation orders are combined.
class OrderMismatch : public std::invalid_argument {
 public:
  OrderMismatch(std::size_t lhs, std::size_t rhs);
};

/// Power series sum_{n=0..N} c_n t^n with MPoly coefficients, truncated at
/// order N. The formal variable t is distinct from the ring's x, y, lambda.
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(std::size_t order);
  TruncSeries(std::size_t order, std::vector<MPoly> coeffs);

  static TruncSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  /// Throws std::out_of_range for n > order(): reading past the truncation
  /// point would silently return a wrong coefficient.
  const MPoly& operator[](std::size_t n) const;
  void set(std::size_t n, MPoly value);
  const std::vector<MPoly>& coeffs() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const MPoly& scalar);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const MPoly& s) { return a *= s; }
  friend TruncSeries operator*(const MPoly& s, TruncSeries a) { return a *= s; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<MPoly> coeffs_;
};

/// Cauchy product truncated at the common order.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// a^k by binary powering; a^0 is the constant series 1.
TruncSeries series_pow(const TruncSeries& a, unsigned k);

/// exp(g) for a series with zero constant term, via n h_n = sum k g_k h_{n-k}.
/// Throws std::invalid_argument if g[0] != 0.
TruncSeries series_exp(const TruncSeries& g);

/// n! [t^n] s.
MPoly egf_coefficient(const TruncSeries& s, std::size_t n);

}  // namespace spivey
