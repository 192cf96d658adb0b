#pragma once

#include <vector>

#include "spivey/mpoly.hpp"

namespace spivey {

/// (base)_{n,lambda} = base (base - lambda) ... (base - (n-1) lambda).
MPoly deg_falling(const MPoly& base, unsigned n);

/// Classical falling factorial (x)_n = x (x-1) ... (x-n+1).
MPoly falling_factorial_x(unsigned n);

/// Rewrites a polynomial in x into the falling-factorial basis:
/// p(x) = sum_k c_k (x)_k. Entry k of the result is c_k, free of x.
std::vector<MPoly> to_falling_factorial_basis(const MPoly& p);

/// Degenerate Stirling numbers of the second kind {n k}_lambda for one n,
/// by basis conversion of (x)_{n,lambda}. Entry k is {n k}_lambda, k = 0..n.
std::vector<MPoly> stirling2_deg_row(unsigned n);

/// {n k}_lambda; zero for k > n.
MPoly stirling2_deg(unsigned n, unsigned k);

/// (1/k!) sum over compositions l_1+...+l_k = n of
/// multinomial(n; l) prod (1)_{l_i,lambda}. Exponential in n; used as an
/// independent check on stirling2_deg.
MPoly stirling2_deg_via_compositions(unsigned n, unsigned k);

/// phi_{n,lambda}(y) = sum_k {n k}_lambda y^k.
MPoly bell_deg(unsigned n);

/// {n+r k+r}_{r,lambda} = sum_{l=k..n} C(n,l) {l k}_lambda (r)_{n-l,lambda}.
/// Throws std::invalid_argument for r == 0.
MPoly stirling2_r_deg(unsigned n, unsigned k, unsigned r);

/// The same numbers by basis conversion of (x+r)_{n,lambda}; entry k of the
/// row is {n+r k+r}_{r,lambda}.
std::vector<MPoly> stirling2_r_deg_row_via_basis(unsigned n, unsigned r);

/// phi^{(r)}_{n,lambda}(y) = sum_k {n+r k+r}_{r,lambda} y^k.
MPoly bell_r_deg(unsigned n, unsigned r);

/// Memoized {n k}_lambda for 0 <= k <= n <= max_n. Built once, then
/// read-only, so it can be shared freely between threads.
class StirlingTableDeg {
 public:
  explicit StirlingTableDeg(unsigned max_n);

  unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }
  /// Zero for k > n. Throws std::out_of_range for n > max_n.
  const MPoly& at(unsigned n, unsigned k) const;
  const MPoly& bell(unsigned n) const;

 private:
  std::vector<std::vector<MPoly>> rows_;
  std::vector<MPoly> bell_;
};

/// Memoized {n+r k+r}_{r,lambda} for a fixed r and n <= max_n.
class RStirlingTableDeg {
 public:
  RStirlingTableDeg(unsigned max_n, unsigned r);

  unsigned r() const { return r_; }
  unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }
  const MPoly& at(unsigned n, unsigned k) const;
  const MPoly& bell(unsigned n) const;

 private:
  unsigned r_;
  std::vector<std::vector<MPoly>> rows_;
  std::vector<MPoly> bell_;
};

}  // namespace spivey
