#pragma once

#include <vector>

#include "spivey/combinatorics.hpp"
#include "spivey/moments.hpp"
#include "spivey/mpoly.hpp"

namespace spivey {

/// Parameters of E[(S_k - shift_n lambda)_{j,lambda} prod_i (Y_i)_{parts_i,lambda}]
/// where S_k is the sum of k independent copies of rv.
struct MixedExpectationSpec {
  RandomVariableModel rv;
  unsigned k = 0;
  Composition parts;  // exactly k entries, each >= 1
  unsigned shift_n = 0;
  unsigned j = 0;

  /// Throws std::invalid_argument if parts has the wrong length or a zero part.
  void validate() const;
};

/// {n k}_{Y,lambda} = n! [t^n] (1/k!) (E[e_lambda^Y(t)] - 1)^k.
MPoly prob_stirling2_deg(const RandomVariableModel& rv, unsigned n, unsigned k);

/// All of {n k}_{Y,lambda} for k = 0..n from one pass over the powers.
std::vector<MPoly> prob_stirling2_deg_row(const RandomVariableModel& rv, unsigned n);

/// (1/k!) sum_l C(k,l) (-1)^{k-l} E[(S_l)_{n,lambda}], with
/// E[(S_l)_{n,lambda}] = n! [t^n] E[e_lambda^Y(t)]^l.
MPoly prob_stirling2_deg_alternating(const RandomVariableModel& rv, unsigned n, unsigned k);

/// phi^Y_{n,lambda}(y) = sum_k {n k}_{Y,lambda} y^k.
MPoly prob_bell_deg(const RandomVariableModel& rv, unsigned n);

/// n! [t^n] exp(y (E[e_lambda^Y(t)] - 1)).
MPoly prob_bell_deg_via_exp(const RandomVariableModel& rv, unsigned n);

/// phi^Y_{m,lambda}(y) for every m = 0..max_n from a single exponential.
std::vector<MPoly> prob_bell_deg_upto(const RandomVariableModel& rv, unsigned max_n);

/// Mixed expectation by the generating-series route: the answer is
/// j! [x^j] prod_i A_{l_i}(x) (1 + lambda x)^{-shift_n}, where
/// A_l(x) = sum_m E[(Y)_{m,lambda} (Y)_{l,lambda}] x^m / m!.
MPoly sk_mixed_expectation(const MixedExpectationSpec& spec);

/// The generating-series route for every j = 0..max_j at once; entry j is
/// the expectation with falling-factorial order j (spec.j is ignored).
std::vector<MPoly> sk_mixed_expectation_upto(const MixedExpectationSpec& spec, unsigned max_j);

/// The same expectation by expanding (S_k - n lambda)_{j,lambda} in powers of
/// S_k, then S_k^p by the multinomial theorem, and factoring over the
/// independent copies.
MPoly sk_mixed_expectation_direct(const MixedExpectationSpec& spec);

/// {n+r k+r}^Y_{r,lambda} = n! [t^n] (1/k!) (E[e_lambda^Y(t)] - 1)^k e_lambda^r(t).
MPoly prob_stirling2_r_deg(const RandomVariableModel& rv, unsigned n, unsigned k, unsigned r);

/// phi^{(r,Y)}_{n,lambda}(y) = n! [t^n] exp(y (E[e_lambda^Y(t)] - 1)) e_lambda^r(t).
MPoly prob_bell_r_deg(const RandomVariableModel& rv, unsigned n, unsigned r);

/// phi^{(r,Y)}_{m,lambda}(y) for every m = 0..max_n.
std::vector<MPoly> prob_bell_r_deg_upto(const RandomVariableModel& rv, unsigned max_n, unsigned r);

/// Right-hand side of phi^Y_{n+1} = y sum_k C(n,k) E[(Y)_{k+1,lambda}] phi^Y_{n-k}.
MPoly prob_bell_recurrence_rhs(const RandomVariableModel& rv, unsigned n);

/// True iff the recurrence above holds exactly at index n.
bool prob_bell_recurrence_check(const RandomVariableModel& rv, unsigned n);

/// Truncated series of e_lambda^r(t): coefficients (r)_{n,lambda} / n!.
TruncSeries deg_exp_series(unsigned r, std::size_t order);

}  // namespace spivey
