#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "spivey/rational.hpp"

namespace spivey {

/// Indeterminates of the polynomial ring: the degeneracy parameter, the
/// Bell variable and the falling-factorial base.
enum class Var : std::size_t { lambda = 0, y = 1, x = 2 };

inline constexpr std::size_t kNumVars = 3;

using Exponents = std::array<std::uint32_t, kNumVars>;

/// Sparse polynomial in {lambda, y, x} over Rational.
///
/// Terms live in an ordered map with no zero coefficients, so two equal
/// polynomials always have identical storage and compare equal with ==.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MPoly() = default;
  MPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MPoly(int constant) : MPoly(Rational(constant)) {}   // NOLINT

  static MPoly variable(Var v, std::uint32_t power = 1);
  static MPoly monomial(const Rational& coeff, const Exponents& exps);
  static MPoly lambda() { return variable(Var::lambda); }
  static MPoly y() { return variable(Var::y); }
  static MPoly x() { return variable(Var::x); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial with all-zero exponents.
  Rational constant_term() const;

  /// Highest exponent of v among the stored terms (0 for the zero polynomial).
  std::uint32_t degree(Var v) const;

  /// Coefficient of v^power, as a polynomial in the remaining variables.
  MPoly coefficient(Var v, std::uint32_t power) const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& scalar);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend MPoly operator*(MPoly a, int s) { return a *= Rational(s); }
  friend MPoly operator*(int s, MPoly a) { return a *= Rational(s); }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  MPoly pow(unsigned exponent) const;

  /// Canonical text form; see render() in mpoly.cpp for the layout.
  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const Rational& coeff);

  TermMap terms_;
};

/// Simultaneous substitution; unbound variables are left untouched.
using Bindings = std::map<Var, MPoly>;
MPoly substitute(const MPoly& p, const Bindings& bindings);

enum class PolyOp { add, sub, mul };
MPoly poly_arith(const MPoly& a, const MPoly& b, PolyOp op);

}  // namespace spivey
