#include "spivey/mpoly.hpp"

#include <algorithm>
#include <vector>

namespace spivey {

namespace {

constexpr std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kNumVars; ++i) out[i] = a[i] + b[i];
  return out;
}

struct Piece {
  bool negative;
  std::string body;
};

std::string power_factor(const char* name, std::uint32_t e) {
  std::string out(name);
  if (e > 1) out += "^" + std::to_string(e);
  return out;
}

// Absolute value of the coefficient followed by the variable factors,
// joined with a middle dot; a unit coefficient is dropped unless the
// monomial is constant.
Piece render_monomial(const Rational& coeff, const Exponents& e) {
  std::vector<std::string> factors;
  const Rational magnitude = abs(coeff);
  const bool has_vars = e[0] > 0 || e[1] > 0 || e[2] > 0;
  if (magnitude != 1 || !has_vars) factors.push_back(to_string(magnitude));
  if (e[idx(Var::lambda)] > 0) factors.push_back(power_factor("λ", e[idx(Var::lambda)]));
  if (e[idx(Var::x)] > 0) factors.push_back(power_factor("x", e[idx(Var::x)]));
  if (e[idx(Var::y)] > 0) factors.push_back(power_factor("y", e[idx(Var::y)]));
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) body += "·";
    body += factors[i];
  }
  return {sgn(coeff) < 0, std::move(body)};
}

std::string join(const std::vector<Piece>& pieces) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      out += pieces[i].negative ? "-" : "";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

}  // namespace

MPoly::MPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MPoly MPoly::variable(Var v, std::uint32_t power) {
  Exponents e{};
  e[idx(v)] = power;
  return monomial(Rational(1), e);
}

MPoly MPoly::monomial(const Rational& coeff, const Exponents& exps) {
  MPoly out;
  out.add_term(exps, coeff);
  return out;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational MPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx(v)]);
  return d;
}

MPoly MPoly::coefficient(Var v, std::uint32_t power) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] != power) continue;
    Exponents reduced = e;
    reduced[idx(v)] = 0;
    out.terms_.emplace(reduced, c);
  }
  return out;
}

void MPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(add_exponents(ea, eb), Rational(ca * cb));
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(1);
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

// Layout: terms are grouped by descending power of y. Inside a group the
// (lambda, x) terms run by ascending power of lambda, then descending power
// of x. A group with several terms is parenthesized and multiplied by its
// y power, e.g. "y^2 + (1 - λ)·y".
std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";

  std::map<std::uint32_t, std::vector<std::pair<Exponents, Rational>>, std::greater<>> groups;
  for (const auto& [e, c] : terms_) groups[e[idx(Var::y)]].emplace_back(e, c);

  std::vector<Piece> pieces;
  for (auto& [ydeg, members] : groups) {
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
      const auto la = a.first[idx(Var::lambda)];
      const auto lb = b.first[idx(Var::lambda)];
      if (la != lb) return la < lb;
      return a.first[idx(Var::x)] > b.first[idx(Var::x)];
    });
    if (ydeg == 0 || members.size() == 1) {
      for (const auto& [e, c] : members) pieces.push_back(render_monomial(c, e));
      continue;
    }
    std::vector<Piece> inner;
    for (const auto& [e, c] : members) {
      Exponents no_y = e;
      no_y[idx(Var::y)] = 0;
      inner.push_back(render_monomial(c, no_y));
    }
    pieces.push_back({false, "(" + join(inner) + ")·" + power_factor("y", ydeg)});
  }
  return join(pieces);
}

MPoly substitute(const MPoly& p, const Bindings& bindings) {
  // Powers of each bound value are built lazily and reused across terms.
  std::array<std::vector<MPoly>, kNumVars> powers;
  auto power_of = [&](Var v, std::uint32_t e) -> const MPoly& {
    auto& cache = powers[idx(v)];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * bindings.at(v));
    return cache[e];
  };

  MPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents kept = e;
    MPoly term(1);
    for (const auto& [v, value] : bindings) {
      const auto i = idx(v);
      if (e[i] == 0) continue;
      term *= power_of(v, e[i]);
      kept[i] = 0;
    }
    out += term * MPoly::monomial(c, kept);
  }
  return out;
}

MPoly poly_arith(const MPoly& a, const MPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  return {};
}

}  // namespace spivey
