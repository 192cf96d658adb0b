#include "spivey/identities.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "spivey/bell.hpp"
#include "spivey/combinatorics.hpp"
#include "spivey/prob_bell.hpp"

namespace spivey {

namespace {

using Clock = std::chrono::steady_clock;

struct Sides {
  MPoly lhs;
  MPoly rhs;
};

struct Cell {
  IdentityId id;
  ReportParams params;
  std::vector<std::string> notes;
  std::function<Sides()> compute;
};

VerificationReport evaluate(const Cell& cell, bool perturb_rhs) {
  const auto start = Clock::now();
  Sides sides = cell.compute();
  const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  if (perturb_rhs) sides.rhs += MPoly(1);
  VerificationReport report = make_report(cell.id, cell.params, sides.lhs, sides.rhs, elapsed);
  report.notes = cell.notes;
  return report;
}

std::vector<std::string> rv_notes(const RandomVariableModel& rv) {
  if (rv.has_negative_support()) return {"negative-support random variable"};
  return {};
}

Rational inverse_factorial(unsigned k) { return Rational(Integer(1), factorial(k)); }

MPoly at_lambda_zero(const MPoly& p) { return substitute(p, {{Var::lambda, MPoly()}}); }
MPoly at_y_one(const MPoly& p) { return substitute(p, {{Var::y, MPoly(1)}}); }

// sum over compositions of n into k parts of multinomial(n; parts) times
// the mixed expectation with falling order j, for every j = 0..max_j.
std::vector<MPoly> composition_weighted_expectations(const RandomVariableModel& rv, unsigned n, unsigned k,
                                                     unsigned shift_n, unsigned max_j) {
  std::vector<MPoly> out(max_j + 1);
  for (const auto& parts : compositions(n, k)) {
    MixedExpectationSpec spec{rv, k, parts, shift_n, 0};
    const auto values = sk_mixed_expectation_upto(spec, max_j);
    const Rational weight(multinomial(n, parts));
    for (unsigned j = 0; j <= max_j; ++j) out[j] += values[j] * weight;
  }
  return out;
}

// Classical S(n,k) and Bell polynomials from set-partition enumeration.
struct ClassicalOracle {
  explicit ClassicalOracle(unsigned max_n) {
    for (unsigned n = 0; n <= max_n; ++n) counts.push_back(set_partition_block_counts(n));
  }
  Integer stirling(unsigned n, unsigned k) const { return k < counts[n].size() ? counts[n][k] : Integer(0); }
  MPoly bell(unsigned n) const {
    MPoly out;
    for (unsigned k = 0; k < counts[n].size(); ++k) out += Rational(counts[n][k]) * MPoly::variable(Var::y, k);
    return out;
  }
  std::vector<std::vector<Integer>> counts;
};

MPoly classical_spivey_sum(unsigned n, unsigned l, bool y_at_one) {
  const ClassicalOracle oracle(std::max(n, l));
  MPoly sum;
  for (unsigned k = 0; k <= n; ++k) {
    const Integer s = oracle.stirling(n, k);
    if (s == 0) continue;
    for (unsigned m = 0; m <= l; ++m) {
      // k^{l-m} with 0^0 = 1.
      const Rational k_power = pow(Rational(k), l - m);
      MPoly term = Rational(binomial(l, m) * s) * k_power * oracle.bell(m);
      if (!y_at_one) term *= MPoly::variable(Var::y, k);
      sum += term;
    }
  }
  return y_at_one ? at_y_one(sum) : sum;
}

MPoly sum_of(const SummandMap& summands) {
  MPoly out;
  for (const auto& [key, value] : summands) out += value;
  return out;
}

Sides thm21_sides(const RandomVariableModel& rv, unsigned n, unsigned l) {
  const auto bell = prob_bell_deg_upto(rv, l);
  return {prob_bell_deg(rv, l + n), thm21_rhs(rv, n, l, bell)};
}

Sides cor22_sides(const RandomVariableModel& rv, unsigned n, unsigned l) {
  std::vector<MPoly> bell_numbers;
  for (unsigned m = 0; m <= l; ++m) bell_numbers.push_back(at_y_one(prob_bell_deg(rv, m)));
  return {at_y_one(prob_bell_deg(rv, l + n)), thm21_rhs(rv, n, l, bell_numbers, true)};
}

Sides thm23_sides(const RandomVariableModel& rv, unsigned n, unsigned j, unsigned r) {
  const auto bell = prob_bell_r_deg_upto(rv, j + n, r);
  std::vector<MPoly> lower(bell.begin(), bell.begin() + j + 1);
  return {bell[j + n], thm23_rhs(rv, n, j, r, lower)};
}

Sides cor24_sides(unsigned n, unsigned j, unsigned r) {
  const RStirlingTableDeg table(j + n, r);
  MPoly rhs;
  for (unsigned k = 0; k <= n; ++k) {
    const MPoly k_shift = MPoly(static_cast<int>(k)) - MPoly::lambda() * Rational(n);
    for (unsigned m = 0; m <= j; ++m) {
      rhs += table.at(n, k) * Rational(binomial(j, m)) * deg_falling(k_shift, j - m) *
             MPoly::variable(Var::y, k) * table.bell(m);
    }
  }
  return {table.bell(j + n), rhs};
}

Sides eq1_sides(unsigned n, unsigned l) { return {bell_deg(l + n), sum_of(eq1_summands(n, l))}; }

Sides gould_quaintance_sides(unsigned n, unsigned l) {
  const auto one = RandomVariableModel::point(1);
  const auto bell = prob_bell_deg_upto(one, l);
  return {at_lambda_zero(thm21_rhs(one, n, l, bell)), gould_quaintance_rhs(n, l)};
}

Sides spivey_sides(unsigned n, unsigned l) {
  const auto one = RandomVariableModel::point(1);
  const auto bell = prob_bell_deg_upto(one, l);
  return {at_y_one(at_lambda_zero(thm21_rhs(one, n, l, bell))), classical_spivey_sum(n, l, true)};
}

Sides eq27_sides(unsigned n, unsigned k, unsigned r) {
  const auto row = stirling2_r_deg_row_via_basis(n, r);
  return {stirling2_r_deg(n, k, r), k < row.size() ? row[k] : MPoly()};
}

Sides composition_sides(unsigned n, unsigned k) {
  return {stirling2_deg(n, k), stirling2_deg_via_compositions(n, k)};
}

Sides recurrence_sides(const RandomVariableModel& rv, unsigned n) {
  return {prob_bell_deg(rv, n + 1), prob_bell_recurrence_rhs(rv, n)};
}

ReportParams nl(std::optional<std::string> rv, unsigned n, unsigned l) {
  ReportParams p;
  p.rv = std::move(rv);
  p.n = n;
  p.l = l;
  return p;
}

ReportParams njr(std::optional<std::string> rv, unsigned n, unsigned j, unsigned r) {
  ReportParams p;
  p.rv = std::move(rv);
  p.n = n;
  p.j = j;
  p.r = r;
  return p;
}

ReportParams nkr(unsigned n, unsigned k, std::optional<unsigned> r) {
  ReportParams p;
  p.n = n;
  p.k = k;
  p.r = r;
  return p;
}

ReportParams n_only(std::string rv, unsigned n) {
  ReportParams p;
  p.rv = std::move(rv);
  p.n = n;
  return p;
}

Cell thm21_cell(const RandomVariableModel& rv, unsigned n, unsigned l) {
  return {IdentityId::THM21, nl(rv.spec(), n, l), rv_notes(rv), [rv, n, l] { return thm21_sides(rv, n, l); }};
}
Cell cor22_cell(const RandomVariableModel& rv, unsigned n, unsigned l) {
  return {IdentityId::COR22, nl(rv.spec(), n, l), rv_notes(rv), [rv, n, l] { return cor22_sides(rv, n, l); }};
}
Cell thm23_cell(const RandomVariableModel& rv, unsigned n, unsigned j, unsigned r) {
  return {IdentityId::THM23, njr(rv.spec(), n, j, r), rv_notes(rv),
          [rv, n, j, r] { return thm23_sides(rv, n, j, r); }};
}
Cell cor24_cell(unsigned n, unsigned j, unsigned r) {
  return {IdentityId::COR24, njr(std::nullopt, n, j, r), {}, [n, j, r] { return cor24_sides(n, j, r); }};
}
Cell eq1_cell(unsigned n, unsigned l) {
  return {IdentityId::EQ1, nl(std::nullopt, n, l), {}, [n, l] { return eq1_sides(n, l); }};
}
Cell gould_quaintance_cell(unsigned n, unsigned l) {
  return {IdentityId::GOULD_QUAINTANCE, nl(std::nullopt, n, l), {}, [n, l] { return gould_quaintance_sides(n, l); }};
}
Cell spivey_cell(unsigned n, unsigned l) {
  return {IdentityId::SPIVEY, nl(std::nullopt, n, l), {}, [n, l] { return spivey_sides(n, l); }};
}
Cell eq27_cell(unsigned n, unsigned k, unsigned r) {
  return {IdentityId::EQ27, nkr(n, k, r), {}, [n, k, r] { return eq27_sides(n, k, r); }};
}
Cell composition_cell(unsigned n, unsigned k) {
  return {IdentityId::COMPOSITION_FORMULA, nkr(n, k, std::nullopt), {}, [n, k] { return composition_sides(n, k); }};
}
Cell recurrence_cell(const RandomVariableModel& rv, unsigned n) {
  return {IdentityId::RECURRENCE_14, n_only(rv.spec(), n), rv_notes(rv), [rv, n] { return recurrence_sides(rv, n); }};
}

std::vector<VerificationReport> run_cells(const std::vector<Cell>& cells, unsigned workers, bool perturb_rhs) {
  std::vector<VerificationReport> reports(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) reports[i] = evaluate(cells[i], perturb_rhs);
  };
  const unsigned count = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(cells.size())));
  if (count <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
  }
  sort_reports(reports);
  return reports;
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::THM21: return "THM21";
    case IdentityId::COR22: return "COR22";
    case IdentityId::THM23: return "THM23";
    case IdentityId::COR24: return "COR24";
    case IdentityId::EQ1: return "EQ1";
    case IdentityId::GOULD_QUAINTANCE: return "GOULD_QUAINTANCE";
    case IdentityId::SPIVEY: return "SPIVEY";
    case IdentityId::EQ27: return "EQ27";
    case IdentityId::COMPOSITION_FORMULA: return "COMPOSITION_FORMULA";
    case IdentityId::RECURRENCE_14: return "RECURRENCE_14";
  }
  return "UNKNOWN";
}

std::optional<IdentityId> parse_identity(std::string_view text) {
  static const std::pair<std::string_view, IdentityId> kAliases[] = {
      {"thm21", IdentityId::THM21},
      {"cor22", IdentityId::COR22},
      {"thm23", IdentityId::THM23},
      {"cor24", IdentityId::COR24},
      {"eq1", IdentityId::EQ1},
      {"gould-quaintance", IdentityId::GOULD_QUAINTANCE},
      {"spivey", IdentityId::SPIVEY},
      {"eq27", IdentityId::EQ27},
      {"composition", IdentityId::COMPOSITION_FORMULA},
      {"recurrence14", IdentityId::RECURRENCE_14},
  };
  for (const auto& [alias, id] : kAliases) {
    if (text == alias || text == identity_name(id)) return id;
  }
  return std::nullopt;
}

VerificationReport make_report(IdentityId id, ReportParams params, const MPoly& lhs, const MPoly& rhs,
                               std::chrono::nanoseconds elapsed) {
  VerificationReport report;
  report.identity = id;
  report.params = std::move(params);
  report.lhs = lhs.to_string();
  report.rhs = rhs.to_string();
  report.equal = report.lhs == report.rhs;
  report.elapsed = elapsed;
  return report;
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.params < b.params;
  });
}

SummandMap thm21_summands(const RandomVariableModel& rv, unsigned n, unsigned l, const std::vector<MPoly>& bell,
                          bool y_at_one) {
  SummandMap out;
  for (unsigned k = 0; k <= n; ++k) {
    const auto expectations = composition_weighted_expectations(rv, n, k, n, l);
    const MPoly y_factor = y_at_one ? MPoly(1) : MPoly::variable(Var::y, k);
    for (unsigned m = 0; m <= l; ++m) {
      out[{k, m}] = Rational(binomial(l, m)) * inverse_factorial(k) * y_factor * expectations[l - m] * bell.at(m);
    }
  }
  return out;
}

MPoly thm21_rhs(const RandomVariableModel& rv, unsigned n, unsigned l, const std::vector<MPoly>& bell,
                bool y_at_one) {
  return sum_of(thm21_summands(rv, n, l, bell, y_at_one));
}

SummandMap eq1_summands(unsigned n, unsigned l) {
  const StirlingTableDeg table(std::max(n, l));
  SummandMap out;
  for (unsigned k = 0; k <= n; ++k) {
    const MPoly k_shift = MPoly(static_cast<int>(k)) - MPoly::lambda() * Rational(n);
    for (unsigned m = 0; m <= l; ++m) {
      out[{k, m}] = Rational(binomial(l, m)) * table.at(n, k) * deg_falling(k_shift, l - m) *
                    MPoly::variable(Var::y, k) * table.bell(m);
    }
  }
  return out;
}

MPoly thm23_rhs(const RandomVariableModel& rv, unsigned n, unsigned j, unsigned r, const std::vector<MPoly>& bell) {
  const MPoly r_base(static_cast<int>(r));
  MPoly total;
  for (unsigned l = 0; l <= n; ++l) {
    const MPoly outer = Rational(binomial(n, l)) * deg_falling(r_base, n - l);
    for (unsigned k = 0; k <= l; ++k) {
      // The shift is the outer n for every l.
      const auto expectations = composition_weighted_expectations(rv, l, k, n, j);
      const MPoly y_factor = MPoly::variable(Var::y, k) * inverse_factorial(k);
      for (unsigned m = 0; m <= j; ++m) {
        total += outer * y_factor * Rational(binomial(j, m)) * expectations[j - m] * bell.at(m);
      }
    }
  }
  return total;
}

MPoly classical_bell_polynomial(unsigned n) { return ClassicalOracle(n).bell(n); }

MPoly gould_quaintance_rhs(unsigned n, unsigned l) { return classical_spivey_sum(n, l, false); }

VerificationReport verify_thm_2_1(const RandomVariableModel& rv, unsigned n, unsigned l) {
  return evaluate(thm21_cell(rv, n, l), false);
}
VerificationReport verify_cor_2_2(const RandomVariableModel& rv, unsigned n, unsigned l) {
  return evaluate(cor22_cell(rv, n, l), false);
}
VerificationReport verify_thm_2_3(const RandomVariableModel& rv, unsigned n, unsigned j, unsigned r) {
  return evaluate(thm23_cell(rv, n, j, r), false);
}
VerificationReport verify_cor_2_4(unsigned n, unsigned j, unsigned r) { return evaluate(cor24_cell(n, j, r), false); }
VerificationReport verify_eq1(unsigned n, unsigned l) { return evaluate(eq1_cell(n, l), false); }
VerificationReport verify_gould_quaintance(unsigned n, unsigned l) {
  return evaluate(gould_quaintance_cell(n, l), false);
}
VerificationReport verify_spivey(unsigned n, unsigned l) { return evaluate(spivey_cell(n, l), false); }
std::vector<VerificationReport> verify_classical_limits(unsigned n, unsigned l) {
  return {verify_gould_quaintance(n, l), verify_spivey(n, l)};
}
VerificationReport verify_eq27(unsigned n, unsigned k, unsigned r) { return evaluate(eq27_cell(n, k, r), false); }
VerificationReport verify_composition_formula(unsigned n, unsigned k) {
  return evaluate(composition_cell(n, k), false);
}
VerificationReport verify_recurrence_14(const RandomVariableModel& rv, unsigned n) {
  return evaluate(recurrence_cell(rv, n), false);
}

std::vector<VerificationReport> verify_structural(unsigned n_max, unsigned r_max) {
  std::vector<Cell> cells;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned r = 1; r <= r_max; ++r) cells.push_back(eq27_cell(n, k, r));
      cells.push_back(composition_cell(n, k));
    }
  }
  for (const auto& rv : standard_rv_suite()) {
    for (unsigned n = 0; n < n_max; ++n) cells.push_back(recurrence_cell(rv, n));
  }
  return run_cells(cells, 1, false);
}

std::vector<VerificationReport> run_grid(const GridConfig& config) {
  std::vector<Cell> cells;
  auto two_index = [&](auto&& make) {
    for (unsigned n = 0; n <= config.n_max; ++n) {
      for (unsigned l = 0; l <= config.l_max && n + l <= config.sum_max; ++l) make(n, l);
    }
  };
  auto r_index = [&](auto&& make) {
    for (unsigned r : config.r_values) {
      for (unsigned n = 0; n <= config.n_max; ++n) {
        for (unsigned j = 0; j <= config.j_max && n + j <= config.sum_max; ++j) make(n, j, r);
      }
    }
  };
  const unsigned single_max = std::min(config.n_max, config.sum_max);

  for (IdentityId id : config.identities) {
    switch (id) {
      case IdentityId::THM21:
        for (const auto& rv : config.rvs) two_index([&](unsigned n, unsigned l) { cells.push_back(thm21_cell(rv, n, l)); });
        break;
      case IdentityId::COR22:
        for (const auto& rv : config.rvs) two_index([&](unsigned n, unsigned l) { cells.push_back(cor22_cell(rv, n, l)); });
        break;
      case IdentityId::THM23:
        for (const auto& rv : config.rvs) {
          r_index([&](unsigned n, unsigned j, unsigned r) { cells.push_back(thm23_cell(rv, n, j, r)); });
        }
        break;
      case IdentityId::COR24:
        r_index([&](unsigned n, unsigned j, unsigned r) { cells.push_back(cor24_cell(n, j, r)); });
        break;
      case IdentityId::EQ1:
        two_index([&](unsigned n, unsigned l) { cells.push_back(eq1_cell(n, l)); });
        break;
      case IdentityId::GOULD_QUAINTANCE:
        two_index([&](unsigned n, unsigned l) { cells.push_back(gould_quaintance_cell(n, l)); });
        break;
      case IdentityId::SPIVEY:
        two_index([&](unsigned n, unsigned l) { cells.push_back(spivey_cell(n, l)); });
        break;
      case IdentityId::EQ27:
        for (unsigned r : config.r_values) {
          for (unsigned n = 0; n <= single_max; ++n) {
            for (unsigned k = 0; k <= n; ++k) cells.push_back(eq27_cell(n, k, r));
          }
        }
        break;
      case IdentityId::COMPOSITION_FORMULA:
        for (unsigned n = 0; n <= single_max; ++n) {
          for (unsigned k = 0; k <= n; ++k) cells.push_back(composition_cell(n, k));
        }
        break;
      case IdentityId::RECURRENCE_14:
        for (const auto& rv : config.rvs) {
          for (unsigned n = 0; n < single_max; ++n) cells.push_back(recurrence_cell(rv, n));
        }
        break;
    }
  }
  return run_cells(cells, config.workers, config.perturb_rhs);
}

}  // namespace spivey
