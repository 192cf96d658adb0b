#pragma once

#include <chrono>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spivey/moments.hpp"
#include "spivey/mpoly.hpp"

namespace spivey {

enum class IdentityId {
  THM21,
  COR22,
  THM23,
  COR24,
  EQ1,
  GOULD_QUAINTANCE,
  SPIVEY,
  EQ27,
  COMPOSITION_FORMULA,
  RECURRENCE_14,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::THM21, IdentityId::COR22, IdentityId::THM23,  IdentityId::COR24,
    IdentityId::EQ1,   IdentityId::GOULD_QUAINTANCE,           IdentityId::SPIVEY,
    IdentityId::EQ27,  IdentityId::COMPOSITION_FORMULA,        IdentityId::RECURRENCE_14,
};

std::string_view identity_name(IdentityId id);
/// Accepts the report names ("THM21") and CLI spellings ("thm21",
/// "gould-quaintance", "composition", "recurrence14").
std::optional<IdentityId> parse_identity(std::string_view text);

/// Grid coordinates of one verification cell. Field order is the sort order.
struct ReportParams {
  std::optional<std::string> rv;
  std::optional<unsigned> n;
  std::optional<unsigned> l;
  std::optional<unsigned> j;
  std::optional<unsigned> k;
  std::optional<unsigned> r;

  friend auto operator<=>(const ReportParams&, const ReportParams&) = default;
  friend bool operator==(const ReportParams&, const ReportParams&) = default;
};

struct VerificationReport {
  IdentityId identity;
  ReportParams params;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  std::chrono::nanoseconds elapsed{0};
  std::vector<std::string> notes;
};

/// Builds a report from both sides; equal iff the canonical strings match.
VerificationReport make_report(IdentityId id, ReportParams params, const MPoly& lhs, const MPoly& rhs,
                               std::chrono::nanoseconds elapsed);

/// Sorts by identity, then params.
void sort_reports(std::vector<VerificationReport>& reports);

// Right-hand-side builders. The summand maps are keyed by (k, m) and hold
// the full summand (including y^k and the Bell factor), so their sum is the
// right-hand side.
using SummandMap = std::map<std::pair<unsigned, unsigned>, MPoly>;

/// Summands of the Spivey-type expansion of phi^Y_{l+n,lambda}(y). The Bell
/// factors phi^Y_m are taken from `bell` (needs m = 0..l). With
/// y_at_one set, y is replaced by 1 in the y^k factor (the Bell factors are
/// used as given).
SummandMap thm21_summands(const RandomVariableModel& rv, unsigned n, unsigned l, const std::vector<MPoly>& bell,
                          bool y_at_one = false);
MPoly thm21_rhs(const RandomVariableModel& rv, unsigned n, unsigned l, const std::vector<MPoly>& bell,
                bool y_at_one = false);

/// Summands C(l,m) {n k}_lambda (k - n lambda)_{l-m,lambda} y^k phi_{m,lambda}(y).
SummandMap eq1_summands(unsigned n, unsigned l);

/// r-Bell expansion of phi^{(r,Y)}_{j+n,lambda}(y); `bell` holds
/// phi^{(r,Y)}_m for m = 0..j.
MPoly thm23_rhs(const RandomVariableModel& rv, unsigned n, unsigned j, unsigned r, const std::vector<MPoly>& bell);

/// Classical Bell polynomials phi_n(y) from set-partition enumeration.
MPoly classical_bell_polynomial(unsigned n);

/// sum C(l,m) S(n,k) k^{l-m} y^k phi_m(y) with enumeration-based S and phi,
/// 0^0 = 1.
MPoly gould_quaintance_rhs(unsigned n, unsigned l);

VerificationReport verify_thm_2_1(const RandomVariableModel& rv, unsigned n, unsigned l);
VerificationReport verify_cor_2_2(const RandomVariableModel& rv, unsigned n, unsigned l);
VerificationReport verify_thm_2_3(const RandomVariableModel& rv, unsigned n, unsigned j, unsigned r);
VerificationReport verify_cor_2_4(unsigned n, unsigned j, unsigned r);
VerificationReport verify_eq1(unsigned n, unsigned l);
/// Y = 1 expansion at lambda = 0 against the Gould-Quaintance form.
VerificationReport verify_gould_quaintance(unsigned n, unsigned l);
/// Y = 1 expansion at lambda = 0, y = 1 against Spivey's form.
VerificationReport verify_spivey(unsigned n, unsigned l);
/// Both of the above.
std::vector<VerificationReport> verify_classical_limits(unsigned n, unsigned l);
VerificationReport verify_eq27(unsigned n, unsigned k, unsigned r);
VerificationReport verify_composition_formula(unsigned n, unsigned k);
VerificationReport verify_recurrence_14(const RandomVariableModel& rv, unsigned n);

/// r-Stirling sum form against basis conversion for n <= n_max, r <= r_max;
/// composition formula against basis conversion for n <= n_max; and the
/// Bell recurrence for the standard rv suite, n < n_max.
std::vector<VerificationReport> verify_structural(unsigned n_max, unsigned r_max);

struct GridConfig {
  std::vector<IdentityId> identities;
  std::vector<RandomVariableModel> rvs;
  unsigned sum_max = 6;
  unsigned n_max = 6;
  unsigned l_max = 6;
  unsigned j_max = 6;
  std::vector<unsigned> r_values{1, 2, 3};
  unsigned workers = 1;
  /// Adds 1 to every right-hand side; exercises the failure path.
  bool perturb_rhs = false;
};

/// Runs every selected cell (possibly on several threads) and returns the
/// reports sorted by identity, then params.
std::vector<VerificationReport> run_grid(const GridConfig& config);

}  // namespace spivey
