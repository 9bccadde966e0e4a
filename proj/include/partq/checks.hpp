#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partq/counting.hpp"
#include "partq/named_series.hpp"

namespace partq {

/// What a check verified: id, parameters, series order budget and the
/// hypothesis (range rule) it enforced, quoted in human-readable form.
struct CheckSpec {
    std::string id;
    std::map<std::string, long> params;
    int order = 0;
    std::string range_rule;
};

struct Discrepancy {
    long n = 0;     // coefficient index / weight at which the sides were compared
    Int lhs;
    Int rhs;
};

struct CheckReport {
    CheckSpec spec;
    std::vector<long> checked;              // indices actually compared
    std::vector<Discrepancy> discrepancies; // empty iff the check passed
    std::vector<std::string> notes;         // logged observations, never asserted
    double elapsed_ms = 0.0;

    bool pass() const { return discrepancies.empty(); }
};

/// Default budgets: pure series identities run to order 150; checks backed
/// by partition enumeration stop at weight 40 (enumeration cost explodes),
/// or 81 for the theorems whose equations are indexed by 2n / 2n+1 so that
/// the theorem index still reaches 40.
inline constexpr int kSeriesOrder = 150;
inline constexpr int kEnumOrder = 40;
inline constexpr int kDoubledEnumOrder = 81;
inline constexpr int kScanOrder = 120;

/// Truncated pentagonal sum identity against p(2,3,nu;n) + p(1,3,nu;n),
/// for n > nu(3nu+5)/2.
CheckReport check_T2(int nu, int order = kEnumOrder);

/// Same sums with argument 2n (even case, extra (-1)^nu p_o(n) term) and
/// 2n+1 (odd case) against the mod-4 restricted counters, n > nu(2nu+3).
CheckReport check_T3(int nu, int order = kDoubledEnumOrder);

/// Odd-part analog at 2n+1, n > nu(2nu+3).
CheckReport check_T4(int nu, int order = kDoubledEnumOrder);

/// pod / p_{2,4} analog at n, n > nu(2nu+3).
CheckReport check_T5(int nu, int order = kEnumOrder);

/// Overpartition identity: truncated phi sum = 2 * overline_p(1,2,nu;n),
/// n >= (nu+1)^2.
CheckReport check_T6(int nu, int order = kEnumOrder);

/// Bipartition identity at 2n and 2n+1, n >= (nu+1)^2.
CheckReport check_T7(int nu, int order = kDoubledEnumOrder);

/// nu = 0 splittings p(n) = p(2,3,0;n)+p(1,3,0;n) and
/// p_{2,4}(n) = p_{2,4}(3,4,0;n)+p_{2,4}(1,4,0;n), n >= 1.
CheckReport check_T8(int order = kEnumOrder);

/// Alternating shifted-p sum equals N_nu(n), all n >= 0.
CheckReport check_CP(int nu, int order = kEnumOrder);

/// Three-series recurrence between rhs_N_series(nu), gen(p) times a partial
/// theta, and rhs_N_series(nu+m+1), as exact series equality.
CheckReport check_lemma_l1(int nu, int m, int order = kSeriesOrder);

enum class BackgroundId { APT, G1, G2 };
BackgroundId parse_background_id(std::string_view id);

/// Andrews-Merca truncated pentagonal theorem and the two Guo-Zeng truncated
/// Gauss identities, both sides built independently as series.
CheckReport check_background(BackgroundId id, int nu, int order = kSeriesOrder);

enum class InequalityId { Pe, Opi, Dopi, CI, Bpc, P12, P12PO };
InequalityId parse_inequality_id(std::string_view id);

/// Sign/bound checks for the corollary inequalities, with strictness
/// asserted past each quoted threshold and parity hypotheses enforced.
CheckReport check_inequality(InequalityId id, int nu, int order = kSeriesOrder);

/// Conjectured bound: truncated sum <= M_nu(n) for nu even or n odd.
/// Violations are recorded as findings; the report never asserts the
/// conjecture itself.
CheckReport scan_conjecture_co1(int nu_max, int order = kScanOrder);

/// CLI-facing registry. Unknown ids throw std::invalid_argument carrying
/// the registry listing.
struct CheckParams {
    std::optional<int> nu;
    std::optional<int> m;
    std::optional<int> nu_max;
    std::optional<int> order;
};

CheckReport run_check(const std::string& id, const CheckParams& params);
std::vector<std::string> check_registry();

} // namespace partq
