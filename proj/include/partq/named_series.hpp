#pragma once

#include <string_view>

#include "partq/series.hpp"

namespace partq {

/// Gauss theta sum 1 + 2*sum_{t>=1} (-1)^t q^(t^2); equals the product
/// (q;q)_inf / (-q;q)_inf coefficientwise (checked in the test suite).
TruncatedSeries phi_neg(int order);

/// Gauss theta sum sum_{t>=0} (-1)^t q^(t(2t+1)) (1 - q^(2t+1)); equals
/// (q^2;q^2)_inf / (-q;q^2)_inf.
TruncatedSeries psi_neg(int order);

/// Partial theta sums used by the truncated identities.
TruncatedSeries phi_neg_partial(int terms, int order);   // 1 + 2*sum_{t=1}^{terms} ...
TruncatedSeries psi_neg_partial(int terms, int order);   // sum_{t=0}^{terms-1} ...

/// Truncated pentagonal sum sum_{t=0}^{hi1} (-1)^t q^(t(3t+1)/2)
///   - sum_{t=0}^{hi2} (-1)^t q^(t(3t+5)/2 + 1).
TruncatedSeries pentagonal_partial(int hi1, int hi2, int order);

/// (q;q)_inf truncated.
TruncatedSeries euler_product(int order);

enum class GenName { P, OverlineP, Pod, PO, PP };

GenName parse_gen_name(std::string_view name);           // throws on unknown name
std::string_view gen_name_string(GenName name);

/// Generating functions: p -> 1/(q;q)_inf, overline_p -> (-q;q)_inf/(q;q)_inf,
/// pod -> (-q;q^2)_inf/(q^2;q^2)_inf, p_o -> 1/(q;q^2)_inf, pp -> 1/(q;q)_inf^2.
TruncatedSeries gen(GenName name, int order);

/// Right side of the M(a,m,nu;n) generating-function identity:
/// q^(a + nu(m*nu + m + 2a)/2) * sum_t q^(t(m*nu + m*t + m + a))
///   / ((q^m;q^m)_t (q^a;q^m)_(nu+t+1)), summed while the leading exponent
/// stays within the order. Requires 0 < a < m and nu >= 0.
TruncatedSeries rhs_M_series(int a, int m, int nu, int order);

/// Right side of the N_nu(n) identity:
/// q^(nu(nu-1)/2) * sum_t q^(t(nu+t)) / ((q;q)_t (q;q)_(nu+t-1)).
/// Requires nu >= 1.
TruncatedSeries rhs_N_series(int nu, int order);

} // namespace partq
