#include "partq/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace partq {

namespace {

void require_am(int a, int m) {
    if (m <= 0 || a <= 0 || a >= m)
        throw std::invalid_argument("require 0 < a < m, got a=" + std::to_string(a) +
                                    " m=" + std::to_string(m));
}

bool rows_below_shorter(std::span<const int> rows, const DurfeeResult& d) {
    for (size_t i = static_cast<size_t>(d.height); i < rows.size(); ++i)
        if (rows[i] >= d.width) return false;
    return true;
}

// Mandatory values a, a+m, ..., a+m*nu all present in decreasing `parts`.
bool mandatory_present(std::span<const int> parts, int a, int m, int nu) {
    for (int i = 0; i <= nu; ++i) {
        const int v = a + m * i;
        if (!std::binary_search(parts.rbegin(), parts.rend(), v)) return false;
    }
    return true;
}

} // namespace

bool is_M_member(std::span<const int> parts, int a, int m, int nu) {
    require_am(a, m);
    if (nu < 0) throw std::invalid_argument("nu must be >= 0");
    std::vector<int> rows;
    rows.reserve(parts.size());
    for (int p : parts) {
        if (p % m != a) return false;
        rows.push_back((p - a) / m + 1);
    }
    if (!mandatory_present(parts, a, m, nu)) return false;
    return rows_below_shorter(rows, durfee(rows, nu + 2));
}

bool is_N_member(std::span<const int> parts, int nu) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    for (int v = 1; v < nu; ++v)
        if (!std::binary_search(parts.rbegin(), parts.rend(), v)) return false;
    return rows_below_shorter(parts, durfee(parts, nu));
}

Int count_M(int a, int m, int nu, long n) {
    require_am(a, m);
    long c = 0;
    for_each_partition(n, PartitionConstraint::residue(a, m),
                       [&](const std::vector<int>& parts) {
                           if (is_M_member(parts, a, m, nu)) ++c;
                       });
    return c;
}

std::vector<Int> count_M_table(int a, int m, int nu, int max_n) {
    std::vector<Int> out(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out[static_cast<size_t>(n)] = count_M(a, m, nu, n);
    return out;
}

Int count_N(int nu, long n) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    long c = 0;
    for_each_partition(n, {}, [&](const std::vector<int>& parts) {
        if (is_N_member(parts, nu)) ++c;
    });
    return c;
}

std::vector<Int> count_N_table(int nu, int max_n) {
    std::vector<Int> out(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out[static_cast<size_t>(n)] = count_N(nu, n);
    return out;
}

Carrier parse_carrier(std::string_view name) {
    if (name == "all") return Carrier::All;
    if (name == "odd") return Carrier::OddParts;
    if (name == "not2mod4") return Carrier::Not2Mod4;
    throw std::invalid_argument("unknown carrier: " + std::string(name));
}

std::string_view carrier_string(Carrier c) {
    switch (c) {
        case Carrier::All: return "all";
        case Carrier::OddParts: return "odd";
        case Carrier::Not2Mod4: return "not2mod4";
    }
    throw std::logic_error("unreachable");
}

namespace {

// Residue/carrier consistency per the defining theorems: the odd and
// not-2-mod-4 carriers are tied to modulus 4 with a in {1,3}.
void require_carrier(int a, int m, Carrier carrier) {
    require_am(a, m);
    if (carrier != Carrier::All && (m != 4 || (a != 1 && a != 3)))
        throw std::invalid_argument("carrier " + std::string(carrier_string(carrier)) +
                                    " requires m=4 and a in {1,3}");
}

PartitionConstraint carrier_constraint(Carrier carrier) {
    switch (carrier) {
        case Carrier::All: return {};
        case Carrier::OddParts: return PartitionConstraint::odd();
        case Carrier::Not2Mod4: {
            PartitionConstraint c;
            c.modulus = 4;
            c.residues = {0, 1, 3};
            return c;
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace

std::vector<Partition> p_restricted_partitions(int a, int m, int nu, long n, Carrier carrier) {
    require_carrier(a, m, carrier);
    std::vector<Partition> out;
    std::vector<int> sub;
    for_each_partition(n, carrier_constraint(carrier), [&](const std::vector<int>& parts) {
        sub.clear();
        for (int p : parts)
            if (p % m == a) sub.push_back(p);
        if (is_M_member(sub, a, m, nu)) out.emplace_back(parts);
    });
    return out;
}

Int count_p_restricted_enum(int a, int m, int nu, long n, Carrier carrier) {
    require_carrier(a, m, carrier);
    long c = 0;
    std::vector<int> sub;
    for_each_partition(n, carrier_constraint(carrier), [&](const std::vector<int>& parts) {
        sub.clear();
        for (int p : parts)
            if (p % m == a) sub.push_back(p);
        if (is_M_member(sub, a, m, nu)) ++c;
    });
    return c;
}

std::vector<Int> partition_count_table(const PartitionConstraint& c, int max_n) {
    std::vector<Int> dp(static_cast<size_t>(max_n) + 1);
    dp[0] = 1;
    for (int v = 1; v <= max_n; ++v) {
        if (!c.allows(v)) continue;
        if (c.odd_parts_distinct && v % 2 == 1) {
            for (int w = max_n; w >= v; --w) dp[w] += dp[w - v];   // at most one copy
        } else {
            for (int w = v; w <= max_n; ++w) dp[w] += dp[w - v];
        }
    }
    return dp;
}

namespace {

// R(k): carrier partitions of k with no part congruent to a mod m.
std::vector<Int> avoider_table(int a, int m, Carrier carrier, int max_n) {
    PartitionConstraint base = carrier_constraint(carrier);
    std::vector<Int> dp(static_cast<size_t>(max_n) + 1);
    dp[0] = 1;
    for (int v = 1; v <= max_n; ++v) {
        if (!base.allows(v) || v % m == a) continue;
        for (int w = v; w <= max_n; ++w) dp[w] += dp[w - v];
    }
    return dp;
}

std::vector<Int> convolve(const std::vector<Int>& f, const std::vector<Int>& g, int max_n) {
    std::vector<Int> out(static_cast<size_t>(max_n) + 1);
    for (int i = 0; i <= max_n && i < static_cast<int>(f.size()); ++i) {
        if (f[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= max_n && j < static_cast<int>(g.size()); ++j) {
            if (g[static_cast<size_t>(j)] == 0) continue;
            out[static_cast<size_t>(i + j)] += f[static_cast<size_t>(i)] * g[static_cast<size_t>(j)];
        }
    }
    return out;
}

} // namespace

std::vector<Int> count_p_restricted_table(int a, int m, int nu, int max_n, Carrier carrier) {
    require_carrier(a, m, carrier);
    return convolve(count_M_table(a, m, nu, max_n), avoider_table(a, m, carrier, max_n), max_n);
}

Int count_p_restricted_conv(int a, int m, int nu, long n, Carrier carrier) {
    return count_p_restricted_table(a, m, nu, static_cast<int>(n), carrier)[static_cast<size_t>(n)];
}

Int count_overline_p_restricted(int nu, long n) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    long c = 0;
    std::vector<int> sub;
    for_each_overpartition(n, [&](const std::vector<int>& parts, const std::vector<int>& over) {
        sub.clear();
        // non-overlined odd parts: an overline removes one copy of its value
        for (size_t i = 0; i < parts.size(); ++i) {
            const int p = parts[i];
            if (p % 2 == 0) continue;
            const bool first_of_value = (i == 0 || parts[i - 1] != p);
            if (first_of_value && std::binary_search(over.begin(), over.end(), p)) continue;
            sub.push_back(p);
        }
        if (is_M_member(sub, 1, 2, nu)) ++c;
    });
    return c;
}

std::vector<Int> count_pp_e_table(int nu, int max_n) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    // qualifying pi2 of weight w: odd parts form an M(1,2,nu) member, even
    // parts free
    PartitionConstraint evens;
    evens.modulus = 2;
    evens.residues = {0};
    std::vector<Int> pi2 =
        convolve(count_M_table(1, 2, nu, max_n), partition_count_table(evens, max_n), max_n);
    return convolve(pi2, partition_count_table({}, max_n), max_n);
}

Int count_pp_e(int nu, long n) {
    return count_pp_e_table(nu, static_cast<int>(n))[static_cast<size_t>(n)];
}

Int count_pp_e_brute(int nu, long n) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    Int total = 0;
    for (long w = 0; w <= n; ++w) {
        long qualifying = 0;
        std::vector<int> odd;
        for_each_partition(w, {}, [&](const std::vector<int>& parts) {
            odd.clear();
            for (int p : parts)
                if (p % 2 == 1) odd.push_back(p);
            if (is_M_member(odd, 1, 2, nu)) ++qualifying;
        });
        if (qualifying == 0) continue;
        long pi1 = 0;
        for_each_partition(n - w, {}, [&](const std::vector<int>&) { ++pi1; });
        total += Int(qualifying) * pi1;
    }
    return total;
}

Int count_M_nu_enum(int nu, long n) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    long c = 0;
    for_each_partition(n, {}, [&](const std::vector<int>& parts) {
        long above = 0, below = 0;
        for (int p : parts) {
            if (p == nu) return;
            if (p > nu) ++above;
            else ++below;
        }
        // smallest missing value must be exactly nu
        for (int v = 1; v < nu; ++v)
            if (!std::binary_search(parts.rbegin(), parts.rend(), v)) return;
        if (above > below) ++c;
    });
    return c;
}

std::vector<Int> count_M_nu_table(int nu, int max_n) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    // dp[w][offset + b]: partitions of w from the processed values with
    // balance b = #parts>nu - #parts<nu; values 1..nu-1 forced present,
    // value nu excluded, values > nu free.
    const int offset = max_n;
    const int width = 2 * max_n + 1;
    std::vector<std::vector<Int>> dp(static_cast<size_t>(max_n) + 1,
                                     std::vector<Int>(static_cast<size_t>(width)));
    dp[0][static_cast<size_t>(offset)] = 1;

    // small values, each at least once; one copy lowers the balance
    for (int v = 1; v < nu && v <= max_n; ++v) {
        std::vector<std::vector<Int>> next(static_cast<size_t>(max_n) + 1,
                                           std::vector<Int>(static_cast<size_t>(width)));
        for (int w = v; w <= max_n; ++w)
            for (int b = 0; b < width; ++b) {
                if (b + 1 < width && dp[static_cast<size_t>(w - v)][static_cast<size_t>(b + 1)] != 0)
                    next[static_cast<size_t>(w)][static_cast<size_t>(b)] +=
                        dp[static_cast<size_t>(w - v)][static_cast<size_t>(b + 1)];
                if (b + 1 < width && next[static_cast<size_t>(w - v)][static_cast<size_t>(b + 1)] != 0)
                    next[static_cast<size_t>(w)][static_cast<size_t>(b)] +=
                        next[static_cast<size_t>(w - v)][static_cast<size_t>(b + 1)];
            }
        dp = std::move(next);
    }
    if (nu - 1 > max_n) {
        // cannot even place the mandatory small parts
        std::vector<Int> zero(static_cast<size_t>(max_n) + 1);
        return zero;
    }

    // large values, unbounded; one copy raises the balance
    for (int v = nu + 1; v <= max_n; ++v)
        for (int w = v; w <= max_n; ++w)
            for (int b = 1; b < width; ++b)
                if (dp[static_cast<size_t>(w - v)][static_cast<size_t>(b - 1)] != 0)
                    dp[static_cast<size_t>(w)][static_cast<size_t>(b)] +=
                        dp[static_cast<size_t>(w - v)][static_cast<size_t>(b - 1)];

    std::vector<Int> out(static_cast<size_t>(max_n) + 1);
    for (int w = 0; w <= max_n; ++w)
        for (int b = offset + 1; b < width; ++b)
            out[static_cast<size_t>(w)] += dp[static_cast<size_t>(w)][static_cast<size_t>(b)];
    return out;
}

Int count_M_nu(int nu, long n) {
    return count_M_nu_table(nu, static_cast<int>(n))[static_cast<size_t>(n)];
}

Int count_mu_bar(int nu, long n) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    long c = 0;
    for_each_overpartition(n, [&](const std::vector<int>& parts, const std::vector<int>&) {
        // first part greater than nu = smallest part value exceeding nu
        int first = 0;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            if (*it > nu) { first = *it; break; }
        if (first == 0) return;
        const long mult = std::count(parts.begin(), parts.end(), first);
        if (mult >= nu + 1) ++c;
    });
    return c;
}

Int count_MP(int nu, long n) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    long c = 0;
    for_each_partition(n, {}, [&](const std::vector<int>& parts) {
        int first = 0;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            if (*it > 2 * nu - 1) { first = *it; break; }
        if (first == 0 || first % 2 == 0) return;
        if (std::count(parts.begin(), parts.end(), first) != nu) return;
        // every other odd part at most once
        for (size_t i = 1; i < parts.size(); ++i)
            if (parts[i] == parts[i - 1] && parts[i] % 2 == 1 && parts[i] != first) return;
        ++c;
    });
    return c;
}

BasicName parse_basic_name(std::string_view name) {
    if (name == "p") return BasicName::P;
    if (name == "overline_p") return BasicName::OverlineP;
    if (name == "pod") return BasicName::Pod;
    if (name == "p_o") return BasicName::PO;
    if (name == "pp") return BasicName::PP;
    throw std::invalid_argument("unknown counting function: " + std::string(name));
}

namespace {

long count_partitions_enum(long n, const PartitionConstraint& c) {
    long k = 0;
    for_each_partition(n, c, [&](const std::vector<int>&) { ++k; });
    return k;
}

} // namespace

Int count_basic(BasicName name, long n) {
    switch (name) {
        case BasicName::P:
            return count_partitions_enum(n, {});
        case BasicName::OverlineP: {
            long k = 0;
            for_each_overpartition(n, [&](const std::vector<int>&, const std::vector<int>&) { ++k; });
            return k;
        }
        case BasicName::Pod:
            return count_partitions_enum(n, PartitionConstraint::pod());
        case BasicName::PO:
            return count_partitions_enum(n, PartitionConstraint::odd());
        case BasicName::PP: {
            Int total = 0;
            for (long k = 0; k <= n; ++k)
                total += Int(count_partitions_enum(k, {})) * count_partitions_enum(n - k, {});
            return total;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Int> count_basic_table(BasicName name, int max_n) {
    switch (name) {
        case BasicName::P:
            return partition_count_table({}, max_n);
        case BasicName::OverlineP: {
            // overlined values form a distinct-parts partition, the rest is free
            std::vector<Int> distinct(static_cast<size_t>(max_n) + 1);
            distinct[0] = 1;
            for (int v = 1; v <= max_n; ++v)
                for (int w = max_n; w >= v; --w) distinct[static_cast<size_t>(w)] += distinct[static_cast<size_t>(w - v)];
            return convolve(distinct, partition_count_table({}, max_n), max_n);
        }
        case BasicName::Pod:
            return partition_count_table(PartitionConstraint::pod(), max_n);
        case BasicName::PO:
            return partition_count_table(PartitionConstraint::odd(), max_n);
        case BasicName::PP: {
            auto p = partition_count_table({}, max_n);
            return convolve(p, p, max_n);
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace partq
