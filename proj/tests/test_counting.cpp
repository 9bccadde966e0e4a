#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "partq/counting.hpp"
#include "partq/named_series.hpp"

using namespace partq;

namespace {

std::set<std::vector<int>> as_set(const std::vector<Partition>& ps) {
    std::set<std::vector<int>> out;
    for (const auto& p : ps) out.insert(p.parts());
    return out;
}

} // namespace

TEST_CASE("M membership: worked examples") {
    CHECK(is_M_member(std::vector<int>{20, 17, 11, 8, 5, 2}, 2, 3, 2));
    CHECK_FALSE(is_M_member(std::vector<int>{23, 17, 17, 8, 5, 5, 2}, 2, 3, 2));
    CHECK(is_M_member(std::vector<int>{8, 5, 2}, 2, 3, 2));

    // wrong residue or missing mandatory part
    CHECK_FALSE(is_M_member(std::vector<int>{7, 5, 2}, 2, 3, 2));
    CHECK_FALSE(is_M_member(std::vector<int>{11, 5, 2}, 2, 3, 2));
    CHECK_THROWS_AS(is_M_member(std::vector<int>{1}, 3, 3, 0), std::invalid_argument);
}

TEST_CASE("N membership: worked examples") {
    CHECK(is_N_member(std::vector<int>{6, 5, 3, 3, 2, 1}, 3));
    CHECK_FALSE(is_N_member(std::vector<int>{6, 5, 5, 2, 1, 1}, 3));
    CHECK(is_N_member(std::vector<int>{}, 1));   // empty partition, nu = 1
    CHECK_THROWS_AS(is_N_member(std::vector<int>{1}, 0), std::invalid_argument);
}

TEST_CASE("count_M basics") {
    CHECK(count_M(2, 3, 2, 15) == 1);
    // below the minimal weight a(nu+1) + m*nu(nu+1)/2 every count is zero
    for (int nu = 0; nu <= 3; ++nu) {
        const long min_weight = 2L * (nu + 1) + 3L * nu * (nu + 1) / 2;
        for (long n = 0; n < min_weight; ++n) CHECK(count_M(2, 3, nu, n) == 0);
        CHECK(count_M(2, 3, nu, min_weight) == 1);
    }
}

TEST_CASE("count_N: the 19 partitions of N_2(10)") {
    CHECK(count_N(2, 10) == 19);
    std::set<std::vector<int>> got;
    for_each_partition(10, {}, [&](const std::vector<int>& parts) {
        if (is_N_member(parts, 2)) got.insert(parts);
    });
    const std::set<std::vector<int>> expected = {
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {9, 1},
        {8, 1, 1},
        {7, 2, 1},
        {7, 1, 1, 1},
        {6, 2, 1, 1},
        {6, 1, 1, 1, 1},
        {5, 2, 2, 1},
        {5, 2, 1, 1, 1},
        {5, 1, 1, 1, 1, 1},
        {4, 2, 2, 1, 1},
        {4, 2, 1, 1, 1, 1},
        {4, 1, 1, 1, 1, 1, 1},
        {3, 2, 2, 2, 1},
        {3, 2, 2, 1, 1, 1},
        {3, 2, 1, 1, 1, 1, 1},
        {3, 1, 1, 1, 1, 1, 1, 1},
        {5, 4, 1},
        {4, 4, 1, 1},
    };
    CHECK(got == expected);
}

TEST_CASE("restricted counters reproduce the worked table at n = 17") {
    const auto left = p_restricted_partitions(2, 3, 2, 17, Carrier::All);
    CHECK(as_set(left) == std::set<std::vector<int>>{{8, 5, 2, 2}, {8, 5, 2, 1, 1}});

    const auto right = p_restricted_partitions(1, 3, 2, 17, Carrier::All);
    const std::set<std::vector<int>> expected = {
        {7, 5, 4, 1},
        {7, 4, 4, 1, 1},
        {7, 4, 3, 2, 1},
        {7, 4, 3, 1, 1, 1},
        {7, 4, 2, 2, 1, 1},
        {7, 4, 2, 1, 1, 1, 1},
        {7, 4, 1, 1, 1, 1, 1, 1},
    };
    CHECK(as_set(right) == expected);

    CHECK(count_p_restricted_enum(2, 3, 2, 17, Carrier::All) == 2);
    CHECK(count_p_restricted_enum(1, 3, 2, 17, Carrier::All) == 7);
    CHECK(count_p_restricted_conv(1, 3, 2, 17, Carrier::All) == 7);
}

TEST_CASE("restricted counter edge cases and carrier validation") {
    for (int nu = 0; nu <= 2; ++nu) {
        CHECK(count_p_restricted_enum(2, 3, nu, 0, Carrier::All) == 0);
        CHECK(count_p_restricted_enum(1, 4, nu, 0, Carrier::OddParts) == 0);
    }
    CHECK_THROWS_AS(count_p_restricted_enum(2, 3, 1, 5, Carrier::OddParts),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_p_restricted_enum(2, 4, 1, 5, Carrier::Not2Mod4),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_p_restricted_enum(3, 3, 1, 5, Carrier::All), std::invalid_argument);
    CHECK(parse_carrier("odd") == Carrier::OddParts);
    CHECK_THROWS_AS(parse_carrier("even"), std::invalid_argument);
}

TEST_CASE("enumeration and convolution routes agree (small grid)") {
    for (int nu = 0; nu <= 2; ++nu)
        for (long n = 0; n <= 24; ++n) {
            for (const auto& [a, m] : {std::pair{1, 3}, {2, 3}, {1, 2}})
                CHECK(count_p_restricted_enum(a, m, nu, n, Carrier::All) ==
                      count_p_restricted_conv(a, m, nu, n, Carrier::All));
            for (const int a : {1, 3}) {
                CHECK(count_p_restricted_enum(a, 4, nu, n, Carrier::OddParts) ==
                      count_p_restricted_conv(a, 4, nu, n, Carrier::OddParts));
                CHECK(count_p_restricted_enum(a, 4, nu, n, Carrier::Not2Mod4) ==
                      count_p_restricted_conv(a, 4, nu, n, Carrier::Not2Mod4));
            }
        }
}

TEST_CASE("overpartition restricted counter") {
    // nu=1: the only overpartition of 4 whose non-overlined odd parts form
    // an M(1,2,1) member is 3+1 with nothing overlined
    CHECK(count_overline_p_restricted(1, 4) == 1);
    for (int nu = 1; nu <= 3; ++nu)
        for (long n = 0; n < static_cast<long>(nu + 1) * (nu + 1); ++n)
            CHECK(count_overline_p_restricted(nu, n) == 0);
}

TEST_CASE("pp_e: fast table equals bipartition brute force") {
    CHECK(count_pp_e(1, 4) == 1);   // pi1 empty, pi2 = 3+1
    for (int nu = 1; nu <= 2; ++nu) {
        for (long n = 0; n <= 18; ++n)
            CHECK(count_pp_e(nu, n) == count_pp_e_brute(nu, n));
        for (long n = 0; n < static_cast<long>(nu + 1) * (nu + 1); ++n)
            CHECK(count_pp_e(nu, n) == 0);
    }
}

TEST_CASE("M_nu: DP equals enumeration") {
    for (int nu = 1; nu <= 4; ++nu) {
        const auto table = count_M_nu_table(nu, 25);
        for (long n = 0; n <= 25; ++n)
            CHECK(table[static_cast<size_t>(n)] == count_M_nu_enum(nu, n));
    }
    // spot value: M_2(7) counts only 3+3+1
    CHECK(count_M_nu(2, 7) == 1);
    CHECK(count_M_nu(2, 10) == 3);
}

TEST_CASE("M_nu equals the truncated pentagonal interpretation to weight 40") {
    const auto p = gen(GenName::P, 40);
    for (int nu = 1; nu <= 4; ++nu) {
        const auto table = count_M_nu_table(nu, 40);
        for (long n = 1; n <= 40; ++n) {
            Int s = 0;
            for (long t = 0; t < nu; ++t)
                s += ((t % 2 == 0) ? 1 : -1) *
                     (p.coeff_or_zero(n - t * (3 * t + 1) / 2) -
                      p.coeff_or_zero(n - t * (3 * t + 5) / 2 - 1));
            if (nu % 2 == 0) s = -s;
            CHECK(s == table[static_cast<size_t>(n)]);
        }
    }
}

TEST_CASE("mu_bar and MP") {
    // overpartitions of 4 with the first part > 1 repeated twice: 2+2 and
    // overlined-2+2
    CHECK(count_mu_bar(1, 4) == 2);
    for (int nu = 1; nu <= 2; ++nu)
        for (long n = 0; n < static_cast<long>(nu + 1) * (nu + 1); ++n)
            CHECK(count_mu_bar(nu, n) == 0);

    // overpartition interpretation against the truncated sums, small range
    const int order = 24;
    const auto op = gen(GenName::OverlineP, order);
    for (int nu = 1; nu <= 2; ++nu)
        for (long n = 1; n <= order; ++n) {
            Int opi = op.coeff_or_zero(n);
            for (long t = 1; t <= nu; ++t)
                opi += 2 * ((t % 2 == 0) ? 1 : -1) * op.coeff_or_zero(n - t * t);
            if (nu % 2 == 1) opi = -opi;
            CHECK(opi == count_mu_bar(nu, n));
        }

    // MP interpretation to weight 40
    const auto pod = gen(GenName::Pod, 40);
    for (int nu = 1; nu <= 3; ++nu)
        for (long n = 1; n <= 40; ++n) {
            Int dopi = 0;
            for (long t = 0; t < nu; ++t) {
                const Int d = pod.coeff_or_zero(n - t * (2 * t + 1)) -
                              pod.coeff_or_zero(n - (t + 1) * (2 * t + 1));
                dopi += ((t % 2 == 0) ? 1 : -1) * d;
            }
            if (nu % 2 == 0) dopi = -dopi;
            CHECK(dopi == count_MP(nu, n));
        }
}

TEST_CASE("count_basic oracle values") {
    CHECK(count_basic(BasicName::P, 4) == 5);
    CHECK(count_basic(BasicName::P, 0) == 1);
    // p(17)-p(15)+p(10)-p(16)+p(12) = 9
    const Int v = count_basic(BasicName::P, 17) - count_basic(BasicName::P, 15) +
                  count_basic(BasicName::P, 10) - count_basic(BasicName::P, 16) +
                  count_basic(BasicName::P, 12);
    CHECK(v == 9);

    for (long n = 0; n <= 16; ++n) {
        CHECK(count_basic(BasicName::P, n) == gen(GenName::P, 16).coeff(static_cast<int>(n)));
        CHECK(count_basic(BasicName::OverlineP, n) ==
              gen(GenName::OverlineP, 16).coeff(static_cast<int>(n)));
        CHECK(count_basic(BasicName::Pod, n) == gen(GenName::Pod, 16).coeff(static_cast<int>(n)));
        CHECK(count_basic(BasicName::PO, n) == gen(GenName::PO, 16).coeff(static_cast<int>(n)));
        CHECK(count_basic(BasicName::PP, n) == gen(GenName::PP, 16).coeff(static_cast<int>(n)));
    }

    for (const auto name : {BasicName::P, BasicName::OverlineP, BasicName::Pod, BasicName::PO,
                            BasicName::PP}) {
        const auto table = count_basic_table(name, 20);
        for (long n = 0; n <= 20; ++n)
            CHECK(table[static_cast<size_t>(n)] == count_basic(name, n));
    }
    CHECK_THROWS_AS(parse_basic_name("q"), std::invalid_argument);
}
