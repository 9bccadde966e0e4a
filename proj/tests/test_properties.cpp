#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "partq/counting.hpp"
#include "partq/named_series.hpp"
#include "partq/series.hpp"

using namespace partq;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit_constant) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    TruncatedSeries s(order);
    if (unit_constant) s.add_term(0, (rng() & 1) ? 1 : -1);
    else s.add_term(0, coeff(rng));
    for (int k = 1; k <= order; ++k) {
        const int c = coeff(rng);
        if (c != 0) s.add_term(k, c);
    }
    return s;
}

} // namespace

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> ord(1, 64);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = ord(rng);
        const auto a = random_series(rng, n, false);
        const auto b = random_series(rng, n, false);
        const auto c = random_series(rng, n, false);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncatedSeries(n));
    }
}

TEST_CASE("invert round trip") {
    std::mt19937 rng(0xfeed);
    for (int iter = 0; iter < 100; ++iter) {
        const auto s = random_series(rng, 64, true);
        CHECK(s * s.invert() == TruncatedSeries::one(64));
    }
}

TEST_CASE("pentagonal number theorem at order 1000") {
    const int order = 1000;
    TruncatedSeries sparse(order);
    for (long t = 0;; ++t) {            // t >= 0 branch
        const long e = t * (3 * t + 1) / 2;
        if (e > order) break;
        sparse.add_term(static_cast<int>(e), (t % 2 == 0) ? 1 : -1);
    }
    for (long t = 1;; ++t) {            // t < 0 branch: exponent t(3t-1)/2
        const long e = t * (3 * t - 1) / 2;
        if (e > order) break;
        sparse.add_term(static_cast<int>(e), (t % 2 == 0) ? 1 : -1);
    }
    CHECK(euler_product(order) == sparse);
}

TEST_CASE("theta product forms at order 500") {
    const int order = 500;
    const auto qq = euler_product(order);
    const auto neg_q = pochhammer(PochhammerSpec::minus_q_power(1, 1, std::nullopt), order);
    CHECK(phi_neg(order) == qq * neg_q.invert());

    const auto q2 = pochhammer(PochhammerSpec::q_power(2, 2, std::nullopt), order);
    const auto neg_q_odd = pochhammer(PochhammerSpec::minus_q_power(1, 2, std::nullopt), order);
    CHECK(psi_neg(order) == q2 * neg_q_odd.invert());
}

TEST_CASE("p_o coefficients count distinct-part partitions (Euler)") {
    const auto p_o = gen(GenName::PO, 30);
    for (long n = 0; n <= 30; ++n) {
        long distinct = 0;
        for_each_partition(n, {}, [&](const std::vector<int>& parts) {
            for (size_t i = 1; i < parts.size(); ++i)
                if (parts[i] == parts[i - 1]) return;
            ++distinct;
        });
        CHECK(p_o.coeff(static_cast<int>(n)) == distinct);
    }
}

TEST_CASE("oracle vs convolution to weight 40") {
    for (int nu = 0; nu <= 1; ++nu) {
        const auto all1 = count_p_restricted_table(1, 3, nu, 40, Carrier::All);
        const auto all2 = count_p_restricted_table(2, 3, nu, 40, Carrier::All);
        const auto odd1 = count_p_restricted_table(1, 4, nu, 40, Carrier::OddParts);
        const auto odd3 = count_p_restricted_table(3, 4, nu, 40, Carrier::OddParts);
        const auto nm1 = count_p_restricted_table(1, 4, nu, 40, Carrier::Not2Mod4);
        const auto nm3 = count_p_restricted_table(3, 4, nu, 40, Carrier::Not2Mod4);
        for (long n = 0; n <= 40; ++n) {
            CHECK(all1[static_cast<size_t>(n)] ==
                  count_p_restricted_enum(1, 3, nu, n, Carrier::All));
            CHECK(all2[static_cast<size_t>(n)] ==
                  count_p_restricted_enum(2, 3, nu, n, Carrier::All));
            CHECK(odd1[static_cast<size_t>(n)] ==
                  count_p_restricted_enum(1, 4, nu, n, Carrier::OddParts));
            CHECK(odd3[static_cast<size_t>(n)] ==
                  count_p_restricted_enum(3, 4, nu, n, Carrier::OddParts));
            CHECK(nm1[static_cast<size_t>(n)] ==
                  count_p_restricted_enum(1, 4, nu, n, Carrier::Not2Mod4));
            CHECK(nm3[static_cast<size_t>(n)] ==
                  count_p_restricted_enum(3, 4, nu, n, Carrier::Not2Mod4));
        }
    }
}

TEST_CASE("generating-function agreement for M and N to weight 40") {
    for (const auto& [a, m] : {std::pair{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}})
        for (int nu = 0; nu <= 3; ++nu) {
            const auto series = rhs_M_series(a, m, nu, 40);
            for (long n = 0; n <= 40; ++n)
                CHECK(series.coeff(static_cast<int>(n)) == count_M(a, m, nu, n));
        }
    for (int nu = 1; nu <= 4; ++nu) {
        const auto series = rhs_N_series(nu, 36);
        for (long n = 0; n <= 36; ++n)
            CHECK(series.coeff(static_cast<int>(n)) == count_N(nu, n));
    }
}

TEST_CASE("count_basic matches gen to weight 40") {
    const int order = 40;
    for (const auto& [basic, name] : {std::pair{BasicName::P, GenName::P},
                                     {BasicName::OverlineP, GenName::OverlineP},
                                     {BasicName::Pod, GenName::Pod},
                                     {BasicName::PO, GenName::PO},
                                     {BasicName::PP, GenName::PP}}) {
        const auto series = gen(name, order);
        const auto table = count_basic_table(basic, order);
        for (long n = 0; n <= order; ++n) {
            CHECK(series.coeff(static_cast<int>(n)) == table[static_cast<size_t>(n)]);
            CHECK(series.coeff(static_cast<int>(n)) == count_basic(basic, n));
        }
    }
}
