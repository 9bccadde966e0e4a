#include "partq/named_series.hpp"

#include <stdexcept>
#include <string>

namespace partq {

TruncatedSeries phi_neg(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long t = 1; t * t <= order; ++t)
        s.add_term(static_cast<int>(t * t), (t % 2 == 0) ? 2 : -2);
    return s;
}

TruncatedSeries phi_neg_partial(int terms, int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long t = 1; t <= terms && t * t <= order; ++t)
        s.add_term(static_cast<int>(t * t), (t % 2 == 0) ? 2 : -2);
    return s;
}

namespace {

void add_psi_terms(TruncatedSeries& s, long t_limit) {
    const int order = s.order();
    for (long t = 0; t < t_limit && t * (2 * t + 1) <= order; ++t) {
        const Int sign = (t % 2 == 0) ? 1 : -1;
        s.add_term(static_cast<int>(t * (2 * t + 1)), sign);
        const long e2 = (t + 1) * (2 * t + 1);
        if (e2 <= order)
            s.add_term(static_cast<int>(e2), -sign);
    }
}

} // namespace

TruncatedSeries psi_neg(int order) {
    TruncatedSeries s(order);
    add_psi_terms(s, order + 1L);     // exponent t(2t+1) exceeds order long before this
    return s;
}

TruncatedSeries psi_neg_partial(int terms, int order) {
    TruncatedSeries s(order);
    add_psi_terms(s, terms);
    return s;
}

TruncatedSeries pentagonal_partial(int hi1, int hi2, int order) {
    TruncatedSeries s(order);
    for (long t = 0; t <= hi1; ++t) {
        const long e = t * (3 * t + 1) / 2;
        if (e > order) break;
        s.add_term(static_cast<int>(e), (t % 2 == 0) ? 1 : -1);
    }
    for (long t = 0; t <= hi2; ++t) {
        const long e = t * (3 * t + 5) / 2 + 1;
        if (e > order) break;
        s.add_term(static_cast<int>(e), (t % 2 == 0) ? -1 : 1);
    }
    return s;
}

TruncatedSeries euler_product(int order) {
    return pochhammer(PochhammerSpec::q_power(1, 1, std::nullopt), order);
}

GenName parse_gen_name(std::string_view name) {
    if (name == "p") return GenName::P;
    if (name == "overline_p") return GenName::OverlineP;
    if (name == "pod") return GenName::Pod;
    if (name == "p_o") return GenName::PO;
    if (name == "pp") return GenName::PP;
    throw std::invalid_argument("unknown generating function name: " + std::string(name));
}

std::string_view gen_name_string(GenName name) {
    switch (name) {
        case GenName::P: return "p";
        case GenName::OverlineP: return "overline_p";
        case GenName::Pod: return "pod";
        case GenName::PO: return "p_o";
        case GenName::PP: return "pp";
    }
    throw std::logic_error("unreachable");
}

TruncatedSeries gen(GenName name, int order) {
    const auto inf_q = [&](int j, int m) {
        return pochhammer(PochhammerSpec::q_power(j, m, std::nullopt), order);
    };
    const auto inf_mq = [&](int j, int m) {
        return pochhammer(PochhammerSpec::minus_q_power(j, m, std::nullopt), order);
    };
    switch (name) {
        case GenName::P:
            return inf_q(1, 1).invert();
        case GenName::OverlineP:
            return inf_mq(1, 1) * inf_q(1, 1).invert();
        case GenName::Pod:
            return inf_mq(1, 2) * inf_q(2, 2).invert();
        case GenName::PO:
            return inf_q(1, 2).invert();
        case GenName::PP: {
            TruncatedSeries p = inf_q(1, 1).invert();
            return p * p;
        }
    }
    throw std::logic_error("unreachable");
}

TruncatedSeries rhs_M_series(int a, int m, int nu, int order) {
    if (m <= 0 || a <= 0 || a >= m)
        throw std::invalid_argument("rhs_M_series requires 0 < a < m");
    if (nu < 0) throw std::invalid_argument("rhs_M_series requires nu >= 0");

    const long pre = a + static_cast<long>(nu) * (static_cast<long>(m) * nu + m + 2L * a) / 2;
    TruncatedSeries out(order);
    for (long t = 0;; ++t) {
        const long lead = pre + t * (static_cast<long>(m) * nu + m * t + m + a);
        if (lead > order) break;      // exponents increase in t, later terms vanish
        const int rem = static_cast<int>(order - lead);
        TruncatedSeries den = pochhammer(PochhammerSpec::q_power(m, m, t), rem) *
                              pochhammer(PochhammerSpec::q_power(a, m, nu + t + 1), rem);
        out.add_shifted(den.invert(), static_cast<int>(lead));
    }
    return out;
}

TruncatedSeries rhs_N_series(int nu, int order) {
    if (nu < 1) throw std::invalid_argument("rhs_N_series requires nu >= 1");

    const long pre = static_cast<long>(nu) * (nu - 1) / 2;
    TruncatedSeries out(order);
    for (long t = 0;; ++t) {
        const long lead = pre + t * (nu + t);
        if (lead > order) break;
        const int rem = static_cast<int>(order - lead);
        TruncatedSeries den = pochhammer(PochhammerSpec::q_power(1, 1, t), rem) *
                              pochhammer(PochhammerSpec::q_power(1, 1, nu + t - 1), rem);
        out.add_shifted(den.invert(), static_cast<int>(lead));
    }
    return out;
}

} // namespace partq
