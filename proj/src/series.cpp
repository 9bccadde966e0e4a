#include "partq/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace partq {

TruncatedSeries TruncatedSeries::make(int order, std::span<const std::pair<int, Int>> terms) {
    TruncatedSeries s(order);
    std::vector<bool> seen(static_cast<size_t>(order) + 1, false);
    for (const auto& [e, c] : terms) {
        if (e < 0 || e > order)
            throw std::invalid_argument("series term exponent " + std::to_string(e) +
                                        " outside 0.." + std::to_string(order));
        if (seen[static_cast<size_t>(e)])
            throw std::invalid_argument("duplicate series term exponent " + std::to_string(e));
        seen[static_cast<size_t>(e)] = true;
        s.coeffs_[static_cast<size_t>(e)] = c;
    }
    return s;
}

TruncatedSeries TruncatedSeries::make(int order, std::initializer_list<std::pair<int, Int>> terms) {
    return make(order, std::span<const std::pair<int, Int>>(terms.begin(), terms.size()));
}

TruncatedSeries TruncatedSeries::monomial(int order, int exponent, Int coefficient) {
    TruncatedSeries s(order);
    if (exponent < 0 || exponent > order)
        throw std::invalid_argument("monomial exponent outside series order");
    s.coeffs_[static_cast<size_t>(exponent)] = std::move(coefficient);
    return s;
}

const Int& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("coefficient index " + std::to_string(k) +
                                " outside 0.." + std::to_string(order()));
    return coeffs_[static_cast<size_t>(k)];
}

Int TruncatedSeries::coeff_or_zero(long k) const {
    if (k < 0) return 0;
    return coeff(static_cast<int>(k));
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order())
        throw std::invalid_argument("cannot extend a truncated series");
    TruncatedSeries s(new_order);
    std::copy_n(coeffs_.begin(), new_order + 1, s.coeffs_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    const int n = std::min(order(), rhs.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i)
        out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    const int n = std::min(order(), rhs.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i)
        out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    const int n = std::min(order(), rhs.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
        const Int& a = coeffs_[i];
        if (a == 0) continue;
        for (int j = 0; j + i <= n; ++j) {
            const Int& b = rhs.coeffs_[j];
            if (b == 0) continue;
            out.coeffs_[i + j] += a * b;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order());
    for (int i = 0; i <= order(); ++i)
        out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::invert() const {
    const int n = order();
    if (coeffs_[0] != 1 && coeffs_[0] != -1)
        throw std::invalid_argument("series constant coefficient must be a unit (+1 or -1)");
    TruncatedSeries out(n);
    out.coeffs_[0] = coeffs_[0];      // a0^-1 == a0 for a0 = ±1
    Int acc;
    for (int k = 1; k <= n; ++k) {
        acc = 0;
        for (int j = 1; j <= k; ++j) {
            if (coeffs_[j] == 0) continue;
            acc += coeffs_[j] * out.coeffs_[k - j];
        }
        out.coeffs_[k] = -coeffs_[0] * acc;
    }
    return out;
}

void TruncatedSeries::add_shifted(const TruncatedSeries& t, int shift, const Int& scale) {
    if (shift < 0) throw std::invalid_argument("negative shift");
    const int n = order();
    const int top = std::min(t.order(), n - shift);
    for (int i = 0; i <= top; ++i) {
        if (t.coeffs_[i] == 0) continue;
        coeffs_[i + shift] += scale * t.coeffs_[i];
    }
}

void TruncatedSeries::add_term(int exponent, const Int& c) {
    if (exponent < 0 || exponent > order())
        throw std::out_of_range("term exponent outside series order");
    coeffs_[static_cast<size_t>(exponent)] += c;
}

void TruncatedSeries::mul_binomial_inplace(int exponent, int sign) {
    const int n = order();
    if (exponent <= 0) throw std::invalid_argument("binomial factor exponent must be positive");
    if (exponent > n) return;         // factor is 1 modulo q^(order+1)
    // Descending index keeps reads ahead of writes, so this is in-place safe.
    for (int i = n - exponent; i >= 0; --i) {
        if (coeffs_[i] == 0) continue;
        if (sign > 0)
            coeffs_[i + exponent] += coeffs_[i];
        else
            coeffs_[i + exponent] -= coeffs_[i];
    }
}

void TruncatedSeries::scale_inplace(const Int& c) {
    for (auto& v : coeffs_) v *= c;
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
    const int n = std::min(order(), rhs.order());
    for (int i = 0; i <= n; ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

std::string TruncatedSeries::to_string(int max_terms) const {
    std::ostringstream os;
    int printed = 0;
    for (int i = 0; i <= order() && printed < max_terms; ++i) {
        if (coeffs_[i] == 0) continue;
        if (printed > 0) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        Int a = abs(coeffs_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "q^" << i;
        }
        ++printed;
    }
    if (printed == 0) return "0";
    if (printed == max_terms) os << " + ...";
    os << " (order " << order() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    return os << s.to_string();
}

PochhammerSpec PochhammerSpec::q_power(int exponent, int step, std::optional<long> length) {
    return {Kind::QPower, exponent, step, length};
}

PochhammerSpec PochhammerSpec::minus_q_power(int exponent, int step, std::optional<long> length) {
    return {Kind::MinusQPower, exponent, step, length};
}

PochhammerSpec PochhammerSpec::minus_one(int step, std::optional<long> length) {
    return {Kind::MinusOne, 0, step, length};
}

TruncatedSeries pochhammer(const PochhammerSpec& spec, int order) {
    if (spec.step <= 0) throw std::invalid_argument("pochhammer step must be positive");
    if (spec.length && *spec.length < 0) throw std::invalid_argument("negative pochhammer length");
    if (spec.kind == PochhammerSpec::Kind::MinusOne && spec.exponent != 0)
        throw std::invalid_argument("(-1; q^m) spec must have exponent 0");
    if (spec.exponent < 0) throw std::invalid_argument("negative pochhammer exponent");

    TruncatedSeries out = TruncatedSeries::one(order);
    for (long t = 0;; ++t) {
        if (spec.length && t >= *spec.length) break;
        const long e = spec.exponent + spec.step * t;
        if (e > order) {
            if (!spec.length) break;  // all remaining factors are 1 mod q^(order+1)
            continue;                 // finite product: factor still exact, just invisible
        }
        if (e == 0) {
            // (1 - (-1)) = 2; only the MinusOne kind reaches exponent 0.
            out.scale_inplace(2);
        } else {
            const int sign = spec.kind == PochhammerSpec::Kind::QPower ? -1 : +1;
            out.mul_binomial_inplace(static_cast<int>(e), sign);
        }
    }
    return out;
}

TruncatedSeries gaussian_binomial(int big_m, int k, int step, int order) {
    if (big_m < 0) throw std::invalid_argument("gaussian binomial upper index must be >= 0");
    if (k < 0 || k > big_m) return TruncatedSeries(order);
    const auto qq = [&](long len) {
        return pochhammer(PochhammerSpec::q_power(step, step, len), order);
    };
    TruncatedSeries den = qq(k) * qq(big_m - k);
    return qq(big_m) * den.invert();
}

} // namespace partq
