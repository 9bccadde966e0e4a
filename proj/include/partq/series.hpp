#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace partq {

/// Exact arbitrary-precision integer. Series coefficients and partition
/// counts overflow 64 bits well inside the ranges this library verifies,
/// so everything countable is an Int from the start.
using Int = mpz_class;

/// Formal power series in q, kept exactly modulo q^(N+1).
///
/// coeff(k) is the coefficient of q^k for 0 <= k <= order(). Arithmetic on
/// two series of different orders trims to the common (minimum) order;
/// equality likewise compares only the common prefix. No coefficient within
/// the retained range is ever approximated.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {}

    /// Series with the given (exponent, coefficient) terms, zero elsewhere.
    /// Throws std::invalid_argument on a duplicate or out-of-range exponent.
    static TruncatedSeries make(int order, std::span<const std::pair<int, Int>> terms);
    static TruncatedSeries make(int order, std::initializer_list<std::pair<int, Int>> terms);

    static TruncatedSeries one(int order) { return monomial(order, 0, 1); }
    static TruncatedSeries monomial(int order, int exponent, Int coefficient = 1);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& coeff(int k) const;           // requires 0 <= k <= order
    Int coeff_or_zero(long k) const;         // 0 for k < 0; throws for k > order

    /// Copy truncated to a smaller (or equal) order.
    TruncatedSeries truncated(int new_order) const;

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-() const;

    /// Multiplicative inverse modulo q^(order+1). The constant coefficient
    /// must be +1 or -1; anything else throws std::invalid_argument.
    TruncatedSeries invert() const;

    /// this += scale * q^shift * t, dropping terms beyond order().
    void add_shifted(const TruncatedSeries& t, int shift, const Int& scale = 1);

    /// this += c * q^exponent; the exponent must lie within the order.
    void add_term(int exponent, const Int& c);

    /// In-place multiply by the sparse factor (1 + sign * q^exponent).
    void mul_binomial_inplace(int exponent, int sign);

    void scale_inplace(const Int& c);

    bool operator==(const TruncatedSeries& rhs) const;

    bool is_zero() const;

    std::string to_string(int max_terms = 12) const;

private:
    std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

/// One q-Pochhammer style product: factors (1 - base * q^(exponent + step*t))
/// for t = 0, 1, ..., length-1 (or unbounded). The base is q^0 with sign
/// carried by `kind`: QPower gives (q^j; q^m)_L, MinusQPower gives
/// (-q^j; q^m)_L, MinusOne gives (-1; q^m)_L (exponent forced to 0, first
/// factor equals 2).
struct PochhammerSpec {
    enum class Kind { QPower, MinusQPower, MinusOne };

    Kind kind = Kind::QPower;
    int exponent = 0;                 // j in (±q^j; q^m)
    int step = 1;                     // m
    std::optional<long> length;       // factor count; nullopt = infinite

    static PochhammerSpec q_power(int exponent, int step, std::optional<long> length);
    static PochhammerSpec minus_q_power(int exponent, int step, std::optional<long> length);
    static PochhammerSpec minus_one(int step, std::optional<long> length);
};

/// Expand the product modulo q^(order+1). Infinite products multiply only
/// the factors whose lowest exponent is <= order; later factors are 1 mod
/// q^(order+1), so the truncation is exact.
TruncatedSeries pochhammer(const PochhammerSpec& spec, int order);

/// Gaussian binomial [big_m choose k] in the variable q^step; the zero
/// series when k < 0 or k > big_m.
TruncatedSeries gaussian_binomial(int big_m, int k, int step, int order);

} // namespace partq
