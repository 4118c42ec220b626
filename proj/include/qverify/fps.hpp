#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qverify/errors.hpp"

namespace qverify {

using Rational = mpq_class;

Rational parse_rational(const std::string &text);
std::string to_string(const Rational &r);
Rational rational_pow(const Rational &base, long exponent);

// Precision of a truncated series: either exact (a Laurent polynomial) or
// "every coefficient with exponent < order is known".
class Precision {
public:
    constexpr Precision() = default;
    static constexpr Precision exact() { return Precision{}; }
    static constexpr Precision at(long order)
    {
        Precision p;
        p.exact_ = false;
        p.order_ = order;
        return p;
    }

    constexpr bool is_exact() const { return exact_; }
    // Only meaningful when !is_exact().
    constexpr long order() const { return order_; }
    constexpr bool covers(long exponent) const { return exact_ || exponent < order_; }
    constexpr Precision shifted(long k) const { return exact_ ? *this : at(order_ + k); }

    friend constexpr bool operator==(const Precision &, const Precision &) = default;
    friend constexpr std::strong_ordering operator<=>(const Precision &a, const Precision &b)
    {
        if (a.exact_ || b.exact_) {
            return a.exact_ <=> b.exact_;
        }
        return a.order_ <=> b.order_;
    }

private:
    bool exact_ = true;
    long order_ = 0;
};

constexpr Precision min(Precision a, Precision b) { return a < b ? a : b; }

std::string to_string(Precision p);

// A single term c * q^e. The zero monomial is normalized to exponent 0.
class Monomial {
public:
    Monomial() = default;
    Monomial(Rational coeff, long exponent);
    static Monomial q(long exponent, Rational coeff = 1) { return {std::move(coeff), exponent}; }
    static Monomial constant(Rational coeff) { return {std::move(coeff), 0}; }

    const Rational &coeff() const { return coeff_; }
    long exponent() const { return exponent_; }
    bool is_zero() const { return sgn(coeff_) == 0; }
    bool is_one() const { return exponent_ == 0 && coeff_ == 1; }

    Monomial operator*(const Monomial &o) const;
    Monomial operator/(const Monomial &o) const;
    Monomial operator-() const { return {-coeff_, exponent_}; }
    Monomial pow(long k) const;
    Monomial shifted(long k) const { return is_zero() ? *this : Monomial{coeff_, exponent_ + k}; }

    bool operator==(const Monomial &o) const { return coeff_ == o.coeff_ && exponent_ == o.exponent_; }

private:
    Rational coeff_ = 0;
    long exponent_ = 0;
};

std::string to_string(const Monomial &m);
// Accepts forms like "q", "-q^3", "1/2", "2/3*q^-1", "0".
Monomial parse_monomial(const std::string &text);

struct Mismatch {
    long exponent = 0;
    Rational lhs;
    Rational rhs;
};

// Truncated Laurent series with exact rational coefficients. Coefficients are
// stored densely from min_exp(); a zero series stores nothing.
class LaurentSeries {
public:
    LaurentSeries() = default;

    static LaurentSeries zero(Precision p = Precision::exact());
    static LaurentSeries constant(const Rational &c);
    static LaurentSeries monomial(const Rational &c, long exponent);
    static LaurentSeries monomial(const Monomial &m);
    static LaurentSeries from_coefficients(long min_exp, std::vector<Rational> coeffs,
                                           Precision p = Precision::exact());
    // Sparse construction from (exponent, coefficient) pairs.
    static LaurentSeries from_terms(const std::vector<std::pair<long, Rational>> &terms,
                                    Precision p = Precision::exact());

    long min_exp() const { return min_exp_; }
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    Precision precision() const { return prec_; }
    bool is_exact() const { return prec_.is_exact(); }
    // True when every known coefficient is zero.
    bool is_zero() const { return coeffs_.empty(); }

    // Exponent of the first nonzero coefficient. For a zero series returns the
    // precision order (or throws for the exact zero).
    long valuation() const;
    // Largest stored exponent; nullopt for the zero series.
    std::optional<long> degree() const;

    // Throws BeyondPrecision outside the known range.
    Rational coefficient(long exponent) const;

    LaurentSeries operator-() const;
    LaurentSeries &operator+=(const LaurentSeries &o);
    LaurentSeries &operator-=(const LaurentSeries &o);
    LaurentSeries &operator*=(const Rational &c);

private:
    void normalize();

    long min_exp_ = 0;
    std::vector<Rational> coeffs_;
    Precision prec_ = Precision::exact();
};

LaurentSeries operator+(const LaurentSeries &f, const LaurentSeries &g);
LaurentSeries operator-(const LaurentSeries &f, const LaurentSeries &g);
LaurentSeries operator*(const LaurentSeries &f, const LaurentSeries &g);
LaurentSeries operator*(const Rational &c, const LaurentSeries &f);
LaurentSeries operator*(const LaurentSeries &f, const Monomial &m);

// Multiplies by q^k.
LaurentSeries shift(const LaurentSeries &f, long k);
LaurentSeries truncate(const LaurentSeries &f, long order);
// Substitutes q -> -q.
LaurentSeries reflect(const LaurentSeries &f);
// Substitutes q -> q^r (r >= 1).
LaurentSeries dilate(const LaurentSeries &f, long r);

// 1/f to the given order. Throws InversionOfZero or InsufficientPrecision.
LaurentSeries invert(const LaurentSeries &f, long order);
// num/den to the given order.
LaurentSeries divide(const LaurentSeries &num, const LaurentSeries &den, long order);
// Exact quotient of two Laurent polynomials. Throws std::logic_error when the
// division leaves a remainder.
LaurentSeries exact_quotient(const LaurentSeries &num, const LaurentSeries &den);

// f * (1 - c q^k) for k >= 1, in linear time.
LaurentSeries times_binomial(const LaurentSeries &f, const Rational &c, long k);
// f / (1 - c q^k) for k >= 1, known up to min(f.precision, order).
LaurentSeries over_binomial(const LaurentSeries &f, const Rational &c, long k, long order);

// First exponent below `order` where f and g differ. Both must be known to
// `order`, otherwise InsufficientPrecision. An exact order compares exact
// polynomials completely.
std::optional<Mismatch> first_mismatch(const LaurentSeries &f, const LaurentSeries &g,
                                       Precision order);
inline bool eq_to_order(const LaurentSeries &f, const LaurentSeries &g, long order)
{
    return !first_mismatch(f, g, Precision::at(order)).has_value();
}
inline bool exactly_equal(const LaurentSeries &f, const LaurentSeries &g)
{
    return !first_mismatch(f, g, Precision::exact()).has_value();
}

// "e:c e:c ..." for the nonzero coefficients below `order` (all stored
// coefficients when order is exact).
std::string to_string(const LaurentSeries &f, Precision order = Precision::exact());
// Human-readable form, e.g. "1 + q - 1/2*q^3 + O(q^10)".
std::string to_pretty(const LaurentSeries &f);

} // namespace qverify
