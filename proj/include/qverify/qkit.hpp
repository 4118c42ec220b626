#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qverify/fps.hpp"

namespace qverify {

// The base q^r of a q-series object.
class QBase {
public:
    explicit QBase(long r = 1);
    long r() const { return r_; }
    bool operator==(const QBase &) const = default;

private:
    long r_;
};

// A product of monomials, binomial factors (1 - c q^k), finite Pochhammer
// symbols and infinite Pochhammer symbols, kept in factored form until it is
// evaluated. Factors that vanish identically, (1 - q^0), are counted rather
// than multiplied so that a numerator zero can cancel a denominator zero of
// the same kind.
class QProduct {
public:
    QProduct() = default;
    static QProduct constant(const Rational &c);

    QProduct &times(const Monomial &m);
    QProduct &over(const Monomial &m);
    QProduct &times(const Rational &c) { return times(Monomial::constant(c)); }
    // (1 - a)
    QProduct &times_factor(const Monomial &a);
    QProduct &over_factor(const Monomial &a);
    // (a; q^r)_n for any integer n, negative n via (a;q)_n = 1/(a q^{rn}; q^r)_{-n}.
    QProduct &times_poch(const Monomial &a, long n, QBase base = QBase{});
    QProduct &over_poch(const Monomial &a, long n, QBase base = QBase{});
    // (a; q^r)_inf
    QProduct &times_poch_inf(const Monomial &a, QBase base = QBase{});
    QProduct &over_poch_inf(const Monomial &a, QBase base = QBase{});
    QProduct &times(const QProduct &o);
    QProduct &over(const QProduct &o);

    bool is_zero() const;
    bool has_pole() const { return zero_balance_ < 0; }
    // Exact valuation. Throws for the zero product or a pole.
    long valuation() const;
    // Series expansion, coefficients below `order`. Throws PochhammerPole.
    LaurentSeries evaluate(long order) const;
    // Exact expansion; only for products with no denominators and no
    // infinite factors.
    LaurentSeries expand() const;
    bool is_polynomial() const;

private:
    struct Factor {
        Rational c;
        long k; // >= 1
    };
    struct InfFactor {
        Rational c;
        long k;    // first exponent, >= 1
        long step; // >= 1
    };

    void push(const Monomial &a, bool numerator);

    Rational scalar_ = 1;
    long shift_ = 0;
    int zero_balance_ = 0;
    std::vector<Factor> num_, den_;
    std::vector<InfFactor> num_inf_, den_inf_;
};

// Gaussian binomial [n; m] in base q^r. Zero outside 0 <= m <= n.
LaurentSeries gauss_binomial(long n, long m, QBase base = QBase{});

// Memoized Gaussian binomials for one base. Safe to share between threads.
class GaussianTable {
public:
    explicit GaussianTable(QBase base = QBase{}) : base_(base) {}
    const LaurentSeries &operator()(long n, long m);
    QBase base() const { return base_; }

private:
    QBase base_;
    std::mutex mutex_;
    std::map<std::pair<long, long>, LaurentSeries> cache_;
    LaurentSeries zero_;
};

// Process-wide table for the given base.
GaussianTable &gaussian_table(QBase base);

// (a; q^r)_n. Exact for n >= 0; negative n gives a series and needs `order`.
LaurentSeries poch_finite(const Monomial &a, long n, QBase base = QBase{}, std::optional<long> order = {});
// (a; q^r)_inf to the given order.
LaurentSeries poch_infinite(const Monomial &a, QBase base, long order);
// (a_1, ..., a_k; q^r)_inf
LaurentSeries product_set(std::span<const Monomial> args, QBase base, long order);

} // namespace qverify
