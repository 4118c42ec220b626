#include <doctest.h>

#include <thread>

#include "qverify/errors.hpp"
#include "qverify/qkit.hpp"

using namespace qverify;

namespace {

LaurentSeries mono(long e, const Rational &c = 1) { return LaurentSeries::monomial(c, e); }

Rational coefficient_sum(const LaurentSeries &f)
{
    Rational s = 0;
    for (const auto &c : f.coefficients()) {
        s += c;
    }
    return s;
}

Rational binomial(long n, long k)
{
    Rational r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace

TEST_CASE("q-base validation")
{
    CHECK_THROWS_AS(QBase(0), std::invalid_argument);
    CHECK(QBase(3).r() == 3);
}

TEST_CASE("Gaussian binomial oracles")
{
    // [4,2] = 1 + q + 2q^2 + q^3 + q^4
    CHECK(to_string(gauss_binomial(4, 2)) == "0:1 1:1 2:2 3:1 4:1");
    CHECK(gauss_binomial(3, 5).is_zero());
    CHECK(gauss_binomial(3, -1).is_zero());
    CHECK(exactly_equal(gauss_binomial(0, 0), LaurentSeries::constant(1)));
    CHECK(exactly_equal(gauss_binomial(4, 2, QBase{3}), dilate(gauss_binomial(4, 2), 3)));
}

TEST_CASE("Pascal, symmetry and q = 1 specialization")
{
    for (long n = 1; n <= 14; ++n) {
        for (long k = 0; k <= n; ++k) {
            LaurentSeries g = gauss_binomial(n, k);
            CHECK(exactly_equal(g, gauss_binomial(n, n - k)));
            CHECK(exactly_equal(g, gauss_binomial(n - 1, k - 1) + gauss_binomial(n - 1, k) * Monomial::q(k)));
            CHECK(exactly_equal(g, gauss_binomial(n - 1, k) + gauss_binomial(n - 1, k - 1) * Monomial::q(n - k)));
            CHECK(coefficient_sum(g) == binomial(n, k));
            if (!g.is_zero()) {
                CHECK(*g.degree() == k * (n - k));
            }
        }
    }
}

TEST_CASE("q-binomial theorem")
{
    const Monomial xs[] = {Monomial::q(1), Monomial::q(2, Rational(-1, 2)), Monomial::constant(3),
                           Monomial::q(-1, 2)};
    for (const auto &x : xs) {
        for (long n = 0; n <= 10; ++n) {
            LaurentSeries lhs = poch_finite(x, n, QBase{});
            LaurentSeries rhs;
            for (long k = 0; k <= n; ++k) {
                Monomial t = x.pow(k).shifted(k * (k - 1) / 2);
                rhs += gauss_binomial(n, k) * (k % 2 ? -t : t);
            }
            CHECK(exactly_equal(lhs, rhs));
        }
    }
}

TEST_CASE("Pochhammer extensions")
{
    const Monomial a = Monomial::q(2, Rational(1, 3));
    for (long k = 1; k <= 5; ++k) {
        LaurentSeries neg = poch_finite(a, -k, QBase{}, 30);
        LaurentSeries back = poch_finite(a.shifted(-k), k, QBase{});
        CHECK(eq_to_order(neg * back, LaurentSeries::constant(1), 30 + back.valuation()));
    }
    CHECK_THROWS_AS(poch_finite(a, -2, QBase{}), std::invalid_argument);
    // (q^{-2};q)_5 contains the factor 1 - q^0.
    CHECK(poch_finite(Monomial::q(-2), 5, QBase{}).is_zero());
    // (q^2;q)_{-3} = 1/(q^{-1};q)_3 and (q^{-1};q)_3 contains 1 - q^0.
    QProduct pole;
    pole.times_poch(Monomial::q(2), -3, QBase{});
    CHECK(pole.has_pole());
    CHECK_THROWS_AS(pole.evaluate(10), PochhammerPole);
}

TEST_CASE("zero factors cancel")
{
    QProduct p;
    p.times_factor(Monomial::constant(1));
    CHECK(p.is_zero());
    p.over_factor(Monomial::constant(1));
    CHECK(!p.is_zero());
    CHECK(!p.has_pole());
    CHECK(exactly_equal(p.expand(), LaurentSeries::constant(1)));
}

TEST_CASE("infinite product oracles")
{
    // (q;q)_inf is Euler's pentagonal series.
    LaurentSeries e = poch_infinite(Monomial::q(1), QBase{}, 40);
    LaurentSeries pent =
        LaurentSeries::from_terms({{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}, {15, -1}, {22, 1}, {26, 1},
                                   {35, -1}});
    CHECK(eq_to_order(e, pent, 40));

    // Odd parts and distinct parts: 1/(q;q^2)_inf = (-q;q)_inf.
    QProduct odd;
    odd.over_poch_inf(Monomial::q(1), QBase{2});
    CHECK(eq_to_order(odd.evaluate(60), poch_infinite(Monomial::q(1, -1), QBase{}, 60), 60));

    // Jacobi triple product: (q^2;q^2)(-q;q^2)(-q;q^2) = sum q^{n^2}.
    const Monomial triple[] = {Monomial::q(2), Monomial::q(1, -1), Monomial::q(1, -1)};
    LaurentSeries theta = product_set(triple, QBase{2}, 50);
    LaurentSeries sum = LaurentSeries::constant(1);
    for (long n = 1; n * n < 50; ++n) {
        sum += mono(n * n, 2);
    }
    CHECK(eq_to_order(theta, sum, 50));

    // (q^{-1};q)_inf contains 1 - q^0; (2q^{-1};q)_inf starts at q^{-1}.
    CHECK(poch_infinite(Monomial::q(-1), QBase{}, 10).is_zero());
    LaurentSeries shifted = poch_infinite(Monomial::q(-1, 2), QBase{}, 10);
    CHECK(shifted.valuation() == -1);
}

TEST_CASE("shared Gaussian tables")
{
    GaussianTable &t = gaussian_table(QBase{2});
    CHECK(&t == &gaussian_table(QBase{2}));
    std::vector<std::thread> threads;
    std::vector<int> ok(8, 0);
    for (int i = 0; i < 8; ++i) {
        threads.emplace_back([&, i] {
            bool good = true;
            for (long n = 0; n < 12; ++n) {
                for (long k = 0; k <= n; ++k) {
                    good = good && exactly_equal(t(n, k), gauss_binomial(n, k, QBase{2}));
                }
            }
            ok[static_cast<std::size_t>(i)] = good;
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    for (int b : ok) {
        CHECK(b);
    }
}
