#include <doctest.h>

#include "qverify/cfrac.hpp"

using namespace qverify;

namespace {

const FractionArgs kFractions[] = {
    {Monomial::q(1), Monomial::q(2), Monomial::q(1), Monomial::constant(1)},
    {Monomial::constant(Rational(1, 2)), Monomial::q(1, -1), Monomial::q(3), Monomial::q(1, 2)},
    {Monomial::q(2, 3), Monomial::constant(0), Monomial::q(1, -1), Monomial::constant(Rational(1, 3))},
    {Monomial::q(-1), Monomial::q(1), Monomial::constant(2), Monomial::q(2)},
    {Monomial::q(1, Rational(-2, 5)), Monomial::q(2, Rational(3, 4)), Monomial::q(1, Rational(1, 2)),
     Monomial::q(1, -1)},
};

const SeriesArgs kSeries[] = {
    {Monomial::q(1), Monomial::constant(Rational(1, 2)), Monomial::q(2)},
    {Monomial::q(1), Monomial::constant(0), Monomial::q(1)},
    {Monomial::q(1, Rational(1, 2)), Monomial::constant(Rational(-1, 3)), Monomial::q(1)},
    {Monomial::q(2, -1), Monomial::q(1, 2), Monomial::constant(Rational(3, 2))},
    {Monomial::q(1, 2), Monomial::q(1, Rational(1, 3)), Monomial::q(2, -1)},
};

LaurentSeries mono(const Monomial &m) { return LaurentSeries::monomial(m); }

} // namespace

TEST_CASE("Fibonacci convergents")
{
    ContinuedFraction cf{LaurentSeries::constant(1), [](long) { return LaurentSeries::constant(1); },
                         [](long) { return LaurentSeries::constant(1); }};
    auto conv = convergents(cf, 12);
    REQUIRE(conv.size() == 13);
    long fib[16] = {0, 1};
    for (int i = 2; i < 16; ++i) {
        fib[i] = fib[i - 1] + fib[i - 2];
    }
    for (long n = 0; n <= 12; ++n) {
        CHECK(exactly_equal(conv[n].numerator, LaurentSeries::constant(fib[n + 2])));
        CHECK(exactly_equal(conv[n].denominator, LaurentSeries::constant(fib[n + 1])));
    }
    CHECK(!determinant_failure(cf, conv));
    CHECK_THROWS_AS(convergents(cf, -1), std::invalid_argument);
}

TEST_CASE("closed forms equal recurrence convergents")
{
    for (const auto &p : kFractions) {
        auto h = convergents(h_fraction(p), 12);
        auto h1 = convergents(h1_fraction(p), 12);
        for (long n = 0; n <= 12; ++n) {
            CHECK(exactly_equal(h_numerator(p, n), h[n].numerator));
            CHECK(exactly_equal(h_denominator(p, n), h[n].denominator));
            CHECK(exactly_equal(h1_numerator(p, n), h1[n].numerator));
            CHECK(exactly_equal(h1_denominator(p, n), h1[n].denominator));
        }
    }
}

TEST_CASE("determinant identity")
{
    for (const auto &p : kFractions) {
        CHECK(!determinant_failure(h_fraction(p), convergents(h_fraction(p), 12)));
        CHECK(!determinant_failure(h1_fraction(p), convergents(h1_fraction(p), 12)));
    }
    for (const auto &p : kSeries) {
        CHECK(!determinant_failure(phi_fraction(p), convergents(phi_fraction(p), 12)));
        CHECK(!determinant_failure(phi_big_fraction(p), convergents(phi_big_fraction(p), 12)));
    }
    // A corrupted convergent is caught.
    auto cf = h_fraction(kFractions[0]);
    auto conv = convergents(cf, 6);
    conv[4].numerator += LaurentSeries::monomial(1, 3);
    CHECK(determinant_failure(cf, conv).value() == 4);
}

TEST_CASE("phi and Phi convergents through the polynomial families")
{
    for (const auto &p : kSeries) {
        const Monomial zx = p.z * p.x;
        auto c = convergents(phi_fraction(p), 8);
        auto C = convergents(phi_big_fraction(p), 8);
        LaurentSeries k = mono(zx) - mono(p.y);
        LaurentSeries K = mono(zx) - mono((p.x * p.x * p.y).shifted(1));
        for (long n = 0; n <= 8; ++n) {
            CHECK(exactly_equal(c[n].numerator, k * f_poly(p, n + 1)));
            CHECK(exactly_equal(c[n].denominator, e_poly(p, n + 1)));
            CHECK(exactly_equal(C[n].numerator, K * h_poly(p, n + 1)));
            CHECK(exactly_equal(C[n].denominator, g_poly(p, n + 1)));
        }
    }
}
