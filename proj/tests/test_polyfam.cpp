#include <doctest.h>

#include "qverify/errors.hpp"
#include "qverify/polyfam.hpp"

using namespace qverify;

namespace {

const SeriesArgs kSpecs[] = {
    {Monomial::q(1), Monomial::constant(Rational(1, 2)), Monomial::q(2)},
    {Monomial::q(1), Monomial::constant(0), Monomial::q(1)},
    {Monomial::q(1, 2), Monomial::q(1, Rational(1, 3)), Monomial::q(2, -1)},
    {Monomial::q(-1, Rational(1, 2)), Monomial::q(2), Monomial::constant(3)},
};

LaurentSeries mono(const Monomial &m) { return LaurentSeries::monomial(m); }
LaurentSeries poly(std::vector<std::pair<long, Rational>> t) { return LaurentSeries::from_terms(t); }

} // namespace

TEST_CASE("e_m small cases")
{
    for (const auto &p : kSpecs) {
        CHECK(e_poly(p, 0).is_zero());
        CHECK(exactly_equal(e_poly(p, 1), LaurentSeries::constant(1)));
        LaurentSeries b1 = mono(p.y) + LaurentSeries::constant(1) + mono(p.x.shifted(1));
        CHECK(exactly_equal(e_poly(p, 2), b1));
        LaurentSeries b2 = mono(p.y) + LaurentSeries::constant(1) + mono(p.x.shifted(2));
        LaurentSeries a2 = mono((p.z * p.x).shifted(1)) - mono(p.y);
        CHECK(exactly_equal(e_poly(p, 3), b2 * b1 + a2));
        CHECK(f_poly(p, 1).is_zero());
        CHECK(h_poly(p, 1).is_zero());
    }
}

TEST_CASE("sums agree with the recurrence and the shift relations")
{
    for (const auto &p : kSpecs) {
        for (long m = 0; m <= 8; ++m) {
            CHECK(exactly_equal(e_poly(p, m), e_by_recurrence(p, m)));
        }
        for (long m = 1; m <= 7; ++m) {
            CHECK(exactly_equal(f_poly(p, m), e_poly(shift_x(p, 1), m - 1)));
            CHECK(exactly_equal(h_poly(p, m), g_poly(shift_x(p, 1), m - 1)));
        }
    }
}

TEST_CASE("Rogers-Ramanujan family polynomials")
{
    // a_m = sum q^{j^2+j} [m-j-2, j], b_m = sum q^{j^2} [m-j-1, j]
    auto c1 = [](long m) { return family_polynomials("c1", m); };
    CHECK(exactly_equal(c1(0).a, LaurentSeries::constant(1)));
    CHECK(c1(0).b.is_zero());
    CHECK(c1(1).a.is_zero());
    CHECK(exactly_equal(c1(1).b, LaurentSeries::constant(1)));
    CHECK(exactly_equal(c1(2).a, LaurentSeries::constant(1)));
    CHECK(exactly_equal(c1(2).b, LaurentSeries::constant(1)));
    CHECK(exactly_equal(c1(3).a, LaurentSeries::constant(1)));
    CHECK(exactly_equal(c1(3).b, poly({{0, 1}, {1, 1}})));
    // m = 4: a = 1 + q^2[1,1] = 1 + q^2, b = [3,0] + q[2,1] = 1 + q + q^2
    CHECK(exactly_equal(c1(4).a, poly({{0, 1}, {2, 1}})));
    CHECK(exactly_equal(c1(4).b, poly({{0, 1}, {1, 1}, {2, 1}})));
}

TEST_CASE("cc1 polynomials are even")
{
    for (long m = 0; m <= 8; ++m) {
        PolynomialPair ab = family_polynomials("cc1", m);
        CHECK(exactly_equal(reflect(ab.a), ab.a));
        CHECK(exactly_equal(reflect(ab.b), ab.b));
    }
}

TEST_CASE("family registry")
{
    CHECK(polynomial_family_names().size() == 12);
    for (const auto &name : polynomial_family_names()) {
        for (long m = 0; m <= 5; ++m) {
            CHECK_NOTHROW(family_polynomials(name, m));
        }
    }
    CHECK_THROWS_AS(family_polynomials("c9", 1), UnknownIdentity);
    CHECK_THROWS_AS(family_polynomials("c1", -1), OutOfDomain);
}
