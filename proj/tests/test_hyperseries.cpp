#include <doctest.h>

#include "qverify/errors.hpp"
#include "qverify/hyperseries.hpp"
#include "qverify/polyfam.hpp"

using namespace qverify;

namespace {

SumShape rr_shape(long b)
{
    SumShape s;
    s.exponent = Quadratic{1, b, 0, 1};
    s.pochs.push_back({Monomial::q(1), QBase{}, 0, true});
    return s;
}

LaurentSeries inf_product(std::initializer_list<long> exps, long r, bool denominator, long order)
{
    QProduct p;
    for (long e : exps) {
        if (denominator) {
            p.over_poch_inf(Monomial::q(e), QBase{r});
        } else {
            p.times_poch_inf(Monomial::q(e), QBase{r});
        }
    }
    return p.evaluate(order);
}

const SeriesArgs kSpecs[] = {
    {Monomial::q(1), Monomial::constant(Rational(1, 2)), Monomial::q(2)},
    {Monomial::q(2, Rational(1, 3)), Monomial::q(1, -1), Monomial::q(1, Rational(2, 5))},
    {Monomial::q(1, -2), Monomial::constant(Rational(-1, 4)), Monomial::q(1)},
};

} // namespace

TEST_CASE("Rogers-Ramanujan sums")
{
    CHECK(eq_to_order(q_sum(make_term_builder(rr_shape(0)), 80), inf_product({1, 4}, 5, true, 80), 80));
    CHECK(eq_to_order(q_sum(make_term_builder(rr_shape(1)), 80), inf_product({2, 3}, 5, true, 80), 80));
}

TEST_CASE("Euler: sum q^{n(n+1)/2}/(q;q)_n = (-q;q)_inf")
{
    SumShape s;
    s.exponent = Quadratic{1, 1, 0, 2};
    s.pochs.push_back({Monomial::q(1), QBase{}, 0, true});
    QProduct p;
    p.times_poch_inf(Monomial::q(1, -1), QBase{});
    CHECK(eq_to_order(q_sum(make_term_builder(s), 60), p.evaluate(60), 60));
}

TEST_CASE("valuation bounds")
{
    SumShape s = rr_shape(-3);
    s.pochs.push_back({Monomial::q(-4, 2), QBase{2}, 1, true});
    s.linears.push_back({Monomial::q(-5), 2});
    TermBuilder b = make_term_builder(s);
    for (long n = 0; n < 40; ++n) {
        CHECK(b.val_lb(n) <= s.raw_valuation(n));
        CHECK(b.val_lb(n) <= b.val_lb(n + 1));
        LaurentSeries t = b.term(n, 200);
        if (!t.is_zero()) {
            CHECK(t.valuation() == s.raw_valuation(n));
        }
    }

    const auto before = valuation_violations();
    TermBuilder lying = make_term_builder(rr_shape(0));
    lying.val_lb = [](long n) { return n * n + 1; };
    CHECK_THROWS_AS(q_sum(lying, 10), ValuationBoundViolation);
    CHECK(valuation_violations() == before + 1);
}

TEST_CASE("nonterminating sums hit the cap")
{
    SumShape s;
    s.pochs.push_back({Monomial::q(1), QBase{}, 0, true});
    CHECK_THROWS_AS(q_sum(make_term_builder(s), 10), NonterminatingBound);
    CHECK_THROWS_AS(q_sum(make_term_builder(rr_shape(0)), 50, 3), NonterminatingBound);
}

TEST_CASE("poles in phi and Phi are rejected")
{
    CHECK_THROWS_AS(phi({Monomial::q(1), Monomial::constant(1), Monomial::q(1)}, 10), DenominatorPole);
    CHECK_THROWS_AS(phi({Monomial::q(1), Monomial::q(-2), Monomial::q(1)}, 10), DenominatorPole);
    // -xyq = 1 when xy = -q^{-1}
    CHECK_THROWS_AS(phi_big({Monomial::q(1), Monomial::q(-2, -1), Monomial::q(1)}, 10), DenominatorPole);
}

TEST_CASE("phi shift consistency")
{
    for (const auto &p : kSpecs) {
        for (long m = 0; m <= 4; ++m) {
            SumShape direct = phi_shape(p);
            direct.exponent.b += 2 * m;
            CHECK(eq_to_order(q_sum(make_term_builder(direct), 40), phi(shift_x(p, m), 40), 40));
        }
    }
}

TEST_CASE("Watson weight has c_0 = 1")
{
    SumShape s;
    s.exponent = Quadratic{0, 0, 0, 1};
    append_watson_weight(s, Monomial::constant(1), QBase{});
    CHECK(exactly_equal(s.term_product(0).expand(), LaurentSeries::constant(1)));
    CHECK(exactly_equal(s.term_product(1).expand(), LaurentSeries::from_terms({{0, 1}, {2, -1}})));
    // (1 - q^4)(q;q)_1
    CHECK(exactly_equal(s.term_product(2).expand(), LaurentSeries::from_terms({{0, 1}, {1, -1}, {4, -1}, {5, 1}})));
}

TEST_CASE("transformations at three specializations")
{
    for (auto t : all_transformations()) {
        CHECK(transformation_from_name(transformation_name(t)) == t);
        for (const auto &p : kSpecs) {
            SeriesPair s = transformation_sides(t, p, 40);
            CHECK_MESSAGE(eq_to_order(s.lhs, s.rhs, 40), transformation_name(t));
        }
    }
    CHECK_THROWS_AS(transformation_from_name("gauss"), UnknownIdentity);
    // The Heine side sums in powers of z, so a constant z is formally divergent.
    const SeriesArgs flat{Monomial::q(1), Monomial::constant(Rational(1, 2)), Monomial::constant(Rational(2, 5))};
    CHECK_THROWS_AS(transformation_sides(Transformation::heine, flat, 40), NonterminatingBound);
}

TEST_CASE("product times sum keeps the requested order")
{
    QProduct pre;
    pre.times(Monomial::q(-5));
    pre.over_poch_inf(Monomial::q(1), QBase{});
    LaurentSeries r = product_times_sum(pre, make_term_builder(rr_shape(0)), 30);
    CHECK(r.precision() == Precision::at(30));
    CHECK(r.valuation() == -5);
}
