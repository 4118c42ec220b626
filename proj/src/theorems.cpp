// Master theorems, the finite polynomial identities and the standalone
// transformations, expressed as lists of equations.

#include "qverify/catalog.hpp"

namespace qverify {

namespace {

using SeriesFn = std::function<LaurentSeries(long order)>;

// poly * s, with s requested at the order that makes the product known to `order`.
LaurentSeries poly_times(const LaurentSeries &poly, const SeriesFn &s, long order)
{
    if (poly.is_zero()) {
        return LaurentSeries::zero(Precision::at(order));
    }
    return truncate(poly * s(order - poly.valuation()), order);
}

// prefactor * s for a product prefactor with exact valuation.
LaurentSeries product_times(const QProduct &p, const SeriesFn &s, long order)
{
    if (p.is_zero()) {
        return LaurentSeries::zero(Precision::at(order));
    }
    const long vp = p.valuation();
    LaurentSeries sv = s(order - vp);
    const long vs = sv.is_exact() && sv.is_zero() ? 0 : sv.valuation();
    return truncate(p.evaluate(order - vs) * sv, order);
}

// num / den with num built at the order the quotient needs.
LaurentSeries quotient(const SeriesFn &num, const LaurentSeries &den, long order)
{
    return divide(num(order + den.valuation()), den, order);
}

LaurentSeries mono(const Monomial &m) { return LaurentSeries::monomial(m); }

Equation series_equation(std::string label, LaurentSeries lhs, LaurentSeries rhs, long order)
{
    return Equation{std::move(label), std::move(lhs), std::move(rhs), Precision::at(order)};
}

void require_m(long m, long lo, const char *what)
{
    if (m < lo) {
        throw OutOfDomain(std::string(what) + " needs m >= " + std::to_string(lo) + ", got " + std::to_string(m));
    }
}

} // namespace

std::vector<Equation> t1ef_equations(const SeriesArgs &p, long m, long order)
{
    require_m(m, 2, "t1ef");
    const long r = p.base.r();
    const Monomial xz = p.x * p.z;
    LaurentSeries den = LaurentSeries::constant(1);
    for (long j = 1; j < m; ++j) {
        if (xz.shifted(r * j) == p.y) {
            throw DenominatorPole("t1ef: y = xzq^" + std::to_string(r * j) + " makes the denominator vanish");
        }
        den = den * (mono(p.y) - mono(xz.shifted(r * j)));
    }
    const SeriesArgs x1 = shift_x(p, 1);
    LaurentSeries em = e_poly(p, m);
    LaurentSeries em1 = e_poly(x1, m - 1);
    LaurentSeries lhs = phi(shift_x(p, m), order);
    LaurentSeries rhs = quotient(
        [&](long o) {
            return poly_times(em, [&](long w) { return phi(x1, w); }, o) -
                   poly_times(em1, [&](long w) { return phi(p, w); }, o);
        },
        den, order);
    return {series_equation("phi(xq^m)", std::move(lhs), std::move(rhs), order)};
}

std::vector<Equation> t2ef_equations(const SeriesArgs &p, long m, long order)
{
    require_m(m, 2, "t2ef");
    const long r = p.base.r();
    const SeriesArgs xm = shift_x(p, m);
    const Monomial xyq = (p.x * p.y).shifted(r);

    SumShape direct = phi_big_shape(xm);
    direct.pochs.back() = PochShape{-xyq, p.base, m, true};
    LaurentSeries sum = q_sum(make_term_builder(direct), order);

    QProduct inv_prefix;
    inv_prefix.over_poch(-xyq, m, p.base);
    if (inv_prefix.has_pole()) {
        throw DenominatorPole("t2ef: (-xyq;q)_m vanishes");
    }
    LaurentSeries scaled = product_times(inv_prefix, [&](long w) { return phi_big(xm, w); }, order);

    std::vector<Equation> out;
    out.push_back(series_equation("sum = Phi(xq^m)/(-xyq;q)_m", sum, scaled, order));
    if (p.x.is_zero()) {
        // Every factor of the denominator below vanishes.
        return out;
    }

    const Monomial x2y = p.x * p.x * p.y;
    const Monomial xz = p.x * p.z;
    LaurentSeries den = LaurentSeries::constant(1);
    for (long j = 1; j < m; ++j) {
        if (x2y.shifted(r * (2 * j + 1)) == xz.shifted(r * j)) {
            throw DenominatorPole("t2ef: factor x^2yq^(2j+1) - xzq^j vanishes at j = " + std::to_string(j));
        }
        den = den * (mono(x2y.shifted(r * (2 * j + 1))) - mono(xz.shifted(r * j)));
    }
    const SeriesArgs x1 = shift_x(p, 1);
    LaurentSeries gm = g_poly(p, m);
    LaurentSeries gm1 = g_poly(x1, m - 1);
    QProduct inv_one;
    inv_one.over_factor(-xyq);
    LaurentSeries rhs = quotient(
        [&](long o) {
            return poly_times(gm,
                              [&](long w) {
                                  return product_times(inv_one, [&](long v) { return phi_big(x1, v); }, w);
                              },
                              o) -
                   poly_times(gm1, [&](long w) { return phi_big(p, w); }, o);
        },
        den, order);
    out.push_back(series_equation("Phi(xq^m)/(-xyq;q)_m = rhs", std::move(scaled), std::move(rhs), order));
    return out;
}

std::vector<Equation> t3ef_equations(int part, const SeriesArgs &p, long m, long order)
{
    require_m(m, 1, "t3ef");
    if (part != 1 && part != 2) {
        throw std::invalid_argument("t3ef part must be 1 or 2");
    }
    const long r = p.base.r();
    const SeriesArgs xm = shift_x(p, -m);
    const SeriesArgs x1 = shift_x(p, 1);
    const Monomial zx = p.z * p.x;

    if (part == 1) {
        LaurentSeries lhs = phi(xm, order);
        LaurentSeries c1 = e_poly(xm, m + 1);
        LaurentSeries c2 = (mono(zx) - mono(p.y)) * e_poly(xm, m);
        LaurentSeries rhs = poly_times(c1, [&](long w) { return phi(p, w); }, order) +
                            poly_times(c2, [&](long w) { return phi(x1, w); }, order);
        return {series_equation("phi(xq^-m)", std::move(lhs), std::move(rhs), order)};
    }

    const Monomial xy = p.x * p.y;
    if (xy.is_zero()) {
        throw DenominatorPole("t3ef part ii needs xy != 0");
    }
    // q^{m(m-1)/2} / ((xy)^m (-1/(xy);q)_m)
    QProduct pre;
    pre.times(Monomial::q(r * m * (m - 1) / 2));
    pre.over(xy.pow(m));
    pre.over_poch(-(Monomial::constant(1) / xy), m, p.base);
    if (pre.has_pole()) {
        throw DenominatorPole("t3ef part ii: (-1/(xy);q)_m vanishes");
    }
    QProduct inv_one;
    inv_one.over_factor(-xy.shifted(r));
    LaurentSeries c1 = g_poly(xm, m + 1);
    LaurentSeries c2 = (mono(zx) - mono((p.x * xy).shifted(r))) * g_poly(xm, m);
    LaurentSeries lhs = phi_big(xm, order);
    LaurentSeries rhs = product_times(
        pre,
        [&](long o) {
            return poly_times(c1, [&](long w) { return phi_big(p, w); }, o) +
                   poly_times(c2,
                              [&](long w) {
                                  return product_times(inv_one, [&](long v) { return phi_big(x1, v); }, w);
                              },
                              o);
        },
        order);
    return {series_equation("Phi(xq^-m)", std::move(lhs), std::move(rhs), order)};
}

std::vector<Equation> polyver_equations(int variant, const SeriesArgs &p, long n, long m,
                                        std::optional<Monomial> fault)
{
    if (variant != 1 && variant != 2) {
        throw std::invalid_argument("polyver variant must be 1 or 2");
    }
    if (n < 0 || m < 0) {
        throw OutOfDomain("polyver needs n, m >= 0");
    }
    const long r = p.base.r();
    const Monomial zx = p.z * p.x;
    const bool second = variant == 2;
    auto top = [&](long k, long s) { return second ? g_poly(shift_x(p, s), k) : e_poly(shift_x(p, s), k); };
    auto low = [&](long k, long s) { return second ? h_poly(shift_x(p, s), k) : f_poly(shift_x(p, s), k); };
    const Monomial x2y = p.x * p.x * p.y;
    LaurentSeries c0 = second ? mono(zx) - mono(x2y.shifted(r)) : mono(zx) - mono(p.y);
    LaurentSeries cm = second ? mono(zx.shifted(r * m)) - mono(x2y.shifted(r * (2 * m + 1)))
                              : mono(zx.shifted(r * m)) - mono(p.y);
    // c0 * low(k, 0) is the numerator convergent P_{k-1}; P_{-1} = 1.
    auto numer = [&](long k) { return k == 0 ? LaurentSeries::constant(1) : c0 * low(k, 0); };

    std::vector<Equation> out;
    out.push_back(Equation{"numerators", numer(n + m + 1),
                           top(n + 1, m) * numer(m + 1) + cm * low(n + 1, m) * numer(m), Precision::exact()});
    LaurentSeries rhs2 = top(n + 1, m) * top(m + 1, 0) + cm * low(n + 1, m) * top(m, 0);
    if (fault) {
        rhs2 += mono(*fault);
    }
    out.push_back(Equation{"denominators", top(n + m + 1, 0), std::move(rhs2), Precision::exact()});
    return out;
}

VerificationReport verify_theorem_t1ef(const SeriesArgs &p, long m, long order)
{
    return run_check("t1ef", m, order, [&] { return t1ef_equations(p, m, order); });
}

VerificationReport verify_theorem_t2ef(const SeriesArgs &p, long m, long order)
{
    return run_check("t2ef", m, order, [&] { return t2ef_equations(p, m, order); });
}

VerificationReport verify_theorem_t3ef(int part, const SeriesArgs &p, long m, long order)
{
    return run_check(part == 1 ? "t3ef-i" : "t3ef-ii", m, order, [&] { return t3ef_equations(part, p, m, order); });
}

VerificationReport verify_polyver(int variant, const SeriesArgs &p, long n, long m)
{
    return run_check(variant == 1 ? "polyver" : "polyver2", m, 0,
                     [&] { return polyver_equations(variant, p, n, m); });
}

VerificationReport verify_transformation(Transformation t, const SeriesArgs &p, long order)
{
    return run_check(transformation_name(t), 0, order, [&] {
        SeriesPair s = transformation_sides(t, p, order);
        return std::vector<Equation>{series_equation(transformation_name(t), std::move(s.lhs), std::move(s.rhs), order)};
    });
}

const std::vector<SeriesArgs> &default_theorem_args()
{
    static const std::vector<SeriesArgs> args = {
        {Monomial::q(1), Monomial::constant(Rational(1, 2)), Monomial::q(2)},
        {Monomial::q(1), Monomial::constant(0), Monomial::q(1)},
        {Monomial::q(1, Rational(1, 2)), Monomial::constant(Rational(-1, 3)), Monomial::q(1)},
    };
    return args;
}

const SeriesArgs &default_polyver_args()
{
    static const SeriesArgs args{Monomial::q(1, 2), Monomial::q(1, Rational(1, 3)), Monomial::q(2, -1)};
    return args;
}

} // namespace qverify
