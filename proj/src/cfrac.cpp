#include "qverify/cfrac.hpp"

namespace qverify {

namespace {

LaurentSeries mono(const Monomial &m) { return LaurentSeries::monomial(m); }

} // namespace

std::vector<Convergent> convergents(const ContinuedFraction &cf, long N)
{
    if (N < 0) {
        throw std::invalid_argument("convergent index must be nonnegative");
    }
    std::vector<Convergent> out;
    out.reserve(static_cast<std::size_t>(N + 1));
    LaurentSeries p_prev = LaurentSeries::constant(1), q_prev = LaurentSeries::zero();
    out.push_back({cf.b0, LaurentSeries::constant(1)});
    for (long n = 1; n <= N; ++n) {
        const Convergent &cur = out.back();
        LaurentSeries an = cf.a(n), bn = cf.b(n);
        Convergent next{bn * cur.numerator + an * p_prev, bn * cur.denominator + an * q_prev};
        p_prev = cur.numerator;
        q_prev = cur.denominator;
        out.push_back(std::move(next));
    }
    return out;
}

std::optional<long> determinant_failure(const ContinuedFraction &cf, const std::vector<Convergent> &conv)
{
    LaurentSeries prod = LaurentSeries::constant(1);
    for (std::size_t n = 1; n < conv.size(); ++n) {
        prod = prod * cf.a(static_cast<long>(n));
        LaurentSeries lhs = conv[n].numerator * conv[n - 1].denominator - conv[n - 1].numerator * conv[n].denominator;
        LaurentSeries rhs = (n % 2 == 1) ? prod : -prod;
        if (!exactly_equal(lhs, rhs)) {
            return static_cast<long>(n);
        }
    }
    return std::nullopt;
}

ContinuedFraction h_fraction(const FractionArgs &p)
{
    ContinuedFraction cf;
    cf.b0 = LaurentSeries::zero();
    cf.a = [p](long n) {
        if (n == 1) {
            return LaurentSeries::constant(1);
        }
        return mono(-(p.a * p.b)) + mono(p.c.shifted(n - 1));
    };
    cf.b = [p](long n) {
        if (n == 1) {
            return LaurentSeries::constant(1);
        }
        return mono(p.a) + mono(p.b) + mono(p.d.shifted(n - 1));
    };
    return cf;
}

ContinuedFraction h1_fraction(const FractionArgs &p)
{
    ContinuedFraction cf;
    cf.b0 = LaurentSeries::zero();
    cf.a = [p](long n) {
        if (n == 1) {
            return LaurentSeries::constant(1);
        }
        return mono(-(p.a * p.b).shifted(2 * n - 3)) + mono(p.c.shifted(n - 2));
    };
    cf.b = [p](long n) {
        if (n == 1) {
            return LaurentSeries::constant(1);
        }
        return mono(p.a.shifted(n - 1)) + mono(p.b.shifted(n - 1)) + mono(p.d);
    };
    return cf;
}

ContinuedFraction phi_fraction(const SeriesArgs &p)
{
    const long r = p.base.r();
    ContinuedFraction cf;
    cf.b0 = LaurentSeries::zero();
    cf.a = [p, r](long n) { return mono(-p.y) + mono((p.z * p.x).shifted(r * (n - 1))); };
    cf.b = [p, r](long n) { return mono(p.y) + LaurentSeries::constant(1) + mono(p.x.shifted(r * n)); };
    return cf;
}

ContinuedFraction phi_big_fraction(const SeriesArgs &p)
{
    const long r = p.base.r();
    ContinuedFraction cf;
    cf.b0 = LaurentSeries::zero();
    cf.a = [p, r](long n) {
        return mono(-(p.x * p.x * p.y).shifted(r * (2 * n - 1))) + mono((p.z * p.x).shifted(r * (n - 1)));
    };
    cf.b = [p, r](long n) {
        return mono(p.x.shifted(r * n)) + mono((p.x * p.y).shifted(r * n)) + LaurentSeries::constant(1);
    };
    return cf;
}

} // namespace qverify
