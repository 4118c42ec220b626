#include "qverify/hyperseries.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <memory>

namespace qverify {

namespace {

std::atomic<std::uint64_t> g_checks{0};
std::atomic<std::uint64_t> g_violations{0};

constexpr long kZeroTerm = LONG_MAX / 4;
constexpr long kNoBound = LONG_MIN / 4;
constexpr long kSettleScan = 2'000'000;

long ceil_div(long x, long r)
{
    long q = x / r;
    if (x % r != 0 && ((x > 0) == (r > 0))) {
        ++q;
    }
    return q;
}

// sum_{k < len} min(0, e + r k)
long poch_val(long e, long r, long len)
{
    long neg = e < 0 ? ceil_div(-e, r) : 0;
    long m = std::min(len, neg);
    return m * e + r * m * (m - 1) / 2;
}

long signed_poch_val(const Monomial &a, long r, long len)
{
    if (a.is_zero()) {
        return 0;
    }
    if (len >= 0) {
        return poch_val(a.exponent(), r, len);
    }
    return -poch_val(a.exponent() + r * len, r, -len);
}

} // namespace

std::uint64_t valuation_checks() { return g_checks.load(); }
std::uint64_t valuation_violations() { return g_violations.load(); }

LaurentSeries q_sum(const TermBuilder &builder, long order, std::optional<long> iteration_cap)
{
    long lb0 = builder.val_lb(0);
    long cap = iteration_cap ? *iteration_cap
                             : 10 * (std::max(order, 0L) + (lb0 < 0 && lb0 > kNoBound ? -lb0 : 0)) + 100;
    LaurentSeries total = LaurentSeries::zero(Precision::at(order));
    for (long n = 0;; ++n) {
        long lb = builder.val_lb(n);
        if (lb >= order) {
            break;
        }
        if (n >= cap) {
            throw NonterminatingBound("series did not reach order " + std::to_string(order) + " within " +
                                      std::to_string(cap) + " terms");
        }
        LaurentSeries t = builder.term(n, order);
        ++g_checks;
        if (!t.is_zero() && t.valuation() < lb) {
            ++g_violations;
            throw ValuationBoundViolation("term " + std::to_string(n) + " has valuation " +
                                          std::to_string(t.valuation()) + " below its declared bound " +
                                          std::to_string(lb));
        }
        if (t.precision() < Precision::at(order)) {
            throw InsufficientPrecision("term " + std::to_string(n) + " known only to " + to_string(t.precision()));
        }
        total += t;
    }
    return total;
}

long Quadratic::operator()(long n) const
{
    long num = a * n * n + b * n + c;
    if (num % d != 0) {
        throw std::logic_error("quadratic exponent is not integral at n = " + std::to_string(n));
    }
    return num / d;
}

QProduct SumShape::term_product(long n) const
{
    QProduct p;
    if (sgn(lead) == 0 || (sgn(ratio) == 0 && n > 0)) {
        return QProduct::constant(0);
    }
    p.times(Monomial::q(exponent(n), lead * rational_pow(ratio, n)));
    for (const auto &ps : pochs) {
        if (ps.denominator) {
            p.over_poch(ps.a, n + ps.offset, ps.base);
        } else {
            p.times_poch(ps.a, n + ps.offset, ps.base);
        }
    }
    for (const auto &ps : pairs) {
        long len = n + ps.offset;
        if (len < 0) {
            throw std::logic_error("pair product of negative length");
        }
        if (len == 0) {
            continue;
        }
        if (!ps.u.is_zero()) {
            p.times(ps.u.pow(len));
            p.times_poch(-(ps.v / ps.u), len, ps.base);
        } else if (!ps.v.is_zero()) {
            p.times(ps.v.pow(len));
            p.times(Monomial::q(ps.base.r() * len * (len - 1) / 2));
        } else {
            return QProduct::constant(0);
        }
    }
    for (const auto &ls : linears) {
        p.times_factor(ls.c.shifted(ls.step * n));
    }
    return p;
}

long SumShape::raw_valuation(long n) const
{
    if (sgn(lead) == 0 || (sgn(ratio) == 0 && n > 0)) {
        return kZeroTerm;
    }
    long v = exponent(n);
    for (const auto &ps : pochs) {
        long pv = signed_poch_val(ps.a, ps.base.r(), n + ps.offset);
        v += ps.denominator ? -pv : pv;
    }
    for (const auto &ps : pairs) {
        long len = n + ps.offset;
        long r = ps.base.r();
        if (len <= 0) {
            continue;
        }
        if (ps.u.is_zero() && ps.v.is_zero()) {
            return kZeroTerm;
        }
        if (ps.u.is_zero()) {
            v += len * ps.v.exponent() + r * len * (len - 1) / 2;
        } else if (ps.v.is_zero()) {
            v += len * ps.u.exponent();
        } else {
            long below = std::max(0L, ceil_div(ps.u.exponent() - ps.v.exponent(), r));
            long m = std::min(len, below);
            v += m * ps.v.exponent() + r * m * (m - 1) / 2 + (len - m) * ps.u.exponent();
        }
    }
    for (const auto &ls : linears) {
        if (!ls.c.is_zero()) {
            v += std::min(0L, ls.c.exponent() + ls.step * n);
        }
    }
    return v;
}

TermBuilder make_term_builder(const SumShape &shape)
{
    if (shape.exponent.a < 0 || shape.exponent.d <= 0) {
        throw std::invalid_argument("sum exponent must be a convex quadratic with positive denominator");
    }
    // Past n0 every newly added factor has a nonnegative exponent, so the
    // increments of the raw valuation are nondecreasing.
    long n0 = 0;
    for (const auto &ps : shape.pochs) {
        n0 = std::max(n0, -ps.offset);
        if (!ps.a.is_zero()) {
            n0 = std::max(n0, ceil_div(-ps.a.exponent(), ps.base.r()) - ps.offset);
        }
    }
    for (const auto &ps : shape.pairs) {
        n0 = std::max(n0, -ps.offset);
        if (!ps.u.is_zero() && !ps.v.is_zero()) {
            n0 = std::max(n0, ceil_div(ps.u.exponent() - ps.v.exponent(), ps.base.r()) - ps.offset);
        }
    }
    for (const auto &ls : shape.linears) {
        if (ls.step < 0) {
            throw std::invalid_argument("linear factor step must be nonnegative");
        }
        if (ls.step > 0 && !ls.c.is_zero()) {
            n0 = std::max(n0, ceil_div(-ls.c.exponent(), ls.step));
        }
    }
    auto s = std::make_shared<SumShape>(shape);
    long n1 = -1;
    for (long n = n0; n < n0 + kSettleScan; ++n) {
        if (s->raw_valuation(n + 1) >= s->raw_valuation(n)) {
            n1 = n;
            break;
        }
    }
    TermBuilder b;
    b.term = [s](long n, long order) {
        QProduct p = s->term_product(n);
        try {
            return p.evaluate(order);
        } catch (const PochhammerPole &e) {
            throw DenominatorPole(std::string("summand ") + std::to_string(n) + ": " + e.what());
        }
    };
    if (n1 < 0) {
        b.val_lb = [](long) { return kNoBound; };
        return b;
    }
    auto suffix = std::make_shared<std::vector<long>>(static_cast<std::size_t>(n1 + 1));
    long running = s->raw_valuation(n1);
    for (long n = n1; n >= 0; --n) {
        running = std::min(running, s->raw_valuation(n));
        (*suffix)[static_cast<std::size_t>(n)] = running;
    }
    b.val_lb = [s, suffix, n1](long n) {
        return n <= n1 ? (*suffix)[static_cast<std::size_t>(n)] : s->raw_valuation(n);
    };
    return b;
}

LaurentSeries product_times_sum(const QProduct &prefactor, const TermBuilder &sum, long order)
{
    if (prefactor.is_zero()) {
        return LaurentSeries::zero(Precision::at(order));
    }
    long vp = prefactor.valuation();
    LaurentSeries s = q_sum(sum, order - vp);
    if (s.is_zero()) {
        return LaurentSeries::zero(Precision::at(order));
    }
    LaurentSeries p = prefactor.evaluate(order - s.valuation());
    return truncate(p * s, order);
}

// ---------------------------------------------------------------- phi, Phi

namespace {

void reject_pole(const Monomial &a, long r, long first_k, const char *what)
{
    // (1 - a q^{r k}) vanishes for some k >= first_k
    if (a.coeff() == 1 && a.exponent() <= -r * first_k && (-a.exponent()) % r == 0) {
        throw DenominatorPole(std::string(what) + " has a vanishing denominator factor");
    }
}

SumShape phi_common(const SeriesArgs &p)
{
    const long r = p.base.r();
    SumShape s;
    s.ratio = p.x.coeff();
    s.exponent = Quadratic{r, r + 2 * p.x.exponent(), 0, 2};
    s.pochs.push_back({-p.z, p.base, 0, false});
    s.pochs.push_back({Monomial::q(r), p.base, 0, true});
    return s;
}

} // namespace

SumShape phi_shape(const SeriesArgs &p)
{
    reject_pole(p.y, p.base.r(), 0, "phi");
    SumShape s = phi_common(p);
    s.pochs.push_back({p.y, p.base, 1, true});
    return s;
}

LaurentSeries phi(const SeriesArgs &p, long order) { return q_sum(make_term_builder(phi_shape(p)), order); }

SumShape phi_big_shape(const SeriesArgs &p)
{
    const long r = p.base.r();
    Monomial d = -(p.x * p.y).shifted(r);
    reject_pole(d, r, 0, "Phi");
    SumShape s = phi_common(p);
    s.pochs.push_back({d, p.base, 0, true});
    return s;
}

LaurentSeries phi_big(const SeriesArgs &p, long order)
{
    return q_sum(make_term_builder(phi_big_shape(p)), order);
}

void append_watson_weight(SumShape &shape, const Monomial &w, QBase base)
{
    shape.linears.push_back({w, 2 * base.r()});
    shape.pochs.push_back({w.shifted(base.r()), base, -1, false});
}

// ---------------------------------------------------------------- transformations

const std::vector<Transformation> &all_transformations()
{
    static const std::vector<Transformation> all = {Transformation::watson, Transformation::watson_xy,
                                                    Transformation::heine,  Transformation::heine_xy,
                                                    Transformation::ramanujan, Transformation::ramanujan_xy};
    return all;
}

std::string transformation_name(Transformation t)
{
    switch (t) {
        case Transformation::watson:
            return "watson";
        case Transformation::watson_xy:
            return "watson-xy";
        case Transformation::heine:
            return "heine";
        case Transformation::heine_xy:
            return "heine-xy";
        case Transformation::ramanujan:
            return "ramanujan";
        case Transformation::ramanujan_xy:
            return "ramanujan-xy";
    }
    return "?";
}

Transformation transformation_from_name(const std::string &name)
{
    for (auto t : all_transformations()) {
        if (transformation_name(t) == name) {
            return t;
        }
    }
    throw UnknownIdentity("unknown transformation '" + name + "'");
}

SeriesPair transformation_sides(Transformation t, const SeriesArgs &p, long order)
{
    const QBase base = p.base;
    const long r = base.r();
    const Monomial &x = p.x, &y = p.y, &z = p.z;
    const Monomial zx = z * x;
    const Monomial minus_xq = -x.shifted(r);
    const Monomial qr = Monomial::q(r);

    auto den = [&](SumShape &s, const Monomial &a, long offset = 0) { s.pochs.push_back({a, base, offset, true}); };
    auto num = [&](SumShape &s, const Monomial &a) { s.pochs.push_back({a, base, 0, false}); };

    SumShape s;
    QProduct pre;
    SeriesPair out;
    switch (t) {
        case Transformation::watson:
        case Transformation::watson_xy: {
            bool xy = t == Transformation::watson_xy;
            s.ratio = xy ? Rational(-x.coeff() * x.coeff()) : x.coeff();
            long xe = xy ? 2 * x.exponent() : x.exponent();
            s.exponent = Quadratic{3 * r, r + 2 * xe, 0, 2};
            s.pairs.push_back(xy ? PairShape{y, z, base, 0} : PairShape{y, -zx, base, 0});
            append_watson_weight(s, zx, base);
            num(s, -z);
            den(s, minus_xq);
            den(s, qr);
            if (xy) {
                den(s, -(x * y).shifted(r));
            } else {
                reject_pole(y, r, 0, "watson sum");
                den(s, y, 1);
            }
            out.lhs = q_sum(make_term_builder(s), order);
            pre.times_poch_inf(zx.shifted(r), base).over_poch_inf(minus_xq, base);
            auto inner = make_term_builder(xy ? phi_big_shape(p) : phi_shape(p));
            out.rhs = product_times_sum(pre, inner, order);
            return out;
        }
        case Transformation::heine: {
            out.lhs = phi(p, order);
            s.pairs.push_back({-z, -y.shifted(r), base, 0});
            den(s, minus_xq);
            den(s, qr);
            pre.times_poch_inf(-z, base).times_poch_inf(minus_xq, base);
            reject_pole(y, r, 0, "heine prefactor");
            pre.over_poch_inf(y, base);
            out.rhs = product_times_sum(pre, make_term_builder(s), order);
            return out;
        }
        case Transformation::heine_xy: {
            s.pairs.push_back({-z, (x * y).shifted(r), base, 0});
            den(s, minus_xq);
            den(s, qr);
            out.lhs = q_sum(make_term_builder(s), order);
            Monomial d = -(x * y).shifted(r);
            pre.times_poch_inf(d, base).over_poch_inf(-z, base).over_poch_inf(minus_xq, base);
            out.rhs = product_times_sum(pre, make_term_builder(phi_big_shape(p)), order);
            return out;
        }
        case Transformation::ramanujan:
        case Transformation::ramanujan_xy: {
            bool xy = t == Transformation::ramanujan_xy;
            s.ratio = x.coeff();
            s.exponent = Quadratic{r, x.exponent(), 0, 1};
            den(s, minus_xq);
            den(s, qr);
            if (xy) {
                s.pairs.push_back({z, -(x * y).shifted(r), base, 0});
                den(s, -(x * y).shifted(r));
                out.lhs = q_sum(make_term_builder(s), order);
                pre.over_poch_inf(minus_xq, base);
                out.rhs = product_times_sum(pre, make_term_builder(phi_big_shape(p)), order);
            } else {
                s.pairs.push_back({z, y.shifted(r), base, 0});
                reject_pole(y, r, 0, "ramanujan sum");
                den(s, y, 1);
                out.lhs = phi(p, order);
                pre.times_poch_inf(minus_xq, base);
                out.rhs = product_times_sum(pre, make_term_builder(s), order);
            }
            return out;
        }
    }
    throw std::logic_error("unhandled transformation");
}

} // namespace qverify
