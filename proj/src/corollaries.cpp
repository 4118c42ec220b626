// Sum sides and product sides of the finite-m identities and the classical
// sum = product inputs.

#include <map>

#include "qverify/catalog.hpp"

namespace qverify {

namespace {

// ---------------------------------------------------------------- small DSL

QProduct mono(long e, const Rational &c = 1)
{
    QProduct p;
    p.times(Monomial::q(e, c));
    return p;
}

// (s q^{e1}, s q^{e2}, ...; q^r)_inf
QProduct inf(std::initializer_list<long> exps, long r, long s = 1)
{
    QProduct p;
    for (long e : exps) {
        p.times_poch_inf(Monomial::q(e, s), QBase{r});
    }
    return p;
}

// (s q^e; q^r)_n
QProduct fin(long e, long r, long n, long s = 1)
{
    QProduct p;
    p.times_poch(Monomial::q(e, s), n, QBase{r});
    return p;
}

QProduct inv(const QProduct &p)
{
    QProduct o;
    o.over(p);
    return o;
}

QProduct operator*(QProduct a, const QProduct &b)
{
    a.times(b);
    return a;
}

long sgn_pow(long k) { return k % 2 == 0 ? 1 : -1; }

struct RhsTerm {
    LaurentSeries poly;
    QProduct product;
};

LaurentSeries evaluate_rhs(const std::vector<RhsTerm> &terms, long order)
{
    LaurentSeries total = LaurentSeries::zero(Precision::at(order));
    for (const auto &t : terms) {
        if (t.poly.is_zero() || t.product.is_zero()) {
            continue;
        }
        LaurentSeries p = t.product.evaluate(order - t.poly.valuation());
        total += truncate(t.poly * p, order);
    }
    return total;
}

long rhs_floor(const std::vector<RhsTerm> &terms)
{
    long lo = 0;
    for (const auto &t : terms) {
        if (!t.poly.is_zero() && !t.product.is_zero()) {
            lo = std::min(lo, t.poly.valuation() + t.product.valuation());
        }
    }
    return lo;
}

struct Shape {
    SumShape s;
    Shape(long a, long b, long d = 1, long ratio = 1)
    {
        s.exponent = Quadratic{a, b, 0, d};
        s.ratio = ratio;
    }
    Shape &num(long e, long r, long offset = 0, long sign = 1)
    {
        s.pochs.push_back({Monomial::q(e, sign), QBase{r}, offset, false});
        return *this;
    }
    Shape &den(long e, long r, long offset = 0, long sign = 1)
    {
        s.pochs.push_back({Monomial::q(e, sign), QBase{r}, offset, true});
        return *this;
    }
    // (1 - q^{first + step n})
    Shape &linear(long first, long step)
    {
        s.linears.push_back({Monomial::q(first), step});
        return *this;
    }
};

struct CorollaryDef {
    std::string id;
    std::string family;
    std::string description;
    std::string anchor;
    long m_lo;
    std::function<SumShape(long m)> lhs;
    std::function<std::vector<RhsTerm>(long m, const PolynomialPair &ab)> rhs;
};

LaurentSeries neg(const LaurentSeries &f) { return -f; }

// The recurring product pairs.
QProduct g5a() { return inf({1, 4}, 5); }
QProduct g5b() { return inf({2, 3}, 5); }
QProduct gg8a() { return inf({3, 4, 5}, 8); }
QProduct gg8b() { return inf({1, 4, 7}, 8); }
QProduct t12a() { return inf({2, 10, 12}, 12); }
QProduct t12b() { return inf({6, 6, 12}, 12); }
QProduct t20a() { return inf({4, 16, 20}, 20); }
QProduct t20b() { return inf({8, 12, 20}, 20); }

// (-1)^{m-1} q^{-k}
QProduct sign_shift(long m, long k) { return mono(-k, sgn_pow(m - 1)); }

std::vector<CorollaryDef> build_defs()
{
    std::vector<CorollaryDef> d;
    auto tri = [](long m) { return m * (m - 1) / 2; };

    // ---- first-family, phi specializations
    d.push_back({"c1", "c1", "m-version of the Rogers-Ramanujan identities", "Rogers-Ramanujan", 0,
                 [](long m) { return Shape(1, m).den(1, 1).s; },
                 [tri](long m, const PolynomialPair &ab) {
                     QProduct pre = mono(-tri(m), sgn_pow(m));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(g5a())}, {neg(ab.b), pre * inv(g5b())}};
                 }});
    d.push_back({"c2", "c2", "m-version with (-q;q)_n and a half-exponent quadratic", "Slater A.8 / A.13", 0,
                 [](long m) { return Shape(1, 2 * m - 1, 2).num(1, 1, 0, -1).den(1, 1).s; },
                 [tri](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, tri(m));
                     return std::vector<RhsTerm>{
                         {ab.a - ab.b, pre * inf({4}, 4) * inv(inf({1}, 1))},
                         {neg(ab.b), pre * inf({1}, 2, -1) * inv(inf({1}, 2))}};
                 }});
    d.push_back({"c3", "c3", "m-version over (q^4;q^4)_n", "Slater A.16 / A.20", 0,
                 [](long m) { return Shape(1, 2 * m).den(4, 4).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, 0) * inv(inf({2}, 2, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(g5b())}, {neg(ab.b), pre * inv(g5a())}};
                 }});
    d.push_back({"c4", "c4", "m-version of the Goellnitz-Gordon identities", "Goellnitz-Gordon", 0,
                 [](long m) { return Shape(1, 2 * m).num(1, 2, 0, -1).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, m * (m - 1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(gg8a())}, {neg(ab.b), pre * inv(gg8b())}};
                 }});

    // ---- Watson transforms of the above
    d.push_back({"c1w", "c1", "Watson transform of c1", "c1 via Watson", 0,
                 [](long m) { return Shape(5, 4 * m - 1, 2, -1).linear(m, 2).num(1, 1, m - 1).den(1, 1).s; },
                 [tri](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, tri(m));
                     return std::vector<RhsTerm>{{ab.b, pre * inf({1, 4, 5}, 5)},
                                                 {neg(ab.a), pre * inf({2, 3, 5}, 5)}};
                 }});
    d.push_back({"c2w", "c2", "Watson transform of c2", "c2 via Watson", 0,
                 [](long m) {
                     return Shape(2, 2 * m - 1, 1, -1)
                         .linear(m, 2)
                         .num(1, 1, 0, -1)
                         .num(1, 1, m - 1)
                         .den(1, 1)
                         .den(1, 1, m - 1, -1)
                         .s;
                 },
                 [tri](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, tri(m));
                     return std::vector<RhsTerm>{
                         {ab.a - ab.b, pre * inf({4}, 4) * inv(inf({1}, 1, -1))},
                         {neg(ab.b), pre * inf({2}, 2) * inv(inf({2}, 2, -1))}};
                 }});
    d.push_back({"c3w", "c3", "Watson transform of c3", "c3 via Watson", 0,
                 [](long m) { return Shape(3, 2 * m, 1, -1).den(1, 2, m, -1).den(4, 4).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, 0) * inv(inf({1}, 1, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(g5b())}, {neg(ab.b), pre * inv(g5a())}};
                 }});
    d.push_back({"c4w", "c4", "Watson transform of c4", "c4 via Watson", 0,
                 [](long m) {
                     return Shape(4, 4 * m - 1, 1, -1)
                         .linear(2 * m, 4)
                         .num(1, 2, 0, -1)
                         .num(2, 2, m - 1)
                         .den(2, 2)
                         .den(1, 2, m, -1)
                         .s;
                 },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, m * (m - 1));
                     return std::vector<RhsTerm>{{ab.a, pre * inf({1, 7, 8}, 8)},
                                                 {neg(ab.b), pre * inf({3, 5, 8}, 8)}};
                 }});

    // ---- Heine transforms
    d.push_back({"c2h", "c2", "Heine transform of c2", "c2 via Heine", 0,
                 [](long m) { return Shape(0, 1, 1, -1).den(1, 1, m - 1, -1).den(1, 1).s; },
                 [tri](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, tri(m));
                     return std::vector<RhsTerm>{{ab.a - ab.b, pre * inv(inf({1}, 2, -1))},
                                                 {neg(ab.b), pre * inv(inf({2}, 2, -1))}};
                 }});
    d.push_back({"c3h", "c3", "Heine transform of c3", "c3 via Heine", 0,
                 [](long m) { return Shape(1, 1).den(1, 2, m, -1).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, 0) * inv(inf({1}, 2, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(g5b())}, {neg(ab.b), pre * inv(g5a())}};
                 }});
    d.push_back({"c4h", "c4", "Heine transform of c4", "c4 via Heine", 0,
                 [](long m) { return Shape(0, 1, 1, -1).den(1, 2, m, -1).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, m * (m - 1)) * inv(inf({1, 1}, 2, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(gg8a())}, {neg(ab.b), pre * inv(gg8b())}};
                 }});

    // ---- Ramanujan transform
    d.push_back({"c2m2", "c2", "Ramanujan transform of c2", "c2 via Ramanujan", 0,
                 [](long m) { return Shape(1, m).den(1, 1, m - 1, -1).den(1, 1).s; },
                 [tri](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, tri(m));
                     return std::vector<RhsTerm>{{ab.a - ab.b, pre * inf({2}, 2, -1)},
                                                 {neg(ab.b), pre * inf({1}, 2, -1)}};
                 }});

    // ---- second family, Phi specializations
    d.push_back({"cc1", "cc1", "m-version of the Rogers mod 20 identities", "Slater A.79 / A.96", 0,
                 [](long m) { return Shape(1, 2 * m).den(1, 2, m).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, 2 * m * (m - 1)) * inf({1}, 2, -1) * inv(inf({2}, 2));
                     return std::vector<RhsTerm>{{ab.a, pre * t20a()}, {neg(ab.b), pre * t20b()}};
                 }});
    d.push_back({"cc2", "cc2", "m-version of the mod 8 identities with q^{2n^2}", "Slater A.38 / A.39", 0,
                 [](long m) { return Shape(2, 2 * m).den(1, 2, m).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, m * (m - 1)) * inv(inf({2}, 2));
                     return std::vector<RhsTerm>{{ab.a, pre * inf({1, 7}, 8, -1) * inf({8}, 8)},
                                                 {neg(ab.b), pre * inf({3, 5}, 8, -1) * inf({8}, 8)}};
                 }});
    d.push_back({"cc3", "cc3", "m-version of the mod 12 identities", "Slater A.29 / A.50", 0,
                 [](long m) { return Shape(1, 2 * m).num(1, 2, 0, -1).den(1, 2, m).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, m * (m - 1)) * inv(fin(2, 2, m - 1, -1)) * inv(inf({1}, 1));
                     return std::vector<RhsTerm>{{ab.a, pre * t12a()}, {neg(ab.b), pre * t12b()}};
                 }});
    d.push_back({"cc1w", "cc1", "Watson transform of cc1", "cc1 via Watson", 0,
                 [](long m) { return Shape(3, 4 * m - 1).den(2, 4, m).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, 2 * m * (m - 1)) * inv(inf({2}, 2));
                     return std::vector<RhsTerm>{{ab.a, pre * t20a()}, {neg(ab.b), pre * t20b()}};
                 }});
    d.push_back({"cc3w", "cc3", "Watson transform of cc3", "cc3 via Watson", 0,
                 [](long m) {
                     return Shape(3, 4 * m - 1).linear(2 * m, 4).num(2, 4).num(2, 2, m - 1).den(2, 4, m).den(2, 2).s;
                 },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, m * (m - 1)) * inf({2}, 2, -1) * inv(fin(2, 2, m - 1, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * t12a()}, {neg(ab.b), pre * t12b()}};
                 }});
    d.push_back({"cc3h", "cc3h", "Heine transform of cc3", "cc3 via Heine", 0,
                 [](long m) { return Shape(0, 1).num(2, 2, m - 1, -1).den(1, 2, m).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, m * (m - 1)) * inf({1}, 1, -1) * inv(inf({1}, 1));
                     return std::vector<RhsTerm>{{ab.a, pre * t12a()}, {neg(ab.b), pre * t12b()}};
                 }});
    d.push_back({"cc3r", "cc3", "Ramanujan transform of cc3", "cc3 via Ramanujan", 0,
                 [](long m) { return Shape(2, 2 * m).num(2, 2, m - 1, -1).den(2, 4, m).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = sign_shift(m, m * (m - 1)) * inf({2}, 2, -1) * inv(inf({2}, 2));
                     return std::vector<RhsTerm>{{ab.a, pre * t12a()}, {neg(ab.b), pre * t12b()}};
                 }});

    // ---- negative m
    d.push_back({"cm1", "cm1", "negative-m version of the Rogers-Ramanujan identities", "Rogers-Ramanujan, m < 0", 1,
                 [](long m) { return Shape(1, -m).den(1, 1).s; },
                 [](long, const PolynomialPair &ab) {
                     return std::vector<RhsTerm>{{ab.a, inv(g5a())}, {ab.b, inv(g5b())}};
                 }});
    d.push_back({"cm4", "cm4", "negative-m version of the Goellnitz-Gordon identities", "Goellnitz-Gordon, m < 0", 1,
                 [](long m) { return Shape(1, -2 * m).num(1, 2, 0, -1).den(2, 2).s; },
                 [](long, const PolynomialPair &ab) {
                     return std::vector<RhsTerm>{{ab.a, inv(gg8a())}, {ab.b, inv(gg8b())}};
                 }});
    d.push_back({"c3m", "c3m", "negative-m version of c3", "c3, m < 0", 1,
                 [](long m) { return Shape(1, -2 * m).den(4, 4).s; },
                 [](long, const PolynomialPair &ab) {
                     QProduct pre = inv(inf({2}, 2, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(g5b())}, {ab.b, pre * inv(g5a())}};
                 }});
    d.push_back({"c3wm", "c3m", "Watson transform of c3m", "c3m via Watson", 1,
                 [](long m) { return Shape(3, -2 * m, 1, -1).den(1 - 2 * m, 2, 0, -1).den(4, 4).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = mono(m * m) * inv(fin(1, 2, m, -1)) * inv(inf({1}, 1, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(g5b())}, {ab.b, pre * inv(g5a())}};
                 }});
    d.push_back({"c3hm", "c3m", "Heine transform of c3m", "c3m via Heine", 1,
                 [](long m) { return Shape(1, 1).den(1 - 2 * m, 2, 0, -1).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = mono(m * m) * inv(fin(1, 2, m, -1)) * inv(inf({1}, 2, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(g5b())}, {ab.b, pre * inv(g5a())}};
                 }});
    d.push_back({"cm4r", "cm4", "Ramanujan transform of cm4", "cm4 via Ramanujan", 1,
                 [](long m) { return Shape(2, -2 * m).den(1 - 2 * m, 2, 0, -1).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = mono(m * m) * inv(fin(1, 2, m, -1)) * inv(inf({1}, 2, -1));
                     return std::vector<RhsTerm>{{ab.a, pre * inv(gg8a())}, {ab.b, pre * inv(gg8b())}};
                 }});
    d.push_back({"cc1m", "cc1m", "negative-m version of cc1", "cc1, m < 0", 1,
                 [](long m) { return Shape(1, -2 * m).den(1 - 2 * m, 2).den(2, 2).s; },
                 [](long m, const PolynomialPair &ab) {
                     QProduct pre = mono(m * m, sgn_pow(m)) * inf({1}, 2, -1) * inv(fin(1, 2, m)) * inv(inf({2}, 2));
                     return std::vector<RhsTerm>{{ab.a, pre * t20a()}, {ab.b, pre * t20b()}};
                 }});
    return d;
}

const std::vector<CorollaryDef> &defs()
{
    static const std::vector<CorollaryDef> all = build_defs();
    return all;
}

const CorollaryDef &find_def(const std::string &id)
{
    for (const auto &d : defs()) {
        if (d.id == id) {
            return d;
        }
    }
    throw UnknownIdentity("unknown identity '" + id + "'");
}

// ---------------------------------------------------------------- Slater inputs

struct SlaterDef {
    std::string tag;
    std::string description;
    std::function<SumShape()> sum;
    std::function<std::vector<QProduct>()> products;
};

std::vector<SlaterDef> build_slater()
{
    std::vector<SlaterDef> d;
    auto half = [](SumShape s) {
        s.lead = Rational(1, 2);
        return s;
    };
    d.push_back({"A.8", "sum (-q;q)_n q^{n(n-1)/2}/(q;q)_n, two products",
                 [] { return Shape(1, -1, 2).num(1, 1, 0, -1).den(1, 1).s; },
                 [] {
                     return std::vector<QProduct>{inf({4}, 4) * inv(inf({1}, 1)), inf({1}, 2, -1) * inv(inf({1}, 2))};
                 }});
    d.push_back({"A.13", "sum (-q;q)_n q^{n(n+1)/2}/(q;q)_n",
                 [] { return Shape(1, 1, 2).num(1, 1, 0, -1).den(1, 1).s; },
                 [] { return std::vector<QProduct>{inf({4}, 4) * inv(inf({1}, 1))}; }});
    d.push_back({"A.16", "sum q^{n^2}/(2 (q^4;q^4)_n)", [half] { return half(Shape(1, 0).den(4, 4).s); },
                 [] {
                     return std::vector<QProduct>{QProduct::constant(Rational(1, 2)) * inv(g5a()) *
                                                  inv(inf({2}, 2, -1))};
                 }});
    d.push_back({"A.20", "sum q^{n^2+2n}/(2 (q^4;q^4)_n)", [half] { return half(Shape(1, 2).den(4, 4).s); },
                 [] {
                     return std::vector<QProduct>{QProduct::constant(Rational(1, 2)) * inv(g5b()) *
                                                  inv(inf({2}, 2, -1))};
                 }});
    d.push_back({"A.34", "sum (-q;q^2)_n q^{n^2}/(q^2;q^2)_n", [] { return Shape(1, 0).num(1, 2, 0, -1).den(2, 2).s; },
                 [] { return std::vector<QProduct>{inv(gg8b())}; }});
    d.push_back({"A.36", "sum (-q;q^2)_n q^{n^2+2n}/(q^2;q^2)_n",
                 [] { return Shape(1, 2).num(1, 2, 0, -1).den(2, 2).s; },
                 [] { return std::vector<QProduct>{inv(gg8a())}; }});
    d.push_back({"A.79", "sum q^{n^2}/(q,q^2;q^2)_n", [] { return Shape(1, 0).den(1, 2).den(2, 2).s; },
                 [] { return std::vector<QProduct>{t20b() * inf({1}, 2, -1) * inv(inf({2}, 2))}; }});
    d.push_back({"A.96", "sum q^{n^2+2n}/(q^3,q^2;q^2)_n", [] { return Shape(1, 2).den(3, 2).den(2, 2).s; },
                 [] {
                     QProduct p;
                     p.times_factor(Monomial::q(1));
                     return std::vector<QProduct>{p * t20a() * inf({1}, 2, -1) * inv(inf({2}, 2))};
                 }});
    d.push_back({"A.38", "sum q^{2n^2}/(q,q^2;q^2)_n", [] { return Shape(2, 0).den(1, 2).den(2, 2).s; },
                 [] { return std::vector<QProduct>{inf({3, 5}, 8, -1) * inf({8}, 8) * inv(inf({2}, 2))}; }});
    d.push_back({"A.39", "sum q^{2n^2+2n}/(q^3,q^2;q^2)_n", [] { return Shape(2, 2).den(3, 2).den(2, 2).s; },
                 [] {
                     QProduct p;
                     p.times_factor(Monomial::q(1));
                     return std::vector<QProduct>{p * inf({1, 7}, 8, -1) * inf({8}, 8) * inv(inf({2}, 2))};
                 }});
    d.push_back({"A.29", "sum (-q;q^2)_n q^{n^2}/(q,q^2;q^2)_n",
                 [] { return Shape(1, 0).num(1, 2, 0, -1).den(1, 2).den(2, 2).s; },
                 [] { return std::vector<QProduct>{t12b() * inv(inf({1}, 1))}; }});
    d.push_back({"A.50", "sum (-q;q^2)_n q^{n^2+2n}/(q^3,q^2;q^2)_n",
                 [] { return Shape(1, 2).num(1, 2, 0, -1).den(3, 2).den(2, 2).s; },
                 [] {
                     QProduct p;
                     p.times_factor(Monomial::q(1));
                     return std::vector<QProduct>{p * t12a() * inv(inf({1}, 1))};
                 }});
    return d;
}

const std::vector<SlaterDef> &slater_defs()
{
    static const std::vector<SlaterDef> all = build_slater();
    return all;
}

} // namespace

const std::vector<std::string> &corollary_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto &d : defs()) {
            out.push_back(d.id);
        }
        return out;
    }();
    return ids;
}

const std::vector<std::string> &slater_tags()
{
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> out;
        for (const auto &d : slater_defs()) {
            out.push_back(d.tag);
        }
        return out;
    }();
    return tags;
}

IdentitySpec corollary_spec(const std::string &id, std::optional<Perturbation> fault)
{
    const CorollaryDef &def = find_def(id);
    IdentitySpec spec;
    spec.id = def.id;
    spec.description = def.description;
    spec.anchor = def.anchor;
    spec.kind = EntryKind::corollary;
    spec.m_domain = MDomain{def.m_lo, std::nullopt};

    auto polys = [family = def.family, fault](long m) {
        PolynomialPair ab = family_polynomials(family, m);
        if (fault) {
            (fault->on_b ? ab.b : ab.a) += LaurentSeries::monomial(fault->delta);
        }
        return ab;
    };
    const CorollaryDef *dp = &def;
    spec.equations = [dp, polys](long m, long order) {
        Equation eq;
        eq.label = dp->id;
        eq.lhs = q_sum(make_term_builder(dp->lhs(m)), order);
        eq.rhs = evaluate_rhs(dp->rhs(m, polys(m)), order);
        eq.compare_to = Precision::at(order);
        return std::vector<Equation>{std::move(eq)};
    };
    spec.laurent_floor = [dp, polys](long m) {
        long lhs = make_term_builder(dp->lhs(m)).val_lb(0);
        return std::min(lhs, rhs_floor(dp->rhs(m, polys(m))));
    };
    return spec;
}

IdentitySpec slater_spec(const std::string &tag, std::optional<Monomial> fault)
{
    const SlaterDef *def = nullptr;
    for (const auto &d : slater_defs()) {
        if (d.tag == tag) {
            def = &d;
        }
    }
    if (!def) {
        throw UnknownIdentity("unknown Slater tag '" + tag + "'");
    }
    IdentitySpec spec;
    spec.id = def->tag;
    spec.description = def->description;
    spec.anchor = "classical sum = product identity " + def->tag;
    spec.kind = EntryKind::slater;
    spec.m_domain = MDomain{0, 0};
    spec.equations = [def, fault](long, long order) {
        Equation eq;
        eq.label = def->tag;
        eq.lhs = q_sum(make_term_builder(def->sum()), order);
        std::vector<RhsTerm> terms;
        for (auto &p : def->products()) {
            terms.push_back({LaurentSeries::constant(1), p});
        }
        if (fault) {
            terms.push_back({LaurentSeries::monomial(*fault), QProduct{}});
        }
        eq.rhs = evaluate_rhs(terms, order);
        eq.compare_to = Precision::at(order);
        return std::vector<Equation>{std::move(eq)};
    };
    spec.laurent_floor = [](long) { return 0L; };
    return spec;
}

VerificationReport verify_slater(const std::string &tag, long order) { return verify_spec(slater_spec(tag), 0, order); }

} // namespace qverify
