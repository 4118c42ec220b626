#include "qverify/polyfam.hpp"

#include <functional>
#include <initializer_list>

namespace qverify {

namespace {

using Binom = std::pair<long, long>;

bool binom_nonzero(const Binom &b) { return b.second >= 0 && b.first >= 0 && b.second <= b.first; }

// acc += mono * prod of Gaussian binomials
void add_term(LaurentSeries &acc, const Monomial &mono, std::initializer_list<Binom> binoms, GaussianTable &table)
{
    if (mono.is_zero()) {
        return;
    }
    for (const auto &b : binoms) {
        if (!binom_nonzero(b)) {
            return;
        }
    }
    LaurentSeries prod = LaurentSeries::constant(1);
    for (const auto &b : binoms) {
        prod = prod * table(b.first, b.second);
    }
    acc += prod * mono;
}

Monomial qpow(long e, long sign = 1) { return Monomial::q(e, sign); }

long sign_of(long k) { return k % 2 == 0 ? 1 : -1; }

LaurentSeries ef_sum(const SeriesArgs &p, long m, long drop, bool f_shape)
{
    LaurentSeries acc;
    if (m - drop < 0) {
        return acc;
    }
    const long r = p.base.r();
    GaussianTable &t = gaussian_table(p.base);
    for (long n = 0; n < m; ++n) {
        for (long l = 0; l <= n; ++l) {
            for (long j = 0; j < m; ++j) {
                long qe = (f_shape ? n * (n + 3) / 2 : n * (n + 1) / 2) + l * (l - 1) / 2;
                Monomial mono = p.x.pow(n) * p.y.pow(j) * p.z.pow(l) * qpow(r * qe);
                add_term(acc, mono, {{n + j, j}, {m - drop - j - l, n}, {n, l}}, t);
            }
        }
    }
    return acc;
}

LaurentSeries gh_sum(const SeriesArgs &p, long m, long drop, bool h_shape)
{
    LaurentSeries acc;
    const long k = m - drop;
    if (k < 0) {
        return acc;
    }
    const long r = p.base.r();
    GaussianTable &t = gaussian_table(p.base);
    for (long n = 0; n <= 2 * m + 1; ++n) {
        for (long j = 0; j <= n; ++j) {
            for (long l = 0; l <= n - j; ++l) {
                long qe = (h_shape ? n * (n + 3) / 2 : n * (n + 1) / 2) + l * (l - 1) / 2;
                Monomial mono = p.x.pow(n) * p.y.pow(j) * p.z.pow(l) * qpow(r * qe);
                add_term(acc, mono, {{k - n + j, j}, {k - j - l, n - j - l}, {k - n, l}}, t);
            }
        }
    }
    return acc;
}

} // namespace

SeriesArgs shift_x(const SeriesArgs &p, long k)
{
    SeriesArgs s = p;
    s.x = p.x.shifted(p.base.r() * k);
    return s;
}

LaurentSeries e_poly(const SeriesArgs &p, long m) { return ef_sum(p, m, 1, false); }
LaurentSeries f_poly(const SeriesArgs &p, long m) { return ef_sum(p, m, 2, true); }
LaurentSeries g_poly(const SeriesArgs &p, long m) { return gh_sum(p, m, 1, false); }
LaurentSeries h_poly(const SeriesArgs &p, long m) { return gh_sum(p, m, 2, true); }

LaurentSeries e_by_recurrence(const SeriesArgs &p, long m)
{
    if (m <= 0) {
        return LaurentSeries::zero();
    }
    const long r = p.base.r();
    const LaurentSeries y = LaurentSeries::monomial(p.y);
    const LaurentSeries one = LaurentSeries::constant(1);
    LaurentSeries prev = LaurentSeries::zero();
    LaurentSeries cur = one;
    for (long k = 1; k < m; ++k) {
        LaurentSeries bk = y + one + LaurentSeries::monomial(p.x.shifted(r * k));
        LaurentSeries ak = -y + LaurentSeries::monomial((p.z * p.x).shifted(r * (k - 1)));
        LaurentSeries next = bk * cur + ak * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------- H and H1 convergents

LaurentSeries h_numerator(const FractionArgs &p, long N)
{
    LaurentSeries acc;
    if (N < 1) {
        return N == 0 ? acc : LaurentSeries::constant(1);
    }
    GaussianTable &t = gaussian_table(QBase{});
    for (long n = 0; n < N; ++n) {
        for (long j = 0; j < N; ++j) {
            for (long l = 0; l <= n; ++l) {
                long bexp = N - 1 - n - j - l;
                if (bexp < 0) {
                    continue;
                }
                Monomial mono = p.b.pow(bexp) * p.d.pow(n - l) * p.a.pow(j) * p.c.pow(l) *
                                qpow(n * (n + 1) / 2 + l * (l - 1) / 2 + l);
                add_term(acc, mono, {{n + j, j}, {N - 1 - j - l, n}, {n, l}}, t);
            }
        }
    }
    return acc;
}

LaurentSeries h_denominator(const FractionArgs &p, long N)
{
    if (N < 1) {
        return N == 0 ? LaurentSeries::constant(1) : LaurentSeries::zero();
    }
    LaurentSeries tail;
    GaussianTable &t = gaussian_table(QBase{});
    for (long n = 0; n + 1 < N; ++n) {
        for (long j = 0; j + 1 < N; ++j) {
            for (long l = 0; l <= n; ++l) {
                long bexp = N - 2 - n - j - l;
                if (bexp < 0) {
                    continue;
                }
                Monomial mono = p.b.pow(bexp) * p.d.pow(n - l) * p.a.pow(j) * p.c.pow(l) *
                                qpow(n * (n + 3) / 2 + l * (l - 1) / 2 + l);
                add_term(tail, mono, {{n + j, j}, {N - 2 - j - l, n}, {n, l}}, t);
            }
        }
    }
    LaurentSeries lead = LaurentSeries::monomial(p.c.shifted(1)) - LaurentSeries::monomial(p.a * p.b);
    return h_numerator(p, N) + lead * tail;
}

LaurentSeries h1_numerator(const FractionArgs &p, long N)
{
    LaurentSeries acc;
    if (N < 1) {
        return N == 0 ? acc : LaurentSeries::constant(1);
    }
    GaussianTable &t = gaussian_table(QBase{});
    for (long n = 0; n < N; ++n) {
        for (long j = 0; j <= n; ++j) {
            for (long l = 0; l <= n - j; ++l) {
                long dexp = N - 1 - n - l;
                if (dexp < 0) {
                    continue;
                }
                Monomial mono = p.a.pow(j) * p.b.pow(n - j - l) * p.c.pow(l) * p.d.pow(dexp) *
                                qpow(n * (n + 1) / 2 + l * (l - 1) / 2);
                add_term(acc, mono, {{N - 1 - n + j, j}, {N - 1 - j - l, n - j - l}, {N - 1 - n, l}}, t);
            }
        }
    }
    return acc;
}

LaurentSeries h1_denominator(const FractionArgs &p, long N)
{
    if (N < 1) {
        return N == 0 ? LaurentSeries::constant(1) : LaurentSeries::zero();
    }
    LaurentSeries acc = h1_numerator(p, N);
    GaussianTable &t = gaussian_table(QBase{});
    for (long n = 0; n < N; ++n) {
        for (long j = 0; j <= n + 1; ++j) {
            for (long l = 0; l <= n + 1 - j; ++l) {
                long dexp = N - 2 - n - l;
                long bexp = n - j - l;
                if (dexp < 0 || bexp < 0) {
                    continue;
                }
                Monomial common = p.a.pow(j) * p.c.pow(l) * p.d.pow(dexp) *
                                  qpow((n + 1) * (n + 2) / 2 + l * (l - 1) / 2);
                Monomial first = p.c.shifted(-1) * p.b.pow(bexp) * common;
                Monomial second = -(p.a * p.b.pow(bexp + 1)) * common;
                std::initializer_list<Binom> bs = {{N - 2 - n + j, j}, {N - 2 - j - l, n - j - l}, {N - 2 - n, l}};
                add_term(acc, first, bs, t);
                add_term(acc, second, bs, t);
            }
        }
    }
    return acc;
}

// ---------------------------------------------------------------- corollary families

namespace {

using Family = std::function<PolynomialPair(long m)>;

// Sums over n, j (or l) and optionally a third index, all in [0, 2m + 2).
LaurentSeries sum2(long m, const std::function<void(LaurentSeries &, long, long, GaussianTable &)> &body, QBase base)
{
    LaurentSeries acc;
    GaussianTable &t = gaussian_table(base);
    for (long n = 0; n < 2 * m + 2; ++n) {
        for (long j = 0; j < 2 * m + 2; ++j) {
            body(acc, n, j, t);
        }
    }
    return acc;
}

const QBase kBase1{1};
const QBase kBase2{2};

PolynomialPair c1_family(long m)
{
    if (m == 0) {
        return {LaurentSeries::constant(1), LaurentSeries::zero()};
    }
    LaurentSeries a, b;
    GaussianTable &t = gaussian_table(kBase1);
    for (long n = 0; n <= m; ++n) {
        add_term(a, qpow(n * n + n), {{m - 2 - n, n}}, t);
        add_term(b, qpow(n * n), {{m - 1 - n, n}}, t);
    }
    return {a, b};
}

PolynomialPair c2_family(long m)
{
    if (m == 0) {
        return {LaurentSeries::zero(), LaurentSeries::constant(1)};
    }
    auto a = sum2(
        m,
        [m](LaurentSeries &acc, long n, long l, GaussianTable &t) {
            add_term(acc, qpow(n * (n - 1) / 2 + l * (l + 1) / 2), {{m - 1 - l, n}, {n, l}}, t);
        },
        kBase1);
    auto b = sum2(
        m,
        [m](LaurentSeries &acc, long n, long l, GaussianTable &t) {
            add_term(acc, qpow(n * (n + 1) / 2 + l * (l + 1) / 2), {{m - 2 - l, n}, {n, l}}, t);
        },
        kBase1);
    return {a, b};
}

PolynomialPair c3_family(long m)
{
    if (m == 0) {
        return {LaurentSeries::zero(), LaurentSeries::constant(1)};
    }
    auto a = sum2(
        m,
        [m](LaurentSeries &acc, long n, long j, GaussianTable &t) {
            add_term(acc, qpow(n * n, sign_of(j)), {{m - 1 - j, n}, {n + j, j}}, t);
        },
        kBase2);
    auto b = sum2(
        m,
        [m](LaurentSeries &acc, long n, long j, GaussianTable &t) {
            add_term(acc, qpow(n * n + 2 * n, sign_of(j)), {{m - 2 - j, n}, {n + j, j}}, t);
        },
        kBase2);
    return {a, b};
}

PolynomialPair c4_family(long m)
{
    if (m == 0) {
        return {LaurentSeries::zero(), LaurentSeries::constant(1)};
    }
    auto a = sum2(
        m,
        [m](LaurentSeries &acc, long n, long l, GaussianTable &t) {
            add_term(acc, qpow(n * n + l * l), {{m - 1 - l, n}, {n, l}}, t);
        },
        kBase2);
    auto b = sum2(
        m,
        [m](LaurentSeries &acc, long n, long l, GaussianTable &t) {
            add_term(acc, qpow(n * n + 2 * n + l * l), {{m - 2 - l, n}, {n, l}}, t);
        },
        kBase2);
    return {a, b};
}

PolynomialPair cc1_family(long m)
{
    if (m == 0) {
        return {LaurentSeries::zero(), LaurentSeries::constant(1)};
    }
    auto a = sum2(
        m,
        [m](LaurentSeries &acc, long n, long j, GaussianTable &t) {
            add_term(acc, qpow(n * n, sign_of(j)), {{m - 1 - n + j, j}, {m - 1 - j, n - j}}, t);
        },
        kBase2);
    auto b = sum2(
        m,
        [m](LaurentSeries &acc, long n, long j, GaussianTable &t) {
            add_term(acc, qpow(n * n + 2 * n, sign_of(j)), {{m - 2 - n + j, j}, {m - 2 - j, n - j}}, t);
        },
        kBase2);
    return {a, b};
}

PolynomialPair cc2_family(long m)
{
    if (m == 0) {
        return {LaurentSeries::zero(), LaurentSeries::constant(1)};
    }
    auto a = sum2(
        m,
        [m](LaurentSeries &acc, long n, long l, GaussianTable &t) {
            add_term(acc, qpow(n * n + l * l, sign_of(n - l)), {{m - 1 - l, n - l}, {m - 1 - n, l}}, t);
        },
        kBase2);
    auto b = sum2(
        m,
        [m](LaurentSeries &acc, long n, long l, GaussianTable &t) {
            add_term(acc, qpow(n * n + 2 * n + l * l, sign_of(n - l)), {{m - 2 - l, n - l}, {m - 2 - n, l}}, t);
        },
        kBase2);
    return {a, b};
}

// Triple sums of the cc3 shape with k = m (for a) or k = m - 1 (for b).
LaurentSeries cc3_sum(long k, long extra_linear, bool full_sign)
{
    LaurentSeries acc;
    if (k < 0) {
        return acc;
    }
    GaussianTable &t = gaussian_table(kBase2);
    for (long n = 0; n < 2 * k + 2; ++n) {
        for (long j = 0; j <= n; ++j) {
            for (long l = 0; l <= n - j; ++l) {
                long s = full_sign ? sign_of(j + l + n) : sign_of(j);
                add_term(acc, qpow(n * n + l * l + extra_linear * n, s),
                         {{k - 1 - n + j, j}, {k - 1 - j - l, n - j - l}, {k - 1 - n, l}}, t);
            }
        }
    }
    return acc;
}

PolynomialPair cc3_family_impl(long m, bool full_sign)
{
    if (m == 0) {
        return {LaurentSeries::zero(), LaurentSeries::constant(Rational(1, 2))};
    }
    return {cc3_sum(m, 0, full_sign), cc3_sum(m - 1, 2, full_sign)};
}

PolynomialPair cm1_family(long m)
{
    LaurentSeries a, b;
    GaussianTable &t = gaussian_table(kBase1);
    for (long n = 0; n <= m + 1; ++n) {
        add_term(a, qpow(n * n - m * n), {{m - n, n}}, t);
        add_term(b, qpow(n * n - m * n), {{m - 1 - n, n}}, t);
    }
    return {a, b};
}

PolynomialPair cm4_family(long m)
{
    auto a = sum2(
        m,
        [m](LaurentSeries &acc, long n, long l, GaussianTable &t) {
            add_term(acc, qpow(n * n + l * l - 2 * m * n), {{m - 1 - l, n}, {n, l}}, t);
        },
        kBase2);
    auto b = sum2(
        m,
        [m](LaurentSeries &acc, long n, long l, GaussianTable &t) {
            add_term(acc, qpow(n * n + l * l - 2 * m * n), {{m - l, n}, {n, l}}, t);
        },
        kBase2);
    return {a, b};
}

PolynomialPair c3m_family(long m)
{
    auto a = sum2(
        m,
        [m](LaurentSeries &acc, long n, long j, GaussianTable &t) {
            add_term(acc, qpow(n * n - 2 * m * n, sign_of(j)), {{m - 1 - j, n}, {n + j, j}}, t);
        },
        kBase2);
    auto b = sum2(
        m,
        [m](LaurentSeries &acc, long n, long j, GaussianTable &t) {
            add_term(acc, qpow(n * n - 2 * m * n, sign_of(j)), {{m - j, n}, {n + j, j}}, t);
        },
        kBase2);
    return {a, b};
}

PolynomialPair cc1m_family(long m)
{
    auto a = sum2(
        m,
        [m](LaurentSeries &acc, long n, long j, GaussianTable &t) {
            add_term(acc, qpow(n * n - 2 * m * n, sign_of(j)), {{m - 1 - n + j, j}, {m - 1 - j, n - j}}, t);
        },
        kBase2);
    auto b = sum2(
        m,
        [m](LaurentSeries &acc, long n, long j, GaussianTable &t) {
            add_term(acc, qpow(n * n - 2 * m * n, sign_of(j)), {{m - n + j, j}, {m - j, n - j}}, t);
        },
        kBase2);
    return {a, b};
}

const std::vector<std::pair<std::string, Family>> &families()
{
    static const std::vector<std::pair<std::string, Family>> all = {
        {"c1", c1_family},
        {"c2", c2_family},
        {"c3", c3_family},
        {"c4", c4_family},
        {"cc1", cc1_family},
        {"cc2", cc2_family},
        {"cc3", [](long m) { return cc3_family_impl(m, false); }},
        {"cc3h", [](long m) { return cc3_family_impl(m, true); }},
        {"cm1", cm1_family},
        {"cm4", cm4_family},
        {"c3m", c3m_family},
        {"cc1m", cc1m_family},
    };
    return all;
}

} // namespace

const std::vector<std::string> &polynomial_family_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &f : families()) {
            out.push_back(f.first);
        }
        return out;
    }();
    return names;
}

PolynomialPair family_polynomials(const std::string &family, long m)
{
    if (m < 0) {
        throw OutOfDomain("polynomial index must be nonnegative, got " + std::to_string(m));
    }
    for (const auto &f : families()) {
        if (f.first == family) {
            return f.second(m);
        }
    }
    throw UnknownIdentity("unknown polynomial family '" + family + "'");
}

} // namespace qverify
