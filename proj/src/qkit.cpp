#include "qverify/qkit.hpp"

#include <algorithm>
#include <memory>

namespace qverify {

QBase::QBase(long r) : r_(r)
{
    if (r < 1) {
        throw std::invalid_argument("q-base exponent must be a positive integer, got " + std::to_string(r));
    }
}

QProduct QProduct::constant(const Rational &c)
{
    QProduct p;
    p.scalar_ = c;
    return p;
}

QProduct &QProduct::times(const Monomial &m)
{
    scalar_ *= m.coeff();
    shift_ += m.exponent();
    return *this;
}

QProduct &QProduct::over(const Monomial &m)
{
    if (m.is_zero()) {
        throw InversionOfZero("QProduct divided by the zero monomial");
    }
    scalar_ /= m.coeff();
    shift_ -= m.exponent();
    return *this;
}

void QProduct::push(const Monomial &a, bool numerator)
{
    if (a.is_zero()) {
        return;
    }
    const long k = a.exponent();
    if (k == 0) {
        if (a.coeff() == 1) {
            zero_balance_ += numerator ? 1 : -1;
        } else if (numerator) {
            scalar_ *= 1 - a.coeff();
        } else {
            scalar_ /= 1 - a.coeff();
        }
        return;
    }
    if (k > 0) {
        (numerator ? num_ : den_).push_back({a.coeff(), k});
        return;
    }
    // 1 - c q^k = -c q^k (1 - c^{-1} q^{-k})
    if (numerator) {
        scalar_ *= -a.coeff();
        shift_ += k;
        num_.push_back({Rational(1) / a.coeff(), -k});
    } else {
        scalar_ /= -a.coeff();
        shift_ -= k;
        den_.push_back({Rational(1) / a.coeff(), -k});
    }
}

QProduct &QProduct::times_factor(const Monomial &a)
{
    push(a, true);
    return *this;
}

QProduct &QProduct::over_factor(const Monomial &a)
{
    push(a, false);
    return *this;
}

QProduct &QProduct::times_poch(const Monomial &a, long n, QBase base)
{
    const long r = base.r();
    if (n >= 0) {
        for (long k = 0; k < n; ++k) {
            push(a.shifted(r * k), true);
        }
    } else {
        for (long k = 0; k < -n; ++k) {
            push(a.shifted(r * (n + k)), false);
        }
    }
    return *this;
}

QProduct &QProduct::over_poch(const Monomial &a, long n, QBase base)
{
    const long r = base.r();
    if (n >= 0) {
        for (long k = 0; k < n; ++k) {
            push(a.shifted(r * k), false);
        }
    } else {
        for (long k = 0; k < -n; ++k) {
            push(a.shifted(r * (n + k)), true);
        }
    }
    return *this;
}

QProduct &QProduct::times_poch_inf(const Monomial &a, QBase base)
{
    if (a.is_zero()) {
        return *this;
    }
    const long r = base.r();
    Monomial cur = a;
    while (cur.exponent() <= 0) {
        push(cur, true);
        cur = cur.shifted(r);
    }
    num_inf_.push_back({cur.coeff(), cur.exponent(), r});
    return *this;
}

QProduct &QProduct::over_poch_inf(const Monomial &a, QBase base)
{
    if (a.is_zero()) {
        return *this;
    }
    const long r = base.r();
    Monomial cur = a;
    while (cur.exponent() <= 0) {
        push(cur, false);
        cur = cur.shifted(r);
    }
    den_inf_.push_back({cur.coeff(), cur.exponent(), r});
    return *this;
}

QProduct &QProduct::times(const QProduct &o)
{
    scalar_ *= o.scalar_;
    shift_ += o.shift_;
    zero_balance_ += o.zero_balance_;
    num_.insert(num_.end(), o.num_.begin(), o.num_.end());
    den_.insert(den_.end(), o.den_.begin(), o.den_.end());
    num_inf_.insert(num_inf_.end(), o.num_inf_.begin(), o.num_inf_.end());
    den_inf_.insert(den_inf_.end(), o.den_inf_.begin(), o.den_inf_.end());
    return *this;
}

QProduct &QProduct::over(const QProduct &o)
{
    if (o.is_zero()) {
        throw InversionOfZero("QProduct divided by a zero product");
    }
    scalar_ /= o.scalar_;
    shift_ -= o.shift_;
    zero_balance_ -= o.zero_balance_;
    num_.insert(num_.end(), o.den_.begin(), o.den_.end());
    den_.insert(den_.end(), o.num_.begin(), o.num_.end());
    num_inf_.insert(num_inf_.end(), o.den_inf_.begin(), o.den_inf_.end());
    den_inf_.insert(den_inf_.end(), o.num_inf_.begin(), o.num_inf_.end());
    return *this;
}

bool QProduct::is_zero() const { return sgn(scalar_) == 0 || zero_balance_ > 0; }

long QProduct::valuation() const
{
    if (has_pole()) {
        throw PochhammerPole("product has a vanishing denominator factor");
    }
    if (is_zero()) {
        throw std::domain_error("valuation of a zero product");
    }
    return shift_;
}

bool QProduct::is_polynomial() const { return den_.empty() && num_inf_.empty() && den_inf_.empty() && !has_pole(); }

namespace {

template <typename T>
void apply_numerator(std::vector<T> &u, const T &c, long k)
{
    const long n = static_cast<long>(u.size());
    T tmp;
    for (long i = n - 1; i >= k; --i) {
        const T &prev = u[static_cast<std::size_t>(i - k)];
        if (sgn(prev) == 0) {
            continue;
        }
        tmp = c * prev;
        u[static_cast<std::size_t>(i)] -= tmp;
    }
}

template <typename T>
void apply_denominator(std::vector<T> &u, const T &c, long k)
{
    const long n = static_cast<long>(u.size());
    T tmp;
    for (long i = k; i < n; ++i) {
        const T &prev = u[static_cast<std::size_t>(i - k)];
        if (sgn(prev) == 0) {
            continue;
        }
        tmp = c * prev;
        u[static_cast<std::size_t>(i)] += tmp;
    }
}

} // namespace

LaurentSeries QProduct::evaluate(long order) const
{
    if (has_pole()) {
        throw PochhammerPole("product has a vanishing denominator factor");
    }
    if (is_zero()) {
        return LaurentSeries::zero(Precision::at(order));
    }
    const long len = order - shift_;
    if (len <= 0) {
        return LaurentSeries::zero(Precision::at(order));
    }
    bool integral = true;
    auto check = [&](const Rational &c) { integral = integral && c.get_den() == 1; };
    for (const auto &f : num_) {
        check(f.c);
    }
    for (const auto &f : den_) {
        check(f.c);
    }
    for (const auto &f : num_inf_) {
        check(f.c);
    }
    for (const auto &f : den_inf_) {
        check(f.c);
    }

    auto run = [&](auto &u, auto convert) {
        using T = typename std::decay_t<decltype(u)>::value_type;
        for (const auto &f : num_) {
            if (f.k < len) {
                apply_numerator<T>(u, convert(f.c), f.k);
            }
        }
        for (const auto &f : num_inf_) {
            T c = convert(f.c);
            for (long k = f.k; k < len; k += f.step) {
                apply_numerator<T>(u, c, k);
            }
        }
        for (const auto &f : den_) {
            if (f.k < len) {
                apply_denominator<T>(u, convert(f.c), f.k);
            }
        }
        for (const auto &f : den_inf_) {
            T c = convert(f.c);
            for (long k = f.k; k < len; k += f.step) {
                apply_denominator<T>(u, c, k);
            }
        }
    };

    std::vector<Rational> coeffs(static_cast<std::size_t>(len));
    if (integral) {
        std::vector<mpz_class> u(static_cast<std::size_t>(len));
        u[0] = 1;
        run(u, [](const Rational &c) { return mpz_class(c.get_num()); });
        for (long i = 0; i < len; ++i) {
            coeffs[static_cast<std::size_t>(i)] = Rational(u[static_cast<std::size_t>(i)]) * scalar_;
        }
    } else {
        std::vector<Rational> u(static_cast<std::size_t>(len));
        u[0] = 1;
        run(u, [](const Rational &c) { return c; });
        for (long i = 0; i < len; ++i) {
            coeffs[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] * scalar_;
        }
    }
    return LaurentSeries::from_coefficients(shift_, std::move(coeffs), Precision::at(order));
}

LaurentSeries QProduct::expand() const
{
    if (!is_polynomial()) {
        throw std::logic_error("QProduct::expand on a product with denominators or infinite factors");
    }
    if (is_zero()) {
        return LaurentSeries::zero();
    }
    LaurentSeries p = LaurentSeries::constant(scalar_);
    for (const auto &f : num_) {
        p = times_binomial(p, f.c, f.k);
    }
    return shift(p, shift_);
}

LaurentSeries gauss_binomial(long n, long m, QBase base)
{
    if (m < 0 || n < 0 || m > n) {
        return LaurentSeries::zero();
    }
    m = std::min(m, n - m);
    const long r = base.r();
    LaurentSeries p = LaurentSeries::constant(1);
    for (long i = 1; i <= m; ++i) {
        p = times_binomial(p, 1, r * (n - m + i));
        LaurentSeries den = LaurentSeries::from_terms({{0, Rational(1)}, {r * i, Rational(-1)}});
        p = exact_quotient(p, den);
    }
    return p;
}

const LaurentSeries &GaussianTable::operator()(long n, long m)
{
    if (m < 0 || n < 0 || m > n) {
        return zero_;
    }
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, std::min(m, n - m));
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(key, gauss_binomial(n, m, base_)).first;
    }
    return it->second;
}

GaussianTable &gaussian_table(QBase base)
{
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<GaussianTable>> tables;
    std::lock_guard lock(mutex);
    auto &slot = tables[base.r()];
    if (!slot) {
        slot = std::make_unique<GaussianTable>(base);
    }
    return *slot;
}

LaurentSeries poch_finite(const Monomial &a, long n, QBase base, std::optional<long> order)
{
    QProduct p;
    p.times_poch(a, n, base);
    if (n >= 0) {
        LaurentSeries e = p.expand();
        return order ? truncate(e, *order) : e;
    }
    if (!order) {
        throw std::invalid_argument("a Pochhammer symbol of negative length is a series; an order is required");
    }
    return p.evaluate(*order);
}

LaurentSeries poch_infinite(const Monomial &a, QBase base, long order)
{
    QProduct p;
    p.times_poch_inf(a, base);
    return p.evaluate(order);
}

LaurentSeries product_set(std::span<const Monomial> args, QBase base, long order)
{
    QProduct p;
    for (const auto &a : args) {
        p.times_poch_inf(a, base);
    }
    return p.evaluate(order);
}

} // namespace qverify
