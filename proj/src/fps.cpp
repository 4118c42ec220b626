#include "qverify/fps.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qverify {

Rational parse_rational(const std::string &text)
{
    std::string s;
    for (char ch : text) {
        if (ch != ' ') {
            s += ch;
        }
    }
    if (!s.empty() && s.front() == '+') {
        s.erase(s.begin());
    }
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r) { return r.get_str(); }

Rational rational_pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        if (sgn(base) == 0) {
            throw InversionOfZero("negative power of zero");
        }
        return rational_pow(Rational(1) / base, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(Precision p)
{
    return p.is_exact() ? std::string("exact") : "O(q^" + std::to_string(p.order()) + ")";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Rational coeff, long exponent) : coeff_(std::move(coeff)), exponent_(exponent)
{
    coeff_.canonicalize();
    if (sgn(coeff_) == 0) {
        exponent_ = 0;
    }
}

Monomial Monomial::operator*(const Monomial &o) const
{
    if (is_zero() || o.is_zero()) {
        return {};
    }
    return {coeff_ * o.coeff_, exponent_ + o.exponent_};
}

Monomial Monomial::operator/(const Monomial &o) const
{
    if (o.is_zero()) {
        throw InversionOfZero("division by the zero monomial");
    }
    if (is_zero()) {
        return {};
    }
    return {coeff_ / o.coeff_, exponent_ - o.exponent_};
}

Monomial Monomial::pow(long k) const
{
    if (k == 0) {
        return constant(1);
    }
    if (is_zero()) {
        if (k < 0) {
            throw InversionOfZero("negative power of the zero monomial");
        }
        return {};
    }
    return {rational_pow(coeff_, k), exponent_ * k};
}

std::string to_string(const Monomial &m)
{
    if (m.is_zero()) {
        return "0";
    }
    if (m.exponent() == 0) {
        return to_string(m.coeff());
    }
    std::string out;
    if (m.coeff() == -1) {
        out = "-";
    } else if (m.coeff() != 1) {
        out = to_string(m.coeff()) + "*";
    }
    out += "q";
    if (m.exponent() != 1) {
        out += "^" + std::to_string(m.exponent());
    }
    return out;
}

Monomial parse_monomial(const std::string &text)
{
    std::string s;
    for (char ch : text) {
        if (ch != ' ') {
            s += ch;
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty monomial");
    }
    auto qpos = s.find('q');
    if (qpos == std::string::npos) {
        return Monomial::constant(parse_rational(s));
    }
    std::string head = s.substr(0, qpos);
    std::string tail = s.substr(qpos + 1);
    Rational c = 1;
    if (head == "-") {
        c = -1;
    } else if (!head.empty() && head != "+") {
        if (head.back() != '*') {
            throw std::invalid_argument("bad monomial: '" + text + "'");
        }
        head.pop_back();
        c = parse_rational(head);
    }
    long e = 1;
    if (!tail.empty()) {
        if (tail.front() != '^') {
            throw std::invalid_argument("bad monomial: '" + text + "'");
        }
        tail.erase(tail.begin());
        if (!tail.empty() && tail.front() == '(' && tail.back() == ')') {
            tail = tail.substr(1, tail.size() - 2);
        }
        std::size_t used = 0;
        try {
            e = std::stol(tail, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad exponent in monomial: '" + text + "'");
        }
        if (used != tail.size()) {
            throw std::invalid_argument("bad exponent in monomial: '" + text + "'");
        }
    }
    return {c, e};
}

// ---------------------------------------------------------------- LaurentSeries

namespace {

bool all_integral(const std::vector<Rational> &v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational &c) { return c.get_den() == 1; });
}

long val_or_order(const LaurentSeries &f)
{
    return f.is_zero() ? f.precision().order() : f.valuation();
}

} // namespace

void LaurentSeries::normalize()
{
    if (!prec_.is_exact()) {
        long keep = prec_.order() - min_exp_;
        if (keep <= 0) {
            coeffs_.clear();
        } else if (static_cast<std::size_t>(keep) < coeffs_.size()) {
            coeffs_.resize(static_cast<std::size_t>(keep));
        }
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_exp_ += static_cast<long>(lead);
    }
    if (coeffs_.empty()) {
        min_exp_ = 0;
    }
}

LaurentSeries LaurentSeries::zero(Precision p)
{
    LaurentSeries f;
    f.prec_ = p;
    return f;
}

LaurentSeries LaurentSeries::constant(const Rational &c) { return monomial(c, 0); }

LaurentSeries LaurentSeries::monomial(const Rational &c, long exponent)
{
    return from_coefficients(exponent, {c});
}

LaurentSeries LaurentSeries::monomial(const Monomial &m) { return monomial(m.coeff(), m.exponent()); }

LaurentSeries LaurentSeries::from_coefficients(long min_exp, std::vector<Rational> coeffs, Precision p)
{
    LaurentSeries f;
    f.min_exp_ = min_exp;
    f.coeffs_ = std::move(coeffs);
    for (auto &c : f.coeffs_) {
        c.canonicalize();
    }
    f.prec_ = p;
    f.normalize();
    return f;
}

LaurentSeries LaurentSeries::from_terms(const std::vector<std::pair<long, Rational>> &terms, Precision p)
{
    if (terms.empty()) {
        return zero(p);
    }
    long lo = terms.front().first, hi = lo;
    for (const auto &t : terms) {
        lo = std::min(lo, t.first);
        hi = std::max(hi, t.first);
    }
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto &t : terms) {
        c[static_cast<std::size_t>(t.first - lo)] += t.second;
    }
    return from_coefficients(lo, std::move(c), p);
}

long LaurentSeries::valuation() const
{
    if (coeffs_.empty()) {
        if (prec_.is_exact()) {
            throw std::domain_error("valuation of the exact zero series");
        }
        return prec_.order();
    }
    return min_exp_;
}

std::optional<long> LaurentSeries::degree() const
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return min_exp_ + static_cast<long>(coeffs_.size()) - 1;
}

Rational LaurentSeries::coefficient(long exponent) const
{
    if (!prec_.covers(exponent)) {
        throw BeyondPrecision("coefficient of q^" + std::to_string(exponent) + " requested from a series known to " +
                              to_string(prec_));
    }
    long idx = exponent - min_exp_;
    if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries f = *this;
    for (auto &c : f.coeffs_) {
        c = -c;
    }
    return f;
}

LaurentSeries &LaurentSeries::operator+=(const LaurentSeries &o)
{
    Precision p = min(prec_, o.prec_);
    if (o.coeffs_.empty()) {
        prec_ = p;
        normalize();
        return *this;
    }
    if (coeffs_.empty()) {
        min_exp_ = o.min_exp_;
        coeffs_ = o.coeffs_;
        prec_ = p;
        normalize();
        return *this;
    }
    long lo = std::min(min_exp_, o.min_exp_);
    long hi = std::max(*degree(), *o.degree());
    if (!p.is_exact()) {
        hi = std::min(hi, p.order() - 1);
    }
    if (hi < lo) {
        coeffs_.clear();
        prec_ = p;
        normalize();
        return *this;
    }
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        long e = min_exp_ + static_cast<long>(i);
        if (e <= hi) {
            c[static_cast<std::size_t>(e - lo)] = std::move(coeffs_[i]);
        }
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        long e = o.min_exp_ + static_cast<long>(i);
        if (e <= hi) {
            c[static_cast<std::size_t>(e - lo)] += o.coeffs_[i];
        }
    }
    min_exp_ = lo;
    coeffs_ = std::move(c);
    prec_ = p;
    normalize();
    return *this;
}

LaurentSeries &LaurentSeries::operator-=(const LaurentSeries &o) { return *this += -o; }

LaurentSeries &LaurentSeries::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        coeffs_.clear();
        min_exp_ = 0;
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

LaurentSeries operator+(const LaurentSeries &f, const LaurentSeries &g)
{
    LaurentSeries r = f;
    r += g;
    return r;
}

LaurentSeries operator-(const LaurentSeries &f, const LaurentSeries &g)
{
    LaurentSeries r = f;
    r -= g;
    return r;
}

LaurentSeries operator*(const Rational &c, const LaurentSeries &f)
{
    LaurentSeries r = f;
    r *= c;
    return r;
}

LaurentSeries operator*(const LaurentSeries &f, const Monomial &m)
{
    if (m.is_zero()) {
        return LaurentSeries::zero();
    }
    return shift(m.coeff() * f, m.exponent());
}

LaurentSeries operator*(const LaurentSeries &f, const LaurentSeries &g)
{
    if ((f.is_zero() && f.is_exact()) || (g.is_zero() && g.is_exact())) {
        return LaurentSeries::zero();
    }
    long vf = val_or_order(f);
    long vg = val_or_order(g);
    Precision p = min(f.precision().shifted(vg), g.precision().shifted(vf));
    if (f.is_zero() || g.is_zero()) {
        return LaurentSeries::zero(p);
    }
    const auto &a = f.coefficients();
    const auto &b = g.coefficients();
    long base = vf + vg;
    long len = static_cast<long>(a.size() + b.size()) - 1;
    if (!p.is_exact()) {
        len = std::min(len, p.order() - base);
    }
    if (len <= 0) {
        return LaurentSeries::zero(p);
    }
    std::vector<Rational> out(static_cast<std::size_t>(len));
    const long na = static_cast<long>(a.size());
    const long nb = static_cast<long>(b.size());
    if (all_integral(a) && all_integral(b)) {
        std::vector<mpz_class> acc(static_cast<std::size_t>(len));
        for (long i = 0; i < na && i < len; ++i) {
            const mpz_class &x = a[static_cast<std::size_t>(i)].get_num();
            if (sgn(x) == 0) {
                continue;
            }
            long jmax = std::min(nb, len - i);
            for (long j = 0; j < jmax; ++j) {
                mpz_addmul(acc[static_cast<std::size_t>(i + j)].get_mpz_t(), x.get_mpz_t(),
                           b[static_cast<std::size_t>(j)].get_num_mpz_t());
            }
        }
        for (long k = 0; k < len; ++k) {
            out[static_cast<std::size_t>(k)] = Rational(acc[static_cast<std::size_t>(k)]);
        }
    } else {
        Rational tmp;
        for (long i = 0; i < na && i < len; ++i) {
            const Rational &x = a[static_cast<std::size_t>(i)];
            if (sgn(x) == 0) {
                continue;
            }
            long jmax = std::min(nb, len - i);
            for (long j = 0; j < jmax; ++j) {
                const Rational &y = b[static_cast<std::size_t>(j)];
                if (sgn(y) == 0) {
                    continue;
                }
                mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
                mpq_add(out[static_cast<std::size_t>(i + j)].get_mpq_t(),
                        out[static_cast<std::size_t>(i + j)].get_mpq_t(), tmp.get_mpq_t());
            }
        }
    }
    return LaurentSeries::from_coefficients(base, std::move(out), p);
}

LaurentSeries shift(const LaurentSeries &f, long k)
{
    if (f.is_zero()) {
        return LaurentSeries::zero(f.precision().shifted(k));
    }
    return LaurentSeries::from_coefficients(f.min_exp() + k, f.coefficients(), f.precision().shifted(k));
}

LaurentSeries truncate(const LaurentSeries &f, long order)
{
    Precision p = min(f.precision(), Precision::at(order));
    return LaurentSeries::from_coefficients(f.min_exp(), f.coefficients(), p);
}

LaurentSeries reflect(const LaurentSeries &f)
{
    std::vector<Rational> c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        long e = f.min_exp() + static_cast<long>(i);
        if (e % 2 != 0) {
            c[i] = -c[i];
        }
    }
    return LaurentSeries::from_coefficients(f.min_exp(), std::move(c), f.precision());
}

LaurentSeries dilate(const LaurentSeries &f, long r)
{
    if (r < 1) {
        throw std::invalid_argument("dilate needs r >= 1");
    }
    Precision p = f.precision().is_exact() ? f.precision() : Precision::at(f.precision().order() * r);
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        terms.emplace_back((f.min_exp() + static_cast<long>(i)) * r, f.coefficients()[i]);
    }
    return LaurentSeries::from_terms(terms, p);
}

namespace {

// Solves r * den = num for r, coefficients of r at exponents < order.
LaurentSeries long_division(const LaurentSeries &num, const LaurentSeries &den, long order)
{
    const long vd = den.valuation();
    const auto &d = den.coefficients();
    std::vector<std::pair<long, Rational>> tail; // (j, d_j / d_0), j >= 1
    const Rational inv0 = Rational(1) / d.front();
    for (std::size_t j = 1; j < d.size(); ++j) {
        if (sgn(d[j]) != 0) {
            tail.emplace_back(static_cast<long>(j), d[j] * inv0);
        }
    }
    if (num.is_zero()) {
        return LaurentSeries::zero(Precision::at(order));
    }
    const long vn = num.valuation();
    const long start = vn - vd;
    const long len = order - start;
    if (len <= 0) {
        return LaurentSeries::zero(Precision::at(order));
    }
    std::vector<Rational> r(static_cast<std::size_t>(len));
    Rational tmp;
    for (long k = 0; k < len; ++k) {
        Rational &rk = r[static_cast<std::size_t>(k)];
        long ne = vn + k;
        long ni = ne - num.min_exp();
        if (ni < static_cast<long>(num.coefficients().size())) {
            rk = num.coefficients()[static_cast<std::size_t>(ni)] * inv0;
        }
        for (const auto &[j, c] : tail) {
            if (j > k) {
                break;
            }
            const Rational &prev = r[static_cast<std::size_t>(k - j)];
            if (sgn(prev) == 0) {
                continue;
            }
            mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), prev.get_mpq_t());
            mpq_sub(rk.get_mpq_t(), rk.get_mpq_t(), tmp.get_mpq_t());
        }
    }
    return LaurentSeries::from_coefficients(start, std::move(r), Precision::at(order));
}

} // namespace

LaurentSeries divide(const LaurentSeries &num, const LaurentSeries &den, long order)
{
    if (den.is_zero()) {
        throw InversionOfZero("division by a series with no known nonzero coefficient (" +
                              to_string(den.precision()) + ")");
    }
    if (num.is_zero() && num.is_exact()) {
        return LaurentSeries::zero(Precision::at(order));
    }
    const long vd = den.valuation();
    const long vn = val_or_order(num);
    Precision avail = min(num.precision().shifted(-vd), den.precision().shifted(vn - 2 * vd));
    if (avail < Precision::at(order)) {
        throw InsufficientPrecision("quotient needed to order " + std::to_string(order) + " but inputs only support " +
                                    to_string(avail));
    }
    return long_division(num, den, order);
}

LaurentSeries invert(const LaurentSeries &f, long order)
{
    if (f.is_zero()) {
        throw InversionOfZero("inverting a series with no known nonzero coefficient (" + to_string(f.precision()) +
                              ")");
    }
    return divide(LaurentSeries::constant(1), f, order);
}

LaurentSeries exact_quotient(const LaurentSeries &num, const LaurentSeries &den)
{
    if (!num.is_exact() || !den.is_exact()) {
        throw std::invalid_argument("exact_quotient needs exact polynomials");
    }
    if (den.is_zero()) {
        throw InversionOfZero("exact division by zero");
    }
    if (num.is_zero()) {
        return LaurentSeries::zero();
    }
    long qdeg = *num.degree() - *den.degree();
    LaurentSeries r = long_division(num, den, qdeg + 1);
    LaurentSeries exact = LaurentSeries::from_coefficients(r.min_exp(), r.coefficients());
    if (!exactly_equal(exact * den, num)) {
        throw std::logic_error("exact_quotient: division leaves a remainder");
    }
    return exact;
}

LaurentSeries times_binomial(const LaurentSeries &f, const Rational &c, long k)
{
    if (k < 1) {
        throw std::invalid_argument("times_binomial needs k >= 1");
    }
    if (f.is_zero() || sgn(c) == 0) {
        return f;
    }
    const auto &a = f.coefficients();
    const long n = static_cast<long>(a.size());
    std::vector<Rational> out(static_cast<std::size_t>(n + k));
    Rational tmp;
    for (long i = 0; i < n + k; ++i) {
        Rational &o = out[static_cast<std::size_t>(i)];
        if (i < n) {
            o = a[static_cast<std::size_t>(i)];
        }
        if (i >= k && i - k < n) {
            mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), a[static_cast<std::size_t>(i - k)].get_mpq_t());
            mpq_sub(o.get_mpq_t(), o.get_mpq_t(), tmp.get_mpq_t());
        }
    }
    return LaurentSeries::from_coefficients(f.min_exp(), std::move(out), f.precision());
}

LaurentSeries over_binomial(const LaurentSeries &f, const Rational &c, long k, long order)
{
    if (k < 1) {
        throw std::invalid_argument("over_binomial needs k >= 1");
    }
    Precision p = min(f.precision(), Precision::at(order));
    if (f.is_zero()) {
        return LaurentSeries::zero(p);
    }
    const long len = p.order() - f.min_exp();
    if (len <= 0) {
        return LaurentSeries::zero(p);
    }
    const auto &a = f.coefficients();
    std::vector<Rational> out(static_cast<std::size_t>(len));
    Rational tmp;
    for (long i = 0; i < len; ++i) {
        Rational &o = out[static_cast<std::size_t>(i)];
        if (i < static_cast<long>(a.size())) {
            o = a[static_cast<std::size_t>(i)];
        }
        if (i >= k && sgn(c) != 0) {
            mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), out[static_cast<std::size_t>(i - k)].get_mpq_t());
            mpq_add(o.get_mpq_t(), o.get_mpq_t(), tmp.get_mpq_t());
        }
    }
    return LaurentSeries::from_coefficients(f.min_exp(), std::move(out), p);
}

std::optional<Mismatch> first_mismatch(const LaurentSeries &f, const LaurentSeries &g, Precision order)
{
    if (f.precision() < order || g.precision() < order) {
        throw InsufficientPrecision("comparison to " + to_string(order) + " but operands are known to " +
                                    to_string(f.precision()) + " and " + to_string(g.precision()));
    }
    if (f.is_zero() && g.is_zero()) {
        return std::nullopt;
    }
    long lo = std::numeric_limits<long>::max();
    long hi = std::numeric_limits<long>::min();
    for (const LaurentSeries *s : {&f, &g}) {
        if (!s->is_zero()) {
            lo = std::min(lo, s->min_exp());
            hi = std::max(hi, *s->degree());
        }
    }
    if (!order.is_exact()) {
        hi = std::min(hi, order.order() - 1);
    }
    for (long e = lo; e <= hi; ++e) {
        Rational a = f.coefficient(e);
        Rational b = g.coefficient(e);
        if (a != b) {
            return Mismatch{e, a, b};
        }
    }
    return std::nullopt;
}

std::string to_string(const LaurentSeries &f, Precision order)
{
    std::string out;
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        long e = f.min_exp() + static_cast<long>(i);
        if (!order.covers(e)) {
            break;
        }
        const Rational &c = f.coefficients()[i];
        if (sgn(c) == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(e) + ":" + c.get_str();
    }
    return out;
}

std::string to_pretty(const LaurentSeries &f)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        const Rational &c = f.coefficients()[i];
        if (sgn(c) == 0) {
            continue;
        }
        long e = f.min_exp() + static_cast<long>(i);
        Rational mag = abs(c);
        if (first) {
            os << (sgn(c) < 0 ? "-" : "");
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << "q";
        if (e != 1) {
            os << "^" << e;
        }
    }
    if (first) {
        os << "0";
    }
    if (!f.is_exact()) {
        os << " + O(q^" << f.precision().order() << ")";
    }
    return os.str();
}

} // namespace qverify
