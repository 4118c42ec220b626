#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qverify/fps.hpp"
#include "qverify/qkit.hpp"

namespace qverify {

// A summand generator for q_sum. val_lb must be nondecreasing in n and must
// bound the valuation of term(n, order) from below.
struct TermBuilder {
    std::function<LaurentSeries(long n, long order)> term;
    std::function<long(long n)> val_lb;
};

// Sums term(n) for n = 0, 1, ... until val_lb(n) >= order. Every term's
// valuation is checked against val_lb; a violation throws
// ValuationBoundViolation. Exceeding the iteration cap (default
// 10*(order + |min(0, val_lb(0))|) + 100) throws NonterminatingBound.
LaurentSeries q_sum(const TermBuilder &builder, long order, std::optional<long> iteration_cap = {});

// Number of valuation checks performed by q_sum in this process.
std::uint64_t valuation_checks();
// Number of valuation-bound violations detected in this process.
std::uint64_t valuation_violations();

// (a n^2 + b n + c) / d, required to be an integer for every n >= 0.
struct Quadratic {
    long a = 0;
    long b = 0;
    long c = 0;
    long d = 1;
    long operator()(long n) const;
};

// (a; q^r)_{n + offset} in the numerator or the denominator.
struct PochShape {
    Monomial a;
    QBase base{};
    long offset = 0;
    bool denominator = false;
};

// prod_{k < n + offset} (u + v q^{r k})
struct PairShape {
    Monomial u;
    Monomial v;
    QBase base{};
    long offset = 0;
};

// (1 - c q^{step * n})
struct LinearShape {
    Monomial c;
    long step = 0;
};

// Summand lead * ratio^n * q^{exponent(n)} times the listed factors.
struct SumShape {
    Rational lead = 1;
    Rational ratio = 1;
    Quadratic exponent;
    std::vector<PochShape> pochs;
    std::vector<PairShape> pairs;
    std::vector<LinearShape> linears;

    QProduct term_product(long n) const;
    // Exact valuation of a nonzero term n.
    long raw_valuation(long n) const;
};

// Builds a TermBuilder whose bound is the raw valuation made nondecreasing by
// a suffix minimum up to the point where the raw valuation starts growing.
TermBuilder make_term_builder(const SumShape &shape);

// Multiplies a product prefactor into a sum, choosing working orders from
// the exact valuations so the result is known to `order`.
LaurentSeries product_times_sum(const QProduct &prefactor, const TermBuilder &sum, long order);

struct SeriesArgs {
    Monomial x;
    Monomial y;
    Monomial z;
    QBase base{};
};

// phi(x,y,z) = sum x^n q^{n(n+1)/2} (-z;q)_n / ((y;q)_{n+1} (q;q)_n)
SumShape phi_shape(const SeriesArgs &p);
LaurentSeries phi(const SeriesArgs &p, long order);
// Phi(x,y,z) = sum x^n q^{n(n+1)/2} (-z;q)_n / ((-xyq;q)_n (q;q)_n)
SumShape phi_big_shape(const SeriesArgs &p);
LaurentSeries phi_big(const SeriesArgs &p, long order);

// Very-well-poised weight c_n: 1 for n = 0, (1 - w q^{2n}) (wq;q)_{n-1} after.
void append_watson_weight(SumShape &shape, const Monomial &w, QBase base);

enum class Transformation { watson, watson_xy, heine, heine_xy, ramanujan, ramanujan_xy };

const std::vector<Transformation> &all_transformations();
std::string transformation_name(Transformation t);
Transformation transformation_from_name(const std::string &name);

struct SeriesPair {
    LaurentSeries lhs;
    LaurentSeries rhs;
};

// Both sides of a transformation between phi/Phi and another sum.
SeriesPair transformation_sides(Transformation t, const SeriesArgs &p, long order);

} // namespace qverify
