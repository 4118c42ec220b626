#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qverify/fps.hpp"
#include "qverify/hyperseries.hpp"
#include "qverify/polyfam.hpp"

namespace qverify {

// b0 + a1/(b1 + a2/(b2 + ...)), with partial numerators and denominators
// given as exact series for n >= 1.
struct ContinuedFraction {
    LaurentSeries b0;
    std::function<LaurentSeries(long n)> a;
    std::function<LaurentSeries(long n)> b;
};

struct Convergent {
    LaurentSeries numerator;
    LaurentSeries denominator;
};

// Convergents 0..N from P_{-1} = 1, P_0 = b0, Q_{-1} = 0, Q_0 = 1.
std::vector<Convergent> convergents(const ContinuedFraction &cf, long N);

// Checks P_n Q_{n-1} - P_{n-1} Q_n = (-1)^{n-1} a_1 ... a_n for n = 1..N and
// returns the first n where it fails.
std::optional<long> determinant_failure(const ContinuedFraction &cf, const std::vector<Convergent> &conv);

// H(a,b,c,d): a_1 = b_1 = 1, a_n = -ab + c q^{n-1}, b_n = a + b + d q^{n-1}.
ContinuedFraction h_fraction(const FractionArgs &p);
// H1(a,b,c,d): a_1 = b_1 = 1, a_n = -ab q^{2n-3} + c q^{n-2}, b_n = (a + b) q^{n-1} + d.
ContinuedFraction h1_fraction(const FractionArgs &p);
// a_n = -y + z x q^{n-1}, b_n = y + 1 + x q^n; convergents (zx - y) f_{n+1} / e_{n+1}.
ContinuedFraction phi_fraction(const SeriesArgs &p);
// a_n = -x^2 y q^{2n-1} + z x q^{n-1}, b_n = (x + xy) q^n + 1; convergents
// (zx - x^2 y q) h_{n+1} / g_{n+1}.
ContinuedFraction phi_big_fraction(const SeriesArgs &p);

} // namespace qverify
