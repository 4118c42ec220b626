#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qverify/fps.hpp"
#include "qverify/hyperseries.hpp"
#include "qverify/qkit.hpp"

namespace qverify {

// x -> x q^{r k}
SeriesArgs shift_x(const SeriesArgs &p, long k);

// Triple-sum polynomial families. e_m, f_m belong to phi; g_m, h_m to Phi.
// All vanish for m <= 0 (f_m, h_m also at m = 1).
LaurentSeries e_poly(const SeriesArgs &p, long m);
LaurentSeries f_poly(const SeriesArgs &p, long m);
LaurentSeries g_poly(const SeriesArgs &p, long m);
LaurentSeries h_poly(const SeriesArgs &p, long m);

// e_m from e_0 = 0, e_1 = 1 and
// e_{m+1} = (y + 1 + x q^m) e_m + (-y + z x q^{m-1}) e_{m-1}.
LaurentSeries e_by_recurrence(const SeriesArgs &p, long m);

// Parameters of the two four-parameter fractions H and H1.
struct FractionArgs {
    Monomial a;
    Monomial b;
    Monomial c;
    Monomial d;
};

// Closed forms for the N-th numerator and denominator convergents.
LaurentSeries h_numerator(const FractionArgs &p, long N);
LaurentSeries h_denominator(const FractionArgs &p, long N);
LaurentSeries h1_numerator(const FractionArgs &p, long N);
LaurentSeries h1_denominator(const FractionArgs &p, long N);

struct PolynomialPair {
    LaurentSeries a;
    LaurentSeries b;
};

// Families of polynomials a_m, b_m used by the finite-m identities.
const std::vector<std::string> &polynomial_family_names();
PolynomialPair family_polynomials(const std::string &family, long m);

} // namespace qverify
