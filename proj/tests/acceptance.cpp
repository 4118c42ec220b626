// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qverify/catalog.hpp"
#include "qverify/cfrac.hpp"
#include "qverify/errors.hpp"

using namespace qverify;

namespace {

int g_failed = 0;

struct Tally {
    long checks = 0;
    std::string first_failure;
    void expect(bool ok, const std::string &what)
    {
        ++checks;
        if (!ok && first_failure.empty()) {
            first_failure = what;
        }
    }
};

void criterion(int n, const char *title, const std::function<void(Tally &)> &body)
{
    Tally t;
    try {
        body(t);
    } catch (const std::exception &e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = t.first_failure.empty();
    g_failed += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %s (%ld checks)%s%s\n", n, ok ? "PASS" : "FAIL", title, t.checks,
                ok ? "" : "  first failure: ", t.first_failure.c_str());
    std::fflush(stdout);
}

std::string label(const std::string &id, long m) { return id + " m=" + std::to_string(m); }

std::vector<long> count_partitions(long residue_a, long residue_b, long order)
{
    std::vector<long> ways(static_cast<std::size_t>(order), 0);
    ways[0] = 1;
    for (long part = 1; part < order; ++part) {
        if (part % 5 != residue_a && part % 5 != residue_b) {
            continue;
        }
        for (long n = part; n < order; ++n) {
            ways[n] += ways[n - part];
        }
    }
    return ways;
}

const std::vector<SeriesArgs> &theorem_specs()
{
    static const std::vector<SeriesArgs> s = [] {
        std::vector<SeriesArgs> v = default_theorem_args();
        v.push_back(default_polyver_args());
        return v;
    }();
    return s;
}

const FractionArgs kFractions[] = {
    {Monomial::q(1), Monomial::q(2), Monomial::q(1), Monomial::constant(1)},
    {Monomial::constant(Rational(1, 2)), Monomial::q(1, -1), Monomial::q(3), Monomial::q(1, 2)},
    {Monomial::q(2, 3), Monomial::constant(0), Monomial::q(1, -1), Monomial::constant(Rational(1, 3))},
    {Monomial::q(-1), Monomial::q(1), Monomial::constant(2), Monomial::q(2)},
    {Monomial::q(1, Rational(-2, 5)), Monomial::q(2, Rational(3, 4)), Monomial::q(1, Rational(1, 2)),
     Monomial::q(1, -1)},
};

Rational small_rational(std::mt19937_64 &rng)
{
    Rational r(std::uniform_int_distribution<long>(-5, 5)(rng), std::uniform_int_distribution<long>(1, 3)(rng));
    r.canonicalize();
    return r;
}

LaurentSeries random_series(std::mt19937_64 &rng)
{
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    const long lo = pick(-3, 3);
    std::vector<Rational> c;
    for (long i = pick(0, 6); i > 0; --i) {
        c.push_back(small_rational(rng));
    }
    Precision p = pick(0, 1) ? Precision::exact() : Precision::at(lo + pick(0, 8));
    return LaurentSeries::from_coefficients(lo, std::move(c), p);
}

bool agree(const LaurentSeries &f, const LaurentSeries &g)
{
    return !first_mismatch(f, g, min(f.precision(), g.precision())).has_value();
}

} // namespace

int main()
{
    const Catalog &catalog = Catalog::standard();

    criterion(1, "c1 at order 80 for m = 0..8, partition oracles at m = 0, 1", [&](Tally &t) {
        for (long m = 0; m <= 8; ++m) {
            t.expect(catalog.verify("c1", m, 80).pass, label("c1", m));
        }
        const IdentitySpec &c1 = catalog.find("c1");
        const std::vector<long> oracle[2] = {count_partitions(1, 4, 80), count_partitions(2, 3, 80)};
        for (long m = 0; m <= 1; ++m) {
            LaurentSeries lhs = c1.lhs(m, 80), rhs = c1.rhs(m, 80);
            for (long e = 0; e < 80; ++e) {
                t.expect(lhs.coefficient(e) == oracle[m][e] && rhs.coefficient(e) == oracle[m][e],
                         label("c1", m) + " coefficient " + std::to_string(e));
            }
        }
    });

    criterion(2, "all 26 corollaries over their m-range at order 50", [&](Tally &t) {
        for (const auto &id : corollary_ids()) {
            const IdentitySpec &s = catalog.find(id);
            for (long m = s.m_domain.lo; m <= 6; ++m) {
                t.expect(verify_spec(s, m, 50).pass, label(id, m));
            }
        }
    });

    criterion(3, "H and H1 closed forms equal recurrence convergents, N <= 12", [&](Tally &t) {
        for (std::size_t i = 0; i < std::size(kFractions); ++i) {
            const auto &p = kFractions[i];
            auto h = convergents(h_fraction(p), 12);
            auto h1 = convergents(h1_fraction(p), 12);
            for (long n = 0; n <= 12; ++n) {
                const std::string where = "spec " + std::to_string(i) + " N=" + std::to_string(n);
                t.expect(exactly_equal(h_numerator(p, n), h[n].numerator), "A_N " + where);
                t.expect(exactly_equal(h_denominator(p, n), h[n].denominator), "B_N " + where);
                t.expect(exactly_equal(h1_numerator(p, n), h1[n].numerator), "C_N " + where);
                t.expect(exactly_equal(h1_denominator(p, n), h1[n].denominator), "D_N " + where);
            }
        }
    });

    criterion(4, "determinant identity for n <= 12 on both fraction families", [&](Tally &t) {
        for (const auto &p : kFractions) {
            t.expect(!determinant_failure(h_fraction(p), convergents(h_fraction(p), 12)), "H");
            t.expect(!determinant_failure(h1_fraction(p), convergents(h1_fraction(p), 12)), "H1");
        }
        for (const auto &p : theorem_specs()) {
            t.expect(!determinant_failure(phi_fraction(p), convergents(phi_fraction(p), 12)), "phi");
            t.expect(!determinant_failure(phi_big_fraction(p), convergents(phi_big_fraction(p), 12)), "Phi");
        }
    });

    criterion(5, "master theorems at order 40 (t1ef, t2ef m = 2..6; t3ef i, ii m = 1..4)", [&](Tally &t) {
        long part2 = 0;
        for (std::size_t i = 0; i < theorem_specs().size(); ++i) {
            const auto &p = theorem_specs()[i];
            const std::string sp = " spec " + std::to_string(i);
            for (long m = 2; m <= 6; ++m) {
                t.expect(verify_theorem_t1ef(p, m, 40).pass, label("t1ef", m) + sp);
                t.expect(verify_theorem_t2ef(p, m, 40).pass, label("t2ef", m) + sp);
            }
            for (long m = 1; m <= 4; ++m) {
                t.expect(verify_theorem_t3ef(1, p, m, 40).pass, label("t3ef-i", m) + sp);
                if (!(p.x * p.y).is_zero()) {
                    t.expect(verify_theorem_t3ef(2, p, m, 40).pass, label("t3ef-ii", m) + sp);
                    ++part2;
                }
            }
        }
        t.expect(part2 >= 12, "t3ef part ii needs three specializations");
    });

    criterion(6, "finite identities exact for 0 <= n, m <= 6", [&](Tally &t) {
        for (int variant : {1, 2}) {
            for (long n = 0; n <= 6; ++n) {
                for (long m = 0; m <= 6; ++m) {
                    t.expect(verify_polyver(variant, default_polyver_args(), n, m).pass,
                             "variant " + std::to_string(variant) + " n=" + std::to_string(n) +
                                 " m=" + std::to_string(m));
                }
            }
        }
    });

    criterion(7, "six transformations at order 40, three specializations each", [&](Tally &t) {
        const SeriesArgs specs[] = {
            {Monomial::q(1), Monomial::constant(Rational(1, 2)), Monomial::q(2)},
            {Monomial::q(2, Rational(1, 3)), Monomial::q(1, -1), Monomial::q(1, Rational(2, 5))},
            {Monomial::q(1, -2), Monomial::constant(Rational(-1, 4)), Monomial::q(1)},
        };
        for (auto tr : all_transformations()) {
            for (const auto &p : specs) {
                t.expect(verify_transformation(tr, p, 40).pass, transformation_name(tr));
            }
        }
    });

    criterion(8, "12 Slater inputs at order 100", [&](Tally &t) {
        for (const auto &tag : slater_tags()) {
            t.expect(verify_slater(tag, 100).pass, tag);
        }
        t.expect(slater_tags().size() == 12, "tag count");
    });

    criterion(9, "fps ring/precision properties, q-binomial checks, no valuation-bound violation", [&](Tally &t) {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 1000; ++i) {
            LaurentSeries f = random_series(rng), g = random_series(rng), h = random_series(rng);
            t.expect(agree(f * (g + h), f * g + f * h), "distributivity");
            t.expect(agree((f * g) * h, f * (g * h)), "associativity");
            t.expect((f + g).precision() == min(f.precision(), g.precision()), "sum precision");
        }
        for (long n = 1; n <= 12; ++n) {
            for (long k = 0; k <= n; ++k) {
                LaurentSeries g = gauss_binomial(n, k);
                t.expect(exactly_equal(g, gauss_binomial(n, n - k)), "symmetry");
                t.expect(exactly_equal(g, gauss_binomial(n - 1, k - 1) + gauss_binomial(n - 1, k) * Monomial::q(k)),
                         "Pascal");
            }
            const Monomial x = Monomial::q(1, Rational(-1, 2));
            LaurentSeries rhs;
            for (long k = 0; k <= n; ++k) {
                Monomial term = x.pow(k).shifted(k * (k - 1) / 2);
                rhs += gauss_binomial(n, k) * (k % 2 ? -term : term);
            }
            t.expect(exactly_equal(poch_finite(x, n, QBase{}), rhs), "q-binomial theorem");
        }
        t.expect(valuation_checks() > 0, "valuation checks ran");
        t.expect(valuation_violations() == 0, "valuation bound violated");
    });

    criterion(10, "perturbed a_m or b_m fails by exponent 2*deg + 20", [&](Tally &t) {
        const std::pair<const char *, long> sampled[] = {{"c1", 2}, {"c4", 3}, {"cc1", 1}, {"cm1", 2}, {"c3wm", 2}};
        for (const auto &[id, m] : sampled) {
            for (bool on_b : {false, true}) {
                for (long deg = 0; deg <= 4; ++deg) {
                    VerificationReport r = verify_spec(corollary_spec(id, Perturbation{on_b, Monomial::q(deg)}), m, 50);
                    const std::string what = label(id, m) + (on_b ? " b" : " a") + "+q^" + std::to_string(deg);
                    t.expect(!r.pass && r.first_mismatch && r.first_mismatch->exponent <= 2 * deg + 20, what);
                }
            }
        }
    });

    std::printf("%s\n", g_failed == 0 ? "all criteria pass" : "some criteria fail");
    return g_failed == 0 ? 0 : 1;
}
