#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qverify/fps.hpp"
#include "qverify/hyperseries.hpp"
#include "qverify/polyfam.hpp"

namespace qverify {

enum class EntryKind { corollary, theorem, slater };

std::string to_string(EntryKind kind);

struct MDomain {
    long lo = 0;
    std::optional<long> hi;
    bool contains(long m) const { return m >= lo && (!hi || m <= *hi); }
    std::string describe() const;
};

// One asserted equality. Series equations compare to the requested order,
// polynomial identities compare exactly.
struct Equation {
    std::string label;
    LaurentSeries lhs;
    LaurentSeries rhs;
    Precision compare_to;
};

struct IdentitySpec {
    std::string id;
    std::string description;
    std::string anchor;
    EntryKind kind = EntryKind::corollary;
    MDomain m_domain;
    // Every equation the entry asserts at (m, order). Corollaries and Slater
    // entries assert exactly one.
    std::function<std::vector<Equation>(long m, long order)> equations;
    // Lowest exponent that either side can carry at m (corollaries only).
    std::function<long(long m)> laurent_floor;

    LaurentSeries lhs(long m, long order) const;
    LaurentSeries rhs(long m, long order) const;
};

struct VerificationReport {
    std::string identity;
    long m = 0;
    long order = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    double elapsed_ms = 0;
    // Label of the failing equation, empty on success.
    std::string failed_equation;
};

// Adds `delta` to a_m (on_b = false) or b_m (on_b = true) before the RHS is
// assembled. Used for fault-injection tests.
struct Perturbation {
    bool on_b = true;
    Monomial delta = Monomial::q(1);
};

const std::vector<std::string> &corollary_ids();
const std::vector<std::string> &slater_tags();
const std::vector<std::string> &theorem_suite_ids();

IdentitySpec corollary_spec(const std::string &id, std::optional<Perturbation> fault = std::nullopt);
// `fault` is added to the product side.
IdentitySpec slater_spec(const std::string &tag, std::optional<Monomial> fault = std::nullopt);

// Runs `build`, compares each equation and times the whole thing.
VerificationReport run_check(const std::string &identity, long m, long order,
                             const std::function<std::vector<Equation>()> &build);

VerificationReport verify_theorem_t1ef(const SeriesArgs &p, long m, long order);
VerificationReport verify_theorem_t2ef(const SeriesArgs &p, long m, long order);
VerificationReport verify_theorem_t3ef(int part, const SeriesArgs &p, long m, long order);
VerificationReport verify_polyver(int variant, const SeriesArgs &p, long n, long m);
VerificationReport verify_slater(const std::string &tag, long order);
VerificationReport verify_transformation(Transformation t, const SeriesArgs &p, long order);

std::vector<Equation> t1ef_equations(const SeriesArgs &p, long m, long order);
std::vector<Equation> t2ef_equations(const SeriesArgs &p, long m, long order);
std::vector<Equation> t3ef_equations(int part, const SeriesArgs &p, long m, long order);
// `fault` is added to the right-hand side of the second displayed equation.
std::vector<Equation> polyver_equations(int variant, const SeriesArgs &p, long n, long m,
                                        std::optional<Monomial> fault = std::nullopt);

// Parameter sets used by the theorem-level registry entries.
const std::vector<SeriesArgs> &default_theorem_args();
const SeriesArgs &default_polyver_args();

class Catalog {
public:
    Catalog();
    static const Catalog &standard();

    // Stable order: corollaries interleaved with the theorem suites and the
    // Slater inputs they rely on.
    const std::vector<IdentitySpec> &entries() const { return entries_; }
    const IdentitySpec &find(const std::string &id) const;
    // "all", a comma-separated list of ids, or prefixes ending in '*'.
    std::vector<const IdentitySpec *> select(const std::string &filter) const;

    VerificationReport verify(const std::string &id, long m, long order) const;
    std::vector<VerificationReport> verify_range(const std::string &id, long m_lo, long m_hi, long order) const;

private:
    std::vector<IdentitySpec> entries_;
};

VerificationReport verify_spec(const IdentitySpec &spec, long m, long order);

} // namespace qverify
