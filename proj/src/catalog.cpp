#include "qverify/catalog.hpp"

#include <algorithm>
#include <chrono>

namespace qverify {

std::string to_string(EntryKind kind)
{
    switch (kind) {
    case EntryKind::corollary:
        return "corollary";
    case EntryKind::theorem:
        return "theorem";
    case EntryKind::slater:
        return "slater";
    }
    return "?";
}

std::string MDomain::describe() const
{
    if (hi && *hi == lo) {
        return "m = " + std::to_string(lo);
    }
    if (hi) {
        return std::to_string(lo) + " <= m <= " + std::to_string(*hi);
    }
    return "m >= " + std::to_string(lo);
}

LaurentSeries IdentitySpec::lhs(long m, long order) const { return equations(m, order).front().lhs; }
LaurentSeries IdentitySpec::rhs(long m, long order) const { return equations(m, order).front().rhs; }

VerificationReport run_check(const std::string &identity, long m, long order,
                             const std::function<std::vector<Equation>()> &build)
{
    VerificationReport rep;
    rep.identity = identity;
    rep.m = m;
    rep.order = order;
    const auto start = std::chrono::steady_clock::now();
    rep.pass = true;
    for (const Equation &eq : build()) {
        auto mis = first_mismatch(eq.lhs, eq.rhs, eq.compare_to);
        if (mis) {
            rep.pass = false;
            rep.first_mismatch = *mis;
            rep.failed_equation = eq.label;
            break;
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport verify_spec(const IdentitySpec &spec, long m, long order)
{
    if (order < 1) {
        throw OutOfDomain("order must be >= 1, got " + std::to_string(order));
    }
    if (!spec.m_domain.contains(m)) {
        throw OutOfDomain(spec.id + ": m = " + std::to_string(m) + " outside " + spec.m_domain.describe());
    }
    return run_check(spec.id, m, order, [&] { return spec.equations(m, order); });
}

const std::vector<std::string> &theorem_suite_ids()
{
    static const std::vector<std::string> ids = {"t1ef", "t2ef", "t3ef", "polyver", "polyver2"};
    return ids;
}

namespace {

template <typename F>
std::vector<Equation> over_defaults(F &&f)
{
    std::vector<Equation> out;
    const auto &args = default_theorem_args();
    for (std::size_t i = 0; i < args.size(); ++i) {
        for (Equation &eq : f(args[i])) {
            eq.label = "params#" + std::to_string(i + 1) + " " + eq.label;
            out.push_back(std::move(eq));
        }
    }
    return out;
}

IdentitySpec theorem_suite(const std::string &id)
{
    IdentitySpec s;
    s.id = id;
    s.kind = EntryKind::theorem;
    s.laurent_floor = [](long) { return 0L; };
    if (id == "t1ef") {
        s.description = "phi(xq^m) through e_m and phi(x), phi(xq); default parameter sets";
        s.anchor = "three-term recurrence for phi";
        s.m_domain = MDomain{2, std::nullopt};
        s.equations = [](long m, long order) {
            return over_defaults([&](const SeriesArgs &p) { return t1ef_equations(p, m, order); });
        };
    } else if (id == "t2ef") {
        s.description = "Phi(xq^m) through g_m and Phi(x), Phi(xq); default parameter sets";
        s.anchor = "three-term recurrence for Phi";
        s.m_domain = MDomain{2, std::nullopt};
        s.equations = [](long m, long order) {
            return over_defaults([&](const SeriesArgs &p) { return t2ef_equations(p, m, order); });
        };
    } else if (id == "t3ef") {
        s.description = "phi(xq^-m) and Phi(xq^-m), both parts; default parameter sets";
        s.anchor = "negative shift of phi and Phi";
        s.m_domain = MDomain{1, std::nullopt};
        s.equations = [](long m, long order) {
            return over_defaults([&](const SeriesArgs &p) {
                std::vector<Equation> eqs = t3ef_equations(1, p, m, order);
                if (!(p.x * p.y).is_zero()) {
                    for (Equation &e : t3ef_equations(2, p, m, order)) {
                        eqs.push_back(std::move(e));
                    }
                }
                return eqs;
            });
        };
    } else {
        const int variant = id == "polyver" ? 1 : 2;
        s.description = variant == 1 ? "finite identities for e_m, f_m, all n = 0..6"
                                     : "finite identities for g_m, h_m, all n = 0..6";
        s.anchor = variant == 1 ? "convergents of the phi fraction" : "convergents of the Phi fraction";
        s.m_domain = MDomain{0, 8};
        s.equations = [variant](long m, long) {
            std::vector<Equation> out;
            for (long n = 0; n <= 6; ++n) {
                for (Equation &eq : polyver_equations(variant, default_polyver_args(), n, m)) {
                    eq.label = "n=" + std::to_string(n) + " " + eq.label;
                    out.push_back(std::move(eq));
                }
            }
            return out;
        };
    }
    return s;
}

} // namespace

Catalog::Catalog()
{
    // Each corollary sits next to the suites and classical inputs it builds on.
    const std::vector<std::string> order = {
        "t1ef", "polyver", "c1",   "c2",   "A.8",  "A.13",  "c3",   "A.16", "A.20", "c4",   "A.34",
        "A.36", "c1w",     "c2w",  "c3w",  "c4w",  "c2h",   "c3h",  "c4h",  "c2m2", "t2ef", "polyver2",
        "cc1",  "A.79",    "A.96", "cc2",  "A.38", "A.39",  "cc3",  "A.29", "A.50", "cc1w", "cc3w",
        "cc3h", "cc3r",    "t3ef", "cm1",  "cm4",  "c3m",   "c3wm", "c3hm", "cm4r", "cc1m"};
    const auto &suites = theorem_suite_ids();
    const auto &tags = slater_tags();
    for (const auto &id : order) {
        if (std::find(suites.begin(), suites.end(), id) != suites.end()) {
            entries_.push_back(theorem_suite(id));
        } else if (std::find(tags.begin(), tags.end(), id) != tags.end()) {
            entries_.push_back(slater_spec(id));
        } else {
            entries_.push_back(corollary_spec(id));
        }
    }
}

const Catalog &Catalog::standard()
{
    static const Catalog catalog;
    return catalog;
}

const IdentitySpec &Catalog::find(const std::string &id) const
{
    for (const auto &e : entries_) {
        if (e.id == id) {
            return e;
        }
    }
    throw UnknownIdentity("unknown identity '" + id + "'");
}

std::vector<const IdentitySpec *> Catalog::select(const std::string &filter) const
{
    std::vector<const IdentitySpec *> out;
    if (filter == "all" || filter.empty()) {
        for (const auto &e : entries_) {
            out.push_back(&e);
        }
        return out;
    }
    std::vector<bool> taken(entries_.size(), false);
    std::size_t start = 0;
    while (start <= filter.size()) {
        std::size_t comma = filter.find(',', start);
        if (comma == std::string::npos) {
            comma = filter.size();
        }
        const std::string item = filter.substr(start, comma - start);
        start = comma + 1;
        if (item.empty()) {
            continue;
        }
        bool matched = false;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const std::string &id = entries_[i].id;
            const bool hit = item.back() == '*' ? id.starts_with(item.substr(0, item.size() - 1)) : id == item;
            if (hit) {
                matched = true;
                taken[i] = true;
            }
        }
        if (!matched) {
            throw UnknownIdentity("no identity matches '" + item + "'");
        }
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (taken[i]) {
            out.push_back(&entries_[i]);
        }
    }
    return out;
}

VerificationReport Catalog::verify(const std::string &id, long m, long order) const
{
    return verify_spec(find(id), m, order);
}

std::vector<VerificationReport> Catalog::verify_range(const std::string &id, long m_lo, long m_hi, long order) const
{
    const IdentitySpec &spec = find(id);
    std::vector<VerificationReport> out;
    for (long m = m_lo; m <= m_hi; ++m) {
        out.push_back(verify_spec(spec, m, order));
    }
    return out;
}

} // namespace qverify
