#include "qverify/report.hpp"

#include <cstdio>

namespace qverify {

nlohmann::json report_to_json(const VerificationReport &r)
{
    nlohmann::json j;
    j["identity"] = r.identity;
    j["m"] = r.m;
    j["order"] = r.order;
    j["pass"] = r.pass;
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                               {"lhs", to_string(r.first_mismatch->lhs)},
                               {"rhs", to_string(r.first_mismatch->rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

VerificationReport report_from_json(const nlohmann::json &j)
{
    VerificationReport r;
    r.identity = j.at("identity").get<std::string>();
    r.m = j.at("m").get<long>();
    r.order = j.at("order").get<long>();
    r.pass = j.at("pass").get<bool>();
    const auto &fm = j.at("first_mismatch");
    if (!fm.is_null()) {
        r.first_mismatch = Mismatch{fm.at("exponent").get<long>(), parse_rational(fm.at("lhs").get<std::string>()),
                                    parse_rational(fm.at("rhs").get<std::string>())};
    }
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

std::string format_text(const VerificationReport &r)
{
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f ms", r.elapsed_ms);
    std::string line = std::string(r.pass ? "PASS " : "FAIL ") + r.identity + " m=" + std::to_string(r.m) +
                       " order=" + std::to_string(r.order);
    if (r.first_mismatch) {
        line += " first mismatch at q^" + std::to_string(r.first_mismatch->exponent) +
                ": lhs=" + to_string(r.first_mismatch->lhs) + " rhs=" + to_string(r.first_mismatch->rhs);
        if (!r.failed_equation.empty()) {
            line += " [" + r.failed_equation + "]";
        }
    }
    return line + " (" + ms + ")";
}

nlohmann::json spec_to_json(const IdentitySpec &s)
{
    nlohmann::json dom = {{"lo", s.m_domain.lo}};
    dom["hi"] = s.m_domain.hi ? nlohmann::json(*s.m_domain.hi) : nlohmann::json(nullptr);
    return {{"id", s.id},
            {"kind", to_string(s.kind)},
            {"m_domain", dom},
            {"anchor", s.anchor},
            {"description", s.description}};
}

} // namespace qverify
