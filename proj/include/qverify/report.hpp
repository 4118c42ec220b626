#pragma once

#include <string>

#include <json.hpp>
#include "qverify/catalog.hpp"

namespace qverify {

// Record schema: identity, m, order, pass, first_mismatch {exponent, lhs, rhs}
// or null, elapsed_ms. Coefficients are exact "p/q" strings.
nlohmann::json report_to_json(const VerificationReport &r);
VerificationReport report_from_json(const nlohmann::json &j);
std::string format_text(const VerificationReport &r);

nlohmann::json spec_to_json(const IdentitySpec &s);

} // namespace qverify
