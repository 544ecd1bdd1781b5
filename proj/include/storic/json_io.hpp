#pragma once

#include "storic/verify.hpp"

#include <json.hpp>

namespace storic {

using json = nlohmann::ordered_json;

// Exponents and certificate integers are decimal strings so arbitrary
// precision round-trips exactly.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const FamilyParams& p);
FamilyParams params_from_json(const json& j);

// Binomial as two exponent maps keyed by variable name ("x1".."xn",
// "y1".."yn").
json to_json(const Binomial& b, int n);
Binomial binomial_from_json(const json& j, int n);

json to_json(const CertificateSet& c);
json to_json(const EquationSystem& s);
EquationSystem system_from_json(const json& j);

json to_json(const RankReport& r);

json to_json(const Prop1Report& r);
json to_json(const Prop2Report& r);
json to_json(const MembershipVerdict& v);
json to_json(const WitnessCertificate& w);
json to_json(const LemmaReport& r);

std::string format_binomial(const Binomial& b, int n);

}  // namespace storic
