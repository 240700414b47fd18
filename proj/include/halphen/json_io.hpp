#pragma once

#include <json.hpp>

#include "halphen/bounds.hpp"
#include "halphen/delta.hpp"
#include "halphen/families.hpp"
#include "halphen/oracle.hpp"
#include "halphen/profile.hpp"

namespace halphen {

// Rationals render as a plain integer when integral and as an exact "p/q"
// string otherwise; floats never appear.
nlohmann::json rational_to_json(const Rational& value);

// Profile schema: {"offset": int, "values": [int, ...]}, zeros trimmed at
// both ends; the zero profile is {"offset": 0, "values": []}.
void to_json(nlohmann::json& j, const Profile& p);
void from_json(const nlohmann::json& j, Profile& p);

void to_json(nlohmann::json& j, const DeltaParams& q);
void to_json(nlohmann::json& j, const PrDeltaParams& q);
void to_json(nlohmann::json& j, const PropertyCheck& c);
void to_json(nlohmann::json& j, const DeltaPropertyReport& r);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const HalphenGenus& r);
void to_json(nlohmann::json& j, const ExtremalityReport& r);
void to_json(nlohmann::json& j, const FamilySpec& s);
void to_json(nlohmann::json& j, const FamilyReport& r);

} // namespace halphen
