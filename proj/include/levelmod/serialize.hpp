#pragma once

#include "levelmod/divclass.hpp"

#include <json.hpp>

#include <string>

namespace levelmod {

/// JSON key of a basis symbol: "lambda", "d0", "d0p", "d0pp", "d0r<a>", "d<k>",
/// "d<i>:<g-i>", "frak_a".."frak_d", "rho", "pi_d0".
std::string symbol_key(const SpaceDescriptor& space, const BasisSymbol& symbol);
BasisSymbol parse_symbol_key(const SpaceDescriptor& space, const std::string& key);

/// {"g": 8, "l": 3, "model": "RPrime"}; model is one of Mbar, Rbar, RPrime, G.
nlohmann::json space_to_json(const SpaceDescriptor& space);
SpaceDescriptor space_from_json(const nlohmann::json& j);

/// {"space": {...}, "coeffs": {"lambda": "13", "d0p": "-2", ...}}; rationals as strings.
nlohmann::json class_to_json(const DivisorClass& x);
DivisorClass class_from_json(const nlohmann::json& j);

/// Coefficient map only, e.g. {"d0pp": "4/17"}.
nlohmann::json coeffs_to_json(const DivisorClass& x);
DivisorClass coeffs_from_json(const SpaceDescriptor& space, const nlohmann::json& j);

}  // namespace levelmod
