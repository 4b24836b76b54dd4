#include "levelmod/serialize.hpp"

#include "levelmod/errors.hpp"

#include <charconv>

namespace levelmod {

namespace {

int parse_index(const std::string& text, const std::string& key) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "malformed symbol key '" + key + "'");
  }
  return value;
}

BasisSymbol checked(const SpaceDescriptor& space, BasisSymbol s, const std::string& key) {
  if (!in_basis(space, s)) {
    throw Error(ErrorCode::InvalidSymbol, "key '" + key + "' is not in the basis of " + space.name());
  }
  return s;
}

std::string model_name(Model m) {
  switch (m) {
    case Model::MbarG: return "Mbar";
    case Model::RbarGL: return "Rbar";
    case Model::RPrimeGL: return "RPrime";
    case Model::GSpace: return "G";
  }
  return "?";
}

Rational parse_coefficient(const nlohmann::json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw Error(ErrorCode::ParseError, "coefficient must be a string \"p/q\" or an integer");
}

}  // namespace

std::string symbol_key(const SpaceDescriptor& space, const BasisSymbol& s) {
  const int g = space.genus();
  switch (s.kind) {
    case SymbolKind::Lambda: return "lambda";
    case SymbolKind::Delta0: return "d0";
    case SymbolKind::Delta0Prime: return "d0p";
    case SymbolKind::Delta0DoublePrime: return "d0pp";
    case SymbolKind::Delta0Ram: return "d0r" + std::to_string(s.index);
    case SymbolKind::DeltaI: return "d" + std::to_string(s.index);
    case SymbolKind::DeltaGMinusI: return "d" + std::to_string(g - s.index);
    case SymbolKind::DeltaIColonGMinusI:
      return "d" + std::to_string(s.index) + ":" + std::to_string(g - s.index);
    case SymbolKind::FrakA: return "frak_a";
    case SymbolKind::FrakB: return "frak_b";
    case SymbolKind::FrakC: return "frak_c";
    case SymbolKind::FrakD: return "frak_d";
    case SymbolKind::Rho: return "rho";
    case SymbolKind::PullbackDelta0: return "pi_d0";
  }
  return "?";
}

BasisSymbol parse_symbol_key(const SpaceDescriptor& space, const std::string& key) {
  if (key == "lambda") return checked(space, BasisSymbol::lambda(), key);
  if (key == "d0") return checked(space, BasisSymbol::delta0(), key);
  if (key == "d0p") return checked(space, BasisSymbol::delta0_prime(), key);
  if (key == "d0pp") return checked(space, BasisSymbol::delta0_double_prime(), key);
  if (key == "frak_a") return checked(space, BasisSymbol::frak_a(), key);
  if (key == "frak_b") return checked(space, BasisSymbol::frak_b(), key);
  if (key == "frak_c") return checked(space, BasisSymbol::frak_c(), key);
  if (key == "frak_d") return checked(space, BasisSymbol::frak_d(), key);
  if (key == "rho") return checked(space, BasisSymbol::rho(), key);
  if (key == "pi_d0") return checked(space, BasisSymbol::pullback_delta0(), key);
  if (key.rfind("d0r", 0) == 0) {
    return checked(space, BasisSymbol::delta0_ram(parse_index(key.substr(3), key)), key);
  }
  if (key.size() > 1 && key[0] == 'd') {
    const std::string rest = key.substr(1);
    const auto colon = rest.find(':');
    if (colon != std::string::npos) {
      const int i = parse_index(rest.substr(0, colon), key);
      const int j = parse_index(rest.substr(colon + 1), key);
      if (i + j != space.genus() || i > j) {
        throw Error(ErrorCode::InvalidSymbol, "key '" + key + "' does not match genus " +
                                                  std::to_string(space.genus()));
      }
      return checked(space, BasisSymbol::delta_i_colon(i), key);
    }
    const int k = parse_index(rest, key);
    if (k <= space.half_genus()) return checked(space, BasisSymbol::delta_i(k), key);
    return checked(space, BasisSymbol::delta_g_minus_i(space.genus() - k), key);
  }
  throw Error(ErrorCode::ParseError, "unknown symbol key '" + key + "'");
}

nlohmann::json space_to_json(const SpaceDescriptor& space) {
  nlohmann::json j;
  j["g"] = space.genus();
  if (space.has_level()) j["l"] = space.level();
  j["model"] = model_name(space.model());
  return j;
}

SpaceDescriptor space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("model")) {
    throw Error(ErrorCode::ParseError, "space must be an object with \"g\" and \"model\"");
  }
  try {
    const int g = j.at("g").get<int>();
    const std::string model = j.at("model").get<std::string>();
    if (model == "Mbar") return SpaceDescriptor::mbar(g);
    const int l = j.at("l").get<int>();
    if (model == "Rbar") return SpaceDescriptor::rbar(g, l);
    if (model == "RPrime") return SpaceDescriptor::rprime(g, l);
    if (model == "G") return SpaceDescriptor::gspace(g, l);
    throw Error(ErrorCode::ParseError, "unknown model '" + model + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad space descriptor: ") + e.what());
  }
}

nlohmann::json coeffs_to_json(const DivisorClass& x) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [symbol, value] : x.coefficients()) {
    coeffs[symbol_key(x.space(), symbol)] = value.str();
  }
  return coeffs;
}

DivisorClass coeffs_from_json(const SpaceDescriptor& space, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "\"coeffs\" must be an object");
  DivisorClass out(space);
  for (const auto& [key, value] : j.items()) {
    out.add_term(parse_symbol_key(space, key), parse_coefficient(value));
  }
  return out;
}

nlohmann::json class_to_json(const DivisorClass& x) {
  return nlohmann::json{{"space", space_to_json(x.space())}, {"coeffs", coeffs_to_json(x)}};
}

DivisorClass class_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("coeffs")) {
    throw Error(ErrorCode::ParseError, "divisor class must have \"space\" and \"coeffs\"");
  }
  return coeffs_from_json(space_from_json(j.at("space")), j.at("coeffs"));
}

}  // namespace levelmod
