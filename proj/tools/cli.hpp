#pragma once

#include "levelmod/bigness.hpp"
#include "levelmod/divclass.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace levelmod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Text, Json };

struct ClassRequest {
  std::string formula_id;
  int genus = 0;  // 0 when not given
  int level = 0;
  int koszul_i = 0;  // 0: derive from genus
  bool restrict = false;
};

/// Evaluates one formula id; "census" is rejected here (see census_json).
DivisorClass evaluate_formula(const ClassRequest& request);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Pipeline-versus-statement checks for every prime l <= l_max, plus the fixed
/// (8, 3) checks and the certificate.
std::vector<Check> verify_theorems(int l_max);

nlohmann::ordered_json census_json(int g, int level);
nlohmann::ordered_json certificate_json(const bigness::GeneralTypeReport& report);
nlohmann::ordered_json checks_json(const std::vector<Check>& checks);

/// Reads a catalog: either a JSON array or {"entries": [...]}, each entry
/// {"name": str, "class": <divisor class>, "provenance": str (optional)}.
bigness::EffectiveCatalog catalog_from_json(const nlohmann::json& j);

/// Entry point shared by the executable and the tests. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levelmod::cli
