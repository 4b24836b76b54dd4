#include "cli.hpp"

#include "levelmod/errors.hpp"
#include "levelmod/formulas.hpp"
#include "levelmod/porteous.hpp"
#include "levelmod/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace levelmod::cli {

namespace {

namespace f = formulas;

void require_level(int level) {
  if (!is_prime(level)) throw Error(ErrorCode::InvalidSpace, "--l must be a prime, got " + std::to_string(level));
}

void require_genus(int genus) {
  if (genus <= 0) throw Error(ErrorCode::OutOfValidity, "--g is required");
}

int koszul_index(const ClassRequest& r) {
  if (r.koszul_i > 0) return r.koszul_i;
  require_genus(r.genus);
  if (r.genus % 2 != 0) {
    throw Error(ErrorCode::OutOfValidity, "Koszul classes need even genus g = 2i + 2, got " + std::to_string(r.genus));
  }
  return (r.genus - 2) / 2;
}

std::string status_word(bool passed) { return passed ? "PASS" : "FAIL"; }

Check equality_check(std::string name, const DivisorClass& got, const DivisorClass& expected) {
  const bool ok = got == expected;
  std::string detail = got.str();
  if (!ok) detail += " != " + expected.str();
  return Check{std::move(name), ok, std::move(detail)};
}

std::string join_symbols(const SpaceDescriptor& space, const std::vector<BasisSymbol>& symbols) {
  std::string out;
  for (const auto& s : symbols) {
    if (!out.empty()) out += ", ";
    out += display_name(space, s);
  }
  return out;
}

void print_class(std::ostream& out, const DivisorClass& x, Format format, bool decimals) {
  if (format == Format::Json) {
    out << class_to_json(x).dump(2) << '\n';
  } else {
    out << x.str(decimals) << '\n';
  }
}

}  // namespace

DivisorClass evaluate_formula(const ClassRequest& r) {
  const std::string& id = r.formula_id;
  if (id != f::kKoszulVirtual && id != f::kKoszulImproved && id != f::kCanonical && id != f::kMukaiVirtual &&
      id != f::kMukaiImproved && id != f::kRho) {
    throw Error(ErrorCode::UnknownFormula, "'" + id + "'");
  }
  require_level(r.level);
  DivisorClass result(SpaceDescriptor::mbar(4));
  if (id == f::kCanonical) {
    require_genus(r.genus);
    result = f::canonical_class(r.genus, r.level);
  } else if (id == f::kMukaiVirtual) {
    require_genus(r.genus);
    result = f::mukai_virtual_class(r.genus, r.level);
  } else if (id == f::kMukaiImproved) {
    require_genus(r.genus);
    result = f::mukai_improved_class(r.genus, r.level);
  } else if (id == f::kKoszulVirtual) {
    result = f::koszul_virtual_class(koszul_index(r), r.level);
  } else if (id == f::kKoszulImproved) {
    result = f::koszul_improved_class(koszul_index(r), r.level);
  } else {
    result = f::rho(r.level, SpaceDescriptor::rprime(r.genus > 0 ? r.genus : 4, r.level));
  }
  if (r.restrict && result.space().model() == Model::RbarGL) result = restrict_to_partial(result);
  return result;
}

std::vector<Check> verify_theorems(int l_max) {
  std::vector<Check> checks;
  for (int g : {6, 8}) {
    const auto cfg = porteous::make_config(g, 2);
    const bool closed = porteous::c1_F(cfg) - porteous::c1_E(cfg) == porteous::degeneracy_closed_form(cfg);
    checks.push_back({"porteous-closed-form-r" + std::to_string(cfg.r), closed,
                      "c1(F) - c1(E) = " + porteous::degeneracy_closed_form(cfg).str()});
  }
  for (int g : {6, 8}) {
    for (int l = 2; l <= l_max; ++l) {
      if (!is_prime(l)) continue;
      checks.push_back(equality_check("mukai-g" + std::to_string(g) + "-l" + std::to_string(l),
                                      porteous::derive_mukai_class(g, l), f::mukai_virtual_class(g, l)));
    }
  }
  for (int g : {6, 8}) {
    // The short-form statement writes the d0'' coefficient equal to the d0' one; the
    // pipeline differs from it by exactly the -2 frak_d term, i.e. -2 deg(sigma) d0''.
    const auto cfg = porteous::make_config(g, 2);
    const DivisorClass diff = f::mukai_virtual_class(g, 2) - f::mukai_summary_statement_class(g, 2);
    const DivisorClass expected(cfg.target(), {{BasisSymbol::delta0_double_prime(), Rational(-2 * cfg.deg_sigma)}});
    checks.push_back({"short-form-d0pp-discrepancy-g" + std::to_string(g), diff == expected,
                      "pipeline minus short form = " + diff.str() + " (the -2 frak_d contribution)"});
  }

  const auto rprime83 = SpaceDescriptor::rprime(8, 3);
  using S = BasisSymbol;
  checks.push_back(equality_check(
      "koszul-improved-8-3", f::koszul_improved_class(3, 3),
      DivisorClass(rprime83, {{S::lambda(), 38}, {S::delta0_prime(), -6}, {S::delta0_double_prime(), -6},
                              {S::delta0_ram(1), Rational(-32, 3)}})));
  {
    const Integer order = f::koszul_boundary_degeneracy_order(3);
    checks.push_back({"koszul-degeneracy-order-3", order == 10, "C(5,2) = " + order.str()});
  }
  checks.push_back(equality_check(
      "mukai-ramified-8-3", f::mukai_improved_class(8, 3, {.wirtinger = false, .ramified = true}),
      DivisorClass(rprime83, {{S::lambda(), 196}, {S::delta0_prime(), -28}, {S::delta0_double_prime(), -56},
                              {S::delta0_ram(1), Rational(-308, 3)}})));

  const auto catalog = bigness::builtin_catalog_8_3();
  const auto report = bigness::general_type_report(8, 3, catalog);
  bool cert_ok = false;
  std::string detail = report.conclusion;
  if (report.search.best) {
    const auto verdict = bigness::verify_certificate(report.canonical, catalog, *report.search.best);
    cert_ok = verdict.passed && report.search.best->epsilon == Rational(3, 17) &&
              report.search.best->coefficient("mukai-improved") == Rational(1, 119) &&
              report.search.best->coefficient("koszul-improved") == Rational(5, 17);
    detail = "epsilon=" + report.search.best->epsilon.str();
  }
  checks.push_back({"certificate-8-3", cert_ok, detail});
  return checks;
}

nlohmann::ordered_json census_json(int g, int level) {
  const auto c = f::boundary_census(g, level);
  nlohmann::ordered_json j;
  j["g"] = g;
  j["l"] = level;
  j["wirtinger_components"] = c.wirtinger_components;
  j["wirtinger_degree_each"] = c.wirtinger_degree_each;
  j["delta0prime_count"] = c.delta0prime_count.str();
  j["delta0ram_degree"] = c.delta0ram_degree.str();
  return j;
}

nlohmann::ordered_json certificate_json(const bigness::GeneralTypeReport& report) {
  nlohmann::ordered_json j;
  const auto& best = report.search.best;
  j["epsilon"] = best ? nlohmann::ordered_json(best->epsilon.str()) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  nlohmann::ordered_json residual = nlohmann::ordered_json::object();
  nlohmann::ordered_json tight = nlohmann::ordered_json::array();
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  const auto& space = report.canonical.space();
  if (best) {
    for (const auto& [name, alpha] : best->coefficients) coeffs[name] = alpha.str();
    for (const auto& [symbol, c] : best->residual.coefficients()) residual[symbol_key(space, symbol)] = c.str();
    for (const auto& s : report.search.tight) tight.push_back(symbol_key(space, s));
  }
  if (report.search.witness) {
    for (const auto& [symbol, y] : report.search.witness->weights) witness[symbol_key(space, symbol)] = y.str();
  }
  j["coefficients"] = coeffs;
  j["residual"] = residual;
  j["verdict"] = report.general_type ? "general-type" : "not-established";
  j["tight"] = tight;
  j["dual_witness"] = witness;
  if (report.slopes) {
    nlohmann::ordered_json slopes = nlohmann::ordered_json::array();
    for (const auto& c : report.slopes->checks) {
      slopes.push_back({{"symbol", symbol_key(space, c.symbol)},
                        {"ratio", c.ratio ? nlohmann::ordered_json(c.ratio->str()) : nlohmann::ordered_json(nullptr)},
                        {"bound", c.bound.str()},
                        {"status", c.passed ? "pass" : "fail"}});
    }
    j["slope_checks"] = slopes;
  }
  j["conclusion"] = report.conclusion;
  return j;
}

nlohmann::ordered_json checks_json(const std::vector<Check>& checks) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  }
  return nlohmann::ordered_json{{"checks", list}};
}

bigness::EffectiveCatalog catalog_from_json(const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  if (j.is_object() && j.contains("entries")) list = &j.at("entries");
  if (!list->is_array()) throw Error(ErrorCode::ParseError, "catalog must be an array of entries");
  bigness::EffectiveCatalog catalog;
  for (const auto& e : *list) {
    if (!e.is_object() || !e.contains("name") || !e.contains("class") || !e.at("name").is_string()) {
      throw Error(ErrorCode::ParseError, "catalog entry needs \"name\" and \"class\"");
    }
    std::string provenance;
    if (e.contains("provenance") && e.at("provenance").is_string()) provenance = e.at("provenance").get<std::string>();
    catalog.add(e.at("name").get<std::string>(), class_from_json(e.at("class")), std::move(provenance));
  }
  return catalog;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact divisor-class calculus on moduli of level curves"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  Format format = Format::Text;
  bool decimals = false;
  int genus = 0;
  int level = 0;

  ClassRequest request;
  auto* cls = app.add_subcommand("class", "Print a closed-form divisor class");
  cls->add_option("formula", request.formula_id, "canonical, mukai-virtual, mukai-improved, koszul-virtual, "
                                                  "koszul-improved, rho, census")
      ->required();
  cls->add_option("--g", genus, "genus");
  cls->add_option("--l", level, "level (prime)")->required();
  cls->add_option("--i", request.koszul_i, "Koszul index (default (g - 2) / 2)");
  cls->add_flag("--restrict", request.restrict, "restrict to the partial compactification");
  cls->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cls->add_flag("--decimal", decimals, "append decimal approximations");

  auto* derive = app.add_subcommand("derive", "Derive the virtual Mukai class step by step");
  derive->add_option("--g", genus, "genus (6 or 8)")->required();
  derive->add_option("--l", level, "level (prime)")->required();
  derive->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  derive->add_flag("--decimal", decimals, "append decimal approximations");

  auto* census = app.add_subcommand("census", "Boundary component counts");
  census->add_option("--g", genus, "genus")->required();
  census->add_option("--l", level, "level (prime)")->required();
  census->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string catalog_path;
  bool builtin_catalog = false;
  Format certify_format = Format::Json;
  auto* certify = app.add_subcommand("certify", "Search for a bigness certificate of K");
  certify->add_option("catalog", catalog_path, "catalog JSON file");
  certify->add_option("--g", genus, "genus")->required();
  certify->add_option("--l", level, "level (prime)")->required();
  certify->add_flag("--use-paper-catalog", builtin_catalog, "use the built-in (8, 3) catalog");
  certify->add_option("--format", certify_format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  int l_max = 13;
  auto* verify = app.add_subcommand("verify-theorems", "Re-derive and cross-check every stated class");
  verify->add_option("--l-max", l_max, "largest level to check");
  verify->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::vector<std::string> argv_storage{"levelmod"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cls->parsed()) {
      request.genus = genus;
      request.level = level;
      if (request.formula_id == f::kCensus) {
        require_genus(genus);
        require_level(level);
        out << census_json(genus, level).dump(2) << '\n';
        return kExitOk;
      }
      print_class(out, evaluate_formula(request), format, decimals);
      return kExitOk;
    }
    if (derive->parsed()) {
      require_level(level);
      const auto steps = porteous::derivation_transcript(genus, level);
      if (format == Format::Json) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& s : steps) {
          list.push_back({{"step", s.label}, {"justification", s.justification}, {"class", class_to_json(s.value)}});
        }
        out << nlohmann::ordered_json{{"steps", list}}.dump(2) << '\n';
      } else {
        for (const auto& s : steps) {
          out << s.label << " = " << s.value.str(decimals) << "    [" << s.justification << "]\n";
        }
      }
      return kExitOk;
    }
    if (census->parsed()) {
      require_level(level);
      if (format == Format::Json) {
        out << census_json(genus, level).dump(2) << '\n';
      } else {
        const auto c = f::boundary_census(genus, level);
        out << "wirtinger components: " << c.wirtinger_components << " (degree " << c.wirtinger_degree_each
            << " each over Delta_0)\n"
            << "d0' choices: " << c.delta0prime_count.str() << '\n'
            << "degree of each d0^(a) over Delta_0: " << c.delta0ram_degree.str() << '\n';
      }
      return kExitOk;
    }
    if (certify->parsed()) {
      require_level(level);
      bigness::EffectiveCatalog catalog;
      if (builtin_catalog) {
        if (genus != 8 || level != 3) {
          throw Error(ErrorCode::OutOfValidity, "the built-in catalog exists only for (g, l) = (8, 3)");
        }
        catalog = bigness::builtin_catalog_8_3();
      } else {
        if (catalog_path.empty()) throw Error(ErrorCode::OutOfValidity, "give a catalog file or --use-paper-catalog");
        std::ifstream in(catalog_path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + catalog_path + "'");
        nlohmann::json j;
        try {
          in >> j;
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
        catalog = catalog_from_json(j);
      }
      const auto report = bigness::general_type_report(genus, level, catalog);
      if (certify_format == Format::Json) {
        out << certificate_json(report).dump(2) << '\n';
      } else {
        out << "K = " << report.canonical.str() << '\n';
        if (report.search.best) {
          out << "epsilon = " << report.search.best->epsilon.str() << '\n';
          for (const auto& [name, alpha] : report.search.best->coefficients) {
            out << "alpha[" << name << "] = " << alpha.str() << '\n';
          }
          out << "residual = " << report.search.best->residual.str() << '\n';
          out << "tight: " << join_symbols(report.canonical.space(), report.search.tight) << '\n';
        }
        out << report.conclusion << '\n';
      }
      return report.general_type ? kExitOk : kExitVerificationFailed;
    }
    if (verify->parsed()) {
      if (l_max < 2) throw Error(ErrorCode::OutOfValidity, "--l-max must be at least 2");
      const auto checks = verify_theorems(l_max);
      bool all = true;
      for (const auto& c : checks) all = all && c.passed;
      if (format == Format::Json) {
        out << checks_json(checks).dump(2) << '\n';
      } else {
        for (const auto& c : checks) out << c.name << ": " << c.detail << ' ' << status_word(c.passed) << '\n';
      }
      return all ? kExitOk : kExitVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace levelmod::cli
