#include "levelmod/bigness.hpp"

#include "levelmod/errors.hpp"
#include "levelmod/lp.hpp"

namespace levelmod::bigness {

namespace {

std::vector<BasisSymbol> boundary_symbols(const SpaceDescriptor& space) {
  std::vector<BasisSymbol> out;
  for (const auto& s : basis(space)) {
    if (s.is_boundary()) out.push_back(s);
  }
  return out;
}

void check_space(const DivisorClass& k, const EffectiveCatalog& catalog) {
  const auto model = k.space().model();
  if (model != Model::RPrimeGL && model != Model::RbarGL) {
    throw Error(ErrorCode::SpaceMismatch, "bigness certificates live on R' or Rbar, got " + k.space().name());
  }
  if (const auto space = catalog.space(); space && !(*space == k.space())) {
    throw Error(ErrorCode::SpaceMismatch, "catalog on " + space->name() + ", K on " + k.space().name());
  }
}

// Primal: minimize sum_i lambda(E_i) alpha_i subject to, for every boundary symbol s,
// sum_i (-E_{i,s}) alpha_i >= -K_s.
lp::LinearProgram primal_program(const DivisorClass& k, const EffectiveCatalog& catalog,
                                 const std::vector<BasisSymbol>& boundary) {
  const auto& entries = catalog.entries();
  lp::LinearProgram p;
  p.num_vars = entries.size();
  for (const auto& e : entries) p.objective.push_back(e.divisor.coeff(BasisSymbol::lambda()));
  for (const auto& s : boundary) {
    lp::Constraint c;
    for (const auto& e : entries) c.coeffs.push_back(-e.divisor.coeff(s));
    c.relation = lp::Relation::GreaterEqual;
    c.rhs = -k.coeff(s);
    p.constraints.push_back(std::move(c));
  }
  return p;
}

// Dual: minimize sum_s K_s y_s subject to sum_s (-E_{i,s}) y_s <= lambda(E_i), y >= 0.
lp::LinearProgram dual_program(const DivisorClass& k, const EffectiveCatalog& catalog,
                               const std::vector<BasisSymbol>& boundary) {
  lp::LinearProgram d;
  d.num_vars = boundary.size();
  for (const auto& s : boundary) d.objective.push_back(k.coeff(s));
  for (const auto& e : catalog.entries()) {
    lp::Constraint c;
    for (const auto& s : boundary) c.coeffs.push_back(-e.divisor.coeff(s));
    c.relation = lp::Relation::LessEqual;
    c.rhs = e.divisor.coeff(BasisSymbol::lambda());
    d.constraints.push_back(std::move(c));
  }
  return d;
}

DivisorClass combination(const SpaceDescriptor& space, const EffectiveCatalog& catalog,
                         const std::vector<Rational>& alpha) {
  DivisorClass sum(space);
  for (std::size_t i = 0; i < alpha.size(); ++i) sum += alpha[i] * catalog.entries()[i].divisor;
  return sum;
}

}  // namespace

void EffectiveCatalog::add(std::string name, DivisorClass divisor, std::string provenance) {
  if (name.empty()) throw Error(ErrorCode::InvalidCatalog, "catalog entry needs a name");
  if (find(name) != nullptr) throw Error(ErrorCode::InvalidCatalog, "duplicate catalog entry '" + name + "'");
  if (const auto sp = space(); sp && !(*sp == divisor.space())) {
    throw Error(ErrorCode::SpaceMismatch,
                "entry '" + name + "' on " + divisor.space().name() + ", catalog on " + sp->name());
  }
  entries_.push_back(CatalogEntry{std::move(name), std::move(divisor), std::move(provenance)});
}

const CatalogEntry* EffectiveCatalog::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::optional<SpaceDescriptor> EffectiveCatalog::space() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().divisor.space();
}

EffectiveCatalog builtin_catalog_8_3() {
  EffectiveCatalog catalog;
  catalog.add("mukai-improved", formulas::mukai_improved_class(8, 3, {.wirtinger = false, .ramified = true}),
              "virtual Mukai class minus 28 d0^(1): phi degenerates to order 2 along d0^(1)");
  catalog.add("koszul-improved", formulas::koszul_improved_class(3, 3),
              "virtual Koszul class (i = 3) minus C(5,2) d0^(1)");
  return catalog;
}

Rational BignessCertificate::coefficient(const std::string& name) const {
  for (const auto& [n, v] : coefficients) {
    if (n == name) return v;
  }
  return 0;
}

Verdict verify_certificate(const DivisorClass& k, const EffectiveCatalog& catalog,
                           const BignessCertificate& cert) {
  check_space(k, catalog);
  if (!(cert.residual.space() == k.space())) {
    throw Error(ErrorCode::SpaceMismatch, "residual on " + cert.residual.space().name());
  }
  for (const auto& [name, alpha] : cert.coefficients) {
    if (catalog.find(name) == nullptr) throw Error(ErrorCode::UnknownEntry, "no catalog entry '" + name + "'");
    if (alpha.sign() < 0) {
      throw Error(ErrorCode::NegativeCoefficient, "coefficient of '" + name + "' is " + alpha.str());
    }
  }

  DivisorClass residual = k;
  residual.add_term(BasisSymbol::lambda(), -cert.epsilon);
  for (const auto& entry : catalog.entries()) residual -= cert.coefficient(entry.name) * entry.divisor;

  Verdict v{true, residual, {}};
  if (cert.epsilon.sign() <= 0) v.failures.push_back("epsilon " + cert.epsilon.str() + " is not positive");
  for (const auto& [symbol, c] : residual.coefficients()) {
    const std::string name = display_name(residual.space(), symbol);
    if (!symbol.is_boundary()) {
      v.failures.push_back("residual has non-boundary term " + c.str() + " " + name);
    } else if (c.sign() < 0) {
      v.failures.push_back("residual coefficient of " + name + " is negative (" + c.str() + ")");
    }
  }
  if (!(residual == cert.residual)) {
    v.failures.push_back("stated residual " + cert.residual.str() + " differs from recomputed " + residual.str());
  }
  v.passed = v.failures.empty();
  return v;
}

EpsilonSearch max_epsilon(const DivisorClass& k, const EffectiveCatalog& catalog) {
  check_space(k, catalog);
  for (const auto& e : catalog.entries()) {
    if (e.divisor.coeff(BasisSymbol::lambda()).sign() <= 0) {
      throw Error(ErrorCode::NotNormalized, "catalog entry '" + e.name + "' has non-positive lambda coefficient");
    }
  }
  const auto boundary = boundary_symbols(k.space());
  const lp::LinearProgram primal = primal_program(k, catalog, boundary);

  EpsilonSearch search;
  const lp::Solution first = lp::solve_simplex(primal);
  if (first.status == lp::Status::Infeasible) return search;
  if (first.status == lp::Status::Unbounded) {
    throw Error(ErrorCode::InternalInconsistency, "epsilon unbounded despite positive lambda coefficients");
  }
  search.feasible = true;

  // Lexicographic tie-break: pin the optimal cost, then minimize alpha_0, alpha_1, ...
  std::vector<Rational> alpha = first.x;
  {
    lp::LinearProgram pinned = primal;
    pinned.constraints.push_back({primal.objective, lp::Relation::Equal, first.objective});
    for (std::size_t j = 0; j < primal.num_vars; ++j) {
      lp::LinearProgram step = pinned;
      step.objective.assign(primal.num_vars, Rational(0));
      step.objective[j] = 1;
      const lp::Solution s = lp::solve_simplex(step);
      if (s.status != lp::Status::Optimal) {
        throw Error(ErrorCode::InternalInconsistency, "tie-break step lost feasibility");
      }
      std::vector<Rational> unit(primal.num_vars);
      unit[j] = 1;
      pinned.constraints.push_back({unit, lp::Relation::Equal, s.objective});
      alpha[j] = s.objective;
    }
  }

  if (primal.num_vars <= 4) {
    const lp::Solution vertex = lp::solve_by_vertex_enumeration(primal);
    if (vertex.status != lp::Status::Optimal || vertex.objective != first.objective || vertex.x != alpha) {
      throw Error(ErrorCode::InternalInconsistency, "simplex and vertex enumeration disagree");
    }
  }

  BignessCertificate cert{k.coeff(BasisSymbol::lambda()) - first.objective, {}, DivisorClass(k.space())};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    cert.coefficients.emplace_back(catalog.entries()[i].name, alpha[i]);
  }
  cert.residual = k - combination(k.space(), catalog, alpha);
  cert.residual.set(BasisSymbol::lambda(), 0);
  for (const auto& s : boundary) {
    if (cert.residual.coeff(s).is_zero()) search.tight.push_back(s);
  }
  search.best = std::move(cert);

  const lp::Solution dual = lp::solve_simplex(dual_program(k, catalog, boundary));
  if (dual.status != lp::Status::Optimal || -dual.objective != first.objective) {
    throw Error(ErrorCode::InternalInconsistency, "dual optimum does not match primal optimum");
  }
  OptimalityWitness witness;
  for (std::size_t s = 0; s < boundary.size(); ++s) witness.weights.emplace_back(boundary[s], dual.x[s]);
  search.witness = std::move(witness);
  return search;
}

bool verify_optimality(const DivisorClass& k, const EffectiveCatalog& catalog, const EpsilonSearch& search) {
  if (!search.best || !search.witness) return false;
  Rational bound = k.coeff(BasisSymbol::lambda());
  for (const auto& [symbol, y] : search.witness->weights) {
    if (y.sign() < 0) return false;
    bound += y * k.coeff(symbol);
  }
  for (const auto& entry : catalog.entries()) {
    Rational lhs;
    for (const auto& [symbol, y] : search.witness->weights) lhs -= y * entry.divisor.coeff(symbol);
    if (lhs > entry.divisor.coeff(BasisSymbol::lambda())) return false;
  }
  return bound == search.best->epsilon;
}

GeneralTypeReport general_type_report(int g, int level, const EffectiveCatalog& catalog) {
  if (g > 23) {
    throw Error(ErrorCode::OutOfValidity, "the boundary reduction needs g <= 23, got " + std::to_string(g));
  }
  GeneralTypeReport report{g, level, restrict_to_partial(formulas::canonical_class(g, level)), {}, {}, false, {}};
  report.search = max_epsilon(report.canonical, catalog);

  if (report.search.best) {
    DivisorClass combined(report.canonical.space());
    for (const auto& [name, alpha] : report.search.best->coefficients) combined += alpha * catalog.find(name)->divisor;
    if (combined.coeff(BasisSymbol::lambda()).sign() > 0) {
      report.slopes = formulas::slope_bounds_ok(combined, g, level);
    }
  }

  report.general_type = report.search.proves_bigness();
  if (report.general_type) {
    report.conclusion = "K big => general type (epsilon = " + report.search.best->epsilon.str() + ")";
  } else if (report.search.best) {
    report.conclusion = "bigness not established: best epsilon = " + report.search.best->epsilon.str() + " <= 0";
  } else {
    report.conclusion = "bigness not established: no effective decomposition of K exists";
  }
  return report;
}

}  // namespace levelmod::bigness
