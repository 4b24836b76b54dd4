#pragma once

#include "levelmod/divclass.hpp"
#include "levelmod/formulas.hpp"

#include <optional>
#include <string>
#include <vector>

namespace levelmod::bigness {

struct CatalogEntry {
  std::string name;
  DivisorClass divisor;
  std::string provenance;
};

/// Named effective classes sharing one space. Names are unique.
class EffectiveCatalog {
 public:
  EffectiveCatalog() = default;

  void add(std::string name, DivisorClass divisor, std::string provenance = {});

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const CatalogEntry* find(const std::string& name) const;
  /// Space of the entries; nullopt for an empty catalog.
  std::optional<SpaceDescriptor> space() const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// The effective classes used for Rbar_{8,3}: the Mukai class with its order-2
/// degeneracy along d0^(1) removed, and the Koszul class for i = 3 with its
/// degeneracy along d0^(1) removed.
EffectiveCatalog builtin_catalog_8_3();

/// Witness of K = epsilon lambda + sum_i alpha_i E_i + residual.
struct BignessCertificate {
  Rational epsilon;
  /// Coefficients in catalog order.
  std::vector<std::pair<std::string, Rational>> coefficients;
  DivisorClass residual;

  Rational coefficient(const std::string& name) const;
};

struct Verdict {
  bool passed = false;
  DivisorClass residual;  // K - epsilon lambda - sum alpha_i E_i, recomputed
  std::vector<std::string> failures;
};

/// Recomputes the residual and checks that it is boundary-supported, non-negative and
/// equal to the certificate's residual, and that epsilon > 0.
/// Throws SpaceMismatch, NegativeCoefficient (alpha_i < 0) or UnknownEntry.
Verdict verify_certificate(const DivisorClass& k, const EffectiveCatalog& catalog,
                           const BignessCertificate& cert);

/// Dual solution proving optimality of epsilon: a non-negative weight on every boundary
/// symbol with sum_s y_s (-E_{i,s}) <= lambda(E_i) for every entry and
/// lambda(K) + sum_s y_s K_s = epsilon.
struct OptimalityWitness {
  std::vector<std::pair<BasisSymbol, Rational>> weights;
};

struct EpsilonSearch {
  /// False when no non-negative combination makes every boundary coefficient of
  /// K - sum alpha_i E_i non-negative.
  bool feasible = false;
  /// Optimal certificate; present whenever `feasible`, even if epsilon <= 0.
  std::optional<BignessCertificate> best;
  std::optional<OptimalityWitness> witness;
  /// Symbols whose boundary constraint is tight at the optimum.
  std::vector<BasisSymbol> tight;

  bool proves_bigness() const { return best && best->epsilon.sign() > 0; }
};

/// Maximizes epsilon = lambda(K - sum alpha_i E_i) subject to alpha >= 0 and
/// coeff_s(K - sum alpha_i E_i) >= 0 for every boundary symbol s of the space.
/// Exact simplex; among optimal alphas the lexicographically smallest (catalog order) is
/// returned. For at most four entries the optimum is cross-checked against vertex
/// enumeration. Every catalog entry must have a positive lambda coefficient.
EpsilonSearch max_epsilon(const DivisorClass& k, const EffectiveCatalog& catalog);

/// Checks the dual witness of a search against K and the catalog.
bool verify_optimality(const DivisorClass& k, const EffectiveCatalog& catalog, const EpsilonSearch& search);

struct GeneralTypeReport {
  int genus = 0;
  int level = 0;
  DivisorClass canonical;
  EpsilonSearch search;
  /// Slope check of sum alpha_i E_i, when that class has positive lambda coefficient.
  std::optional<formulas::SlopeReport> slopes;
  bool general_type = false;
  std::string conclusion;
};

/// K of R'_{g,l} against the catalog. Bigness on the partial compactification suffices
/// for g <= 23; larger g throws OutOfValidity.
GeneralTypeReport general_type_report(int g, int level, const EffectiveCatalog& catalog);

}  // namespace levelmod::bigness
