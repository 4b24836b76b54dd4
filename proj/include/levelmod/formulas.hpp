#pragma once

#include "levelmod/divclass.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace levelmod::formulas {

/// Stable identifiers used by the command-line front end.
inline constexpr std::string_view kCanonical = "canonical";
inline constexpr std::string_view kMukaiVirtual = "mukai-virtual";
inline constexpr std::string_view kMukaiImproved = "mukai-improved";
inline constexpr std::string_view kKoszulVirtual = "koszul-virtual";
inline constexpr std::string_view kKoszulImproved = "koszul-improved";
inline constexpr std::string_view kRho = "rho";
inline constexpr std::string_view kCensus = "census";

const std::vector<std::string_view>& formula_ids();

/// Canonical class of Rbar_{g,l}:
///   13 lambda - 2(d0' + d0'') - (l+1) sum_k d0^(k)
///     - 2 sum_i (d_i + d_{g-i} + d_{i:g-i}) - d_{g-1}.
/// Valid for g >= 4, l >= 3.
DivisorClass canonical_class(int g, int level);

/// rho = sum_a a(l-a)/l * d0^(a) on any space carrying the d0^(a) symbols of level l.
DivisorClass rho(int level, const SpaceDescriptor& space);

/// Virtual class of the Mukai degeneracy locus on R'_{g,l}, g in {6, 8}:
///   g = 6:  35 lambda - 5(d0' + 3 d0'') - (5/l) sum_a (l^2 - a l + a^2) d0^(a)
///   g = 8: 196 lambda - 28(d0' + 2 d0'') - (14/l) sum_a (2 l^2 - a l + a^2) d0^(a)
DivisorClass mukai_virtual_class(int g, int level);

/// The same class with d0'' written as in the introductory summary,
/// -5(d0' + d0'') resp. -28(d0' + d0''). Kept only to document the discrepancy.
DivisorClass mukai_summary_statement_class(int g, int level);

/// Boundary degeneracy corrections applied on top of the virtual Mukai class.
struct MukaiCorrections {
  /// phi degenerates along d0'' (order 1 for g = 6, order 2 for g = 8):
  /// subtract 5 d0'' resp. 28 d0''.
  bool wirtinger = true;
  /// For (g, l) = (8, 3) only: phi degenerates to order 2 along d0^(1),
  /// subtract 2 * deg(sigma) = 28 d0^(1).
  bool ramified = true;
};

DivisorClass mukai_improved_class(int g, int level, MukaiCorrections corrections = {});

/// (1/(i-1)) * C(2i-2, i); defined for i >= 2.
Rational koszul_prefactor(int i);

/// The parity hypothesis "i odd or C(2i-1, i) even".
bool koszul_parity_holds(int i);

/// Virtual class of the Koszul divisor D_{g,l}, g = 2i + 2, on R'_{g,l}:
///   prefactor * ((6i+1) lambda - i(d0' + d0'')
///                - (1/l) sum_a (i l^2 + 5a^2 i - 5a i l - 2a^2 + 2a l) d0^(a))
DivisorClass koszul_virtual_class(int i, int level);

/// Order to which the Koszul map degenerates along every d0^(a), i.e. C(2i-1, i-1),
/// obtained as 5 C(2i-1, i-1) - 2 C(2i, i).
Integer koszul_boundary_degeneracy_order(int i);

/// Virtual Koszul class minus C(2i-1, i-1) * sum_a d0^(a).
DivisorClass koszul_improved_class(int i, int level);

struct BoundaryCensus {
  int wirtinger_components = 0;   // floor(l/2) components of d0''
  int wirtinger_degree_each = 0;  // each of degree 2 over Delta_0
  Integer delta0prime_count;      // l (l^{2g-2} - 1) choices of eta with nontrivial pullback
  Integer delta0ram_degree;       // 2 l^{2g-2}, for every a
};

BoundaryCensus boundary_census(int g, int level);

struct SlopeCheck {
  BasisSymbol symbol;
  Rational a;                     // lambda coefficient
  Rational b;                     // minus the symbol's coefficient
  std::optional<Rational> ratio;  // a / b when b > 0
  Rational bound;
  bool passed = false;
};

struct SlopeReport {
  std::vector<SlopeCheck> checks;
  bool all_passed = false;
};

/// Checks a/b < 13/2 for d0', d0'' and a/b < 13/(l+1) for each d0^(k), the reduced
/// criterion sufficient for bigness of K when g <= 23. Non-positive b fails.
SlopeReport slope_bounds_ok(const DivisorClass& e, int g, int level);

}  // namespace levelmod::formulas
