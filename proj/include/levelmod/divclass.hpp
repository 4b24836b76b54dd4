#pragma once

#include "levelmod/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace levelmod {

/// Which moduli space (and hence which divisor basis) a class lives on.
enum class Model {
  MbarG,     // Deligne-Mumford compactification of M_g
  RbarGL,    // level-l compactification
  RPrimeGL,  // partial compactification: smooth and irreducible one-nodal curves
  GSpace,    // universal linear-series space used by the degeneracy-locus pipeline
};

/// Identifies a space together with the data fixing its Picard basis.
///
/// Genus is at least 4 and the level is prime; M_g carries no level (stored as 0).
/// The linear-series space only exists for (g, r, d) = (6, 2, 6) and (8, 3, 9).
class SpaceDescriptor {
 public:
  static SpaceDescriptor mbar(int genus);
  static SpaceDescriptor rbar(int genus, int level);
  static SpaceDescriptor rprime(int genus, int level);
  static SpaceDescriptor gspace(int genus, int level);

  int genus() const { return genus_; }
  int level() const { return level_; }
  Model model() const { return model_; }
  /// Dimension r and degree d of the linear series (GSpace only, else 0).
  int series_dimension() const { return r_; }
  int series_degree() const { return d_; }

  int half_genus() const { return genus_ / 2; }
  int half_level() const { return level_ / 2; }

  bool has_level() const { return model_ != Model::MbarG; }

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;

  std::string name() const;

 private:
  SpaceDescriptor(int genus, int level, Model model, int r, int d)
      : genus_(genus), level_(level), model_(model), r_(r), d_(d) {}

  int genus_;
  int level_;
  Model model_;
  int r_;
  int d_;
};

/// Kinds of basis symbols. Declaration order is the rendering order, except that the
/// three reducible-boundary families are interleaved by index (see BasisSymbol ordering).
enum class SymbolKind {
  Lambda,
  Delta0,             // M_g only
  Delta0Prime,
  Delta0DoublePrime,
  Delta0Ram,          // index a, 1 <= a <= floor(l/2)
  DeltaI,             // index i, 1 <= i <= floor(g/2)
  DeltaGMinusI,       // index i; the symbol delta_{g-i}
  DeltaIColonGMinusI, // index i; the symbol delta_{i:g-i}
  FrakA,
  FrakB,
  FrakC,
  FrakD,
  Rho,
  PullbackDelta0,
};

struct BasisSymbol {
  SymbolKind kind = SymbolKind::Lambda;
  int index = 0;

  static BasisSymbol lambda() { return {SymbolKind::Lambda, 0}; }
  static BasisSymbol delta0() { return {SymbolKind::Delta0, 0}; }
  static BasisSymbol delta0_prime() { return {SymbolKind::Delta0Prime, 0}; }
  static BasisSymbol delta0_double_prime() { return {SymbolKind::Delta0DoublePrime, 0}; }
  static BasisSymbol delta0_ram(int a) { return {SymbolKind::Delta0Ram, a}; }
  static BasisSymbol delta_i(int i) { return {SymbolKind::DeltaI, i}; }
  static BasisSymbol delta_g_minus_i(int i) { return {SymbolKind::DeltaGMinusI, i}; }
  static BasisSymbol delta_i_colon(int i) { return {SymbolKind::DeltaIColonGMinusI, i}; }
  static BasisSymbol frak_a() { return {SymbolKind::FrakA, 0}; }
  static BasisSymbol frak_b() { return {SymbolKind::FrakB, 0}; }
  static BasisSymbol frak_c() { return {SymbolKind::FrakC, 0}; }
  static BasisSymbol frak_d() { return {SymbolKind::FrakD, 0}; }
  static BasisSymbol rho() { return {SymbolKind::Rho, 0}; }
  static BasisSymbol pullback_delta0() { return {SymbolKind::PullbackDelta0, 0}; }

  bool is_boundary() const;

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
  friend std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b);
};

/// All symbols of the space's basis, in rendering order.
///
/// For even g the symbols delta_{g/2} and delta_{g-g/2} coincide; only DeltaI(g/2) is
/// part of the basis.
std::vector<BasisSymbol> basis(const SpaceDescriptor& space);
bool in_basis(const SpaceDescriptor& space, const BasisSymbol& symbol);

/// Plain-text name ("lambda", "d0'", "d0^(2)", "d_7", "d_{1:7}", ...).
std::string display_name(const SpaceDescriptor& space, const BasisSymbol& symbol);

/// Rational divisor class on a fixed space, stored sparsely in canonical form
/// (no zero coefficients), so structural equality is mathematical equality.
class DivisorClass {
 public:
  using Coefficients = std::map<BasisSymbol, Rational>;

  explicit DivisorClass(SpaceDescriptor space) : space_(space) {}
  DivisorClass(SpaceDescriptor space, std::initializer_list<std::pair<BasisSymbol, Rational>> terms);

  const SpaceDescriptor& space() const { return space_; }
  const Coefficients& coefficients() const { return coeffs_; }

  Rational coeff(const BasisSymbol& symbol) const;
  /// Overwrites one coefficient; setting zero removes the entry.
  void set(const BasisSymbol& symbol, const Rational& value);
  /// Adds `value` to one coefficient.
  void add_term(const BasisSymbol& symbol, const Rational& value);

  bool is_zero() const { return coeffs_.empty(); }
  /// True when every stored symbol is a boundary symbol.
  bool supported_on_boundary() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& c);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend DivisorClass operator*(const Rational& c, DivisorClass x) { return x *= c; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// "196 lambda - 28 d0' - 56 d0'' - 224/3 d0^(1)"; "0" for the zero class.
  /// With `with_decimals`, non-integral coefficients get an approximation in parentheses.
  std::string str(bool with_decimals = false) const;

 private:
  void check_symbol(const BasisSymbol& symbol) const;

  SpaceDescriptor space_;
  Coefficients coeffs_;
};

DivisorClass add(const DivisorClass& x, const DivisorClass& y);
DivisorClass scale(const Rational& c, const DivisorClass& x);

/// Pulls a class on M_g back along the forgetful map to R_{g,l} or R'_{g,l}.
///
///   lambda  -> lambda
///   delta_0 -> delta_0' + delta_0'' + l * sum_a delta_0^(a)
///   delta_1 -> 2 delta_1 + 2 delta_{1:g-1} + delta_{g-1}       (l >= 3)
///   delta_i -> delta_i + delta_{g-i} + delta_{i:g-i}           (i >= 2)
///
/// On the partial compactification the images of delta_i, i >= 1, vanish.
/// Throws UnsupportedLevel when delta_1 must be pulled back to R_{g,2}.
DivisorClass pullback(const SpaceDescriptor& target, const DivisorClass& x);

/// Drops the reducible-boundary coefficients of a class on R_{g,l}.
DivisorClass restrict_to_partial(const DivisorClass& x);

}  // namespace levelmod
