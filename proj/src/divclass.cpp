#include "levelmod/divclass.hpp"

#include "levelmod/errors.hpp"

#include <sstream>
#include <tuple>

namespace levelmod {

namespace {

void require_genus(int genus) {
  if (genus < 4) {
    throw Error(ErrorCode::InvalidSpace, "genus must be at least 4, got " + std::to_string(genus));
  }
}

void require_prime_level(int level) {
  if (!is_prime(level)) {
    throw Error(ErrorCode::InvalidSpace, "level must be prime, got " + std::to_string(level));
  }
}

// Sort key: (family rank, index, position within an interleaved family).
std::tuple<int, int, int> order_key(const BasisSymbol& s) {
  switch (s.kind) {
    case SymbolKind::Lambda: return {0, 0, 0};
    case SymbolKind::Delta0: return {1, 0, 0};
    case SymbolKind::Delta0Prime: return {2, 0, 0};
    case SymbolKind::Delta0DoublePrime: return {3, 0, 0};
    case SymbolKind::Delta0Ram: return {4, s.index, 0};
    case SymbolKind::DeltaI: return {5, s.index, 0};
    case SymbolKind::DeltaGMinusI: return {5, s.index, 1};
    case SymbolKind::DeltaIColonGMinusI: return {5, s.index, 2};
    case SymbolKind::FrakA: return {6, 0, 0};
    case SymbolKind::FrakB: return {7, 0, 0};
    case SymbolKind::FrakC: return {8, 0, 0};
    case SymbolKind::FrakD: return {9, 0, 0};
    case SymbolKind::Rho: return {10, 0, 0};
    case SymbolKind::PullbackDelta0: return {11, 0, 0};
  }
  return {99, 0, 0};
}

void append_irreducible_boundary(const SpaceDescriptor& space, std::vector<BasisSymbol>& out) {
  out.push_back(BasisSymbol::delta0_prime());
  out.push_back(BasisSymbol::delta0_double_prime());
  for (int a = 1; a <= space.half_level(); ++a) out.push_back(BasisSymbol::delta0_ram(a));
}

}  // namespace

SpaceDescriptor SpaceDescriptor::mbar(int genus) {
  require_genus(genus);
  return SpaceDescriptor(genus, 0, Model::MbarG, 0, 0);
}

SpaceDescriptor SpaceDescriptor::rbar(int genus, int level) {
  require_genus(genus);
  require_prime_level(level);
  return SpaceDescriptor(genus, level, Model::RbarGL, 0, 0);
}

SpaceDescriptor SpaceDescriptor::rprime(int genus, int level) {
  require_genus(genus);
  require_prime_level(level);
  return SpaceDescriptor(genus, level, Model::RPrimeGL, 0, 0);
}

SpaceDescriptor SpaceDescriptor::gspace(int genus, int level) {
  require_prime_level(level);
  if (genus == 6) return SpaceDescriptor(6, level, Model::GSpace, 2, 6);
  if (genus == 8) return SpaceDescriptor(8, level, Model::GSpace, 3, 9);
  throw Error(ErrorCode::InvalidSpace,
              "linear-series space exists only for genus 6 and 8, got " + std::to_string(genus));
}

std::string SpaceDescriptor::name() const {
  const std::string gl = std::to_string(genus_) + "," + std::to_string(level_);
  switch (model_) {
    case Model::MbarG: return "Mbar_" + std::to_string(genus_);
    case Model::RbarGL: return "Rbar_{" + gl + "}";
    case Model::RPrimeGL: return "R'_{" + gl + "}";
    case Model::GSpace:
      return "G^" + std::to_string(r_) + "_" + std::to_string(d_) + "(level " +
             std::to_string(level_) + ")";
  }
  return "?";
}

bool BasisSymbol::is_boundary() const {
  switch (kind) {
    case SymbolKind::Delta0:
    case SymbolKind::Delta0Prime:
    case SymbolKind::Delta0DoublePrime:
    case SymbolKind::Delta0Ram:
    case SymbolKind::DeltaI:
    case SymbolKind::DeltaGMinusI:
    case SymbolKind::DeltaIColonGMinusI:
      return true;
    default:
      return false;
  }
}

std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b) {
  return order_key(a) <=> order_key(b);
}

std::vector<BasisSymbol> basis(const SpaceDescriptor& space) {
  std::vector<BasisSymbol> out{BasisSymbol::lambda()};
  const int half = space.half_genus();
  switch (space.model()) {
    case Model::MbarG:
      out.push_back(BasisSymbol::delta0());
      for (int i = 1; i <= half; ++i) out.push_back(BasisSymbol::delta_i(i));
      break;
    case Model::RPrimeGL:
      append_irreducible_boundary(space, out);
      break;
    case Model::RbarGL:
      append_irreducible_boundary(space, out);
      for (int i = 1; i <= half; ++i) {
        out.push_back(BasisSymbol::delta_i(i));
        if (2 * i != space.genus()) out.push_back(BasisSymbol::delta_g_minus_i(i));
        out.push_back(BasisSymbol::delta_i_colon(i));
      }
      break;
    case Model::GSpace:
      append_irreducible_boundary(space, out);
      out.push_back(BasisSymbol::frak_a());
      out.push_back(BasisSymbol::frak_b());
      out.push_back(BasisSymbol::frak_c());
      out.push_back(BasisSymbol::frak_d());
      out.push_back(BasisSymbol::rho());
      out.push_back(BasisSymbol::pullback_delta0());
      break;
  }
  return out;
}

bool in_basis(const SpaceDescriptor& space, const BasisSymbol& s) {
  const int half = space.half_genus();
  const bool level_model = space.has_level();
  switch (s.kind) {
    case SymbolKind::Lambda:
      return s.index == 0;
    case SymbolKind::Delta0:
      return s.index == 0 && space.model() == Model::MbarG;
    case SymbolKind::Delta0Prime:
    case SymbolKind::Delta0DoublePrime:
      return s.index == 0 && level_model;
    case SymbolKind::Delta0Ram:
      return level_model && s.index >= 1 && s.index <= space.half_level();
    case SymbolKind::DeltaI:
      return (space.model() == Model::MbarG || space.model() == Model::RbarGL) && s.index >= 1 &&
             s.index <= half;
    case SymbolKind::DeltaGMinusI:
      return space.model() == Model::RbarGL && s.index >= 1 && s.index <= half &&
             2 * s.index != space.genus();
    case SymbolKind::DeltaIColonGMinusI:
      return space.model() == Model::RbarGL && s.index >= 1 && s.index <= half;
    case SymbolKind::FrakA:
    case SymbolKind::FrakB:
    case SymbolKind::FrakC:
    case SymbolKind::FrakD:
    case SymbolKind::Rho:
    case SymbolKind::PullbackDelta0:
      return s.index == 0 && space.model() == Model::GSpace;
  }
  return false;
}

std::string display_name(const SpaceDescriptor& space, const BasisSymbol& s) {
  const int g = space.genus();
  switch (s.kind) {
    case SymbolKind::Lambda: return "lambda";
    case SymbolKind::Delta0: return "d0";
    case SymbolKind::Delta0Prime: return "d0'";
    case SymbolKind::Delta0DoublePrime: return "d0''";
    case SymbolKind::Delta0Ram: return "d0^(" + std::to_string(s.index) + ")";
    case SymbolKind::DeltaI: return "d_" + std::to_string(s.index);
    case SymbolKind::DeltaGMinusI: return "d_" + std::to_string(g - s.index);
    case SymbolKind::DeltaIColonGMinusI:
      return "d_{" + std::to_string(s.index) + ":" + std::to_string(g - s.index) + "}";
    case SymbolKind::FrakA: return "frak_a";
    case SymbolKind::FrakB: return "frak_b";
    case SymbolKind::FrakC: return "frak_c";
    case SymbolKind::FrakD: return "frak_d";
    case SymbolKind::Rho: return "rho";
    case SymbolKind::PullbackDelta0: return "pi*d0";
  }
  return "?";
}

DivisorClass::DivisorClass(SpaceDescriptor space,
                           std::initializer_list<std::pair<BasisSymbol, Rational>> terms)
    : space_(space) {
  for (const auto& [symbol, value] : terms) add_term(symbol, value);
}

void DivisorClass::check_symbol(const BasisSymbol& symbol) const {
  if (!in_basis(space_, symbol)) {
    throw Error(ErrorCode::InvalidSymbol, "symbol " + display_name(space_, symbol) + " (index " +
                                              std::to_string(symbol.index) + ") is not in the basis of " +
                                              space_.name());
  }
}

Rational DivisorClass::coeff(const BasisSymbol& symbol) const {
  const auto it = coeffs_.find(symbol);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void DivisorClass::set(const BasisSymbol& symbol, const Rational& value) {
  check_symbol(symbol);
  if (value.is_zero()) {
    coeffs_.erase(symbol);
  } else {
    coeffs_[symbol] = value;
  }
}

void DivisorClass::add_term(const BasisSymbol& symbol, const Rational& value) {
  check_symbol(symbol);
  if (value.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(symbol, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

bool DivisorClass::supported_on_boundary() const {
  for (const auto& [symbol, value] : coeffs_) {
    if (!symbol.is_boundary()) return false;
  }
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (!(space_ == other.space_)) {
    throw Error(ErrorCode::SpaceMismatch, space_.name() + " vs " + other.space_.name());
  }
  for (const auto& [symbol, value] : other.coeffs_) add_term(symbol, value);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (!(space_ == other.space_)) {
    throw Error(ErrorCode::SpaceMismatch, space_.name() + " vs " + other.space_.name());
  }
  for (const auto& [symbol, value] : other.coeffs_) add_term(symbol, -value);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [symbol, value] : coeffs_) value *= c;
  return *this;
}

std::string DivisorClass::str(bool with_decimals) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [symbol, value] : coeffs_) {
    const bool negative = value.sign() < 0;
    const Rational magnitude = negative ? -value : value;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (magnitude != Rational(1)) {
      os << magnitude.str();
      if (with_decimals && !magnitude.is_integer()) os << " (~" << magnitude.decimal() << ")";
      os << ' ';
    }
    os << display_name(space_, symbol);
  }
  return os.str();
}

DivisorClass add(const DivisorClass& x, const DivisorClass& y) { return x + y; }

DivisorClass scale(const Rational& c, const DivisorClass& x) { return c * x; }

DivisorClass pullback(const SpaceDescriptor& target, const DivisorClass& x) {
  const SpaceDescriptor& source = x.space();
  if (source.model() != Model::MbarG) {
    throw Error(ErrorCode::SpaceMismatch, "pullback source must be Mbar_g, got " + source.name());
  }
  if (target.model() != Model::RbarGL && target.model() != Model::RPrimeGL) {
    throw Error(ErrorCode::SpaceMismatch, "pullback target must be Rbar or R', got " + target.name());
  }
  if (source.genus() != target.genus()) {
    throw Error(ErrorCode::GenusMismatch, source.name() + " vs " + target.name());
  }
  const int g = target.genus();
  const int level = target.level();
  const bool full = target.model() == Model::RbarGL;

  DivisorClass out(target);
  for (const auto& [symbol, c] : x.coefficients()) {
    switch (symbol.kind) {
      case SymbolKind::Lambda:
        out.add_term(BasisSymbol::lambda(), c);
        break;
      case SymbolKind::Delta0:
        out.add_term(BasisSymbol::delta0_prime(), c);
        out.add_term(BasisSymbol::delta0_double_prime(), c);
        for (int a = 1; a <= target.half_level(); ++a) {
          out.add_term(BasisSymbol::delta0_ram(a), c * Rational(level));
        }
        break;
      case SymbolKind::DeltaI: {
        if (!full) break;
        const int i = symbol.index;
        if (i == 1) {
          // Elliptic tails carry an extra automorphism, so pi ramifies along delta_1, delta_{1:g-1}.
          if (level == 2) {
            throw Error(ErrorCode::UnsupportedLevel, "pullback of delta_1 to level 2 is not defined");
          }
          out.add_term(BasisSymbol::delta_i(1), c * Rational(2));
          out.add_term(BasisSymbol::delta_i_colon(1), c * Rational(2));
          out.add_term(BasisSymbol::delta_g_minus_i(1), c);
        } else {
          out.add_term(BasisSymbol::delta_i(i), c);
          if (2 * i != g) out.add_term(BasisSymbol::delta_g_minus_i(i), c);
          out.add_term(BasisSymbol::delta_i_colon(i), c);
        }
        break;
      }
      default:
        throw Error(ErrorCode::InvalidSymbol, "unexpected symbol on Mbar_g");
    }
  }
  return out;
}

DivisorClass restrict_to_partial(const DivisorClass& x) {
  const SpaceDescriptor& space = x.space();
  if (space.model() != Model::RbarGL) {
    throw Error(ErrorCode::SpaceMismatch, "restriction expects a class on Rbar, got " + space.name());
  }
  DivisorClass out(SpaceDescriptor::rprime(space.genus(), space.level()));
  for (const auto& [symbol, c] : x.coefficients()) {
    switch (symbol.kind) {
      case SymbolKind::Lambda:
      case SymbolKind::Delta0Prime:
      case SymbolKind::Delta0DoublePrime:
      case SymbolKind::Delta0Ram:
        out.set(symbol, c);
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace levelmod
