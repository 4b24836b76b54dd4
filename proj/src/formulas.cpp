#include "levelmod/formulas.hpp"

#include "levelmod/errors.hpp"

namespace levelmod::formulas {

namespace {

void require_prime(int level) {
  if (!is_prime(level)) {
    throw Error(ErrorCode::InvalidSpace, "level must be prime, got " + std::to_string(level));
  }
}

void require_mukai_genus(int g) {
  if (g != 6 && g != 8) {
    throw Error(ErrorCode::UnsupportedGenus, "Mukai classes exist for g = 6, 8; got " + std::to_string(g));
  }
}

Integer ipow(long base, long exp) {
  Integer out = 1;
  for (long k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

const std::vector<std::string_view>& formula_ids() {
  static const std::vector<std::string_view> ids{kCanonical,      kMukaiVirtual,    kMukaiImproved, kKoszulVirtual,
                                                 kKoszulImproved, kRho,             kCensus};
  return ids;
}

DivisorClass canonical_class(int g, int level) {
  if (g < 4 || level < 3) {
    throw Error(ErrorCode::OutOfValidity, "canonical class formula needs g >= 4 and l >= 3");
  }
  const auto space = SpaceDescriptor::rbar(g, level);
  DivisorClass k(space);
  k.add_term(BasisSymbol::lambda(), 13);
  k.add_term(BasisSymbol::delta0_prime(), -2);
  k.add_term(BasisSymbol::delta0_double_prime(), -2);
  for (int a = 1; a <= space.half_level(); ++a) {
    k.add_term(BasisSymbol::delta0_ram(a), Rational(-(level + 1)));
  }
  for (int i = 1; i <= space.half_genus(); ++i) {
    k.add_term(BasisSymbol::delta_i(i), -2);
    if (2 * i != g) k.add_term(BasisSymbol::delta_g_minus_i(i), -2);
    k.add_term(BasisSymbol::delta_i_colon(i), -2);
  }
  k.add_term(BasisSymbol::delta_g_minus_i(1), -1);
  return k;
}

DivisorClass rho(int level, const SpaceDescriptor& space) {
  if (!space.has_level() || space.level() != level) {
    throw Error(ErrorCode::SpaceMismatch, "rho of level " + std::to_string(level) + " on " + space.name());
  }
  if (!in_basis(space, BasisSymbol::delta0_prime())) {
    throw Error(ErrorCode::SpaceMismatch, space.name() + " has no d0^(a) symbols");
  }
  DivisorClass out(space);
  for (int a = 1; a <= level / 2; ++a) {
    out.add_term(BasisSymbol::delta0_ram(a), Rational(a * (level - a), level));
  }
  return out;
}

DivisorClass mukai_virtual_class(int g, int level) {
  require_mukai_genus(g);
  require_prime(level);
  const auto space = SpaceDescriptor::rprime(g, level);
  DivisorClass out(space);
  const long l = level;
  if (g == 6) {
    out.add_term(BasisSymbol::lambda(), 35);
    out.add_term(BasisSymbol::delta0_prime(), -5);
    out.add_term(BasisSymbol::delta0_double_prime(), -15);
    for (long a = 1; a <= l / 2; ++a) {
      out.add_term(BasisSymbol::delta0_ram(int(a)), -Rational(5, l) * Rational(l * l - a * l + a * a));
    }
  } else {
    out.add_term(BasisSymbol::lambda(), 196);
    out.add_term(BasisSymbol::delta0_prime(), -28);
    out.add_term(BasisSymbol::delta0_double_prime(), -56);
    for (long a = 1; a <= l / 2; ++a) {
      out.add_term(BasisSymbol::delta0_ram(int(a)), -Rational(14, l) * Rational(2 * l * l - a * l + a * a));
    }
  }
  return out;
}

DivisorClass mukai_summary_statement_class(int g, int level) {
  DivisorClass out = mukai_virtual_class(g, level);
  out.set(BasisSymbol::delta0_double_prime(), out.coeff(BasisSymbol::delta0_prime()));
  return out;
}

DivisorClass mukai_improved_class(int g, int level, MukaiCorrections corrections) {
  DivisorClass out = mukai_virtual_class(g, level);
  if (corrections.wirtinger) {
    out.add_term(BasisSymbol::delta0_double_prime(), g == 6 ? -5 : -28);
  }
  if (corrections.ramified && g == 8 && level == 3) {
    out.add_term(BasisSymbol::delta0_ram(1), -28);
  }
  return out;
}

Rational koszul_prefactor(int i) {
  if (i < 2) throw Error(ErrorCode::OutOfValidity, "Koszul prefactor needs i >= 2");
  return Rational(binomial(2 * i - 2, i), Integer(i - 1));
}

bool koszul_parity_holds(int i) { return i % 2 == 1 || binomial(2 * i - 1, i) % 2 == 0; }

DivisorClass koszul_virtual_class(int i, int level) {
  if (i < 2) throw Error(ErrorCode::OutOfValidity, "Koszul classes need i >= 2, got " + std::to_string(i));
  if (level < 3) throw Error(ErrorCode::OutOfValidity, "Koszul classes need l >= 3");
  require_prime(level);
  if (!koszul_parity_holds(i)) {
    throw Error(ErrorCode::ParityConditionViolated,
                "i = " + std::to_string(i) + " is even and C(2i-1, i) is odd");
  }
  const auto space = SpaceDescriptor::rprime(2 * i + 2, level);
  const long l = level;
  const long ii = i;
  DivisorClass body(space);
  body.add_term(BasisSymbol::lambda(), Rational(6 * ii + 1));
  body.add_term(BasisSymbol::delta0_prime(), Rational(-ii));
  body.add_term(BasisSymbol::delta0_double_prime(), Rational(-ii));
  for (long a = 1; a <= l / 2; ++a) {
    const long numerator = ii * l * l + 5 * a * a * ii - 5 * a * ii * l - 2 * a * a + 2 * a * l;
    body.add_term(BasisSymbol::delta0_ram(int(a)), -Rational(numerator, l));
  }
  return koszul_prefactor(i) * body;
}

Integer koszul_boundary_degeneracy_order(int i) {
  if (i < 1) throw Error(ErrorCode::OutOfValidity, "degeneracy order needs i >= 1");
  // Sections on the normalization minus the two fibre conditions at the node.
  const Integer kernel = 5 * binomial(2 * i - 1, i - 1) - 2 * binomial(2 * i, i);
  if (kernel != binomial(2 * i - 1, i - 1)) {
    throw Error(ErrorCode::InternalInconsistency, "binomial identity failed at i = " + std::to_string(i));
  }
  return kernel;
}

DivisorClass koszul_improved_class(int i, int level) {
  DivisorClass out = koszul_virtual_class(i, level);
  const Rational order(koszul_boundary_degeneracy_order(i));
  for (int a = 1; a <= level / 2; ++a) out.add_term(BasisSymbol::delta0_ram(a), -order);
  return out;
}

BoundaryCensus boundary_census(int g, int level) {
  if (g < 2) throw Error(ErrorCode::OutOfValidity, "census needs g >= 2");
  require_prime(level);
  const Integer power = ipow(level, 2L * g - 2);
  BoundaryCensus c;
  c.wirtinger_components = level / 2;
  c.wirtinger_degree_each = 2;
  c.delta0prime_count = level * (power - 1);
  c.delta0ram_degree = 2 * power;
  return c;
}

SlopeReport slope_bounds_ok(const DivisorClass& e, int g, int level) {
  const SpaceDescriptor& space = e.space();
  if ((space.model() != Model::RPrimeGL && space.model() != Model::RbarGL) || space.genus() != g ||
      space.level() != level) {
    throw Error(ErrorCode::SpaceMismatch, "slope check for (" + std::to_string(g) + ", " +
                                              std::to_string(level) + ") on " + space.name());
  }
  const Rational a = e.coeff(BasisSymbol::lambda());
  if (a.sign() <= 0) {
    throw Error(ErrorCode::NotNormalized, "lambda coefficient must be positive, got " + a.str());
  }
  const Rational thirteen_halves(13, 2);
  std::vector<std::pair<BasisSymbol, Rational>> bounds{
      {BasisSymbol::delta0_prime(), thirteen_halves},
      {BasisSymbol::delta0_double_prime(), thirteen_halves},
  };
  for (int k = 1; k <= level / 2; ++k) {
    bounds.emplace_back(BasisSymbol::delta0_ram(k), Rational(13, level + 1));
  }

  SlopeReport report;
  report.all_passed = true;
  for (const auto& [symbol, bound] : bounds) {
    SlopeCheck check{symbol, a, -e.coeff(symbol), std::nullopt, bound, false};
    if (check.b.sign() > 0) {
      check.ratio = a / check.b;
      check.passed = *check.ratio < bound;
    }
    report.all_passed = report.all_passed && check.passed;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace levelmod::formulas
