#include "levelmod/porteous.hpp"

#include "levelmod/errors.hpp"
#include "levelmod/formulas.hpp"

namespace levelmod::porteous {

namespace {

using S = BasisSymbol;

// sigma_* images of a, b, c as (lambda coefficient, pi^*(delta_0) coefficient).
struct SigmaImage {
  Rational lambda;
  Rational pullback_delta0;
};

SigmaImage sigma_image(int genus, SymbolKind kind) {
  if (genus == 6) {
    switch (kind) {
      case SymbolKind::FrakA: return {-93, Rational(23, 2)};
      case SymbolKind::FrakB: return {Rational(-3, 2), Rational(3, 4)};
      case SymbolKind::FrakC: return {Rational(-133, 4), Rational(33, 8)};
      default: break;
    }
  } else {
    switch (kind) {
      case SymbolKind::FrakA: return {-267, Rational(69, 2)};
      case SymbolKind::FrakB: return {3, Rational(3, 2)};
      case SymbolKind::FrakC: return {-100, 13};
      default: break;
    }
  }
  throw Error(ErrorCode::UnknownSymbol, "no sigma_* image for this symbol");
}

void require_gspace(const PipelineConfig& cfg, const C1Expr& z) {
  if (!(z.space() == cfg.gspace())) {
    throw Error(ErrorCode::SpaceMismatch, "expected a class on " + cfg.gspace().name() + ", got " +
                                              z.space().name());
  }
}

// First stage of the pushforward: replace a, b, c by their sigma_* images and multiply
// the pulled-back classes by deg(sigma). The result still uses pi^*d0, rho and d.
C1Expr pushforward_on_gspace(const PipelineConfig& cfg, const C1Expr& z) {
  require_gspace(cfg, z);
  const Rational deg(cfg.deg_sigma);
  C1Expr out(cfg.gspace());
  for (const auto& [symbol, c] : z.coefficients()) {
    switch (symbol.kind) {
      case SymbolKind::FrakA:
      case SymbolKind::FrakB:
      case SymbolKind::FrakC: {
        const SigmaImage image = sigma_image(cfg.genus, symbol.kind);
        out.add_term(S::lambda(), c * image.lambda);
        out.add_term(S::pullback_delta0(), c * image.pullback_delta0);
        break;
      }
      case SymbolKind::Lambda:
      case SymbolKind::FrakD:
      case SymbolKind::Rho:
      case SymbolKind::PullbackDelta0:
      case SymbolKind::Delta0Prime:
      case SymbolKind::Delta0DoublePrime:
      case SymbolKind::Delta0Ram:
        out.add_term(symbol, c * deg);
        break;
      default:
        throw Error(ErrorCode::UnknownSymbol, "no substitution rule for " + display_name(z.space(), symbol));
    }
  }
  return out;
}

// Second stage: rewrite pi^*d0, rho and d on R'_{g,l}.
DivisorClass expand_to_target(const PipelineConfig& cfg, const C1Expr& pushed) {
  const SpaceDescriptor target = cfg.target();
  const DivisorClass pulled_delta0 =
      pullback(target, DivisorClass(SpaceDescriptor::mbar(cfg.genus), {{S::delta0(), 1}}));
  const DivisorClass rho_target = formulas::rho(cfg.level, target);

  DivisorClass out(target);
  for (const auto& [symbol, c] : pushed.coefficients()) {
    switch (symbol.kind) {
      case SymbolKind::Lambda:
      case SymbolKind::Delta0Prime:
      case SymbolKind::Delta0DoublePrime:
      case SymbolKind::Delta0Ram:
        out.add_term(symbol, c);
        break;
      case SymbolKind::PullbackDelta0:
        out += c * pulled_delta0;
        break;
      case SymbolKind::Rho:
        out += c * rho_target;
        break;
      case SymbolKind::FrakD:
        // R^1 chi_*(L (x) P) is a rank-one sheaf supported on Delta_0''; multiplicity one.
        out.add_term(S::delta0_double_prime(), c);
        break;
      default:
        throw Error(ErrorCode::UnknownSymbol, "cannot expand " + display_name(pushed.space(), symbol));
    }
  }
  return out;
}

}  // namespace

PipelineConfig make_config(int g, int level) {
  if (!is_prime(level)) {
    throw Error(ErrorCode::InvalidSpace, "level must be prime, got " + std::to_string(level));
  }
  if (g == 6) return PipelineConfig{6, 2, 6, 5, level};
  if (g == 8) return PipelineConfig{8, 3, 9, 14, level};
  throw Error(ErrorCode::UnsupportedGenus, "pipeline exists for g = 6, 8; got " + std::to_string(g));
}

C1Expr c1_pushforward_twisted(const PipelineConfig& cfg, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::OutOfValidity, "twist exponent must be +1 or -1");
  }
  // Both twists give the same class: the formula only sees P through rho and d.
  return C1Expr(cfg.gspace(), {{S::lambda(), 1},
                               {S::frak_a(), Rational(1, 2)},
                               {S::frak_b(), Rational(-1, 2)},
                               {S::rho(), Rational(-1, 2)},
                               {S::frak_d(), 1}});
}

C1Expr c1_pushforward_square(const PipelineConfig& cfg) {
  return C1Expr(cfg.gspace(), {{S::lambda(), 1}, {S::frak_a(), 2}, {S::frak_b(), -1}});
}

C1Expr c1_pushforward_plain(const PipelineConfig& cfg) {
  return C1Expr(cfg.gspace(), {{S::frak_c(), 1}});
}

C1Expr c1_E(const PipelineConfig& cfg) {
  const Rational r(cfg.r);
  // c1(Sym^2 chi_*(L)) = (r + 2) c1(chi_*(L)) since rk chi_*(L) = r + 1.
  return c1_pushforward_twisted(cfg, +1) - (r - 1) * c1_pushforward_square(cfg) +
         (r - 1) * (r + 2) * c1_pushforward_plain(cfg);
}

C1Expr c1_F(const PipelineConfig& cfg) { return -c1_pushforward_twisted(cfg, -1); }

C1Expr degeneracy_closed_form(const PipelineConfig& cfg) {
  const long r = cfg.r;
  return C1Expr(cfg.gspace(), {{S::lambda(), Rational(r - 3)},
                               {S::frak_a(), Rational(2 * r - 3)},
                               {S::frak_b(), Rational(-(r - 2))},
                               {S::frak_c(), Rational(-(r * r + r - 2))},
                               {S::frak_d(), -2},
                               {S::rho(), 1}});
}

C1Expr degeneracy_class(const PipelineConfig& cfg) {
  C1Expr z = c1_F(cfg) - c1_E(cfg);
  const C1Expr expected = degeneracy_closed_form(cfg);
  if (!(z == expected)) {
    throw Error(ErrorCode::InternalInconsistency,
                "c1(F) - c1(E) = " + z.str() + " but closed form is " + expected.str());
  }
  return z;
}

C1Expr sigma_pushforward_image(const PipelineConfig& cfg, const BasisSymbol& symbol) {
  const SigmaImage image = sigma_image(cfg.genus, symbol.kind);
  return C1Expr(cfg.gspace(), {{S::lambda(), image.lambda}, {S::pullback_delta0(), image.pullback_delta0}});
}

DivisorClass substitute_and_pushforward(const PipelineConfig& cfg, const C1Expr& z) {
  return expand_to_target(cfg, pushforward_on_gspace(cfg, z));
}

DivisorClass derive_mukai_class(int g, int level) {
  const PipelineConfig cfg = make_config(g, level);
  return substitute_and_pushforward(cfg, degeneracy_class(cfg));
}

std::vector<DerivationStep> derivation_transcript(int g, int level) {
  const PipelineConfig cfg = make_config(g, level);
  const std::string r = std::to_string(cfg.r);
  std::vector<DerivationStep> steps;
  steps.push_back({"c1(chi_*(L (x) P))", "Grothendieck-Riemann-Roch", c1_pushforward_twisted(cfg, +1)});
  steps.push_back({"c1(chi_*(L (x) P^-1))", "Grothendieck-Riemann-Roch, same as the +1 twist",
                   c1_pushforward_twisted(cfg, -1)});
  steps.push_back({"c1(chi_*(L^2))", "Grothendieck-Riemann-Roch", c1_pushforward_square(cfg)});
  steps.push_back({"c1(chi_*(L))", "definition of frak_c", c1_pushforward_plain(cfg)});
  steps.push_back({"c1(E)", "c1(Sym^2 G) = (rk G + 1) c1(G), r = " + r, c1_E(cfg)});
  steps.push_back({"c1(F)", "F is the dual of chi_*(L (x) P^-1)", c1_F(cfg)});
  steps.push_back({"[Z_1(phi)]", "Porteous: c1(F) - c1(E), checked against the closed form in r",
                   degeneracy_class(cfg)});
  for (const auto& symbol : {S::frak_a(), S::frak_b(), S::frak_c()}) {
    steps.push_back({"sigma_*(" + display_name(cfg.gspace(), symbol) + ")",
                     "pushforward constant for g = " + std::to_string(g), sigma_pushforward_image(cfg, symbol)});
  }
  const C1Expr pushed = pushforward_on_gspace(cfg, degeneracy_class(cfg));
  steps.push_back({"sigma_*[Z_1(phi)]",
                   "substitute sigma_* images; pulled-back classes times deg(sigma) = " +
                       std::to_string(cfg.deg_sigma),
                   pushed});
  steps.push_back({"virtual class on " + cfg.target().name(),
                   "expand pi^*(d0) = d0' + d0'' + l sum_a d0^(a), rho, and frak_d = d0'' "
                   "(multiplicity 1 is inferred, not proven)",
                   expand_to_target(cfg, pushed)});
  return steps;
}

}  // namespace levelmod::porteous
