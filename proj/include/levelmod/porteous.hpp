#pragma once

#include "levelmod/divclass.hpp"

#include <string>
#include <vector>

namespace levelmod::porteous {

/// Data of the linear series g^r_d whose universal space carries the degeneracy locus.
struct PipelineConfig {
  int genus = 0;
  int r = 0;
  int d = 0;
  int deg_sigma = 0;  // number of g^r_d on a general curve
  int level = 0;

  SpaceDescriptor gspace() const { return SpaceDescriptor::gspace(genus, level); }
  SpaceDescriptor target() const { return SpaceDescriptor::rprime(genus, level); }
};

/// (6, 2, 6, 5) for g = 6 and (8, 3, 9, 14) for g = 8.
PipelineConfig make_config(int g, int level);

/// First Chern class expressions live on the GSpace basis.
using C1Expr = DivisorClass;

/// c1(chi_*(L (x) P^{sign})) = lambda + a/2 - b/2 - rho/2 + d, for sign = +1 or -1.
C1Expr c1_pushforward_twisted(const PipelineConfig& cfg, int sign = +1);

/// c1(chi_*(L^2)) = lambda + 2a - b.
C1Expr c1_pushforward_square(const PipelineConfig& cfg);

/// c1(chi_*(L)) = c.
C1Expr c1_pushforward_plain(const PipelineConfig& cfg);

/// c1(E) for E = chi_*(L (x) P) (x) (chi_*(L^2) / Sym^2 chi_*(L))^dual, using
/// c1(Sym^2 G) = (rk G + 1) c1(G) with rk chi_*(L) = r + 1:
///   c1(E) = c1(chi_*(L (x) P)) - (r-1) c1(chi_*(L^2)) + (r-1)(r+2) c1(chi_*(L)).
C1Expr c1_E(const PipelineConfig& cfg);

/// c1(F) for F = (chi_*(L (x) P^{-1}))^dual.
C1Expr c1_F(const PipelineConfig& cfg);

/// (r-3) lambda + (2r-3) a - (r-2) b - (r^2+r-2) c - 2 d + rho.
C1Expr degeneracy_closed_form(const PipelineConfig& cfg);

/// Porteous: [Z_1(phi)] = c1(F) - c1(E). Throws InternalInconsistency if the result
/// differs from degeneracy_closed_form.
C1Expr degeneracy_class(const PipelineConfig& cfg);

/// Pushforward image sigma_*(x) of x in {a, b, c}, written with pi^*(delta_0).
C1Expr sigma_pushforward_image(const PipelineConfig& cfg, const BasisSymbol& symbol);

/// Pushes a GSpace class to R'_{g,l}. The intermediate classes a, b, c are replaced by
/// their sigma_* images; pulled-back classes (lambda, rho, d, pi^*delta_0 and the d0
/// symbols) are multiplied by deg(sigma). Then pi^*(delta_0) and rho are expanded,
/// with d = d0''.
DivisorClass substitute_and_pushforward(const PipelineConfig& cfg, const C1Expr& z);

/// Full derivation of the virtual Mukai class on R'_{g,l}.
DivisorClass derive_mukai_class(int g, int level);

struct DerivationStep {
  std::string label;
  std::string justification;
  DivisorClass value;
};

/// The intermediate classes of derive_mukai_class, in order, for display.
std::vector<DerivationStep> derivation_transcript(int g, int level);

}  // namespace levelmod::porteous
