#include "levelmod/errors.hpp"
#include "levelmod/formulas.hpp"

#include <doctest.h>

using namespace levelmod;
using namespace levelmod::formulas;
using S = BasisSymbol;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InternalInconsistency;
}

const int kPrimes[] = {2, 3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("canonical class of Rbar_{8,3}") {
  const auto rb = SpaceDescriptor::rbar(8, 3);
  DivisorClass expected(rb, {{S::lambda(), 13}, {S::delta0_prime(), -2}, {S::delta0_double_prime(), -2},
                             {S::delta0_ram(1), -4}});
  for (int i = 1; i <= 4; ++i) {
    expected.add_term(S::delta_i(i), -2);
    expected.add_term(S::delta_i_colon(i), -2);
  }
  expected.add_term(S::delta_g_minus_i(3), -2);  // d_5
  expected.add_term(S::delta_g_minus_i(2), -2);  // d_6
  expected.add_term(S::delta_g_minus_i(1), -3);  // d_7
  CHECK(canonical_class(8, 3) == expected);
}

TEST_CASE("canonical class restricted and at higher level") {
  CHECK(restrict_to_partial(canonical_class(6, 3)) ==
        DivisorClass(SpaceDescriptor::rprime(6, 3), {{S::lambda(), 13}, {S::delta0_prime(), -2},
                                                     {S::delta0_double_prime(), -2}, {S::delta0_ram(1), -4}}));
  const auto k85 = canonical_class(8, 5);
  CHECK(k85.coeff(S::delta0_ram(1)) == -6);
  CHECK(k85.coeff(S::delta0_ram(2)) == -6);
  CHECK(code_of([] { canonical_class(3, 3); }) == ErrorCode::OutOfValidity);
  CHECK(code_of([] { canonical_class(8, 2); }) == ErrorCode::OutOfValidity);
}

TEST_CASE("property: canonical coefficients depend on l only through d0^(k)") {
  for (int g : {4, 5, 8, 11, 23}) {
    const auto k3 = canonical_class(g, 3);
    for (int l : {5, 7, 11, 13}) {
      const auto kl = canonical_class(g, l);
      for (const auto& [s, v] : kl.coefficients()) {
        if (s.kind == SymbolKind::Delta0Ram) {
          CHECK(v == Rational(-(l + 1)));
        } else {
          CHECK(v == k3.coeff(s));
        }
      }
    }
  }
}

TEST_CASE("rho") {
  const auto r2 = SpaceDescriptor::rprime(6, 2);
  CHECK(rho(2, r2) == DivisorClass(r2, {{S::delta0_ram(1), q("1/2")}}));
  const auto r3 = SpaceDescriptor::gspace(8, 3);
  CHECK(rho(3, r3) == DivisorClass(r3, {{S::delta0_ram(1), q("2/3")}}));
  const auto r5 = SpaceDescriptor::rprime(8, 5);
  CHECK(rho(5, r5) == DivisorClass(r5, {{S::delta0_ram(1), q("4/5")}, {S::delta0_ram(2), q("6/5")}}));
  CHECK(code_of([] { rho(3, SpaceDescriptor::mbar(8)); }) == ErrorCode::SpaceMismatch);
  CHECK(code_of([] { rho(5, SpaceDescriptor::rprime(8, 3)); }) == ErrorCode::SpaceMismatch);
}

TEST_CASE("virtual Mukai classes") {
  const auto r83 = SpaceDescriptor::rprime(8, 3);
  CHECK(mukai_virtual_class(8, 3) == DivisorClass(r83, {{S::lambda(), 196}, {S::delta0_prime(), -28},
                                                        {S::delta0_double_prime(), -56},
                                                        {S::delta0_ram(1), q("-224/3")}}));
  const auto r62 = SpaceDescriptor::rprime(6, 2);
  CHECK(mukai_virtual_class(6, 2) == DivisorClass(r62, {{S::lambda(), 35}, {S::delta0_prime(), -5},
                                                        {S::delta0_double_prime(), -15},
                                                        {S::delta0_ram(1), q("-15/2")}}));
  CHECK(mukai_virtual_class(6, 3).coeff(S::delta0_ram(1)) == q("-35/3"));
  CHECK(code_of([] { mukai_virtual_class(7, 3); }) == ErrorCode::UnsupportedGenus);
}

TEST_CASE("property: Mukai d0^(a) coefficient equals the uncollected form") {
  for (int l : kPrimes) {
    for (int a = 1; a <= l / 2; ++a) {
      CAPTURE(l);
      CAPTURE(a);
      const Rational split = Rational(a * (l - a)) / Rational(l);
      CHECK(mukai_virtual_class(6, l).coeff(S::delta0_ram(a)) == Rational(-5 * l) + 5 * split);
      CHECK(mukai_virtual_class(8, l).coeff(S::delta0_ram(a)) == Rational(-28 * l) + 14 * split);
    }
  }
}

TEST_CASE("summary-statement Mukai class differs only on d0''") {
  CHECK(mukai_virtual_class(6, 5) - mukai_summary_statement_class(6, 5) ==
        DivisorClass(SpaceDescriptor::rprime(6, 5), {{S::delta0_double_prime(), -10}}));
  CHECK(mukai_virtual_class(8, 3) - mukai_summary_statement_class(8, 3) ==
        DivisorClass(SpaceDescriptor::rprime(8, 3), {{S::delta0_double_prime(), -28}}));
}

TEST_CASE("improved Mukai classes") {
  const auto r83 = SpaceDescriptor::rprime(8, 3);
  CHECK(mukai_improved_class(8, 3) == DivisorClass(r83, {{S::lambda(), 196}, {S::delta0_prime(), -28},
                                                         {S::delta0_double_prime(), -84},
                                                         {S::delta0_ram(1), q("-308/3")}}));
  const auto r62 = SpaceDescriptor::rprime(6, 2);
  CHECK(mukai_improved_class(6, 2) == DivisorClass(r62, {{S::lambda(), 35}, {S::delta0_prime(), -5},
                                                         {S::delta0_double_prime(), -20},
                                                         {S::delta0_ram(1), q("-15/2")}}));
  // The d0^(1) correction is proven only for level 3 torsion in genus 8.
  CHECK(mukai_improved_class(8, 2).coeff(S::delta0_double_prime()) == -84);
  CHECK(mukai_improved_class(8, 2).coeff(S::delta0_ram(1)) == mukai_virtual_class(8, 2).coeff(S::delta0_ram(1)));
  CHECK(mukai_improved_class(8, 5) - mukai_virtual_class(8, 5) ==
        DivisorClass(SpaceDescriptor::rprime(8, 5), {{S::delta0_double_prime(), -28}}));

  CHECK(mukai_improved_class(8, 3, {.wirtinger = false, .ramified = true}) ==
        DivisorClass(r83, {{S::lambda(), 196}, {S::delta0_prime(), -28}, {S::delta0_double_prime(), -56},
                           {S::delta0_ram(1), q("-308/3")}}));
  CHECK(mukai_improved_class(6, 3, {.wirtinger = false, .ramified = false}) == mukai_virtual_class(6, 3));
  CHECK(code_of([] { mukai_improved_class(10, 3); }) == ErrorCode::UnsupportedGenus);
}

TEST_CASE("Koszul classes") {
  const auto r83 = SpaceDescriptor::rprime(8, 3);
  CHECK(koszul_prefactor(3) == 2);
  CHECK(koszul_prefactor(2) == 1);
  CHECK(koszul_virtual_class(3, 3) == DivisorClass(r83, {{S::lambda(), 38}, {S::delta0_prime(), -6},
                                                         {S::delta0_double_prime(), -6},
                                                         {S::delta0_ram(1), q("-2/3")}}));
  CHECK(koszul_improved_class(3, 3) == DivisorClass(r83, {{S::lambda(), 38}, {S::delta0_prime(), -6},
                                                          {S::delta0_double_prime(), -6},
                                                          {S::delta0_ram(1), q("-32/3")}}));
  const auto k35 = koszul_improved_class(3, 5);
  CHECK(koszul_virtual_class(3, 5).coeff(S::delta0_ram(2)) == q("6/5"));
  CHECK(k35.coeff(S::delta0_ram(2)) == q("6/5") - 10);
  CHECK(k35.space() == SpaceDescriptor::rprime(8, 5));
  CHECK(koszul_virtual_class(5, 3).space().genus() == 12);
}

TEST_CASE("Koszul preconditions") {
  CHECK_FALSE(koszul_parity_holds(2));  // C(3,2) = 3
  CHECK_FALSE(koszul_parity_holds(4));  // C(7,4) = 35
  CHECK(koszul_parity_holds(3));
  CHECK(koszul_parity_holds(6));        // C(11,6) = 462
  CHECK(code_of([] { koszul_virtual_class(2, 3); }) == ErrorCode::ParityConditionViolated);
  CHECK(code_of([] { koszul_improved_class(4, 3); }) == ErrorCode::ParityConditionViolated);
  CHECK(code_of([] { koszul_virtual_class(1, 3); }) == ErrorCode::OutOfValidity);
  CHECK(code_of([] { koszul_virtual_class(3, 2); }) == ErrorCode::OutOfValidity);
}

TEST_CASE("Koszul boundary degeneracy order") {
  CHECK(koszul_boundary_degeneracy_order(3) == 10);
  CHECK(koszul_boundary_degeneracy_order(1) == 1);
  CHECK(koszul_boundary_degeneracy_order(5) == 126);
  CHECK(koszul_boundary_degeneracy_order(2) == 3);
  for (int i = 1; i <= 30; ++i) {
    CAPTURE(i);
    CHECK(5 * binomial(2 * i - 1, i - 1) - 2 * binomial(2 * i, i) == binomial(2 * i - 1, i - 1));
    CHECK(koszul_boundary_degeneracy_order(i) == binomial(2 * i - 1, i - 1));
  }
}

TEST_CASE("property: improved minus virtual Koszul class is a constant d0^(a) correction") {
  for (int i : {3, 5, 6, 7, 9}) {
    for (int l : {3, 5, 7, 11, 13}) {
      const auto diff = koszul_improved_class(i, l) - koszul_virtual_class(i, l);
      const Rational order(koszul_boundary_degeneracy_order(i));
      CHECK(diff.coefficients().size() == static_cast<std::size_t>(l / 2));
      for (const auto& [s, v] : diff.coefficients()) {
        CHECK(s.kind == SymbolKind::Delta0Ram);
        CHECK(v == -order);
      }
    }
  }
}

TEST_CASE("boundary census") {
  const auto c63 = boundary_census(6, 3);
  CHECK(c63.wirtinger_components == 1);
  CHECK(c63.wirtinger_degree_each == 2);
  CHECK(c63.delta0ram_degree == 118098);
  CHECK(boundary_census(6, 2).delta0prime_count == 2046);
  CHECK(boundary_census(8, 3).wirtinger_components == 1);
  CHECK(boundary_census(8, 13).wirtinger_components == 6);
  CHECK(code_of([] { boundary_census(1, 3); }) == ErrorCode::OutOfValidity);
  CHECK_THROWS_AS(boundary_census(6, 4), Error);
}

TEST_CASE("slope bounds") {
  const auto report = slope_bounds_ok(mukai_improved_class(8, 3), 8, 3);
  REQUIRE(report.checks.size() == 3);
  CHECK(report.checks[0].symbol == S::delta0_prime());
  CHECK(report.checks[0].ratio == Rational(7));
  CHECK_FALSE(report.checks[0].passed);
  CHECK_FALSE(report.all_passed);

  const auto r83 = SpaceDescriptor::rprime(8, 3);
  const DivisorClass combo(r83, {{S::lambda(), q("218/17")}, {S::delta0_prime(), -2}, {S::delta0_double_prime(), -2},
                                 {S::delta0_ram(1), -4}});
  const auto rc = slope_bounds_ok(combo, 8, 3);
  CHECK(rc.checks[2].ratio == q("109/34"));
  CHECK(rc.checks[2].bound == q("13/4"));
  CHECK(rc.checks[2].passed);
  CHECK(rc.checks[0].passed);  // 109/17 < 13/2
  CHECK(rc.all_passed);

  const auto bare = slope_bounds_ok(DivisorClass(r83, {{S::lambda(), 13}}), 8, 3);
  CHECK_FALSE(bare.all_passed);
  for (const auto& c : bare.checks) {
    CHECK_FALSE(c.passed);
    CHECK_FALSE(c.ratio.has_value());
  }
  // Strict inequality: a/b exactly at the bound fails.
  const auto edge = slope_bounds_ok(DivisorClass(r83, {{S::lambda(), 13}, {S::delta0_prime(), -2},
                                                       {S::delta0_double_prime(), -3}, {S::delta0_ram(1), -5}}),
                                    8, 3);
  CHECK_FALSE(edge.checks[0].passed);
  CHECK(edge.checks[1].passed);

  CHECK(code_of([&] { slope_bounds_ok(DivisorClass(r83, {{S::lambda(), -1}}), 8, 3); }) == ErrorCode::NotNormalized);
  CHECK(code_of([&] { slope_bounds_ok(combo, 6, 3); }) == ErrorCode::SpaceMismatch);
}

TEST_CASE("formula ids") {
  CHECK(formula_ids().size() == 7);
  CHECK(formula_ids().front() == "canonical");
}
