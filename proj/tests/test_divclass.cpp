#include "levelmod/divclass.hpp"
#include "levelmod/errors.hpp"
#include "levelmod/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace levelmod;
using S = BasisSymbol;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

DivisorClass random_class(const SpaceDescriptor& space, std::mt19937_64& rng) {
  DivisorClass x(space);
  std::bernoulli_distribution keep(0.6);
  for (const auto& s : basis(space)) {
    if (keep(rng)) x.add_term(s, random_rational(rng));
  }
  return x;
}

}  // namespace

TEST_CASE("space descriptors validate genus, level and linear-series data") {
  CHECK_THROWS_AS(SpaceDescriptor::rbar(3, 3), Error);
  CHECK_THROWS_AS(SpaceDescriptor::rprime(8, 4), Error);
  CHECK_THROWS_AS(SpaceDescriptor::rprime(8, 1), Error);
  CHECK_THROWS_AS(SpaceDescriptor::gspace(7, 3), Error);
  const auto g8 = SpaceDescriptor::gspace(8, 3);
  CHECK(g8.series_dimension() == 3);
  CHECK(g8.series_degree() == 9);
  CHECK(SpaceDescriptor::gspace(6, 2).series_degree() == 6);
}

TEST_CASE("bases have the expected symbols") {
  CHECK(basis(SpaceDescriptor::rprime(8, 5)).size() == 5);  // lambda, d0', d0'', d0^(1), d0^(2)
  CHECK(basis(SpaceDescriptor::mbar(8)).size() == 6);       // lambda, d0, d1..d4
  // Rbar_{8,3}: 4 irreducible-boundary/lambda + 4 d_i + 3 d_{g-i} + 4 d_{i:g-i}
  CHECK(basis(SpaceDescriptor::rbar(8, 3)).size() == 15);
  CHECK(basis(SpaceDescriptor::rbar(7, 3)).size() == 4 + 9);
  CHECK(basis(SpaceDescriptor::gspace(6, 2)).size() == 10);

  const auto r = SpaceDescriptor::rprime(6, 3);
  CHECK_FALSE(in_basis(r, S::delta0_ram(2)));
  CHECK_FALSE(in_basis(r, S::delta_i(1)));
  CHECK_FALSE(in_basis(r, S::frak_a()));
  CHECK_FALSE(in_basis(SpaceDescriptor::rbar(8, 3), S::delta_g_minus_i(4)));
  CHECK_THROWS_AS(DivisorClass(r, {{S::delta0_ram(2), 1}}), Error);
  CHECK_THROWS_AS(DivisorClass(r, {{S::delta0(), 1}}), Error);
}

TEST_CASE("add") {
  const auto r = SpaceDescriptor::rprime(8, 3);
  const DivisorClass a(r, {{S::lambda(), 35}});
  const DivisorClass b(r, {{S::delta0_prime(), -5}});
  CHECK(add(a, b) == DivisorClass(r, {{S::lambda(), 35}, {S::delta0_prime(), -5}}));

  const DivisorClass x(r, {{S::lambda(), 13}, {S::delta0_prime(), -2}});
  CHECK(add(x, scale(-1, x)).is_zero());
  CHECK(add(x, scale(-1, x)).coefficients().empty());

  const DivisorClass y(r, {{S::lambda(), q("-3/17")}});
  CHECK(add(x, y) == DivisorClass(r, {{S::lambda(), q("218/17")}, {S::delta0_prime(), -2}}));

  CHECK_THROWS_AS(add(x, DivisorClass(SpaceDescriptor::rprime(8, 5))), Error);
  try {
    add(x, DivisorClass(SpaceDescriptor::rprime(6, 3)));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpaceMismatch);
  }
}

TEST_CASE("scale") {
  const auto r = SpaceDescriptor::rprime(8, 3);
  const DivisorClass x(r, {{S::lambda(), 196}, {S::delta0_prime(), -28}, {S::delta0_double_prime(), -56},
                           {S::delta0_ram(1), q("-308/3")}});
  CHECK(scale(1, x) == x);
  CHECK(scale(0, x).is_zero());
  CHECK(scale(q("1/119"), x) == DivisorClass(r, {{S::lambda(), q("28/17")},
                                                 {S::delta0_prime(), q("-4/17")},
                                                 {S::delta0_double_prime(), q("-8/17")},
                                                 {S::delta0_ram(1), q("-44/51")}}));
  const DivisorClass y(r, {{S::lambda(), 19}, {S::delta0_prime(), -3}});
  CHECK(scale(2, y) == DivisorClass(r, {{S::lambda(), 38}, {S::delta0_prime(), -6}}));
}

TEST_CASE("setting a zero coefficient removes it") {
  DivisorClass x(SpaceDescriptor::rprime(6, 3), {{S::lambda(), 1}});
  x.set(S::lambda(), 0);
  CHECK(x.is_zero());
  x.add_term(S::delta0_prime(), 2);
  x.add_term(S::delta0_prime(), -2);
  CHECK(x.is_zero());
}

TEST_CASE("pullback from Mbar_g") {
  const auto m6 = SpaceDescriptor::mbar(6);
  const auto m8 = SpaceDescriptor::mbar(8);
  const auto rp63 = SpaceDescriptor::rprime(6, 3);
  const auto rb83 = SpaceDescriptor::rbar(8, 3);

  CHECK(pullback(rp63, DivisorClass(m6, {{S::delta0(), 1}})) ==
        DivisorClass(rp63, {{S::delta0_prime(), 1}, {S::delta0_double_prime(), 1}, {S::delta0_ram(1), 3}}));
  CHECK(pullback(rb83, DivisorClass(m8, {{S::lambda(), 1}})) == DivisorClass(rb83, {{S::lambda(), 1}}));
  CHECK(pullback(rb83, DivisorClass(m8, {{S::delta_i(2), 1}})) ==
        DivisorClass(rb83, {{S::delta_i(2), 1}, {S::delta_g_minus_i(2), 1}, {S::delta_i_colon(2), 1}}));
  CHECK(pullback(rb83, DivisorClass(m8, {{S::delta_i(1), 1}})) ==
        DivisorClass(rb83, {{S::delta_i(1), 2}, {S::delta_i_colon(1), 2}, {S::delta_g_minus_i(1), 1}}));
  // delta_{g/2}: the two one-sided components coincide.
  CHECK(pullback(rb83, DivisorClass(m8, {{S::delta_i(4), 1}})) ==
        DivisorClass(rb83, {{S::delta_i(4), 1}, {S::delta_i_colon(4), 1}}));

  const auto r5 = SpaceDescriptor::rprime(8, 5);
  CHECK(pullback(r5, DivisorClass(m8, {{S::delta0(), 2}})) ==
        DivisorClass(r5, {{S::delta0_prime(), 2}, {S::delta0_double_prime(), 2}, {S::delta0_ram(1), 10},
                          {S::delta0_ram(2), 10}}));
}

TEST_CASE("pullback errors") {
  const auto m8 = SpaceDescriptor::mbar(8);
  const DivisorClass d1(m8, {{S::delta_i(1), 1}});
  try {
    pullback(SpaceDescriptor::rbar(8, 2), d1);
    FAIL("expected UnsupportedLevel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedLevel);
  }
  // On R' the delta_1 image is dropped, so level 2 is fine there.
  CHECK(pullback(SpaceDescriptor::rprime(8, 2), d1).is_zero());
  try {
    pullback(SpaceDescriptor::rbar(6, 3), d1);
    FAIL("expected GenusMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GenusMismatch);
  }
  CHECK_THROWS_AS(pullback(SpaceDescriptor::rbar(8, 3), DivisorClass(SpaceDescriptor::rprime(8, 3))), Error);
}

TEST_CASE("restriction to the partial compactification") {
  const auto rb = SpaceDescriptor::rbar(8, 3);
  const auto rp = SpaceDescriptor::rprime(8, 3);
  DivisorClass k(rb, {{S::lambda(), 13}, {S::delta0_prime(), -2}, {S::delta0_double_prime(), -2},
                      {S::delta0_ram(1), -4}, {S::delta_g_minus_i(1), -1}});
  for (const auto& s : basis(rb)) {
    if (s.kind == SymbolKind::DeltaI || s.kind == SymbolKind::DeltaGMinusI ||
        s.kind == SymbolKind::DeltaIColonGMinusI) {
      k.add_term(s, -2);
    }
  }
  CHECK(restrict_to_partial(k) == DivisorClass(rp, {{S::lambda(), 13}, {S::delta0_prime(), -2},
                                                    {S::delta0_double_prime(), -2}, {S::delta0_ram(1), -4}}));
  CHECK(restrict_to_partial(DivisorClass(rb)).is_zero());
  CHECK(restrict_to_partial(DivisorClass(rb, {{S::lambda(), 1}, {S::delta_i(3), 1}})) ==
        DivisorClass(rp, {{S::lambda(), 1}}));
}

TEST_CASE("property: canonical form and pullback linearity") {
  std::mt19937_64 rng(20240917);
  for (int g : {6, 8, 9}) {
    for (int l : {3, 5, 7}) {
      const auto m = SpaceDescriptor::mbar(g);
      const auto rb = SpaceDescriptor::rbar(g, l);
      const auto rp = SpaceDescriptor::rprime(g, l);
      for (int k = 0; k < 25; ++k) {
        const DivisorClass x = random_class(m, rng);
        const DivisorClass y = random_class(m, rng);
        const Rational c = random_rational(rng);
        CHECK(pullback(rb, c * x + y) == c * pullback(rb, x) + pullback(rb, y));
        CHECK(add(x, scale(-1, x)).coefficients().empty());
        const DivisorClass z = c * x + y;
        for (const auto& [s, v] : z.coefficients()) CHECK_FALSE(v.is_zero());
      }
      for (const auto& s : basis(m)) {
        const DivisorClass e(m, {{s, 1}});
        CHECK(restrict_to_partial(pullback(rb, e)) == pullback(rp, e));
      }
    }
  }
}

TEST_CASE("text rendering") {
  const auto r = SpaceDescriptor::rprime(8, 3);
  const DivisorClass x(r, {{S::delta0_ram(1), q("-224/3")}, {S::delta0_double_prime(), -56}, {S::lambda(), 196},
                           {S::delta0_prime(), -28}});
  CHECK(x.str() == "196 lambda - 28 d0' - 56 d0'' - 224/3 d0^(1)");
  CHECK(x.str(true) == "196 lambda - 28 d0' - 56 d0'' - 224/3 (~74.666666) d0^(1)");
  CHECK(DivisorClass(r).str() == "0");
  CHECK(DivisorClass(r, {{S::delta0_prime(), -1}, {S::delta0_double_prime(), 1}}).str() == "-d0' + d0''");

  const auto rb = SpaceDescriptor::rbar(8, 3);
  const DivisorClass y(rb, {{S::delta_i_colon(1), 2}, {S::delta_g_minus_i(1), 1}, {S::delta_i(2), 1},
                            {S::delta_i(1), 2}});
  CHECK(y.str() == "2 d_1 + d_7 + 2 d_{1:7} + d_2");
}

TEST_CASE("JSON serialization") {
  const auto r = SpaceDescriptor::rprime(8, 3);
  const DivisorClass k(r, {{S::lambda(), 13}, {S::delta0_prime(), -2}, {S::delta0_double_prime(), -2},
                           {S::delta0_ram(1), -4}});
  const auto j = class_to_json(k);
  CHECK(j == nlohmann::json::parse(
                 R"({"space": {"g":8,"l":3,"model":"RPrime"}, "coeffs": {"lambda":"13", "d0p":"-2", "d0pp":"-2", "d0r1":"-4"}})"));
  CHECK(class_from_json(j) == k);

  std::mt19937_64 rng(3);
  for (const auto& space : {SpaceDescriptor::rbar(8, 5), SpaceDescriptor::mbar(7), SpaceDescriptor::gspace(6, 3),
                            SpaceDescriptor::rbar(9, 3)}) {
    for (int n = 0; n < 20; ++n) {
      const DivisorClass x = random_class(space, rng);
      CHECK(class_from_json(nlohmann::json::parse(class_to_json(x).dump())) == x);
    }
  }

  CHECK(parse_symbol_key(SpaceDescriptor::rbar(8, 3), "d7") == S::delta_g_minus_i(1));
  CHECK(parse_symbol_key(SpaceDescriptor::rbar(8, 3), "d4:4") == S::delta_i_colon(4));
  CHECK_THROWS_AS(parse_symbol_key(r, "d0r2"), Error);
  CHECK_THROWS_AS(parse_symbol_key(r, "bogus"), Error);
  CHECK_THROWS_AS(parse_symbol_key(SpaceDescriptor::rbar(8, 3), "d3:4"), Error);
  CHECK_THROWS_AS(class_from_json(nlohmann::json::parse(R"({"space":{"g":8,"l":4,"model":"RPrime"},"coeffs":{}})")),
                  Error);
  CHECK_THROWS_AS(class_from_json(nlohmann::json::parse(R"({"space":{"g":8,"l":3,"model":"RPrime"},"coeffs":{"lambda":"1/0"}})")),
                  Error);
}
