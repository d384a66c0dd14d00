#include "oracle.hpp"

#include "preproj/dsl.hpp"

#include <doctest.h>

#include <random>

using namespace preproj;

namespace {

std::vector<FieldSpec> fields() { return {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()}; }

}  // namespace

TEST_CASE("P(A_n) blocks match the closed formula") {
  for (const auto& f : fields())
    for (int n = 2; n <= 5; ++n) {
      auto A = build_quotient(preprojective({Family::A, n}, f));
      CHECK(A.dims_by_pair() == oracle::type_A_dims(n));
    }
}

TEST_CASE("dimensions agree with a rewriting-free oracle") {
  auto gf2 = FieldSpec::prime(2);
  auto gf3 = FieldSpec::prime(3);
  auto q = FieldSpec::rationals();
  std::vector<std::pair<DynkinType, FieldSpec>> cases{
      {{Family::A, 3}, q},   {{Family::D, 4}, gf2}, {{Family::D, 4}, gf3}, {{Family::D, 5}, q},
      {{Family::L, 2}, gf2}, {{Family::L, 3}, q},   {{Family::E, 6}, gf2}};
  for (const auto& [t, f] : cases) {
    CAPTURE(t.str());
    auto p = preprojective(t, f);
    auto A = build_quotient(p);
    int len = oracle::loewy_length(t);
    CHECK(A.loewy_length() == len);
    CHECK(A.dims_by_pair() == oracle::truncated_dims(p, len + 1));
  }
  for (const auto& t : {DynkinType{Family::D, 4}, DynkinType{Family::L, 2}, DynkinType{Family::L, 3}}) {
    CAPTURE(t.str());
    auto p = canonical_star(t, gf2);
    CHECK(build_quotient(p).dims_by_pair() == oracle::truncated_dims(p, oracle::loewy_length(t) + 1));
  }
}

TEST_CASE("socle deformed A_3 against the oracle") {
  auto f = FieldSpec::prime(3);
  ThetaVector th;
  for (int i : theta_indices(SocleCase::AOdd, 3)) th.set(i, Scalar(f, 1));
  auto p = socle_deformed_generic(SocleCase::AOdd, 3, th, f);
  CHECK(build_quotient(p).dims_by_pair() == oracle::truncated_dims(p, 4));
}

TEST_CASE("dimension formula n h (h + 1) / 6") {
  CHECK(expected_dimension({Family::A, 2}) == 4);
  CHECK(expected_dimension({Family::D, 4}) == 28);
  CHECK(expected_dimension({Family::E, 6}) == 156);
  CHECK(expected_dimension({Family::E, 7}) == 399);
  CHECK(expected_dimension({Family::E, 8}) == 1240);
  for (const auto& f : fields())
    for (auto t : {DynkinType{Family::A, 4}, DynkinType{Family::D, 6}, DynkinType{Family::E, 7}, DynkinType{Family::L, 3}})
      CHECK(build_quotient(preprojective(t, f)).dimension() == expected_dimension(t));
}

TEST_CASE("relations reduce to zero") {
  for (const auto& f : fields())
    for (auto t : {DynkinType{Family::D, 5}, DynkinType{Family::E, 6}, DynkinType{Family::L, 2}}) {
      auto p = canonical_star(t, f);
      auto A = build_quotient(p);
      for (const auto& r : p.relations) CHECK(A.normal_form(r).empty());
    }
}

TEST_CASE("multiplication is associative on random elements") {
  std::mt19937_64 rng(7);
  for (const auto& f : fields()) {
    auto A = build_quotient(canonical_star({Family::D, 4}, f));
    std::uniform_int_distribution<int> pick(0, A.dimension() - 1), coef(-3, 3);
    auto random_vec = [&] {
      SparseVec v;
      for (int k = 0; k < 4; ++k) v = add(v, SparseVec{{pick(rng), Scalar(f, coef(rng) == 0 ? 1 : coef(rng))}});
      return v;
    };
    for (int trial = 0; trial < 30; ++trial) {
      auto x = random_vec(), y = random_vec(), z = random_vec();
      CHECK(A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z)));
    }
  }
}

TEST_CASE("the basis does not depend on the truncation degree") {
  for (const auto& f : fields())
    for (auto t : {DynkinType{Family::A, 5}, DynkinType{Family::D, 6}, DynkinType{Family::E, 6}, DynkinType{Family::L, 3}}) {
      for (bool star : {false, true}) {
        if (star && t.family == Family::A) continue;
        auto p = star ? canonical_star(t, f) : preprojective(t, f);
        auto A = build_quotient(p);
        auto wider = p;
        wider.cap = CapPolicy::fixed(A.cap_used() + 2);
        CHECK(same_structure_constants(A, build_quotient(wider)));
      }
    }
}

TEST_CASE("too small a cap is reported") {
  auto p = preprojective({Family::D, 4}, FieldSpec::prime(2));
  p.cap = CapPolicy::fixed(2);
  CHECK_THROWS_AS(build_quotient(p), CapExceeded);
}

TEST_CASE("socle of P(A_2)") {
  auto A = build_quotient(preprojective({Family::A, 2}, FieldSpec::prime(3)));
  REQUIRE(A.dimension() == 4);
  auto soc = left_socle(A);
  REQUIRE(soc.basis.size() == 2);
  std::vector<std::string> names;
  for (const auto& v : soc.basis) names.push_back(format_element(A.to_element(v)));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"a0", "abar0"});
}

TEST_CASE("presentation files") {
  auto f = FieldSpec::prime(3);
  auto p = parse_presentation(R"(presentation tiny
quiver { vertices 0..1; arrow a0: 0 -> 1; arrow abar0: 1 -> 0; bar a0 = abar0; }
relations { a0*abar0; abar0*a0; }
)", {}, f);
  CHECK(build_quotient(p).dimension() == 4);
  CHECK(p.hash() == preprojective({Family::A, 2}, f).hash());

  auto e6 = parse_presentation(catalog_text("E6_prime.qpa"), ThetaVector::constant({0, 3}, Scalar(f, 1)).params(f), f);
  CHECK(build_quotient(e6).dimension() == 156);

  try {
    parse_presentation("presentation bad\nquiver dynkin D4;\nrelations {\n  a0*abar0 +;\n}\n", {}, f);
    FAIL("no error");
  } catch (const DslError& e) {
    CHECK(e.line == 4);
  }
  CHECK_THROWS_AS(parse_presentation("presentation p\nquiver dynkin D4;\nrelations { a9; }\n", {}, f), DslError);
}
