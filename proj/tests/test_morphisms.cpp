#include "preproj/morphisms.hpp"
#include "preproj/structure.hpp"

#include <doctest.h>

#include <random>

using namespace preproj;

namespace {

const FieldSpec gf2 = FieldSpec::prime(2);
const FieldSpec gf3 = FieldSpec::prime(3);
const FieldSpec gf5 = FieldSpec::prime(5);
const FieldSpec rat = FieldSpec::rationals();

bool pair_ok(const CatalogPair& p) {
  return is_well_defined(p.phi).ok && is_well_defined(p.psi).ok && verify_mutually_inverse(p.phi, p.psi);
}

ThetaVector squares_plus_two(SocleCase c, int n, const FieldSpec& f) {
  ThetaVector th;
  for (int i : theta_indices(c, n)) th.set(i, Scalar(f, i * i + 2));
  return th;
}

MorphismParams params(int rank, ThetaVector th = {}, Reading r = Reading::ProofConsistent) {
  MorphismParams mp;
  mp.rank = rank;
  mp.theta = std::move(th);
  mp.reading = r;
  return mp;
}

}  // namespace

TEST_CASE("catalog pairs at theta = i^2 + 2") {
  struct Case {
    MorphismFamily fam;
    int rank;
  };
  for (const auto& f : {gf2, gf3, rat})
    for (Case c : {Case{MorphismFamily::Aodd, 5}, Case{MorphismFamily::Dodd, 5}, Case{MorphismFamily::Deven, 4},
                   Case{MorphismFamily::E6, 6}, Case{MorphismFamily::E7, 7}, Case{MorphismFamily::Ln, 2},
                   Case{MorphismFamily::Ln, 3}}) {
      CAPTURE(family_name(c.fam));
      CAPTURE(f.name());
      CHECK(pair_ok(catalog_pair(c.fam, params(c.rank, squares_plus_two(*family_case(c.fam), c.rank, f)), f)));
    }
}

TEST_CASE("P(Delta) and P*(Delta) are isomorphic away from characteristic 2") {
  for (const auto& f : {gf3, gf5, rat}) {
    CHECK(pair_ok(catalog_pair(MorphismFamily::DevenCharNot2, params(4), f)));
    CHECK(pair_ok(catalog_pair(MorphismFamily::LnCharNot2, params(2), f)));
    CHECK(pair_ok(catalog_pair(MorphismFamily::LnCharNot2, params(3), f)));
  }
  CHECK_THROWS_AS(catalog_pair(MorphismFamily::DevenCharNot2, params(4), gf2), CharTwo);
  CHECK_THROWS_AS(catalog_pair(MorphismFamily::DevenCharNot2, params(5), gf3), RangeError);
}

TEST_CASE("A_3 with 1 + theta = 0 leaves the self-injective range") {
  ThetaVector th;
  for (int i : theta_indices(SocleCase::AOdd, 3)) th.set(i, Scalar(gf3, -1));
  CHECK_THROWS_AS(catalog_pair(MorphismFamily::Aodd, params(3, th), gf3), RangeError);
  CHECK_FALSE(is_self_injective(build_quotient(socle_deformed_generic(SocleCase::AOdd, 3, th, gf3))));
  for (int i : theta_indices(SocleCase::AOdd, 3)) th.set(i, Scalar(gf3, 1));
  CHECK(pair_ok(catalog_pair(MorphismFamily::Aodd, params(3, th), gf3)));
}

TEST_CASE("the printed L_3 relations do not support the maps") {
  auto th = squares_plus_two(SocleCase::L, 3, rat);
  CHECK(pair_ok(catalog_pair(MorphismFamily::Ln, params(3, th), rat)));
  CHECK_FALSE(pair_ok(catalog_pair(MorphismFamily::Ln, params(3, th, Reading::AsPrinted), rat)));
}

TEST_CASE("theta collapse") {
  ThetaVector th;
  for (int i : theta_indices(SocleCase::DEven, 4)) th.set(i, Scalar(rat, 0));
  CHECK(theta_collapse(SocleCase::DEven, 4, th, rat).is_zero());
  CHECK_FALSE(has_collapse(SocleCase::E6));
  CHECK(has_collapse(SocleCase::E7));
}

TEST_CASE("scaling laws") {
  // The stated exponent agrees with the measured one only for L_n.
  for (int n : {2, 3, 4}) {
    CHECK(stated_scaling_exponent(SocleCase::L, n) == 2 * n - 3);
    CHECK(derived_scaling_law(SocleCase::L, n).exponent == 2 * n - 3);
    CHECK(derived_scaling_law(SocleCase::L, n).sign == 1);
  }
  CHECK(derived_scaling_law(SocleCase::DEven, 4).exponent == 2);
  CHECK(derived_scaling_law(SocleCase::DEven, 6).sign == -1);
  CHECK(derived_scaling_law(SocleCase::E7, 7).exponent == 14);
  CHECK(derived_scaling_law(SocleCase::E8, 8).sign == -1);

  Scalar lambda(gf5, 2);
  for (auto [c, n] : {std::pair{SocleCase::DEven, 4}, std::pair{SocleCase::DEven, 6}, std::pair{SocleCase::E7, 7},
                      std::pair{SocleCase::L, 2}, std::pair{SocleCase::L, 3}}) {
    CAPTURE(case_name(c));
    CAPTURE(n);
    auto law = derived_scaling_law(c, n);
    Scalar theta = Scalar(gf5, law.sign) * lambda.pow(law.exponent);
    CHECK(pair_ok(scaling_pair(c, n, theta, lambda, gf5)));
  }
  // lambda = 2 over GF(5): the stated lambda^5 = 2 differs from lambda^2 = 4.
  CHECK_FALSE(pair_ok(scaling_pair(SocleCase::DEven, 4, lambda.pow(5), lambda, gf5)));
  CHECK(pair_ok(scaling_pair(SocleCase::L, 3, lambda.pow(3), lambda, gf5)));
}

TEST_CASE("scaling by lambda then by 1/lambda is the identity") {
  auto A = std::make_shared<QuotientAlgebra>(build_quotient(preprojective({Family::D, 4}, gf5)));
  for (int l = 1; l < 5; ++l) {
    Scalar lambda(gf5, l);
    auto f = scaling(A->presentation(), A, lambda);
    auto g = scaling(A->presentation(), A, lambda.inv());
    REQUIRE(is_well_defined(f).ok);
    auto h = compose(g, f);
    auto id = identity_morphism(A);
    for (int a = 0; a < A->quiver().arrow_count(); ++a) CHECK(h.image_coords[a] == id.image_coords[a]);
  }
}

TEST_CASE("morphisms are multiplicative") {
  auto th = squares_plus_two(SocleCase::E6, 6, gf3);
  auto pair = catalog_pair(MorphismFamily::E6, params(6, th), gf3);
  const auto& q = pair.phi.source.quiver;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> arrow(0, q->arrow_count() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    // random composable words
    Path x = Path::of_arrow(*q, arrow(rng));
    while (x.length() < 3) {
      auto next = q->arrows_from(x.target);
      x = *x.then(Path::of_arrow(*q, next[rng() % next.size()]));
    }
    Path y = Path::of_arrow(*q, q->arrows_from(x.target)[rng() % q->arrows_from(x.target).size()]);
    auto xy = *x.then(y);
    CHECK(apply_path(pair.phi, xy) == pair.target->multiply(apply_path(pair.phi, x), apply_path(pair.phi, y)));
  }
}

TEST_CASE("images with wrong endpoints are rejected") {
  auto A = std::make_shared<QuotientAlgebra>(build_quotient(preprojective({Family::A, 3}, gf3)));
  auto p = A->presentation();
  CHECK_THROWS_AS(make_morphism("bad", p, A, {}, {{"a0", p.parse("abar0")}}), IncompatibleEndpoints);
}

TEST_CASE("displayed identities") {
  for (const auto& f : {gf2, gf3, rat}) {
    auto check = [&](const QuotientAlgebra& A, IdentitySuite s, int n) {
      for (const auto& r : identity_regressions(A, s, n)) {
        CAPTURE(r.name);
        CHECK(r.pass);
      }
    };
    check(build_quotient(socle_deformed_generic(SocleCase::E6, 6, squares_plus_two(SocleCase::E6, 6, f), f)),
          IdentitySuite::E6, 0);
    check(build_quotient(socle_deformed_generic(SocleCase::DOdd, 5, squares_plus_two(SocleCase::DOdd, 5, f), f)),
          IdentitySuite::Dodd, 0);
    check(build_quotient(socle_collapsed(SocleCase::E7, 7, Scalar(f, 1), f)), IdentitySuite::E7, 0);
    check(build_quotient(preprojective({Family::E, 7}, f)), IdentitySuite::E7Swap, 0);
    for (int n : {2, 3})
      check(build_quotient(socle_collapsed(SocleCase::L, n, Scalar(f, 1), f)), IdentitySuite::L, n);
  }
}
