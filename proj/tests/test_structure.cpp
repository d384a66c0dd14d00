#include "oracle.hpp"

#include <doctest.h>

using namespace preproj;

namespace {

const FieldSpec gf2 = FieldSpec::prime(2);
const FieldSpec gf3 = FieldSpec::prime(3);
const FieldSpec rat = FieldSpec::rationals();

QuotientAlgebra P(Family fam, int n, const FieldSpec& f) { return build_quotient(preprojective({fam, n}, f)); }
QuotientAlgebra Pstar(Family fam, int n, const FieldSpec& f) { return build_quotient(canonical_star({fam, n}, f)); }

// rad * s = 0 and s * rad = 0, tested on arrows.
bool killed_by_arrows(const QuotientAlgebra& A, const SparseVec& s) {
  for (int a = 0; a < A.quiver().arrow_count(); ++a)
    if (!A.right_arrow(s, a).empty() || !A.left_arrow(a, s).empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("Cartan matrix of P(A_n)") {
  for (int n = 2; n <= 5; ++n) CHECK(cartan_matrix(P(Family::A, n, rat)) == oracle::type_A_dims(n));
}

TEST_CASE("radical series") {
  auto A = P(Family::A, 3, gf3);
  CHECK(radical_series(A) == std::vector<int>{10, 7, 3, 0});
}

TEST_CASE("Nakayama permutation of P(A_n) reverses the vertices") {
  for (const auto& f : {gf2, gf3, rat})
    for (int n = 2; n <= 5; ++n) {
      auto nu = nakayama_permutation(P(Family::A, n, f));
      for (int i = 0; i < n; ++i) CHECK(nu[i] == n - 1 - i);
    }
}

TEST_CASE("P(D_4) is weakly symmetric, P(D_5) swaps the two short legs") {
  CHECK(is_weakly_symmetric(P(Family::D, 4, gf3)));
  auto nu = nakayama_permutation(P(Family::D, 5, gf3));
  CHECK(nu[0] == 1);
  CHECK(nu[1] == 0);
}

TEST_CASE("P*(Delta) is weakly symmetric in characteristic 2") {
  for (auto t : {DynkinType{Family::D, 4}, DynkinType{Family::D, 6}, DynkinType{Family::E, 7}, DynkinType{Family::L, 2},
                 DynkinType{Family::L, 3}}) {
    CAPTURE(t.str());
    CHECK(is_weakly_symmetric(build_quotient(canonical_star(t, gf2))));
  }
}

TEST_CASE("left and right socles coincide") {
  for (auto t : {DynkinType{Family::A, 4}, DynkinType{Family::D, 5}, DynkinType{Family::E, 6}}) {
    auto A = build_quotient(preprojective(t, gf3));
    CHECK(same_subspace(left_socle(A).basis, right_socle(A).basis, gf3));
  }
}

TEST_CASE("a non-selfinjective algebra is detected") {
  Presentation p = preprojective({Family::A, 2}, gf3);
  p.relations = {p.parse("a0*abar0"), p.parse("abar0*a0*abar0")};
  auto B = build_quotient(p);
  CHECK(B.dimension() == 5);
  CHECK_FALSE(is_self_injective(B));
  CHECK_THROWS_AS(nakayama_permutation(B), NotQF);
}

TEST_CASE("symmetry of P(D_4)") {
  auto A = P(Family::D, 4, gf2);
  auto v = symmetry_decide(A);
  REQUIRE(v.kind == SymmetryVerdict::Kind::Symmetric);
  CHECK(verify_symmetric_witness(A, v.witness));

  auto B = P(Family::D, 4, gf3);
  auto w = symmetry_decide(B);
  REQUIRE(w.kind == SymmetryVerdict::Kind::NotSymmetric);
  CHECK(verify_nonsymmetric_certificate(B, w.certificate, w.certificate_vertex));
}

TEST_CASE("a socle element of P*(D_4) inside the commutator space") {
  auto A = Pstar(Family::D, 4, gf2);
  auto s = A.normal_form(A.presentation().parse("abar0*a0*abar1*a1"));
  REQUIRE(!s.empty());
  CHECK(killed_by_arrows(A, s));
  CHECK(commutator_subspace(A).contains(s));
  CHECK(verify_nonsymmetric_certificate(A, s, 2));
  CHECK(symmetry_decide(A).kind == SymmetryVerdict::Kind::NotSymmetric);
}

TEST_CASE("the same element is not a commutator sum in P(D_4)") {
  auto A = P(Family::D, 4, gf2);
  auto s = A.normal_form(A.presentation().parse("abar0*a0*abar1*a1"));
  REQUIRE(!s.empty());
  CHECK(killed_by_arrows(A, s));
  CHECK_FALSE(commutator_subspace(A).contains(s));
}

TEST_CASE("symmetry verdicts of type A") {
  for (const auto& f : {gf2, gf3, rat})
    for (int n = 2; n <= 4; ++n) CHECK(symmetry_decide(P(Family::A, n, f)).kind == SymmetryVerdict::Kind::NotSymmetric);
}

TEST_CASE("type L is symmetric") {
  for (const auto& f : {gf2, gf3})
    for (int n = 2; n <= 3; ++n) {
      CHECK(symmetry_decide(P(Family::L, n, f)).kind == SymmetryVerdict::Kind::Symmetric);
      CHECK(symmetry_decide(Pstar(Family::L, n, f)).kind == SymmetryVerdict::Kind::Symmetric);
    }
}

TEST_CASE("witness verification rejects the zero form") {
  auto A = P(Family::L, 2, gf2);
  CHECK_FALSE(verify_symmetric_witness(A, {}));
}

TEST_CASE("socle equivalence") {
  for (auto t : {DynkinType{Family::D, 4}, DynkinType{Family::E, 6}, DynkinType{Family::L, 3}}) {
    auto A = build_quotient(preprojective(t, gf2));
    auto B = build_quotient(canonical_star(t, gf2));
    CHECK(same_presentation_mod_socle(A, B));
    CHECK(socle_quotient(A).dimension() == A.dimension() - t.rank);
  }
}

TEST_CASE("frobenius ranks separate P(L_n) and P*(L_n) over GF(2)") {
  CHECK(frobenius_ranks(P(Family::L, 2, gf2)) == std::vector<int>{2, 2});
  CHECK(frobenius_ranks(Pstar(Family::L, 2, gf2)) == std::vector<int>{3, 2});
  CHECK(frobenius_ranks(P(Family::L, 3, gf2)) == std::vector<int>{3, 3, 3});
  CHECK(frobenius_ranks(Pstar(Family::L, 3, gf2)) == std::vector<int>{4, 3, 3});
  CHECK(frobenius_ranks(P(Family::L, 2, rat)).empty());
}

TEST_CASE("fingerprints") {
  for (auto t : {DynkinType{Family::D, 4}, DynkinType{Family::L, 2}}) {
    auto a2 = invariant_fingerprint(build_quotient(preprojective(t, gf2)));
    auto b2 = invariant_fingerprint(build_quotient(canonical_star(t, gf2)));
    CHECK(a2 != b2);
    auto a3 = invariant_fingerprint(build_quotient(preprojective(t, gf3)));
    auto b3 = invariant_fingerprint(build_quotient(canonical_star(t, gf3)));
    CHECK(a3 == b3);
  }
}

TEST_CASE("center dimension of P(A_2)") {
  // Only the scalars.
  CHECK(center_dimension(P(Family::A, 2, gf3)) == 1);
}
