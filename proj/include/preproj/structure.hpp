#pragma once

#include "preproj/quotient.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace preproj {

struct NotQF : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Matrix = std::vector<std::vector<int>>;

/// dim e_i A e_j.
Matrix cartan_matrix(const QuotientAlgebra& A);

/// dim rad^k A for k = 0, 1, ... until it reaches 0.
std::vector<int> radical_series(const QuotientAlgebra& A);

struct Socle {
  std::vector<SparseVec> basis;  // each vector lies in one block e_i A e_j
  Matrix dims;                   // dim e_i soc e_j
};
/// {s : rad * s = 0}.
Socle left_socle(const QuotientAlgebra& A);
/// {s : s * rad = 0}.
Socle right_socle(const QuotientAlgebra& A);
bool same_subspace(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, const FieldSpec& f);

/// nu with soc(e_i A) isomorphic to S_nu(i); throws NotQF.
std::vector<int> nakayama_permutation(const QuotientAlgebra& A);
bool is_self_injective(const QuotientAlgebra& A);
bool is_weakly_symmetric(const QuotientAlgebra& A);

/// [A,A] as an echelon subspace of coordinate vectors.
Subspace commutator_subspace(const QuotientAlgebra& A);

struct SymmetryBudget {
  int budget_bits = 24;
  int samples = 10000;
  std::uint64_t seed = 1;
};

struct SymmetryVerdict {
  enum class Kind { Symmetric, NotSymmetric, Unknown };
  Kind kind = Kind::Unknown;
  /// Symmetric: psi as the coordinates psi(b_i).
  SparseVec witness;
  /// NotSymmetric: a nonzero socle element inside [A,A].
  SparseVec certificate;
  /// Vertex i with certificate = e_i s e_i, or -1.
  int certificate_vertex = -1;
  std::string reason;
};
std::string kind_name(SymmetryVerdict::Kind k);

SymmetryVerdict symmetry_decide(const QuotientAlgebra& A, const SymmetryBudget& budget = {});
/// psi vanishes on [A,A] and its Gram matrix psi(b_i b_j) has full rank.
bool verify_symmetric_witness(const QuotientAlgebra& A, const SparseVec& psi);
/// s is nonzero, in the socle, in [A,A], and in e_v A e_v when v >= 0.
bool verify_nonsymmetric_certificate(const QuotientAlgebra& A, const SparseVec& s, int v);

/// dim Z(A).
int center_dimension(const QuotientAlgebra& A);

/// Over GF(p): dim of (span{b^(p^k)} + [A,A]) / [A,A] for k = 1, 2, ... until
/// stable. Empty over Q.
std::vector<int> frobenius_ranks(const QuotientAlgebra& A);

struct InvariantReport {
  int dimension = 0;
  Matrix cartan;
  int loewy_length = 0;
  std::vector<int> radical_dims;
  Matrix socle_dims;
  bool socles_agree = false;
  std::optional<std::vector<int>> nakayama;
  bool self_injective = false;
  bool weakly_symmetric = false;
  SymmetryVerdict symmetry;
};
InvariantReport invariant_report(const QuotientAlgebra& A, const SymmetryBudget& budget = {});

struct Fingerprint {
  int dimension = 0;
  std::vector<int> hilbert;
  Matrix cartan;                      // lexicographically least over vertex relabellings
  std::vector<int> nakayama_cycles;   // sorted cycle lengths, empty if not QF
  std::string symmetry;
  int center_dim = 0;
  std::vector<int> frobenius;
  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};
Fingerprint invariant_fingerprint(const QuotientAlgebra& A, const SymmetryBudget& budget = {});

/// A / soc(A).
QuotientAlgebra socle_quotient(const QuotientAlgebra& A);
/// Equal dimensions and structure constants of A/soc and B/soc on the
/// common normal-form basis.
bool same_presentation_mod_socle(const QuotientAlgebra& A, const QuotientAlgebra& B);
/// Same basis paths and arrow multiplication tables.
bool same_structure_constants(const QuotientAlgebra& A, const QuotientAlgebra& B);

}  // namespace preproj
