#pragma once

#include "preproj/presentations.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace preproj {

using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

/// A homomorphism KQ/I -> B given on vertices and arrows.
struct AlgebraMorphism {
  std::string name;
  Presentation source;
  AlgebraPtr target;
  std::vector<int> vertex_map;
  std::vector<FreeElem> arrow_images;  // indexed by source arrow id
  std::vector<SparseVec> image_coords;
};

/// Arrows missing from `images` go to the equally named target arrow.
/// Throws IncompatibleEndpoints if an image is not e_{v(s)} B e_{v(t)}.
AlgebraMorphism make_morphism(std::string name, Presentation source, AlgebraPtr target,
                              std::vector<int> vertex_map, const std::map<std::string, FreeElem>& images);
AlgebraMorphism identity_morphism(const AlgebraPtr& A);
/// Every arrow a goes to lambda * a.
AlgebraMorphism scaling(const Presentation& source, const AlgebraPtr& target, const Scalar& lambda);
/// g after f; f's target must be presented by g's source.
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

SparseVec apply(const AlgebraMorphism& m, const FreeElem& x);
SparseVec apply_path(const AlgebraMorphism& m, const Path& p);

struct WellDefinedReport {
  bool ok = true;
  int relation = -1;
  std::string failing;
};
WellDefinedReport is_well_defined(const AlgebraMorphism& m);
/// psi(phi(a)) = a and phi(psi(b)) = b on arrows of both sides.
bool verify_mutually_inverse(const AlgebraMorphism& phi, const AlgebraMorphism& psi);

enum class MorphismFamily {
  Aodd, E6, Dodd, Deven, Ln, E7, E8,
  DevenCharNot2, E7CharNot2, E8CharNot2, LnCharNot2,
  Scaling,
};
std::string family_name(MorphismFamily f);
MorphismFamily parse_family(const std::string& name);
/// Which socle case the theta-parameterised families belong to.
std::optional<SocleCase> family_case(MorphismFamily f);
bool family_needs_half(MorphismFamily f);

struct MorphismCaseId {
  MorphismFamily family;
  bool inverse = false;  // psi rather than phi
};

struct MorphismParams {
  int rank = 0;
  ThetaVector theta;
  std::optional<Scalar> lambda;  // Scaling only
  SocleCase scaling_case = SocleCase::DEven;
  Reading reading = Reading::ProofConsistent;
};

/// phi and psi of one catalog entry, sharing their two algebras.
///   Aodd, E6, Dodd:           P(Delta) -> A'(theta)
///   Deven, Ln, E7, E8:        A''(collapse(theta)) -> A'(theta)
///   *CharNot2:                P(Delta) -> P*(Delta)
struct CatalogPair {
  AlgebraMorphism phi;
  AlgebraMorphism psi;
  AlgebraPtr source;
  AlgebraPtr target;
};
CatalogPair catalog_pair(MorphismFamily family, const MorphismParams& params, const FieldSpec& f);
/// P*(Delta) -> A''(theta) sending each arrow a to lambda * a, and back.
CatalogPair scaling_pair(SocleCase c, int n, const Scalar& theta, const Scalar& lambda, const FieldSpec& f,
                         Reading reading = Reading::ProofConsistent);
/// Scaling reads the collapsed theta from params.theta at index 0.
AlgebraMorphism catalog_morphism(MorphismCaseId id, const MorphismParams& params, const FieldSpec& f);

/// Displayed identities, checked by comparing normal forms of both sides.
enum class IdentitySuite { E6, Dodd, E7, E8, L, E7Swap, E8Swap };
std::string suite_name(IdentitySuite s);
struct IdentityResult {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};
/// `n` is the rank of the rank families.
std::vector<IdentityResult> identity_regressions(const QuotientAlgebra& A, IdentitySuite suite, int n = 0);

}  // namespace preproj
