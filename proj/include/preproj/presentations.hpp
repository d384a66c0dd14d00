#pragma once

#include "preproj/quotient.hpp"

#include <map>
#include <string>

namespace preproj {

struct NotAdmissibleDeformation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoCanonicalStar : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CaseMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Socle-equivalent families with a theta-parameterised presentation.
enum class SocleCase { AOdd, DOdd, DEven, E6, E7, E8, L };

std::string case_name(SocleCase c);
SocleCase parse_case(const std::string& name);
Family case_family(SocleCase c);
/// Rank for the fixed-rank cases, or the requested one for rank families.
int case_rank(SocleCase c, int n);
/// Admissible theta indices for the case at rank n.
std::vector<int> theta_indices(SocleCase c, int n);
bool has_collapse(SocleCase c);

/// Where the displayed formulas are internally inconsistent, AsPrinted keeps
/// the display and ProofConsistent follows the verification computations.
enum class Reading { ProofConsistent, AsPrinted };

/// Named coefficients theta_i; unset entries are zero.
struct ThetaVector {
  std::map<int, Scalar> values;
  Scalar get(int i, const FieldSpec& f) const;
  void set(int i, const Scalar& v) { values[i] = v; }
  static ThetaVector constant(const std::vector<int>& indices, const Scalar& v);
  /// Parameter names t<i> for the DSL.
  ParamMap params(const FieldSpec& f) const;
};

/// Coxeter number h; P(Delta) has Loewy length h - 1.
int coxeter_number(const DynkinType& t);
/// n*h*(h+1)/6.
int expected_dimension(const DynkinType& t);
CapPolicy default_cap(const DynkinType& t);

Presentation local_algebra_R(const DynkinType& t, const FieldSpec& f);
/// Variables of the deformation polynomial: {x, y} for D and E, {x} for L.
std::vector<std::string> deform_vars(const DynkinType& t);
bool is_admissible(const DynkinType& t, const NCPoly& f, const FieldSpec& field);
Presentation preprojective(const DynkinType& t, const FieldSpec& f);
Presentation deformed(const DynkinType& t, const NCPoly& f, const FieldSpec& field);
NCPoly canonical_f(const DynkinType& t, const FieldSpec& field);
Presentation canonical_star(const DynkinType& t, const FieldSpec& field);
Presentation L_algebra(int n, int r, const FieldSpec& field);

/// The presentation A'(theta) of the matching lemma.
Presentation socle_deformed_generic(SocleCase c, int n, const ThetaVector& theta, const FieldSpec& f,
                                    Reading reading = Reading::ProofConsistent);
/// The one-parameter presentation A''(theta) of the cases with a collapse.
Presentation socle_collapsed(SocleCase c, int n, const Scalar& theta, const FieldSpec& f,
                             Reading reading = Reading::ProofConsistent);
Scalar theta_collapse(SocleCase c, int n, const ThetaVector& theta, const FieldSpec& f,
                      Reading reading = Reading::ProofConsistent);
/// Exponent k in the stated equation lambda^k = theta.
int stated_scaling_exponent(SocleCase c, int n);
/// theta = sign * lambda^exponent makes arrow scaling by lambda a map P*(Delta) -> A''(theta).
struct ScalingLaw {
  int exponent = 0;
  int sign = 1;
};
ScalingLaw derived_scaling_law(SocleCase c, int n);

}  // namespace preproj
