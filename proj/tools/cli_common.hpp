#pragma once

#include "preproj/morphisms.hpp"
#include "preproj/structure.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace preproj::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "preproj-report/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "3", "-2", "1/2" into the field.
Scalar parse_scalar(const std::string& text, const FieldSpec& f);

/// "--theta v" sets every admissible index, "--theta i=v" one index.
ThetaVector parse_theta(const std::vector<std::string>& items, const std::vector<int>& indices, const FieldSpec& f);

/// Which algebra a command works on.
struct AlgebraChoice {
  std::string type;        // A, D, E, L
  int rank = 0;
  bool star = false;       // P*(Delta)
  std::string deform;      // P^f(Delta) for a polynomial in x, y
  int lr = 0;              // L_n^(r)
  std::string socle_case;  // A'(theta) of the given case
  bool collapsed = false;  // A''(theta) instead
  std::vector<std::string> theta;
  std::string file;        // .qpa
  std::vector<std::string> params;
  Reading reading = Reading::ProofConsistent;
};

Presentation choose_presentation(const AlgebraChoice& c, const FieldSpec& f);

/// FNV-1a, stable across platforms.
std::uint64_t stable_hash(const std::string& s);
std::mt19937_64 seeded_rng(std::uint64_t seed, const std::string& tag);
Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f, bool nonzero);

json algebra_json(const QuotientAlgebra& A);
json verdict_json(const QuotientAlgebra& A, const SymmetryVerdict& v);
json report_json(const QuotientAlgebra& A, const InvariantReport& r);
json fingerprint_json(const Fingerprint& fp);
json matrix_json(const Matrix& m);

std::string read_file(const std::string& path);

}  // namespace preproj::cli
