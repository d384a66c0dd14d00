#pragma once

#include "preproj/field.hpp"
#include "preproj/quiver.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace preproj {

struct QuiverMismatch : std::runtime_error {
  QuiverMismatch() : std::runtime_error("elements over different quivers or fields") {}
};
struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};
struct UnknownName : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompatibleEndpoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A path: either the trivial path at `source` or a composable arrow word.
/// Products read left to right: in p*q the target of p is the source of q.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return {v, v, {}}; }
  static Path of_arrow(const Quiver& q, int a);
  int length() const { return static_cast<int>(arrows.size()); }
  /// Concatenation; std::nullopt when not composable.
  std::optional<Path> then(const Path& q) const;

  auto key() const { return std::tie(source, arrows, target); }
  bool operator==(const Path& o) const { return key() == o.key(); }
};

/// Degree first, then lexicographic on arrow ids, then source vertex.
struct PathOrder {
  bool operator()(const Path& a, const Path& b) const;
};

class FreeElem {
 public:
  using Terms = std::map<Path, Scalar, PathOrder>;

  FreeElem() = default;
  FreeElem(QuiverPtr q, FieldSpec f) : q_(std::move(q)), f_(f) {}
  static FreeElem path(QuiverPtr q, FieldSpec f, const Path& p, const Scalar& c);
  static FreeElem path(QuiverPtr q, FieldSpec f, const Path& p);
  static FreeElem arrow(QuiverPtr q, FieldSpec f, int a);
  static FreeElem vertex(QuiverPtr q, FieldSpec f, int v);

  const QuiverPtr& quiver() const { return q_; }
  const FieldSpec& field() const { return f_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Path& p) const;

  void add_term(const Path& p, const Scalar& c);
  FreeElem operator+(const FreeElem& b) const;
  FreeElem operator-(const FreeElem& b) const;
  FreeElem operator-() const;
  FreeElem operator*(const FreeElem& b) const;
  FreeElem scaled(const Scalar& c) const;
  FreeElem pow(int k) const;
  FreeElem& operator+=(const FreeElem& b) { return *this = *this + b; }

  /// Common (source, target) of all terms, if any.
  std::optional<std::pair<int, int>> endpoints() const;
  int min_degree() const;
  int max_degree() const;

  bool operator==(const FreeElem& b) const;

 private:
  void check(const FreeElem& b) const;
  QuiverPtr q_;
  FieldSpec f_;
  Terms terms_;
};

FreeElem multiply(const FreeElem& a, const FreeElem& b);
FreeElem commutator(const FreeElem& a, const FreeElem& b);

using ParamMap = std::map<std::string, Scalar>;

/// Grammar: sums of products of arrows, `e<v>`, parameters, integer or
/// fraction scalars, `^k` and parentheses.
FreeElem parse_element(const std::string& text, QuiverPtr q, const FieldSpec& f,
                       const ParamMap& params = {});
std::string format_element(const FreeElem& x);
std::string format_path(const Quiver& q, const Path& p);

/// Noncommutative polynomial in named variables, stored over a one-vertex
/// quiver whose loops are the variables.
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(std::vector<std::string> vars, const FieldSpec& f);
  static NCPoly parse(const std::string& text, std::vector<std::string> vars, const FieldSpec& f);

  const std::vector<std::string>& vars() const { return vars_; }
  const FreeElem& poly() const { return poly_; }
  const QuiverPtr& var_quiver() const { return poly_.quiver(); }
  bool is_zero() const { return poly_.is_zero(); }
  int min_degree() const { return poly_.min_degree(); }
  NCPoly operator*(const NCPoly& o) const;
  NCPoly operator+(const NCPoly& o) const;
  std::string str() const { return format_element(poly_); }

 private:
  std::vector<std::string> vars_;
  FreeElem poly_;
};

/// Ring-homomorphic evaluation; all images must be loops at one common vertex.
FreeElem substitute(const NCPoly& f, const std::map<std::string, FreeElem>& assignment);

}  // namespace preproj
