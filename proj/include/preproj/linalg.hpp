#pragma once

#include "preproj/field.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace preproj {

/// Sparse vector: entries sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec unit_vec(int i, const FieldSpec& f);
/// y + c*x.
SparseVec axpy(const SparseVec& y, const Scalar& c, const SparseVec& x);
SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec sub(const SparseVec& a, const SparseVec& b);
SparseVec scale(const SparseVec& a, const Scalar& c);
Scalar coeff(const SparseVec& a, int i, const FieldSpec& f);
Scalar dot(const SparseVec& a, const SparseVec& b, const FieldSpec& f);

/// Row space in echelon form keyed by leading index. Each stored row can
/// carry a combination vector recording how it arose from inserted rows.
class Subspace {
 public:
  explicit Subspace(FieldSpec f) : f_(f) {}
  /// Returns the reduced remainder (zero when v was already in the span).
  SparseVec insert(const SparseVec& v);
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int dim() const { return static_cast<int>(rows_.size()); }
  std::vector<SparseVec> basis() const;
  const FieldSpec& field() const { return f_; }

 private:
  FieldSpec f_;
  std::map<int, SparseVec> rows_;
};

/// Basis of {x : sum_i x_i rows[i] = 0}.
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, const FieldSpec& f);
/// Some x with sum_i x_i rows[i] = target, if one exists.
std::optional<SparseVec> left_solve(const std::vector<SparseVec>& rows, const SparseVec& target, const FieldSpec& f);
int rank_of(const std::vector<SparseVec>& rows, const FieldSpec& f);

}  // namespace preproj
