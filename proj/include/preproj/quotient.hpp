#pragma once

#include "preproj/freealg.hpp"
#include "preproj/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace preproj {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAdmissible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapPolicy {
  bool automatic = true;
  int cap = 16;
  static CapPolicy fixed(int n) { return {false, n}; }
  static CapPolicy autoseed(int n) { return {true, n}; }
};

struct Presentation {
  std::string name;
  QuiverPtr quiver;
  FieldSpec field;
  std::vector<FreeElem> relations;
  CapPolicy cap;

  void add(const FreeElem& r) { relations.push_back(r); }
  void add(const std::string& text, const ParamMap& params = {});
  FreeElem parse(const std::string& text, const ParamMap& params = {}) const;
  /// Stable hash of the quiver and formatted relations.
  std::string hash() const;
};

/// Finite-dimensional bound quiver algebra with a path basis.
///
/// The basis consists of the standard monomials for the order in which
/// lower degree dominates and ties are broken lexicographically on arrow
/// ids, so basis degrees refine the radical filtration.
class QuotientAlgebra {
 public:
  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return *pres_.quiver; }
  const QuiverPtr& quiver_ptr() const { return pres_.quiver; }
  const FieldSpec& field() const { return pres_.field; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int cap_used() const { return cap_; }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int i) const { return basis_.at(i); }
  int degree(int i) const { return basis_[i].length(); }
  int index_of(const Path& p) const;
  int vertex_index(int v) const { return vertex_index_.at(v); }

  SparseVec normal_form(const FreeElem& x) const;
  SparseVec nf_path(const Path& p) const;
  /// x*a and a*x for an arrow a.
  SparseVec right_arrow(const SparseVec& x, int a) const;
  SparseVec left_arrow(int a, const SparseVec& x) const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec product(int i, int j) const;
  /// x*b_j for every basis element b_j, sharing work across common prefixes.
  std::vector<SparseVec> products_with_basis(const SparseVec& x) const;
  FreeElem to_element(const SparseVec& x) const;

  std::vector<std::vector<int>> dims_by_pair() const;
  std::vector<int> hilbert_series() const;
  int loewy_length() const;

 private:
  friend QuotientAlgebra build_quotient(const Presentation& p);
  struct TrieNode {
    int arrow = -1;
    int basis = -1;
    std::vector<int> children;
  };

  Presentation pres_;
  int cap_ = 0;
  std::vector<Path> basis_;
  std::vector<int> vertex_index_;
  std::vector<std::vector<SparseVec>> right_;  // [basis][arrow]
  std::vector<std::vector<SparseVec>> left_;   // [arrow][basis]
  std::vector<TrieNode> trie_;
  std::vector<int> trie_roots_;
  void build_tables();
};

QuotientAlgebra build_quotient(const Presentation& p);

}  // namespace preproj
