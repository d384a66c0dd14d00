#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace preproj {

struct InvalidRank : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct QuiverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  int id = 0;
  std::string name;
  int source = 0;
  int target = 0;
  bool operator==(const Arrow&) const = default;
};

/// Finite quiver with a bar involution on arrows. Vertices are 0..n-1.
class Quiver {
 public:
  explicit Quiver(int vertex_count = 0) : vertex_count_(vertex_count) {}

  int add_arrow(const std::string& name, int source, int target);
  /// Declares b as the bar of a (and a as the bar of b).
  void pair_bar(int a, int b);
  /// Adds a loop with bar(loop) = loop.
  int add_selfbar_loop(const std::string& name, int vertex);
  /// Adds a and its reverse bar arrow in one step.
  int add_edge(const std::string& name, const std::string& bar_name, int source, int target);

  int vertex_count() const { return vertex_count_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int id) const { return arrows_.at(id); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int bar(int a) const { return bar_.at(a); }
  std::optional<int> find_arrow(const std::string& name) const;
  int arrow_id(const std::string& name) const;
  std::vector<int> arrows_from(int v) const;

  /// Throws QuiverError if some arrow lacks a bar or the involution is broken.
  void validate() const;
  bool operator==(const Quiver&) const = default;

 private:
  int vertex_count_;
  std::vector<Arrow> arrows_;
  std::vector<int> bar_;
};

enum class Family { A, D, E, L };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;
  std::string str() const;
  static DynkinType parse(const std::string& family, int rank);
  bool operator==(const DynkinType&) const = default;
};

void check_rank(const DynkinType& t);
Quiver build_dynkin_quiver(const DynkinType& t);
int exceptional_vertex(const DynkinType& t);

std::string arrow_name(int i);
std::string bar_name(int i);

}  // namespace preproj
