#include "preproj/quiver.hpp"

#include <cctype>

namespace preproj {

int Quiver::add_arrow(const std::string& name, int source, int target) {
  if (source < 0 || source >= vertex_count_ || target < 0 || target >= vertex_count_)
    throw QuiverError("arrow " + name + " has an endpoint outside the vertex range");
  if (find_arrow(name)) throw QuiverError("duplicate arrow name " + name);
  int id = arrow_count();
  arrows_.push_back({id, name, source, target});
  bar_.push_back(-1);
  return id;
}

void Quiver::pair_bar(int a, int b) {
  const Arrow& x = arrow(a);
  const Arrow& y = arrow(b);
  if (x.source != y.target || x.target != y.source)
    throw QuiverError("bar of " + x.name + " must reverse its endpoints");
  if ((bar_[a] != -1 && bar_[a] != b) || (bar_[b] != -1 && bar_[b] != a))
    throw QuiverError("arrow already has a bar: " + x.name);
  bar_[a] = b;
  bar_[b] = a;
}

int Quiver::add_selfbar_loop(const std::string& name, int vertex) {
  int id = add_arrow(name, vertex, vertex);
  bar_[id] = id;
  return id;
}

int Quiver::add_edge(const std::string& name, const std::string& bar_name, int source, int target) {
  int a = add_arrow(name, source, target);
  int b = add_arrow(bar_name, target, source);
  pair_bar(a, b);
  return a;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const {
  for (const auto& a : arrows_)
    if (a.name == name) return a.id;
  return std::nullopt;
}

int Quiver::arrow_id(const std::string& name) const {
  auto a = find_arrow(name);
  if (!a) throw QuiverError("unknown arrow " + name);
  return *a;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (const auto& a : arrows_)
    if (a.source == v) out.push_back(a.id);
  return out;
}

void Quiver::validate() const {
  for (const auto& a : arrows_) {
    int b = bar_[a.id];
    if (b < 0) throw QuiverError("arrow " + a.name + " has no bar");
    if (bar_[b] != a.id) throw QuiverError("bar is not an involution at " + a.name);
  }
}

std::string DynkinType::str() const {
  const char* f = family == Family::A ? "A" : family == Family::D ? "D" : family == Family::E ? "E" : "L";
  return f + std::to_string(rank);
}

DynkinType DynkinType::parse(const std::string& family, int rank) {
  if (family.size() != 1) throw InvalidRank("unknown family " + family);
  DynkinType t;
  switch (std::toupper(static_cast<unsigned char>(family[0]))) {
    case 'A': t.family = Family::A; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'L': t.family = Family::L; break;
    default: throw InvalidRank("unknown family " + family);
  }
  t.rank = rank;
  check_rank(t);
  return t;
}

void check_rank(const DynkinType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::D: ok = t.rank >= 4; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::L: ok = t.rank >= 1; break;
  }
  if (!ok) throw InvalidRank("inadmissible rank for " + t.str());
}

std::string arrow_name(int i) { return "a" + std::to_string(i); }
std::string bar_name(int i) { return "abar" + std::to_string(i); }

Quiver build_dynkin_quiver(const DynkinType& t) {
  check_rank(t);
  const int n = t.rank;
  Quiver q(n);
  auto edge = [&](int i, int s, int d) { q.add_edge(arrow_name(i), bar_name(i), s, d); };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i, i + 1);
      break;
    case Family::D:
      edge(0, 0, 2);
      edge(1, 1, 2);
      for (int i = 2; i + 1 < n; ++i) edge(i, i, i + 1);
      break;
    case Family::E:
      edge(0, 0, 3);
      edge(1, 1, 2);
      edge(2, 2, 3);
      for (int i = 3; i + 1 < n; ++i) edge(i, i, i + 1);
      break;
    case Family::L:
      for (int i = 0; i + 1 < n; ++i) edge(i, i, i + 1);
      q.add_selfbar_loop("eps", 0);
      break;
  }
  return q;
}

int exceptional_vertex(const DynkinType& t) {
  check_rank(t);
  switch (t.family) {
    case Family::A: return 0;
    case Family::D: return 2;
    case Family::E: return 3;
    case Family::L: return 0;
  }
  return 0;
}

}  // namespace preproj
