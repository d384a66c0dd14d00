#include "oracle.hpp"

#include <algorithm>
#include <map>

namespace oracle {

using namespace preproj;

namespace {

void extend(const Quiver& q, const Path& p, int t, std::vector<Path>& out) {
  out.push_back(p);
  if (p.length() + 1 >= t) return;
  for (int a : q.arrows_from(p.target)) extend(q, *p.then(Path::of_arrow(q, a)), t, out);
}

}  // namespace

Matrix truncated_dims(const Presentation& p, int t) {
  const Quiver& q = *p.quiver;
  int n = q.vertex_count();
  std::vector<Path> paths;
  for (int v = 0; v < n; ++v) extend(q, Path::trivial(v), t, paths);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<Path>> by_target(n);
  std::vector<std::vector<Path>> by_source(n);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& x = paths[i];
    std::vector<int> key{x.source, x.target};
    key.insert(key.end(), x.arrows.begin(), x.arrows.end());
    index[key] = static_cast<int>(i);
    by_target[x.target].push_back(x);
    by_source[x.source].push_back(x);
  }
  auto key_of = [](const Path& x) {
    std::vector<int> key{x.source, x.target};
    key.insert(key.end(), x.arrows.begin(), x.arrows.end());
    return key;
  };

  std::vector<std::vector<Subspace>> ideal(n, std::vector<Subspace>(n, Subspace(p.field)));
  for (const auto& r : p.relations) {
    auto ends = r.endpoints();
    if (!ends) continue;
    auto [s, e] = *ends;
    for (const Path& left : by_target[s])
      for (const Path& right : by_source[e]) {
        if (left.length() + right.length() + r.min_degree() >= t) continue;
        std::map<int, Scalar> acc;
        for (const auto& [term, c] : r.terms()) {
          auto full = left.then(term);
          if (!full) continue;
          full = full->then(right);
          if (!full || full->length() >= t) continue;
          int i = index.at(key_of(*full));
          auto it = acc.find(i);
          if (it == acc.end()) acc.emplace(i, c);
          else it->second += c;
        }
        SparseVec v;
        for (const auto& [i, c] : acc)
          if (!c.is_zero()) v.emplace_back(i, c);
        if (!v.empty()) ideal[left.source][right.target].insert(v);
      }
  }
  Matrix dims(n, std::vector<int>(n, 0));
  for (const auto& x : paths) ++dims[x.source][x.target];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dims[i][j] -= ideal[i][j].dim();
  return dims;
}

Matrix type_A_dims(int n) {
  Matrix m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = std::min({i, j, n - 1 - i, n - 1 - j}) + 1;
  return m;
}

int loewy_length(const DynkinType& t) {
  switch (t.family) {
    case Family::A: return t.rank;
    case Family::D: return 2 * t.rank - 3;
    case Family::E: return t.rank == 6 ? 11 : t.rank == 7 ? 17 : 29;
    case Family::L: return 2 * t.rank;
  }
  return 0;
}

}  // namespace oracle
