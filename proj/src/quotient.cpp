#include "preproj/quotient.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <iomanip>
#include <queue>
#include <sstream>

namespace preproj {

void Presentation::add(const std::string& text, const ParamMap& params) { relations.push_back(parse(text, params)); }

FreeElem Presentation::parse(const std::string& text, const ParamMap& params) const {
  return parse_element(text, quiver, field, params);
}

std::string Presentation::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  feed(field.name());
  feed(std::to_string(quiver->vertex_count()));
  for (const auto& a : quiver->arrows())
    feed(a.name + ":" + std::to_string(a.source) + ">" + std::to_string(a.target) + "~" +
         quiver->arrow(quiver->bar(a.id)).name);
  for (const auto& r : relations) feed(format_element(r));
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

struct RelTrie {
  struct Node {
    std::vector<std::pair<int, int>> children;  // arrow, node
    std::optional<Scalar> coef;
  };
  std::vector<Node> nodes{1};
  int min_degree = 0;

  void insert(const Path& p, const Scalar& c) {
    int cur = 0;
    for (int a : p.arrows) {
      int next = -1;
      for (auto [b, n] : nodes[cur].children)
        if (b == a) next = n;
      if (next < 0) {
        next = static_cast<int>(nodes.size());
        nodes[cur].children.emplace_back(a, next);
        nodes.emplace_back();
      }
      cur = next;
    }
    nodes[cur].coef = c;
  }
};

// Linear enumeration of the right regular module KQ/(I + J^N), processed in
// order of degree. Each vector is the image of its defining path; a linear
// dependency kills its order-largest member.
class Enumerator {
 public:
  Enumerator(const Presentation& p, int cap) : pres_(p), q_(*p.quiver), f_(p.field), cap_(cap) {
    slot_.assign(q_.arrow_count(), 0);
    out_.assign(q_.vertex_count(), {});
    for (int v = 0; v < q_.vertex_count(); ++v) {
      out_[v] = q_.arrows_from(v);
      for (int s = 0; s < static_cast<int>(out_[v].size()); ++s) slot_[out_[v][s]] = s;
    }
    rels_.assign(q_.vertex_count(), {});
    for (const auto& r : p.relations) {
      auto e = r.endpoints();
      RelTrie t;
      t.min_degree = r.min_degree();
      for (const auto& [path, c] : r.terms()) t.insert(path, c);
      rels_[e->first].push_back(std::move(t));
    }
  }

  void run() {
    for (int v = 0; v < q_.vertex_count(); ++v) create(-1, -1, v, {});
    while (!heap_.empty()) {
      auto [deg, id] = heap_.top();
      heap_.pop();
      if (!vecs_[id].alive || vecs_[id].processed) continue;
      process(id);
    }
  }

  struct Vec {
    int source = 0;
    int target = 0;
    int degree = 0;
    std::vector<int> path;
    bool alive = true;
    bool processed = false;
    SparseVec repl;
    std::vector<SparseVec> row;
    std::vector<char> defined;
  };

  std::vector<Vec> vecs_;

  SparseVec resolve(const SparseVec& c) {
    bool clean = true;
    for (const auto& [id, s] : c)
      if (!vecs_[id].alive) {
        clean = false;
        break;
      }
    if (clean) return c;
    SparseVec out;
    for (const auto& [id, s] : c) {
      if (vecs_[id].alive) {
        out = axpy(out, s, SparseVec{{id, Scalar::one(f_)}});
      } else {
        SparseVec r = resolve(vecs_[id].repl);
        vecs_[id].repl = r;
        out = axpy(out, s, r);
      }
    }
    return out;
  }

  SparseVec entry(int w, int a) {
    int s = slot_[a];
    if (!vecs_[w].defined[s]) {
      vecs_[w].defined[s] = 1;
      if (vecs_[w].degree + 1 < cap_) {
        std::vector<int> path = vecs_[w].path;
        path.push_back(a);
        int child = create(vecs_[w].source, a, q_.arrow(a).target, std::move(path));
        vecs_[w].row[s] = SparseVec{{child, Scalar::one(f_)}};
      }
      return vecs_[w].row[s];
    }
    SparseVec r = resolve(vecs_[w].row[s]);
    vecs_[w].row[s] = r;
    return r;
  }

 private:
  int create(int source, int arrow, int target, std::vector<int> path) {
    Vec v;
    v.source = arrow < 0 ? target : source;
    v.target = target;
    v.degree = static_cast<int>(path.size());
    v.path = std::move(path);
    v.row.assign(out_[target].size(), {});
    v.defined.assign(out_[target].size(), 0);
    int id = static_cast<int>(vecs_.size());
    vecs_.push_back(std::move(v));
    heap_.emplace(vecs_[id].degree, id);
    return id;
  }

  SparseVec mul_arrow(const SparseVec& c, int a) {
    SparseVec acc;
    const int src = q_.arrow(a).source;
    for (const auto& [w, s] : c)
      if (vecs_[w].target == src) acc = axpy(acc, s, entry(w, a));
    return acc;
  }

  // True when u is larger than v in the elimination order.
  bool larger(int u, int v) const {
    const Vec& a = vecs_[u];
    const Vec& b = vecs_[v];
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.path != b.path) return a.path > b.path;
    return a.source > b.source;
  }

  void push_relation(int v, const RelTrie& t, SparseVec& out) {
    std::function<void(int, const SparseVec&)> dfs = [&](int node, const SparseVec& cur) {
      if (cur.empty()) return;
      const auto& n = t.nodes[node];
      if (n.coef) out = axpy(out, *n.coef, cur);
      for (auto [a, child] : n.children) dfs(child, mul_arrow(cur, a));
    };
    dfs(0, SparseVec{{v, Scalar::one(f_)}});
  }

  void coincide(const SparseVec& start) {
    std::deque<SparseVec> queue{start};
    while (!queue.empty()) {
      SparseVec c = resolve(queue.front());
      queue.pop_front();
      if (c.empty()) continue;
      std::size_t k = 0;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (larger(c[i].first, c[k].first)) k = i;
      const int p = c[k].first;
      Scalar factor = -c[k].second.inv();
      SparseVec repl;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != k) repl.emplace_back(c[i].first, c[i].second * factor);
      vecs_[p].alive = false;
      vecs_[p].repl = repl;
      const int tgt = vecs_[p].target;
      for (std::size_t s = 0; s < out_[tgt].size(); ++s) {
        if (!vecs_[p].defined[s]) continue;
        SparseVec old = vecs_[p].row[s];
        int a = out_[tgt][s];
        queue.push_back(sub(old, mul_arrow(repl, a)));
      }
      vecs_[p].row.clear();
      vecs_[p].defined.clear();
    }
  }

  void process(int v) {
    for (int a : out_[vecs_[v].target]) entry(v, a);
    for (const auto& t : rels_[vecs_[v].target]) {
      if (!vecs_[v].alive) break;
      if (vecs_[v].degree + t.min_degree >= cap_) continue;
      SparseVec r;
      push_relation(v, t, r);
      if (!r.empty()) coincide(r);
    }
    vecs_[v].processed = true;
  }

  const Presentation& pres_;
  const Quiver& q_;
  FieldSpec f_;
  int cap_;
  std::vector<int> slot_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<RelTrie>> rels_;
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> heap_;
};

void check_relations(const Presentation& p) {
  for (const auto& r : p.relations) {
    if (r.field() != p.field) throw QuiverMismatch();
    if (r.is_zero()) continue;
    if (!r.endpoints()) throw NotAdmissible("relation is not homogeneous in its endpoints: " + format_element(r));
    if (r.min_degree() < 2) throw NotAdmissible("relation has a component of degree below 2: " + format_element(r));
  }
}

}  // namespace

QuotientAlgebra build_quotient(const Presentation& p) {
  p.quiver->validate();
  check_relations(p);
  Presentation clean = p;
  clean.relations.clear();
  for (const auto& r : p.relations)
    if (!r.is_zero()) clean.relations.push_back(r);

  int cap = std::max(p.cap.cap, 2);
  for (;;) {
    Enumerator en(clean, cap);
    en.run();
    int top = -1;
    for (const auto& v : en.vecs_)
      if (v.alive) top = std::max(top, v.degree);
    if (top >= cap - 1) {
      if (!p.cap.automatic || cap >= 1024)
        throw CapExceeded("radical not nilpotent below cap " + std::to_string(cap) + " for " + p.name);
      cap *= 2;
      continue;
    }

    QuotientAlgebra A;
    A.pres_ = p;
    A.cap_ = cap;
    std::vector<int> alive;
    for (int i = 0; i < static_cast<int>(en.vecs_.size()); ++i)
      if (en.vecs_[i].alive) alive.push_back(i);
    auto key = [&](int i) {
      const auto& v = en.vecs_[i];
      return std::make_tuple(v.source, v.target, v.degree, std::cref(v.path));
    };
    std::sort(alive.begin(), alive.end(), [&](int a, int b) { return key(a) < key(b); });
    std::vector<int> index(en.vecs_.size(), -1);
    for (int i = 0; i < static_cast<int>(alive.size()); ++i) {
      index[alive[i]] = i;
      const auto& v = en.vecs_[alive[i]];
      A.basis_.push_back({v.source, v.target, v.path});
    }
    const Quiver& q = *p.quiver;
    A.vertex_index_.assign(q.vertex_count(), -1);
    for (int v = 0; v < q.vertex_count(); ++v) {
      if (!en.vecs_[v].alive) throw NotAdmissible("the relations collapse the idempotent e" + std::to_string(v));
      A.vertex_index_[v] = index[v];
    }
    auto to_basis = [&](const SparseVec& c) {
      SparseVec out;
      for (const auto& [id, s] : c) out.emplace_back(index[id], s);
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return out;
    };
    A.right_.assign(alive.size(), std::vector<SparseVec>(q.arrow_count()));
    for (int i = 0; i < static_cast<int>(alive.size()); ++i)
      for (int a : q.arrows_from(en.vecs_[alive[i]].target)) A.right_[i][a] = to_basis(en.entry(alive[i], a));
    for (const auto& ar : q.arrows()) {
      const SparseVec& img = A.right_[A.vertex_index_[ar.source]][ar.id];
      if (img.size() != 1 || !img[0].second.is_one() || A.basis_[img[0].first].arrows != std::vector<int>{ar.id})
        throw NotAdmissible("arrow " + ar.name + " is not independent modulo the relations");
    }
    A.build_tables();
    return A;
  }
}

void QuotientAlgebra::build_tables() {
  const Quiver& q = *pres_.quiver;
  // Prefix trie of basis paths, one root per vertex.
  trie_.clear();
  trie_roots_.assign(q.vertex_count(), -1);
  for (int v = 0; v < q.vertex_count(); ++v) {
    trie_roots_[v] = static_cast<int>(trie_.size());
    trie_.push_back({-1, vertex_index_[v], {}});
  }
  for (int i = 0; i < dimension(); ++i) {
    const Path& p = basis_[i];
    int cur = trie_roots_[p.source];
    for (int a : p.arrows) {
      int next = -1;
      for (int c : trie_[cur].children)
        if (trie_[c].arrow == a) next = c;
      if (next < 0) {
        next = static_cast<int>(trie_.size());
        trie_[cur].children.push_back(next);
        trie_.push_back({a, -1, {}});
      }
      cur = next;
    }
    trie_[cur].basis = i;
  }
  left_.assign(q.arrow_count(), std::vector<SparseVec>(dimension()));
  for (const auto& ar : q.arrows()) {
    SparseVec x = unit_vec(index_of(Path::of_arrow(q, ar.id)), pres_.field);
    auto prods = products_with_basis(x);
    for (int j = 0; j < dimension(); ++j) left_[ar.id][j] = std::move(prods[j]);
  }
}

int QuotientAlgebra::index_of(const Path& p) const {
  PathOrder less;
  for (int i = 0; i < dimension(); ++i)
    if (!less(basis_[i], p) && !less(p, basis_[i]) && basis_[i].target == p.target) return i;
  return -1;
}

SparseVec QuotientAlgebra::right_arrow(const SparseVec& x, int a) const {
  SparseVec acc;
  for (const auto& [i, c] : x)
    if (basis_[i].target == quiver().arrow(a).source) acc = axpy(acc, c, right_[i][a]);
  return acc;
}

SparseVec QuotientAlgebra::left_arrow(int a, const SparseVec& x) const {
  SparseVec acc;
  for (const auto& [i, c] : x) acc = axpy(acc, c, left_[a][i]);
  return acc;
}

SparseVec QuotientAlgebra::nf_path(const Path& p) const {
  SparseVec x = unit_vec(vertex_index_.at(p.source), pres_.field);
  for (int a : p.arrows) {
    x = right_arrow(x, a);
    if (x.empty()) break;
  }
  return x;
}

SparseVec QuotientAlgebra::normal_form(const FreeElem& x) const {
  if (!(x.field() == pres_.field)) throw QuiverMismatch();
  if (x.quiver() != pres_.quiver && !(*x.quiver() == *pres_.quiver)) throw QuiverMismatch();
  SparseVec acc;
  for (const auto& [p, c] : x.terms()) acc = axpy(acc, c, nf_path(p));
  return acc;
}

std::vector<SparseVec> QuotientAlgebra::products_with_basis(const SparseVec& x) const {
  std::vector<SparseVec> out(dimension());
  std::function<void(int, const SparseVec&)> dfs = [&](int node, const SparseVec& cur) {
    if (trie_[node].basis >= 0) out[trie_[node].basis] = cur;
    if (cur.empty()) return;
    for (int c : trie_[node].children) dfs(c, right_arrow(cur, trie_[c].arrow));
  };
  for (int v = 0; v < quiver().vertex_count(); ++v) {
    SparseVec part;
    for (const auto& e : x)
      if (basis_[e.first].target == v) part.push_back(e);
    dfs(trie_roots_[v], part);
  }
  return out;
}

SparseVec QuotientAlgebra::product(int i, int j) const {
  SparseVec x = unit_vec(i, pres_.field);
  if (basis_[i].target != basis_[j].source) return {};
  for (int a : basis_[j].arrows) x = right_arrow(x, a);
  return x;
}

SparseVec QuotientAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec acc;
  for (const auto& [j, c] : y) {
    SparseVec part;
    for (const auto& e : x)
      if (basis_[e.first].target == basis_[j].source) part.push_back(e);
    for (int a : basis_[j].arrows) {
      if (part.empty()) break;
      part = right_arrow(part, a);
    }
    acc = axpy(acc, c, part);
  }
  return acc;
}

FreeElem QuotientAlgebra::to_element(const SparseVec& x) const {
  FreeElem out(pres_.quiver, pres_.field);
  for (const auto& [i, c] : x) out.add_term(basis_[i], c);
  return out;
}

std::vector<std::vector<int>> QuotientAlgebra::dims_by_pair() const {
  int n = quiver().vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const auto& p : basis_) ++m[p.source][p.target];
  return m;
}

std::vector<int> QuotientAlgebra::hilbert_series() const {
  std::vector<int> h;
  for (const auto& p : basis_) {
    if (static_cast<int>(h.size()) <= p.length()) h.resize(p.length() + 1, 0);
    ++h[p.length()];
  }
  return h;
}

int QuotientAlgebra::loewy_length() const { return static_cast<int>(hilbert_series().size()); }

}  // namespace preproj
