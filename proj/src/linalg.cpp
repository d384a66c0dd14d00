#include "preproj/linalg.hpp"

namespace preproj {

SparseVec unit_vec(int i, const FieldSpec& f) { return {{i, Scalar::one(f)}}; }

SparseVec axpy(const SparseVec& y, const Scalar& c, const SparseVec& x) {
  if (c.is_zero() || x.empty()) return y;
  SparseVec r;
  r.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      r.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      r.emplace_back(x[j].first, c * x[j].second);
      ++j;
    } else {
      Scalar s = y[i].second + c * x[j].second;
      if (!s.is_zero()) r.emplace_back(y[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec add(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  return axpy(a, Scalar::one(b.front().second.field()), b);
}

SparseVec sub(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  return axpy(a, -Scalar::one(b.front().second.field()), b);
}

SparseVec scale(const SparseVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec r = a;
  for (auto& e : r) e.second *= c;
  return r;
}

Scalar coeff(const SparseVec& a, int i, const FieldSpec& f) {
  for (const auto& [k, c] : a)
    if (k == i) return c;
  return Scalar::zero(f);
}

Scalar dot(const SparseVec& a, const SparseVec& b, const FieldSpec& f) {
  Scalar s = Scalar::zero(f);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (b[j].first < a[i].first)
      ++j;
    else
      s += a[i++].second * b[j++].second;
  }
  return s;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec r = v;
  std::size_t k = 0;
  while (k < r.size()) {
    auto it = rows_.find(r[k].first);
    if (it == rows_.end()) {
      ++k;
      continue;
    }
    // Entries before k are untouched because stored rows start at their pivot.
    r = axpy(r, -r[k].second, it->second);
  }
  return r;
}

SparseVec Subspace::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return r;
  SparseVec normalized = scale(r, r.front().second.inv());
  int p = normalized.front().first;
  rows_.emplace(p, normalized);
  return r;
}

std::vector<SparseVec> Subspace::basis() const {
  std::vector<SparseVec> out;
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

namespace {

// Echelon rows paired with the combination of inputs that produced them.
struct Tracked {
  explicit Tracked(FieldSpec f) : f(f) {}
  FieldSpec f;
  std::map<int, std::pair<SparseVec, SparseVec>> rows;

  std::pair<SparseVec, SparseVec> reduce(SparseVec v, SparseVec combo) const {
    std::size_t k = 0;
    while (k < v.size()) {
      auto it = rows.find(v[k].first);
      if (it == rows.end()) {
        ++k;
        continue;
      }
      Scalar c = -v[k].second;
      v = axpy(v, c, it->second.first);
      combo = axpy(combo, c, it->second.second);
    }
    return {v, combo};
  }

  void add(SparseVec v, SparseVec combo) {
    Scalar inv = v.front().second.inv();
    v = scale(v, inv);
    combo = scale(combo, inv);
    rows.emplace(v.front().first, std::make_pair(v, combo));
  }
};

}  // namespace

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, const FieldSpec& f) {
  Tracked t(f);
  std::vector<SparseVec> kernel;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    auto [v, combo] = t.reduce(rows[i], unit_vec(i, f));
    if (v.empty())
      kernel.push_back(combo);
    else
      t.add(v, combo);
  }
  return kernel;
}

std::optional<SparseVec> left_solve(const std::vector<SparseVec>& rows, const SparseVec& target, const FieldSpec& f) {
  Tracked t(f);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    auto [v, combo] = t.reduce(rows[i], unit_vec(i, f));
    if (!v.empty()) t.add(v, combo);
  }
  auto [rest, combo] = t.reduce(target, {});
  if (!rest.empty()) return std::nullopt;
  return scale(combo, -Scalar::one(f));
}

int rank_of(const std::vector<SparseVec>& rows, const FieldSpec& f) {
  Subspace s(f);
  for (const auto& r : rows) s.insert(r);
  return s.dim();
}

}  // namespace preproj
