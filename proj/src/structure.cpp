#include "preproj/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace preproj {

namespace {

using Block = std::vector<int>;

// Basis indices grouped by (source, target).
std::vector<std::vector<Block>> blocks(const QuotientAlgebra& A) {
  int n = A.quiver().vertex_count();
  std::vector<std::vector<Block>> b(n, std::vector<Block>(n));
  for (int i = 0; i < A.dimension(); ++i) b[A.basis_path(i).source][A.basis_path(i).target].push_back(i);
  return b;
}

// Shifts v into the slot of `part` in a concatenation of dimension-sized parts.
void append_part(SparseVec& row, const SparseVec& v, int part, int dim) {
  for (const auto& [k, c] : v) row.emplace_back(part * dim + k, c);
}

// Kernel of x -> (x*a or a*x)_a, block by block.
Socle annihilator(const QuotientAlgebra& A, bool left) {
  const FieldSpec& f = A.field();
  int n = A.quiver().vertex_count(), dim = A.dimension();
  Socle s;
  s.dims.assign(n, std::vector<int>(n, 0));
  auto bl = blocks(A);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const Block& idx = bl[u][v];
      if (idx.empty()) continue;
      std::vector<SparseVec> rows;
      for (int i : idx) {
        SparseVec row, x = unit_vec(i, f);
        for (int a = 0; a < A.quiver().arrow_count(); ++a)
          append_part(row, left ? A.left_arrow(a, x) : A.right_arrow(x, a), a, dim);
        rows.push_back(std::move(row));
      }
      for (const auto& k : left_kernel(rows, f)) {
        SparseVec g;
        for (const auto& [j, c] : k) g.emplace_back(idx[j], c);
        std::sort(g.begin(), g.end(), [](auto& x, auto& y) { return x.first < y.first; });
        s.basis.push_back(std::move(g));
        ++s.dims[u][v];
      }
    }
  return s;
}

Scalar apply_functional(const SparseVec& psi, const SparseVec& x, const FieldSpec& f) { return dot(psi, x, f); }

int block_source(const QuotientAlgebra& A, const SparseVec& s) { return A.basis_path(s.front().first).source; }
int block_target(const QuotientAlgebra& A, const SparseVec& s) { return A.basis_path(s.front().first).target; }

bool in_one_block(const QuotientAlgebra& A, const SparseVec& s, int u, int v) {
  for (const auto& e : s)
    if (A.basis_path(e.first).source != u || A.basis_path(e.first).target != v) return false;
  return true;
}

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng, bool nonzero) {
  if (f.is_prime()) {
    std::uint64_t p = f.characteristic();
    std::uint64_t r = nonzero ? 1 + rng() % (p - 1) : rng() % p;
    return Scalar(f, static_cast<long long>(r));
  }
  long long r = static_cast<long long>(rng() % 7) - 3;
  if (nonzero && r == 0) r = 4;
  return Scalar(f, r);
}

}  // namespace

Matrix cartan_matrix(const QuotientAlgebra& A) { return A.dims_by_pair(); }

std::vector<int> radical_series(const QuotientAlgebra& A) {
  const FieldSpec& f = A.field();
  const Quiver& q = A.quiver();
  // M_k = span of the classes of paths of length k.
  std::vector<std::vector<SparseVec>> layers;
  std::vector<SparseVec> cur;
  for (int a = 0; a < q.arrow_count(); ++a) {
    SparseVec x = A.right_arrow(unit_vec(A.vertex_index(q.arrow(a).source), f), a);
    if (!x.empty()) cur.push_back(x);
  }
  while (!cur.empty()) {
    Subspace s(f);
    for (const auto& x : cur) s.insert(x);
    layers.push_back(s.basis());
    if (static_cast<int>(layers.size()) > A.dimension() + 1) throw NotAdmissible("arrow ideal is not nilpotent");
    std::vector<SparseVec> next;
    for (const auto& x : layers.back())
      for (int a = 0; a < q.arrow_count(); ++a) {
        SparseVec y = A.right_arrow(x, a);
        if (!y.empty()) next.push_back(std::move(y));
      }
    cur = std::move(next);
  }
  std::vector<int> dims{A.dimension()};
  Subspace acc(f);
  std::vector<int> tail(layers.size() + 1, 0);
  for (int k = static_cast<int>(layers.size()) - 1; k >= 0; --k) {
    for (const auto& x : layers[k]) acc.insert(x);
    tail[k] = acc.dim();
  }
  for (std::size_t k = 0; k < layers.size(); ++k) dims.push_back(tail[k]);
  dims.push_back(0);
  if (dims.size() > 1 && dims[1] != A.dimension() - q.vertex_count())
    throw NotAdmissible("radical does not have codimension equal to the vertex count");
  return dims;
}

Socle left_socle(const QuotientAlgebra& A) { return annihilator(A, true); }
Socle right_socle(const QuotientAlgebra& A) { return annihilator(A, false); }

bool same_subspace(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, const FieldSpec& f) {
  Subspace sa(f), sb(f);
  for (const auto& x : a) sa.insert(x);
  for (const auto& x : b) sb.insert(x);
  if (sa.dim() != sb.dim()) return false;
  for (const auto& x : b)
    if (!sa.contains(x)) return false;
  return true;
}

std::vector<int> nakayama_permutation(const QuotientAlgebra& A) {
  Socle s = right_socle(A);
  int n = A.quiver().vertex_count();
  std::vector<int> nu(n, -1);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    int total = std::accumulate(s.dims[i].begin(), s.dims[i].end(), 0);
    if (total != 1) throw NotQF("soc(e_" + std::to_string(i) + "A) has dimension " + std::to_string(total));
    for (int j = 0; j < n; ++j)
      if (s.dims[i][j] == 1) nu[i] = j;
    if (hit[nu[i]]) throw NotQF("socle map is not a permutation");
    hit[nu[i]] = true;
  }
  return nu;
}

bool is_self_injective(const QuotientAlgebra& A) {
  try {
    nakayama_permutation(A);
    return true;
  } catch (const NotQF&) {
    return false;
  }
}

bool is_weakly_symmetric(const QuotientAlgebra& A) {
  try {
    auto nu = nakayama_permutation(A);
    for (int i = 0; i < static_cast<int>(nu.size()); ++i)
      if (nu[i] != i) return false;
    return true;
  } catch (const NotQF&) {
    return false;
  }
}

// [A,A] is spanned by [a, b] for arrows a and basis elements b, together with
// every off-diagonal block (as [e_u, b] = b there).
Subspace commutator_subspace(const QuotientAlgebra& A) {
  const FieldSpec& f = A.field();
  Subspace c(f);
  for (int i = 0; i < A.dimension(); ++i) {
    SparseVec x = unit_vec(i, f);
    if (A.basis_path(i).source != A.basis_path(i).target) c.insert(x);
    for (int a = 0; a < A.quiver().arrow_count(); ++a) {
      SparseVec d = sub(A.left_arrow(a, x), A.right_arrow(x, a));
      if (!d.empty()) c.insert(d);
    }
  }
  return c;
}

std::string kind_name(SymmetryVerdict::Kind k) {
  switch (k) {
    case SymmetryVerdict::Kind::Symmetric: return "Symmetric";
    case SymmetryVerdict::Kind::NotSymmetric: return "NotSymmetric";
    default: return "Unknown";
  }
}

bool verify_symmetric_witness(const QuotientAlgebra& A, const SparseVec& psi) {
  const FieldSpec& f = A.field();
  Subspace c = commutator_subspace(A);
  for (const auto& x : c.basis())
    if (!apply_functional(psi, x, f).is_zero()) return false;
  std::vector<SparseVec> gram;
  for (int i = 0; i < A.dimension(); ++i) {
    auto prods = A.products_with_basis(unit_vec(i, f));
    SparseVec row;
    for (int j = 0; j < A.dimension(); ++j) {
      Scalar v = apply_functional(psi, prods[j], f);
      if (!v.is_zero()) row.emplace_back(j, v);
    }
    gram.push_back(std::move(row));
  }
  return rank_of(gram, f) == A.dimension();
}

bool verify_nonsymmetric_certificate(const QuotientAlgebra& A, const SparseVec& s, int v) {
  const FieldSpec& f = A.field();
  if (s.empty()) return false;
  if (v >= 0 && !in_one_block(A, s, v, v)) return false;
  if (!commutator_subspace(A).contains(s)) return false;
  for (int a = 0; a < A.quiver().arrow_count(); ++a)
    if (!A.left_arrow(a, s).empty() || !A.right_arrow(s, a).empty()) return false;
  (void)f;
  return true;
}

SymmetryVerdict symmetry_decide(const QuotientAlgebra& A, const SymmetryBudget& budget) {
  const FieldSpec& f = A.field();
  int n = A.quiver().vertex_count(), dim = A.dimension();
  SymmetryVerdict out;
  out.kind = SymmetryVerdict::Kind::NotSymmetric;

  // A symmetrizing form is nonzero on every minimal left ideal K*s, s = e_u s
  // in the left socle, so each e_u soc must be one-dimensional.
  Socle ls = left_socle(A);
  std::vector<SparseVec> s_u(n);
  for (const auto& s : ls.basis) {
    int u = block_source(A, s);
    if (!s_u[u].empty()) {
      out.reason = "soc(A e_" + std::to_string(u) + ") is not simple; A is not self-injective";
      return out;
    }
    s_u[u] = s;
  }
  Subspace comm = commutator_subspace(A);
  if (!is_self_injective(A) || !same_subspace(ls.basis, right_socle(A).basis, f)) {
    out.reason = "A is not self-injective";
    return out;
  }

  // Step 1: a socle element inside [A,A].
  for (int u = 0; u < n; ++u) {
    if (!comm.contains(s_u[u])) continue;
    out.certificate = s_u[u];
    int t = block_target(A, s_u[u]);
    out.certificate_vertex = t == u ? u : -1;
    out.reason = t == u ? "socle element at vertex " + std::to_string(u) + " lies in [A,A]"
                        : "A is not weakly symmetric";
    return out;
  }

  // Step 2: functionals vanishing on [A,A], then one nonzero on every s_u.
  std::vector<SparseVec> cb = comm.basis();
  std::vector<SparseVec> cols(dim);
  for (int j = 0; j < static_cast<int>(cb.size()); ++j)
    for (const auto& [k, c] : cb[j]) cols[k].emplace_back(j, c);
  std::vector<SparseVec> funcs = left_kernel(cols, f);
  std::vector<SparseVec> w;
  for (const auto& psi : funcs) {
    SparseVec row;
    for (int u = 0; u < n; ++u) {
      Scalar v = apply_functional(psi, s_u[u], f);
      if (!v.is_zero()) row.emplace_back(u, v);
    }
    w.push_back(std::move(row));
  }
  auto combine = [&](const SparseVec& coeffs) {
    SparseVec psi;
    for (const auto& [j, c] : coeffs) psi = axpy(psi, c, funcs[j]);
    return psi;
  };
  auto accept = [&](const SparseVec& psi) {
    if (!verify_symmetric_witness(A, psi)) return false;
    out.kind = SymmetryVerdict::Kind::Symmetric;
    out.witness = psi;
    out.reason = "symmetrizing form found";
    return true;
  };

  if (f.is_prime() && f.characteristic() == 2) {
    SparseVec greedy;
    for (int u = 0; u < n; ++u) greedy.emplace_back(s_u[u].back().first, Scalar::one(f));
    std::sort(greedy.begin(), greedy.end(), [](auto& x, auto& y) { return x.first < y.first; });
    bool traces = true;
    for (const auto& x : cb)
      if (!apply_functional(greedy, x, f).is_zero()) traces = false;
    if (traces && accept(greedy)) return out;
  }

  // Target patterns t in (K*)^n, first entry normalised to 1.
  auto try_pattern = [&](const SparseVec& t) {
    auto c = left_solve(w, t, f);
    return c && accept(combine(*c));
  };
  std::mt19937_64 rng(budget.seed);
  if (f.is_prime()) {
    double count = std::pow(static_cast<double>(f.characteristic() - 1), n - 1);
    if (count <= std::ldexp(1.0, budget.budget_bits)) {
      std::vector<std::uint32_t> digits(n, 1);
      while (true) {
        SparseVec t;
        for (int u = 0; u < n; ++u) t.emplace_back(u, Scalar(f, digits[u]));
        if (try_pattern(t)) return out;
        int k = 1;
        while (k < n && ++digits[k] == f.characteristic()) digits[k++] = 1;
        if (k == n) break;
      }
      out.reason = "no functional vanishing on [A,A] is nonzero on every minimal left ideal";
      return out;
    }
  }
  for (int trial = 0; trial < budget.samples; ++trial) {
    SparseVec c;
    for (int j = 0; j < static_cast<int>(funcs.size()); ++j) {
      Scalar v = random_scalar(f, rng, false);
      if (!v.is_zero()) c.emplace_back(j, v);
    }
    SparseVec psi = combine(c);
    bool full = true;
    for (int u = 0; u < n && full; ++u) full = !apply_functional(psi, s_u[u], f).is_zero();
    if (full && accept(psi)) return out;
  }
  out.kind = SymmetryVerdict::Kind::Unknown;
  out.reason = "search budget exhausted";
  return out;
}

int center_dimension(const QuotientAlgebra& A) {
  const FieldSpec& f = A.field();
  int dim = A.dimension();
  std::vector<int> idx;
  std::vector<SparseVec> rows;
  for (int i = 0; i < dim; ++i) {
    if (A.basis_path(i).source != A.basis_path(i).target) continue;
    SparseVec row, x = unit_vec(i, f);
    for (int a = 0; a < A.quiver().arrow_count(); ++a)
      append_part(row, sub(A.right_arrow(x, a), A.left_arrow(a, x)), a, dim);
    rows.push_back(std::move(row));
  }
  return static_cast<int>(left_kernel(rows, f).size());
}

InvariantReport invariant_report(const QuotientAlgebra& A, const SymmetryBudget& budget) {
  InvariantReport r;
  r.dimension = A.dimension();
  r.cartan = cartan_matrix(A);
  r.loewy_length = A.loewy_length();
  r.radical_dims = radical_series(A);
  Socle rs = right_socle(A), ls = left_socle(A);
  r.socle_dims = rs.dims;
  r.socles_agree = same_subspace(rs.basis, ls.basis, A.field());
  try {
    r.nakayama = nakayama_permutation(A);
    r.self_injective = true;
    r.weakly_symmetric = true;
    for (int i = 0; i < static_cast<int>(r.nakayama->size()); ++i)
      if ((*r.nakayama)[i] != i) r.weakly_symmetric = false;
  } catch (const NotQF&) {
  }
  r.symmetry = symmetry_decide(A, budget);
  return r;
}

std::vector<int> frobenius_ranks(const QuotientAlgebra& A) {
  const FieldSpec& f = A.field();
  std::vector<int> out;
  if (!f.is_prime()) return out;
  int p = static_cast<int>(f.characteristic());
  Subspace comm = commutator_subspace(A);
  std::vector<SparseVec> pw(A.dimension());
  for (int i = 0; i < A.dimension(); ++i) pw[i] = SparseVec{{i, Scalar::one(f)}};
  long long exponent = 1;
  while (true) {
    for (auto& x : pw) {
      SparseVec y = x;
      for (int j = 1; j < p; ++j) y = A.multiply(y, x);
      x = std::move(y);
    }
    exponent *= p;
    Subspace s = comm;
    for (const auto& x : pw) s.insert(x);
    out.push_back(s.dim() - comm.dim());
    // Basis paths are idempotent or nilpotent, so nothing changes past the Loewy length.
    if (exponent >= A.loewy_length()) break;
  }
  return out;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dimension << " hilbert=";
  for (std::size_t i = 0; i < hilbert.size(); ++i) os << (i ? "," : "") << hilbert[i];
  os << " cartan=";
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < cartan[i].size(); ++j) os << (j ? "," : "") << cartan[i][j];
  }
  os << " nu=";
  for (std::size_t i = 0; i < nakayama_cycles.size(); ++i) os << (i ? "," : "") << nakayama_cycles[i];
  os << " symmetry=" << symmetry << " center=" << center_dim;
  if (!frobenius.empty()) {
    os << " frobenius=";
    for (std::size_t i = 0; i < frobenius.size(); ++i) os << (i ? "," : "") << frobenius[i];
  }
  return os.str();
}

Fingerprint invariant_fingerprint(const QuotientAlgebra& A, const SymmetryBudget& budget) {
  Fingerprint fp;
  fp.dimension = A.dimension();
  fp.hilbert = A.hilbert_series();
  Matrix c = cartan_matrix(A);
  int n = static_cast<int>(c.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  do {
    Matrix m(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = c[perm[i]][perm[j]];
    if (first || m < fp.cartan) fp.cartan = m;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  try {
    auto nu = nakayama_permutation(A);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = nu[j]) seen[j] = true, ++len;
      fp.nakayama_cycles.push_back(len);
    }
    std::sort(fp.nakayama_cycles.begin(), fp.nakayama_cycles.end());
  } catch (const NotQF&) {
  }
  fp.symmetry = kind_name(symmetry_decide(A, budget).kind);
  fp.center_dim = center_dimension(A);
  fp.frobenius = frobenius_ranks(A);
  return fp;
}

QuotientAlgebra socle_quotient(const QuotientAlgebra& A) {
  Presentation p = A.presentation();
  p.name += "/soc";
  for (const auto& s : right_socle(A).basis) p.add(A.to_element(s));
  return build_quotient(p);
}

bool same_structure_constants(const QuotientAlgebra& A, const QuotientAlgebra& B) {
  if (!(A.quiver() == B.quiver()) || !(A.field() == B.field())) throw QuiverMismatch();
  if (A.dimension() != B.dimension()) return false;
  for (int i = 0; i < A.dimension(); ++i)
    if (!(A.basis_path(i) == B.basis_path(i))) return false;
  const FieldSpec& f = A.field();
  for (int i = 0; i < A.dimension(); ++i) {
    SparseVec x = unit_vec(i, f);
    for (int a = 0; a < A.quiver().arrow_count(); ++a)
      if (A.right_arrow(x, a) != B.right_arrow(x, a) || A.left_arrow(a, x) != B.left_arrow(a, x)) return false;
  }
  return true;
}

bool same_presentation_mod_socle(const QuotientAlgebra& A, const QuotientAlgebra& B) {
  if (!(A.quiver() == B.quiver()) || !(A.field() == B.field())) throw QuiverMismatch();
  return same_structure_constants(socle_quotient(A), socle_quotient(B));
}

}  // namespace preproj
