#include "preproj/presentations.hpp"

#include "preproj/dsl.hpp"
#include "words.hpp"

#include <algorithm>

namespace preproj {

namespace {

using namespace words;

Presentation empty_presentation(const std::string& name, const DynkinType& t, const FieldSpec& f) {
  Presentation p;
  p.name = name;
  p.quiver = std::make_shared<Quiver>(build_dynkin_quiver(t));
  p.field = f;
  p.cap = default_cap(t);
  return p;
}

FreeElem mesh(const Presentation& p, int v) {
  FreeElem r(p.quiver, p.field);
  const Quiver& q = *p.quiver;
  for (int x : q.arrows_from(v)) r += FreeElem::arrow(p.quiver, p.field, x) * FreeElem::arrow(p.quiver, p.field, q.bar(x));
  return r;
}

// The four relations c*(s), (s)*c' killing the socle of a two-term mesh relation.
void add_killers(Presentation& p, const std::string& s, const std::string& left, const std::string& right,
                 const std::string& left2, const std::string& right2) {
  p.add(left + "*(" + s + ")");
  p.add("(" + s + ")*" + right);
  p.add(left2 + "*(" + s + ")");
  p.add("(" + s + ")*" + right2);
}

Scalar theta_sum(const ThetaVector& th, const FieldSpec& f, int from, int to, int sign_offset) {
  Scalar s = Scalar::zero(f);
  for (int i = from; i <= to; ++i) {
    Scalar t = th.get(i, f);
    s += ((i + sign_offset) % 2 == 0) ? t : -t;
  }
  return s;
}

}  // namespace

std::string case_name(SocleCase c) {
  switch (c) {
    case SocleCase::AOdd: return "Aodd";
    case SocleCase::DOdd: return "Dodd";
    case SocleCase::DEven: return "Deven";
    case SocleCase::E6: return "E6";
    case SocleCase::E7: return "E7";
    case SocleCase::E8: return "E8";
    case SocleCase::L: return "L";
  }
  return "?";
}

SocleCase parse_case(const std::string& name) {
  for (auto c : {SocleCase::AOdd, SocleCase::DOdd, SocleCase::DEven, SocleCase::E6, SocleCase::E7, SocleCase::E8,
                 SocleCase::L})
    if (case_name(c) == name) return c;
  throw CaseMismatch("unknown case " + name);
}

Family case_family(SocleCase c) {
  switch (c) {
    case SocleCase::AOdd: return Family::A;
    case SocleCase::DOdd:
    case SocleCase::DEven: return Family::D;
    case SocleCase::L: return Family::L;
    default: return Family::E;
  }
}

int case_rank(SocleCase c, int n) {
  switch (c) {
    case SocleCase::E6: return 6;
    case SocleCase::E7: return 7;
    case SocleCase::E8: return 8;
    case SocleCase::AOdd:
      if (n < 3 || n % 2 == 0) throw CaseMismatch("Aodd needs odd n >= 3");
      return n;
    case SocleCase::DOdd:
      if (n < 5 || n % 2 == 0) throw CaseMismatch("Dodd needs odd n >= 5");
      return n;
    case SocleCase::DEven:
      if (n < 4 || n % 2 != 0) throw CaseMismatch("Deven needs even n >= 4");
      return n;
    case SocleCase::L:
      if (n < 2) throw CaseMismatch("L needs n >= 2");
      return n;
  }
  return n;
}

std::vector<int> theta_indices(SocleCase c, int n) {
  n = case_rank(c, n);
  std::vector<int> out;
  auto range = [&](int lo, int hi) {
    for (int i = lo; i <= hi; ++i) out.push_back(i);
  };
  switch (c) {
    case SocleCase::AOdd: out = {0}; break;
    case SocleCase::E6: out = {0, 3}; break;
    case SocleCase::E7: range(0, 6); break;
    case SocleCase::E8: range(0, 7); break;
    case SocleCase::DOdd: range(2, n - 1); break;
    case SocleCase::DEven:
    case SocleCase::L: range(0, n - 1); break;
  }
  return out;
}

bool has_collapse(SocleCase c) {
  return c == SocleCase::DEven || c == SocleCase::L || c == SocleCase::E7 || c == SocleCase::E8;
}

Scalar ThetaVector::get(int i, const FieldSpec& f) const {
  auto it = values.find(i);
  return it == values.end() ? Scalar::zero(f) : it->second;
}

ThetaVector ThetaVector::constant(const std::vector<int>& indices, const Scalar& v) {
  ThetaVector t;
  for (int i : indices) t.set(i, v);
  return t;
}

ParamMap ThetaVector::params(const FieldSpec& f) const {
  ParamMap m;
  for (int i = 0; i < 10; ++i) m["t" + std::to_string(i)] = get(i, f);
  return m;
}

int coxeter_number(const DynkinType& t) {
  check_rank(t);
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::D: return 2 * t.rank - 2;
    case Family::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    case Family::L: return 2 * t.rank + 1;
  }
  return 0;
}

int expected_dimension(const DynkinType& t) {
  int h = coxeter_number(t);
  return t.rank * h * (h + 1) / 6;
}

CapPolicy default_cap(const DynkinType& t) { return CapPolicy::autoseed(coxeter_number(t) + 2); }

std::vector<std::string> deform_vars(const DynkinType& t) {
  if (t.family == Family::L) return {"x"};
  if (t.family == Family::A) return {};
  return {"x", "y"};
}

Presentation local_algebra_R(const DynkinType& t, const FieldSpec& f) {
  check_rank(t);
  auto q = std::make_shared<Quiver>(1);
  for (const auto& v : deform_vars(t)) q->add_selfbar_loop(v, 0);
  Presentation p;
  p.name = "R(" + t.str() + ")";
  p.quiver = q;
  p.field = f;
  p.cap = CapPolicy::autoseed(coxeter_number(t) + 2);
  const int n = t.rank;
  switch (t.family) {
    case Family::A: break;
    case Family::D:
      p.add("x^2");
      p.add("y^2");
      p.add("(x+y)^" + std::to_string(n - 2));
      break;
    case Family::E:
      p.add("x^2");
      p.add("y^3");
      p.add("(x+y)^" + std::to_string(n - 3));
      break;
    case Family::L: p.add("x^" + std::to_string(2 * n)); break;
  }
  return p;
}

bool is_admissible(const DynkinType& t, const NCPoly& f, const FieldSpec& field) {
  check_rank(t);
  if (!f.is_zero() && f.min_degree() < 2) return false;
  if (t.family != Family::E || f.is_zero()) return true;
  Presentation r = local_algebra_R(t, field);
  QuotientAlgebra R = build_quotient(r);
  FreeElem x = FreeElem::arrow(r.quiver, field, 0);
  FreeElem y = FreeElem::arrow(r.quiver, field, 1);
  FreeElem fe = substitute(f, {{"x", x}, {"y", y}});
  SparseVec s = R.normal_form(x + y + fe);
  SparseVec acc = R.normal_form(FreeElem::vertex(r.quiver, field, 0));
  for (int i = 0; i < t.rank - 3; ++i) acc = R.multiply(acc, s);
  return acc.empty();
}

Presentation preprojective(const DynkinType& t, const FieldSpec& f) {
  Presentation p = empty_presentation("P(" + t.str() + ")", t, f);
  for (int v = 0; v < p.quiver->vertex_count(); ++v) p.add(mesh(p, v));
  if (t.family == Family::L) p.add("eps^" + std::to_string(2 * t.rank));
  return p;
}

Presentation deformed(const DynkinType& t, const NCPoly& f, const FieldSpec& field) {
  if (t.family == Family::A) {
    Presentation p = preprojective(t, field);
    return p;
  }
  if (!is_admissible(t, f, field)) throw NotAdmissibleDeformation("f is not admissible for " + t.str());
  Presentation p = empty_presentation("P^f(" + t.str() + ")", t, field);
  const int ex = exceptional_vertex(t);
  const int n = t.rank;
  std::map<std::string, FreeElem> sub;
  switch (t.family) {
    case Family::D:
      sub = {{"x", p.parse("abar0*a0")}, {"y", p.parse("abar1*a1")}};
      break;
    case Family::E:
      sub = {{"x", p.parse("abar0*a0")}, {"y", p.parse("abar2*a2")}};
      break;
    case Family::L: sub = {{"x", p.parse("eps")}}; break;
    case Family::A: break;
  }
  FreeElem fe = f.is_zero() ? FreeElem(p.quiver, field) : substitute(f, sub);
  for (int v = 0; v < p.quiver->vertex_count(); ++v) {
    FreeElem r = mesh(p, v);
    if (v == ex) r += (t.family == Family::L) ? p.parse("eps") * fe : fe;
    p.add(r);
  }
  switch (t.family) {
    case Family::D: p.add("(abar0*a0 + abar1*a1)^" + std::to_string(n - 2)); break;
    case Family::E: p.add("(abar0*a0 + abar2*a2)^" + std::to_string(n - 3)); break;
    case Family::L: p.add("eps^" + std::to_string(2 * n)); break;
    case Family::A: break;
  }
  return p;
}

NCPoly canonical_f(const DynkinType& t, const FieldSpec& field) {
  check_rank(t);
  const int n = t.rank;
  std::string text;
  switch (t.family) {
    case Family::A: throw NoCanonicalStar("A_n has no socle deformation");
    case Family::D: {
      int m = n / 2;
      text = "(x*y)^" + std::to_string(m - 1) + (n % 2 ? "*x" : "");
      break;
    }
    case Family::E: text = n == 6 ? "(y*x)^2*y" : "(x*y)^" + std::to_string(3 * n - 17); break;
    case Family::L:
      if (n < 2) throw NoCanonicalStar("L_1 has no socle deformation");
      text = "x^" + std::to_string(2 * n - 2);
      break;
  }
  return NCPoly::parse(text, deform_vars(t), field);
}

Presentation canonical_star(const DynkinType& t, const FieldSpec& field) {
  Presentation p = deformed(t, canonical_f(t, field), field);
  p.name = "P*(" + t.str() + ")";
  return p;
}

Presentation L_algebra(int n, int r, const FieldSpec& field) {
  if (n < 1 || r < 1 || r > n) throw RangeError("L_n^(r) needs 1 <= r <= n");
  DynkinType t{Family::L, n};
  Presentation p = deformed(t, NCPoly::parse("x^" + std::to_string(2 * r), {"x"}, field), field);
  p.name = "L" + std::to_string(n) + "^(" + std::to_string(r) + ")";
  return p;
}

namespace {

std::string e_file(SocleCase c, bool collapsed, Reading reading) {
  std::string base = case_name(c) + (collapsed ? "_second" : "_prime");
  if (reading == Reading::AsPrinted && (c == SocleCase::E8 || (c == SocleCase::E6 && !collapsed)))
    base += "_printed";
  return base + ".qpa";
}

Presentation a_odd_prime(int n, const ThetaVector& th, const FieldSpec& f) {
  const int m = (n - 1) / 2;
  Presentation p = empty_presentation("Aodd'(" + std::to_string(n) + ")", DynkinType{Family::A, n}, f);
  ParamMap pm{{"t", th.get(0, f)}};
  const std::string loop = cat({down(m - 1, 0), up(0, m - 1)});
  p.add("a0*abar0");
  for (int l = 1; l <= n - 2; ++l) {
    std::string r = b(l - 1) + "*" + a(l - 1) + " + " + a(l) + "*" + b(l);
    if (l == m) r += " + t*" + loop;
    p.add(r, pm);
  }
  p.add(b(n - 2) + "*" + a(n - 2));
  p.add(cat({loop, a(m)}));
  p.add(cat({b(m), loop}));
  return p;
}

// Path at vertex k of type D or L: abar_{k-1} ... (turn) ... a_{n-2} abar_{n-2} ... abar_k.
std::string d_loop(int n, int k) { return cat({down(k - 1, 1), a(1), up(2, n - 2), down(n - 2, k)}); }
std::string l_loop(int n, int k) { return cat({down(k - 1, 0), "eps", up(0, n - 2), down(n - 2, k)}); }

void d_vertex2_killers(Presentation& p) {
  p.add("a0*(abar1*a1 + a2*abar2)");
  p.add("a1*(abar0*a0 + a2*abar2)");
  p.add("abar2*(abar0*a0 + abar1*a1 + a2*abar2)");
  p.add("(abar1*a1 + a2*abar2)*abar0");
  p.add("(abar0*a0 + a2*abar2)*abar1");
  p.add("(abar0*a0 + abar1*a1 + a2*abar2)*a2");
}

// Theta index of the last-vertex term: the display prints n-2, the maps use n-1.
int last_index(int n, Reading reading) { return reading == Reading::AsPrinted ? n - 2 : n - 1; }

Presentation d_prime(SocleCase c, int n, const ThetaVector& th, const FieldSpec& f, Reading reading) {
  Presentation p = empty_presentation(case_name(c) + "'(" + std::to_string(n) + ")", DynkinType{Family::D, n}, f);
  ParamMap pm = th.params(f);
  const std::string tail = cat({up(2, n - 2), down(n - 2, 2)});
  if (c == SocleCase::DEven) {
    p.add("a0*abar0 + t0*" + cat({a(0), tail, b(0)}), pm);
    p.add("a0*abar0*a0");
    p.add("abar0*a0*abar0");
    p.add("a1*abar1 + t1*" + cat({a(1), tail, b(1)}), pm);
    p.add("a1*abar1*a1");
    p.add("abar1*a1*abar1");
  } else {
    p.add("a0*abar0");
    p.add("a1*abar1");
  }
  p.add("abar0*a0 + abar1*a1 + a2*abar2 + t2*" + d_loop(n, 2), pm);
  d_vertex2_killers(p);
  for (int k = 3; k <= n - 2; ++k) {
    std::string s = b(k - 1) + "*" + a(k - 1) + " + " + a(k) + "*" + b(k);
    p.add(s + " + t" + std::to_string(k) + "*" + d_loop(n, k), pm);
    add_killers(p, s, a(k - 1), b(k - 1), b(k), a(k));
  }
  pm["tl"] = th.get(last_index(n, reading), f);
  p.add(b(n - 2) + "*" + a(n - 2) + " + tl*" + d_loop(n, n - 1), pm);
  p.add(cat({b(n - 2), a(n - 2), b(n - 2)}));
  p.add(cat({a(n - 2), b(n - 2), a(n - 2)}));
  return p;
}

Presentation d_second(int n, const Scalar& theta, const FieldSpec& f) {
  Presentation p = empty_presentation("Deven''(" + std::to_string(n) + ")", DynkinType{Family::D, n}, f);
  p.add("a0*abar0");
  p.add("a1*abar1");
  p.add("abar0*a0 + abar1*a1 + a2*abar2 + t*" + d_loop(n, 2), {{"t", theta}});
  d_vertex2_killers(p);
  for (int k = 3; k <= n - 2; ++k) p.add(b(k - 1) + "*" + a(k - 1) + " + " + a(k) + "*" + b(k));
  p.add(b(n - 2) + "*" + a(n - 2));
  return p;
}

Presentation l_prime(int n, const ThetaVector& th, const FieldSpec& f, Reading reading) {
  Presentation p = empty_presentation("L'(" + std::to_string(n) + ")", DynkinType{Family::L, n}, f);
  ParamMap pm = th.params(f);
  p.add("eps^2 + a0*abar0 + t0*eps^" + std::to_string(2 * n - 1), pm);
  p.add("eps^" + std::to_string(2 * n));
  for (int k = 1; k <= n - 2; ++k) {
    std::string s = b(k - 1) + "*" + a(k - 1) + " + " + a(k) + "*" + b(k);
    p.add(s + " + t" + std::to_string(k) + "*" + l_loop(n, k), pm);
    add_killers(p, s, a(k - 1), b(k - 1), b(k), a(k));
  }
  pm["tl"] = th.get(last_index(n, reading), f);
  p.add(b(n - 2) + "*" + a(n - 2) + " + tl*" + l_loop(n, n - 1), pm);
  p.add(cat({b(n - 2), a(n - 2), b(n - 2)}));
  p.add(cat({a(n - 2), b(n - 2), a(n - 2)}));
  return p;
}

Presentation l_second(int n, const Scalar& theta, const FieldSpec& f) {
  Presentation p = empty_presentation("L''(" + std::to_string(n) + ")", DynkinType{Family::L, n}, f);
  p.add("eps^2 + a0*abar0 + t*eps^" + std::to_string(2 * n - 1), {{"t", theta}});
  p.add("eps^" + std::to_string(2 * n));
  p.add(b(n - 2) + "*" + a(n - 2));
  for (int i = 0; i <= n - 3; ++i) p.add(b(i) + "*" + a(i) + " + " + a(i + 1) + "*" + b(i + 1));
  return p;
}

}  // namespace

Presentation socle_deformed_generic(SocleCase c, int n, const ThetaVector& theta, const FieldSpec& f,
                                    Reading reading) {
  n = case_rank(c, n);
  auto allowed = theta_indices(c, n);
  for (const auto& [i, v] : theta.values)
    if (!v.is_zero() && std::find(allowed.begin(), allowed.end(), i) == allowed.end())
      throw CaseMismatch("theta index " + std::to_string(i) + " does not occur in " + case_name(c));
  switch (c) {
    case SocleCase::AOdd: return a_odd_prime(n, theta, f);
    case SocleCase::DOdd:
    case SocleCase::DEven: return d_prime(c, n, theta, f, reading);
    case SocleCase::L: return l_prime(n, theta, f, reading);
    default: {
      Presentation p = parse_presentation(catalog_text(e_file(c, false, reading)), theta.params(f), f);
      return p;
    }
  }
}

Presentation socle_collapsed(SocleCase c, int n, const Scalar& theta, const FieldSpec& f, Reading reading) {
  n = case_rank(c, n);
  switch (c) {
    case SocleCase::DEven: return d_second(n, theta, f);
    case SocleCase::L: return l_second(n, theta, f);
    case SocleCase::E7:
    case SocleCase::E8: return parse_presentation(catalog_text(e_file(c, true, reading)), {{"t", theta}}, f);
    default: throw CaseMismatch(case_name(c) + " has no collapsed presentation");
  }
}

Scalar theta_collapse(SocleCase c, int n, const ThetaVector& th, const FieldSpec& f, Reading reading) {
  n = case_rank(c, n);
  auto t = [&](int i) { return th.get(i, f); };
  switch (c) {
    case SocleCase::DEven:
      // The vertex-2 computation needs all indices up to n-1; the display stops at n-2.
      return theta_sum(th, f, 0, reading == Reading::AsPrinted ? n - 2 : n - 1, 0);
    case SocleCase::L: {
      if (reading == Reading::AsPrinted) return t(0) - theta_sum(th, f, 1, n - 1, (n - 2) * (n - 1) / 2);
      // eps a_0 ... abar_0 = (-1)^{n(n-1)/2} eps^{2n-1}.
      return t(0) + theta_sum(th, f, 1, n - 1, n * (n - 1) / 2);
    }
    case SocleCase::E7: return t(0) + t(1) - t(2) - t(3) + t(4) - t(5) + t(6);
    case SocleCase::E8: return -t(0) - t(1) + t(2) + t(3) - t(4) + t(5) - t(6) + t(7);
    default: throw CaseMismatch(case_name(c) + " has no theta collapse");
  }
}

int stated_scaling_exponent(SocleCase c, int n) {
  n = case_rank(c, n);
  switch (c) {
    case SocleCase::DEven:
    case SocleCase::L: return 2 * n - 3;
    case SocleCase::E7: return 13;
    case SocleCase::E8: return 27;
    default: throw CaseMismatch(case_name(c) + " has no scaling");
  }
}

ScalingLaw derived_scaling_law(SocleCase c, int n) {
  n = case_rank(c, n);
  switch (c) {
    case SocleCase::DEven: return {2 * n - 6, (n / 2) % 2 ? -1 : 1};
    case SocleCase::L: return {2 * n - 3, 1};
    case SocleCase::E7: return {14, 1};
    case SocleCase::E8: return {26, -1};
    default: throw CaseMismatch(case_name(c) + " has no scaling");
  }
}

}  // namespace preproj
