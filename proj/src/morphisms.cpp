#include "preproj/morphisms.hpp"

#include "preproj/dsl.hpp"
#include "words.hpp"

namespace preproj {

using namespace words;

namespace {

void check_source(const AlgebraMorphism& m, const FreeElem& x) {
  if (!x.quiver() || !(*x.quiver() == *m.source.quiver) || !(x.field() == m.source.field)) throw QuiverMismatch();
}

}  // namespace

AlgebraMorphism make_morphism(std::string name, Presentation source, AlgebraPtr target, std::vector<int> vertex_map,
                              const std::map<std::string, FreeElem>& images) {
  const Quiver& sq = *source.quiver;
  const Quiver& tq = target->quiver();
  if (vertex_map.empty()) {
    vertex_map.resize(sq.vertex_count());
    for (int v = 0; v < sq.vertex_count(); ++v) vertex_map[v] = v;
  }
  if (static_cast<int>(vertex_map.size()) != sq.vertex_count() || sq.vertex_count() != tq.vertex_count())
    throw QuiverMismatch();
  std::vector<bool> hit(tq.vertex_count(), false);
  for (int v : vertex_map) {
    if (v < 0 || v >= tq.vertex_count() || hit[v]) throw IncompatibleEndpoints("vertex map is not a bijection");
    hit[v] = true;
  }
  for (const auto& [k, img] : images)
    if (!sq.find_arrow(k)) throw UnknownName("no arrow " + k + " in the source quiver");
  AlgebraMorphism m{std::move(name), std::move(source), std::move(target), std::move(vertex_map), {}, {}};
  for (const Arrow& ar : sq.arrows()) {
    auto it = images.find(ar.name);
    FreeElem img = it != images.end() ? it->second : FreeElem::arrow(m.target->quiver_ptr(), m.target->field(), tq.arrow_id(ar.name));
    if (!(*img.quiver() == tq)) throw QuiverMismatch();
    auto ends = img.endpoints();
    if (!img.is_zero() && (!ends || ends->first != m.vertex_map[ar.source] || ends->second != m.vertex_map[ar.target]))
      throw IncompatibleEndpoints("image of " + ar.name + " does not run from e" + std::to_string(m.vertex_map[ar.source]) +
                                  " to e" + std::to_string(m.vertex_map[ar.target]));
    m.image_coords.push_back(m.target->normal_form(img));
    m.arrow_images.push_back(std::move(img));
  }
  return m;
}

AlgebraMorphism identity_morphism(const AlgebraPtr& A) {
  return make_morphism("id", A->presentation(), A, {}, {});
}

AlgebraMorphism scaling(const Presentation& source, const AlgebraPtr& target, const Scalar& lambda) {
  std::map<std::string, FreeElem> images;
  for (const Arrow& ar : source.quiver->arrows())
    images[ar.name] =
        FreeElem::arrow(target->quiver_ptr(), target->field(), target->quiver().arrow_id(ar.name)).scaled(lambda);
  return make_morphism("scaling(" + lambda.str() + ")", source, target, {}, images);
}

SparseVec apply_path(const AlgebraMorphism& m, const Path& p) {
  const QuotientAlgebra& B = *m.target;
  SparseVec x = unit_vec(B.vertex_index(m.vertex_map[p.source]), B.field());
  for (int a : p.arrows) {
    x = B.multiply(x, m.image_coords[a]);
    if (x.empty()) break;
  }
  return x;
}

SparseVec apply(const AlgebraMorphism& m, const FreeElem& x) {
  check_source(m, x);
  SparseVec out;
  for (const auto& [p, c] : x.terms()) out = axpy(out, c, apply_path(m, p));
  return out;
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (!(f.target->quiver() == *g.source.quiver)) throw QuiverMismatch();
  std::map<std::string, FreeElem> images;
  std::vector<int> vmap(f.vertex_map.size());
  for (std::size_t v = 0; v < vmap.size(); ++v) vmap[v] = g.vertex_map[f.vertex_map[v]];
  for (const Arrow& ar : f.source.quiver->arrows()) {
    FreeElem fa = f.target->to_element(f.image_coords[ar.id]);
    FreeElem over_g(g.source.quiver, g.source.field);
    for (const auto& [p, c] : fa.terms()) over_g.add_term(p, c);
    images[ar.name] = g.target->to_element(apply(g, over_g));
  }
  return make_morphism(g.name + "*" + f.name, f.source, g.target, vmap, images);
}

WellDefinedReport is_well_defined(const AlgebraMorphism& m) {
  WellDefinedReport r;
  for (std::size_t i = 0; i < m.source.relations.size(); ++i) {
    if (!apply(m, m.source.relations[i]).empty()) {
      r.ok = false;
      r.relation = static_cast<int>(i);
      r.failing = format_element(m.source.relations[i]);
      return r;
    }
  }
  return r;
}

namespace {

// g(f(a)) = a for every arrow a of f's source, read in g's target.
bool left_inverse_on_arrows(const AlgebraMorphism& f, const AlgebraMorphism& g) {
  for (std::size_t v = 0; v < f.vertex_map.size(); ++v)
    if (g.vertex_map[f.vertex_map[v]] != static_cast<int>(v)) return false;
  for (const Arrow& ar : f.source.quiver->arrows()) {
    FreeElem fa = f.target->to_element(f.image_coords[ar.id]);
    FreeElem over_g(g.source.quiver, g.source.field);
    for (const auto& [p, c] : fa.terms()) over_g.add_term(p, c);
    SparseVec back = apply(g, over_g);
    SparseVec want = g.target->normal_form(
        FreeElem::arrow(g.target->quiver_ptr(), g.target->field(), g.target->quiver().arrow_id(ar.name)));
    if (back != want) return false;
  }
  return true;
}

}  // namespace

bool verify_mutually_inverse(const AlgebraMorphism& phi, const AlgebraMorphism& psi) {
  if (!(phi.target->quiver() == *psi.source.quiver) || !(psi.target->quiver() == *phi.source.quiver))
    throw QuiverMismatch();
  return left_inverse_on_arrows(phi, psi) && left_inverse_on_arrows(psi, phi);
}

std::string family_name(MorphismFamily f) {
  switch (f) {
    case MorphismFamily::Aodd: return "Aodd";
    case MorphismFamily::E6: return "E6";
    case MorphismFamily::Dodd: return "Dodd";
    case MorphismFamily::Deven: return "Deven";
    case MorphismFamily::Ln: return "L";
    case MorphismFamily::E7: return "E7";
    case MorphismFamily::E8: return "E8";
    case MorphismFamily::DevenCharNot2: return "DevenCharNot2";
    case MorphismFamily::E7CharNot2: return "E7CharNot2";
    case MorphismFamily::E8CharNot2: return "E8CharNot2";
    case MorphismFamily::LnCharNot2: return "LCharNot2";
    case MorphismFamily::Scaling: return "Scaling";
  }
  return "?";
}

MorphismFamily parse_family(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(MorphismFamily::Scaling); ++i)
    if (family_name(static_cast<MorphismFamily>(i)) == name) return static_cast<MorphismFamily>(i);
  if (name == "Ln") return MorphismFamily::Ln;
  throw CaseMismatch("unknown morphism case " + name);
}

std::optional<SocleCase> family_case(MorphismFamily f) {
  switch (f) {
    case MorphismFamily::Aodd: return SocleCase::AOdd;
    case MorphismFamily::E6: return SocleCase::E6;
    case MorphismFamily::Dodd: return SocleCase::DOdd;
    case MorphismFamily::Deven: return SocleCase::DEven;
    case MorphismFamily::Ln: return SocleCase::L;
    case MorphismFamily::E7: return SocleCase::E7;
    case MorphismFamily::E8: return SocleCase::E8;
    default: return std::nullopt;
  }
}

bool family_needs_half(MorphismFamily f) {
  return f == MorphismFamily::DevenCharNot2 || f == MorphismFamily::E7CharNot2 || f == MorphismFamily::E8CharNot2 ||
         f == MorphismFamily::LnCharNot2;
}

namespace {

std::map<std::string, FreeElem> parse_images(const Presentation& target_pres,
                                             const std::vector<std::pair<std::string, std::string>>& texts,
                                             const ParamMap& params) {
  std::map<std::string, FreeElem> out;
  for (const auto& [arrow, text] : texts) out[arrow] = target_pres.parse(text, params);
  return out;
}

Scalar alt_sum(const ThetaVector& th, const FieldSpec& f, int from, int to, int k) {
  Scalar s = Scalar::zero(f);
  for (int i = from; i <= to; ++i) s += (((i + k + 1) % 2 == 0) ? th.get(i, f) : -th.get(i, f));
  return s;
}

using Texts = std::vector<std::pair<std::string, std::string>>;

// Images of a_k for the D and L families, coefficient names c<k>.
Texts rank_family_texts(MorphismFamily fam, int n, ParamMap& pm, const ThetaVector& th, const FieldSpec& f, int sign,
                        Reading reading) {
  Texts t;
  Scalar sg(f, sign);
  auto bind = [&](const std::string& name, const Scalar& v) { pm[name] = sg * v; };
  if (fam == MorphismFamily::Aodd) {
    int m = (n - 1) / 2;
    bind("c", th.get(0, f));
    // For m = 1 the correction is a multiple of a_0 itself, so phi(a_0) = (1 + theta) a_0.
    if (m == 1 && sign < 0 && reading == Reading::ProofConsistent) {
      Scalar u = Scalar::one(f) + th.get(0, f);
      if (u.is_zero()) throw RangeError("A_3 with 1 + theta = 0 has no inverse map");
      pm["c"] = -th.get(0, f) / u;
    }
    t.emplace_back(a(m - 1), a(m - 1) + " + c*" + cat({down(m - 2, 0), up(0, m - 1)}));
    return t;
  }
  if (fam == MorphismFamily::Ln) {
    for (int k = 0; k <= n - 2; ++k) {
      std::string c = "c" + std::to_string(k);
      bind(c, alt_sum(th, f, k + 1, n - 1, k));
      t.emplace_back(a(k), a(k) + " + " + c + "*" + cat({down(k - 1, 0), "eps", up(0, n - 2), down(n - 2, k + 1)}));
    }
    return t;
  }
  // D families.
  int first = 1;
  if (fam == MorphismFamily::Deven) {
    bind("c0", th.get(0, f));
    bind("c1", th.get(1, f));
    t.emplace_back("a0", "a0 + c0*" + cat({"a0", up(2, n - 2), down(n - 2, 2)}));
    t.emplace_back("a1", "a1 + c1*" + cat({"a1", up(2, n - 2), down(n - 2, 2)}));
    first = 2;
  }
  for (int k = first; k <= n - 2; ++k) {
    std::string c = "c" + std::to_string(k);
    bind(c, alt_sum(th, f, k + 1, n - 1, k));
    t.emplace_back(a(k), a(k) + " + " + c + "*" + cat({down(k - 1, 1), up(1, n - 2), down(n - 2, k + 1)}));
  }
  return t;
}

Texts half_texts(MorphismFamily fam, int n, int sign) {
  std::string plus = sign > 0 ? " + " : " - ", minus = sign > 0 ? " - " : " + ";
  Texts t;
  if (fam == MorphismFamily::DevenCharNot2) {
    int k = (n - 4) / 2;
    std::string pw = k == 0 ? "" : "(abar1*a1*abar0*a0)^" + std::to_string(k);
    t.emplace_back("a0", "a0" + plus + "h*" + cat({"a0", pw, "abar1*a1"}));
    t.emplace_back("abar0", "abar0" + minus + "h*" + cat({pw, "abar1*a1*abar0"}));
  } else if (fam == MorphismFamily::LnCharNot2) {
    std::string img = "eps" + plus + "h*eps^" + std::to_string(2 * n - 2);
    if (sign < 0 && n == 2) img += " + 2*h^2*eps^3";
    t.emplace_back("eps", img);
  }
  return t;
}

std::string mor_file(MorphismFamily fam, bool inverse) {
  std::string base;
  switch (fam) {
    case MorphismFamily::E6: base = "E6_"; break;
    case MorphismFamily::E7: base = "E7_"; break;
    case MorphismFamily::E8: base = "E8_"; break;
    case MorphismFamily::E7CharNot2: base = "E7_half_"; break;
    case MorphismFamily::E8CharNot2: base = "E8_half_"; break;
    default: throw CaseMismatch("no morphism file for " + family_name(fam));
  }
  return base + (inverse ? "psi" : "phi") + ".mor";
}

AlgebraMorphism from_file(const std::string& file, const Presentation& source, const AlgebraPtr& target,
                          const ParamMap& params) {
  MorphismSpec spec = parse_morphism_spec(catalog_text(file));
  std::vector<int> vmap;
  if (!spec.vertex_map.empty()) {
    vmap.assign(source.quiver->vertex_count(), -1);
    for (auto [s, t] : spec.vertex_map) vmap.at(s) = t;
  }
  return make_morphism(spec.name, source, target, vmap, parse_images(target->presentation(), spec.images, params));
}

DynkinType family_type(MorphismFamily fam, int n) {
  switch (fam) {
    case MorphismFamily::E7CharNot2: return {Family::E, 7};
    case MorphismFamily::E8CharNot2: return {Family::E, 8};
    case MorphismFamily::DevenCharNot2: return {Family::D, n};
    case MorphismFamily::LnCharNot2: return {Family::L, n};
    default: break;
  }
  SocleCase c = *family_case(fam);
  return {case_family(c), case_rank(c, n)};
}

}  // namespace

CatalogPair catalog_pair(MorphismFamily fam, const MorphismParams& params, const FieldSpec& f) {
  if (fam == MorphismFamily::Scaling) throw CaseMismatch("use scaling_pair for Scaling");
  ParamMap pm = params.theta.params(f);
  if (family_needs_half(fam)) pm["h"] = half(f);
  DynkinType t = family_type(fam, params.rank);
  if (fam == MorphismFamily::DevenCharNot2 && (t.rank % 2 != 0 || t.rank < 4))
    throw RangeError("DevenCharNot2 needs even n >= 4");
  int n = t.rank;

  Presentation src, tgt;
  if (auto c = family_case(fam)) {
    tgt = socle_deformed_generic(*c, n, params.theta, f, params.reading);
    if (has_collapse(*c))
      src = socle_collapsed(*c, n, theta_collapse(*c, n, params.theta, f, params.reading), f, params.reading);
    else
      src = preprojective(t, f);
  } else {
    src = preprojective(t, f);
    tgt = canonical_star(t, f);
  }
  CatalogPair out;
  out.source = std::make_shared<QuotientAlgebra>(build_quotient(src));
  out.target = std::make_shared<QuotientAlgebra>(build_quotient(tgt));

  auto build = [&](bool inverse) {
    const Presentation& from = inverse ? tgt : src;
    const AlgebraPtr& to = inverse ? out.source : out.target;
    std::string name = family_name(fam) + (inverse ? "Psi" : "Phi");
    if (fam == MorphismFamily::E6 || fam == MorphismFamily::E7 || fam == MorphismFamily::E8 ||
        fam == MorphismFamily::E7CharNot2 || fam == MorphismFamily::E8CharNot2)
      return from_file(mor_file(fam, inverse), from, to, pm);
    ParamMap local = pm;
    Texts texts = family_needs_half(fam) ? half_texts(fam, n, inverse ? -1 : 1)
                                         : rank_family_texts(fam, n, local, params.theta, f, inverse ? -1 : 1, params.reading);
    return make_morphism(name, from, to, {}, parse_images(to->presentation(), texts, local));
  };
  out.phi = build(false);
  out.psi = build(true);
  return out;
}

CatalogPair scaling_pair(SocleCase c, int n, const Scalar& theta, const Scalar& lambda, const FieldSpec& f,
                         Reading reading) {
  if (!has_collapse(c)) throw CaseMismatch(case_name(c) + " has no collapsed presentation");
  if (lambda.is_zero()) throw RangeError("lambda must be nonzero");
  n = case_rank(c, n);
  DynkinType t{case_family(c), n};
  CatalogPair out;
  out.source = std::make_shared<QuotientAlgebra>(build_quotient(canonical_star(t, f)));
  out.target = std::make_shared<QuotientAlgebra>(build_quotient(socle_collapsed(c, n, theta, f, reading)));
  out.phi = scaling(out.source->presentation(), out.target, lambda);
  out.psi = scaling(out.target->presentation(), out.source, lambda.inv());
  return out;
}

AlgebraMorphism catalog_morphism(MorphismCaseId id, const MorphismParams& params, const FieldSpec& f) {
  CatalogPair p;
  if (id.family == MorphismFamily::Scaling) {
    if (!params.lambda) throw CaseMismatch("Scaling needs lambda");
    p = scaling_pair(params.scaling_case, params.rank, params.theta.get(0, f), *params.lambda, f, params.reading);
  } else {
    p = catalog_pair(id.family, params, f);
  }
  return id.inverse ? p.psi : p.phi;
}

std::string suite_name(IdentitySuite s) {
  switch (s) {
    case IdentitySuite::E6: return "E6";
    case IdentitySuite::Dodd: return "Dodd";
    case IdentitySuite::E7: return "E7";
    case IdentitySuite::E8: return "E8";
    case IdentitySuite::L: return "L";
    case IdentitySuite::E7Swap: return "E7swap";
    case IdentitySuite::E8Swap: return "E8swap";
  }
  return "?";
}

namespace {

// Replaces x, y, z by the loops at the exceptional vertex of E.
std::string expand_xyz(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == 'x') out += "(abar0*a0)";
    else if (c == 'y') out += "(abar2*a2)";
    else if (c == 'z') out += "(a3*abar3)";
    else out += c;
  }
  return out;
}

struct Identity {
  std::string name, lhs, rhs;
};

}  // namespace

std::vector<IdentityResult> identity_regressions(const QuotientAlgebra& A, IdentitySuite suite, int n) {
  std::vector<Identity> ids;
  bool xyz = true;
  switch (suite) {
    case IdentitySuite::E6:
      ids = {{"(1)", "x^2", "0"},
             {"(2)", "y^3", "0"},
             {"(3)", "x*y*x + y*x*y + y^2*x + x*y^2", "0"},
             {"(4)", "y^2*x*y^2 + x*y*x*y^2", "0"}};
      break;
    case IdentitySuite::E7:
      ids = {{"x^2", "x^2", "0"},
             {"y^3", "y^3", "0"},
             {"z^4", "z^4", "0"},
             {"(*) first", "y^2*x*y*x*z^3", "-y^2*x*y*x*y^2*x"},
             {"(*) second", "-y^2*x*y*x*y^2*x", "y*x*y^2*x*y^2*x"}};
      break;
    case IdentitySuite::E8:
      ids = {{"z^5", "z^5", "0"},
             {"(1)", "y^2*(x*y)^2*x*y^2", "0"},
             {"(2)", "x*y^2*x*y^2*x", "-(x*y)^3*x"},
             {"(3)", "(x*y^2*x*y)^2*x", "(x*y)^5*x"},
             {"(3')", "(x*y*x*y^2)^2*x", "(x*y)^5*x"},
             {"(4)", "(x*y)^2*y*(x*y)^3", "-x*y*(x*y^2)^3"},
             {"(5)", "x*y^2*x*y*(x*y^2)^2", "-x*y*(x*y^2)^3"},
             {"(6)", "x*y^2*(x*y)^4", "-(x*y)^5*x + x*y*(x*y^2)^3"},
             {"(7)", "(x*y)^3*y*(x*y)^2", "(x*y)^5*x"},
             {"(8)", "(y^2*x)^2*y*x*(y^2*x)^2", "(y^2*x)^2*y*x*y^2*z^4"}};
      break;
    case IdentitySuite::E7Swap:
      ids = {{"swap", "y*x*y^2*x*y^2*x", "-x*y^2*x*y^2*x*y"}};
      break;
    case IdentitySuite::E8Swap:
      ids = {{"swap", "(y^2*x)^2*y*(x*y^2)^2*x", "-x*(y^2*x)^2*y*(x*y^2)^2"}};
      break;
    case IdentitySuite::Dodd:
      xyz = false;
      for (int k = 1; 4 * k + 2 <= A.loewy_length() + 4; ++k) {
        std::string p = "(a2*abar2)^" + std::to_string(2 * k);
        ids.push_back({"a0 k=" + std::to_string(k), "a0*" + p + "*abar0", "0"});
        ids.push_back({"a1 k=" + std::to_string(k), "a1*" + p + "*abar1", "0"});
      }
      break;
    case IdentitySuite::L: {
      xyz = false;
      int s = (n * (n - 1) / 2) % 2 ? -1 : 1;
      std::string sign = s < 0 ? "-" : "";
      std::string w = cat({up(0, n - 2), down(n - 2, 0)});
      std::string top = "eps^" + std::to_string(2 * n - 1);
      ids = {{"eps^(2n-1)", top, sign + "eps*" + w}, {"path*eps", w + "*eps", sign + top}};
      break;
    }
  }
  std::vector<IdentityResult> out;
  const Presentation& p = A.presentation();
  for (const auto& id : ids) {
    std::string l = xyz ? expand_xyz(id.lhs) : id.lhs;
    std::string r = xyz ? expand_xyz(id.rhs) : id.rhs;
    SparseVec lv = A.normal_form(p.parse(l));
    SparseVec rv = r == "0" ? SparseVec{} : A.normal_form(p.parse(r));
    out.push_back({id.name, l, r, lv == rv});
  }
  return out;
}

}  // namespace preproj
