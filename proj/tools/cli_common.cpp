#include "cli_common.hpp"

#include "preproj/dsl.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace preproj::cli {

Scalar parse_scalar(const std::string& text, const FieldSpec& f) {
  try {
    std::size_t slash = text.find('/');
    BigInt num(text.substr(0, slash));
    BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Scalar(f, BigRational(num, den));
  } catch (const UsageError&) {
    throw;
  } catch (const FieldError& e) {
    throw UsageError("'" + text + "': " + e.what());
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
}

ThetaVector parse_theta(const std::vector<std::string>& items, const std::vector<int>& indices, const FieldSpec& f) {
  ThetaVector th;
  for (const auto& item : items) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      Scalar v = parse_scalar(item, f);
      for (int i : indices) th.set(i, v);
      continue;
    }
    int i = 0;
    try {
      i = std::stoi(item.substr(0, eq));
    } catch (const std::exception&) {
      throw UsageError("bad theta index in '" + item + "'");
    }
    if (std::find(indices.begin(), indices.end(), i) == indices.end())
      throw UsageError("theta index " + std::to_string(i) + " does not occur in this case");
    th.set(i, parse_scalar(item.substr(eq + 1), f));
  }
  return th;
}

Presentation choose_presentation(const AlgebraChoice& c, const FieldSpec& f) {
  if (!c.file.empty()) {
    ParamMap pm;
    for (const auto& p : c.params) {
      std::size_t eq = p.find('=');
      if (eq == std::string::npos) throw UsageError("expected NAME=VALUE, got '" + p + "'");
      pm[p.substr(0, eq)] = parse_scalar(p.substr(eq + 1), f);
    }
    return parse_presentation(read_file(c.file), pm, f);
  }
  if (!c.socle_case.empty()) {
    SocleCase sc = parse_case(c.socle_case);
    ThetaVector th = parse_theta(c.theta, theta_indices(sc, c.rank), f);
    if (c.collapsed) {
      if (!has_collapse(sc)) throw UsageError(case_name(sc) + " has no collapsed presentation");
      Scalar t = th.values.empty() ? Scalar::zero(f) : th.values.begin()->second;
      return socle_collapsed(sc, c.rank, t, f, c.reading);
    }
    return socle_deformed_generic(sc, c.rank, th, f, c.reading);
  }
  if (c.type.empty()) throw UsageError("give --type and --rank, --case, or --file");
  DynkinType t = DynkinType::parse(c.type, c.rank);
  int modes = int(c.star) + int(!c.deform.empty()) + int(c.lr > 0);
  if (modes > 1) throw UsageError("--star, --deform and --lr exclude each other");
  if (c.star) return canonical_star(t, f);
  if (!c.deform.empty()) return deformed(t, NCPoly::parse(c.deform, deform_vars(t), f), f);
  if (c.lr > 0) {
    if (t.family != Family::L) throw UsageError("--lr needs --type L");
    return L_algebra(t.rank, c.lr, f);
  }
  return preprojective(t, f);
}

std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::mt19937_64 seeded_rng(std::uint64_t seed, const std::string& tag) {
  return std::mt19937_64(seed ^ stable_hash(tag));
}

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f, bool nonzero) {
  if (f.is_prime()) {
    std::uint32_t p = f.characteristic();
    std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, p - 1);
    return Scalar(f, static_cast<long long>(d(rng)));
  }
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  while (true) {
    int a = num(rng);
    if (nonzero && a == 0) continue;
    return Scalar(f, BigRational(a, den(rng)));
  }
}

json matrix_json(const Matrix& m) {
  json j = json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

json algebra_json(const QuotientAlgebra& A) {
  const Presentation& p = A.presentation();
  json arrows = json::array();
  for (const auto& a : A.quiver().arrows()) arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(format_element(r));
  return {{"name", p.name},
          {"field", p.field.name()},
          {"presentation_hash", p.hash()},
          {"vertices", A.quiver().vertex_count()},
          {"arrows", arrows},
          {"relations", rels},
          {"dimension", A.dimension()},
          {"cap", A.cap_used()},
          {"hilbert", A.hilbert_series()},
          {"dims_by_pair", matrix_json(A.dims_by_pair())}};
}

json verdict_json(const QuotientAlgebra& A, const SymmetryVerdict& v) {
  json j = {{"kind", kind_name(v.kind)}, {"reason", v.reason}};
  if (v.kind == SymmetryVerdict::Kind::NotSymmetric && !v.certificate.empty()) {
    j["certificate"] = format_element(A.to_element(v.certificate));
    j["certificate_vertex"] = v.certificate_vertex;
  }
  if (v.kind == SymmetryVerdict::Kind::Symmetric) {
    json w = json::object();
    for (const auto& [i, c] : v.witness) w[format_path(A.quiver(), A.basis_path(i))] = c.str();
    j["witness"] = w;
  }
  return j;
}

json report_json(const QuotientAlgebra& A, const InvariantReport& r) {
  json j = {{"dimension", r.dimension},
            {"cartan", matrix_json(r.cartan)},
            {"loewy_length", r.loewy_length},
            {"radical_dims", r.radical_dims},
            {"socle_dims", matrix_json(r.socle_dims)},
            {"socles_agree", r.socles_agree},
            {"self_injective", r.self_injective},
            {"weakly_symmetric", r.weakly_symmetric},
            {"symmetry", verdict_json(A, r.symmetry)}};
  j["nakayama"] = r.nakayama ? json(*r.nakayama) : json(nullptr);
  return j;
}

json fingerprint_json(const Fingerprint& fp) {
  return {{"dimension", fp.dimension},
          {"hilbert", fp.hilbert},
          {"cartan", matrix_json(fp.cartan)},
          {"nakayama_cycles", fp.nakayama_cycles},
          {"symmetry", fp.symmetry},
          {"center_dim", fp.center_dim},
          {"frobenius", fp.frobenius},
          {"summary", fp.str()}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace preproj::cli
