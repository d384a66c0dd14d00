#include "cli_common.hpp"
#include "verify.hpp"

#include "preproj/dsl.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace preproj;
using namespace preproj::cli;

namespace {

struct Common {
  std::string field = "gf2";
  std::uint64_t seed = 1;
  int budget_bits = 24;
  int samples = 10000;
  bool json_out = false;
  std::string out;
  bool printed = false;

  SymmetryBudget budget() const { return {budget_bits, samples, seed}; }
  FieldSpec field_spec() const {
    try {
      return FieldSpec::parse(field);
    } catch (const FieldError& e) {
      throw UsageError(e.what());
    }
  }
  Reading reading() const { return printed ? Reading::AsPrinted : Reading::ProofConsistent; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--field", c.field, "gf2, gf3, gfP:<p>, rat");
  app->add_option("--seed", c.seed, "seed for sampling");
  app->add_option("--budget-bits", c.budget_bits, "GF(2) enumeration budget of the symmetry search");
  app->add_option("--samples", c.samples, "random samples of the symmetry search");
  app->add_flag("--json", c.json_out, "print JSON");
  app->add_option("--out", c.out, "write JSON to a file");
  app->add_flag("--printed", c.printed, "use the relations as printed rather than the proof-consistent ones");
}

void add_choice(CLI::App* app, AlgebraChoice& a) {
  app->add_option("--type", a.type, "A, D, E or L");
  app->add_option("--rank", a.rank, "rank n");
  app->add_flag("--star", a.star, "P*(Delta)");
  app->add_option("--deform", a.deform, "deformation polynomial in x, y");
  app->add_option("--lr", a.lr, "L_n^(r)");
  app->add_option("--case", a.socle_case, "socle deformed case: Aodd, Dodd, Deven, E6, E7, E8, L");
  app->add_flag("--collapsed", a.collapsed, "one-parameter presentation A''(theta)");
  app->add_option("--theta", a.theta, "v or i=v")->allow_extra_args(false);
  app->add_option("file", a.file, "presentation file (.qpa)");
  app->add_option("--param", a.params, "NAME=VALUE for the presentation file");
}

void normalise(AlgebraChoice& a) {
  const std::string suffix = "prime";
  if (a.socle_case.size() > suffix.size() && a.socle_case.ends_with(suffix)) a.socle_case.resize(a.socle_case.size() - suffix.size());
  if (a.rank == 0 && !a.socle_case.empty() && std::isdigit(static_cast<unsigned char>(a.socle_case.back()))) {
    a.rank = a.socle_case.back() - '0';
    if (a.socle_case[0] != 'E') a.socle_case.pop_back();
  }
  if (a.socle_case == "Ln") a.socle_case = "L";
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write " + c.out);
    f << j.dump(2) << "\n";
  }
  if (c.json_out) std::cout << j.dump(2) << "\n";
  else if (c.out.empty()) std::cout << text;
}

std::string matrix_text(const Matrix& m) {
  std::string s;
  for (const auto& row : m) {
    s += "  ";
    for (int x : row) s += std::to_string(x) + " ";
    s += "\n";
  }
  return s;
}

std::string ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

int cmd_build(const Common& c, AlgebraChoice a) {
  normalise(a);
  a.reading = c.reading();
  FieldSpec f = c.field_spec();
  auto A = build_quotient(choose_presentation(a, f));
  json j = {{"schema", kSchema}, {"command", "build"}, {"algebra", algebra_json(A)}};
  std::string text = A.presentation().name + " over " + f.name() + "\n  dimension " +
                     std::to_string(A.dimension()) + ", cap " + std::to_string(A.cap_used()) + "\n  degrees " +
                     ints(A.hilbert_series()) + "\n  dims by pair\n" + matrix_text(A.dims_by_pair());
  emit(c, j, text);
  return 0;
}

int cmd_info(const Common& c, AlgebraChoice a) {
  normalise(a);
  a.reading = c.reading();
  FieldSpec f = c.field_spec();
  auto A = build_quotient(choose_presentation(a, f));
  InvariantReport r = invariant_report(A, c.budget());
  json j = {{"schema", kSchema}, {"command", "info"}, {"algebra", algebra_json(A)}, {"report", report_json(A, r)}};
  std::string text = A.presentation().name + " over " + f.name() + "\n  dimension " + std::to_string(r.dimension) +
                     ", loewy length " + std::to_string(r.loewy_length) + "\n  cartan\n" + matrix_text(r.cartan) +
                     "  radical series " + ints(r.radical_dims) + "\n  nakayama " +
                     (r.nakayama ? ints(*r.nakayama) : std::string("none (not self-injective)")) +
                     "\n  weakly symmetric " + (r.weakly_symmetric ? "yes" : "no") + "\n  symmetry: " +
                     kind_name(r.symmetry.kind) + (r.symmetry.reason.empty() ? "" : " (" + r.symmetry.reason + ")") +
                     "\n";
  emit(c, j, text);
  return r.symmetry.kind == SymmetryVerdict::Kind::Unknown ? 2 : 0;
}

int cmd_fingerprint(const Common& c, AlgebraChoice a) {
  normalise(a);
  a.reading = c.reading();
  FieldSpec f = c.field_spec();
  auto A = build_quotient(choose_presentation(a, f));
  Fingerprint fp = invariant_fingerprint(A, c.budget());
  json j = {{"schema", kSchema},
            {"command", "fingerprint"},
            {"algebra", A.presentation().name},
            {"presentation_hash", A.presentation().hash()},
            {"fingerprint", fingerprint_json(fp)}};
  emit(c, j, A.presentation().name + " over " + f.name() + "\n  " + fp.str() + "\n");
  return fp.symmetry == kind_name(SymmetryVerdict::Kind::Unknown) ? 2 : 0;
}

struct IsoArgs {
  std::string family;
  int rank = 0;
  std::vector<std::string> theta;
  std::string lambda;
  std::string scaling_case;
  std::vector<std::string> maps;
  std::string source;
  std::string target;
  std::vector<std::string> params;
};

json map_json(const AlgebraMorphism& m, const WellDefinedReport& w) {
  json j = {{"name", m.name}, {"well_defined", w.ok}};
  if (!w.ok) j["failing_relation"] = w.failing;
  return j;
}

AlgebraMorphism morphism_from_file(const std::string& path, const Presentation& src, const AlgebraPtr& tgt,
                                   const ParamMap& pm) {
  MorphismSpec spec = parse_morphism_spec(read_file(path));
  std::vector<int> vmap;
  if (!spec.vertex_map.empty()) {
    vmap.assign(src.quiver->vertex_count(), -1);
    for (auto [s, t] : spec.vertex_map) vmap.at(s) = t;
  }
  std::map<std::string, FreeElem> images;
  for (const auto& [arrow, text] : spec.images) images[arrow] = tgt->presentation().parse(text, pm);
  return make_morphism(spec.name, src, tgt, vmap, images);
}

int cmd_check_iso(const Common& c, const IsoArgs& a) {
  FieldSpec f = c.field_spec();
  json j = {{"schema", kSchema}, {"command", "check-iso"}, {"field", f.name()}};
  std::optional<AlgebraMorphism> phi, psi;
  AlgebraPtr source, target;
  std::string text;

  if (!a.maps.empty()) {
    if (a.source.empty() || a.target.empty()) throw UsageError("--map needs --source and --target");
    if (a.maps.size() > 2) throw UsageError("give at most two maps");
    ParamMap pm;
    for (const auto& p : a.params) {
      std::size_t eq = p.find('=');
      if (eq == std::string::npos) throw UsageError("expected NAME=VALUE, got '" + p + "'");
      pm[p.substr(0, eq)] = parse_scalar(p.substr(eq + 1), f);
    }
    Presentation sp = parse_presentation(read_file(a.source), pm, f);
    Presentation tp = parse_presentation(read_file(a.target), pm, f);
    source = std::make_shared<QuotientAlgebra>(build_quotient(sp));
    target = std::make_shared<QuotientAlgebra>(build_quotient(tp));
    phi = morphism_from_file(a.maps[0], sp, target, pm);
    if (a.maps.size() == 2) psi = morphism_from_file(a.maps[1], tp, source, pm);
    j["source"] = algebra_json(*source);
    j["target"] = algebra_json(*target);
  } else {
    if (a.family.empty()) throw UsageError("give --case or --map");
    MorphismFamily fam = parse_family(a.family);
    j["case"] = family_name(fam);
    j["rank"] = a.rank;
    try {
      CatalogPair pair;
      if (fam == MorphismFamily::Scaling) {
        if (a.scaling_case.empty() || a.lambda.empty()) throw UsageError("Scaling needs --scaling-case and --lambda");
        SocleCase sc = parse_case(a.scaling_case);
        Scalar lambda = parse_scalar(a.lambda, f);
        Scalar stated = lambda.pow(stated_scaling_exponent(sc, a.rank));
        Scalar theta = a.theta.empty() ? stated : parse_scalar(a.theta.front(), f);
        ScalingLaw law = derived_scaling_law(sc, a.rank);
        j["lambda"] = lambda.str();
        j["theta"] = theta.str();
        j["stated_power_equation"] = {{"exponent", stated_scaling_exponent(sc, a.rank)}, {"holds", stated == theta}};
        j["measured_law"] = {{"exponent", law.exponent}, {"sign", law.sign},
                             {"holds", Scalar(f, law.sign) * lambda.pow(law.exponent) == theta}};
        pair = scaling_pair(sc, a.rank, theta, lambda, f, c.reading());
      } else {
        MorphismParams mp;
        mp.rank = a.rank;
        mp.reading = c.reading();
        if (auto sc = family_case(fam)) {
          mp.theta = parse_theta(a.theta, theta_indices(*sc, a.rank), f);
          json th = json::object();
          for (const auto& [i, v] : mp.theta.values) th[std::to_string(i)] = v.str();
          j["theta"] = th;
        }
        pair = catalog_pair(fam, mp, f);
      }
      phi = pair.phi;
      psi = pair.psi;
      source = pair.source;
      target = pair.target;
    } catch (const CharTwo& e) {
      j["status"] = "skip";
      j["reason"] = e.what();
      emit(c, j, "skip: " + std::string(e.what()) + "\n");
      return 0;
    }
  }

  auto w1 = is_well_defined(*phi);
  j["phi"] = map_json(*phi, w1);
  bool ok = w1.ok;
  text += phi->name + (w1.ok ? " well defined\n" : " fails on " + w1.failing + "\n");
  if (psi) {
    auto w2 = is_well_defined(*psi);
    j["psi"] = map_json(*psi, w2);
    text += psi->name + (w2.ok ? " well defined\n" : " fails on " + w2.failing + "\n");
    ok = ok && w2.ok;
    if (ok) {
      bool inv = verify_mutually_inverse(*phi, *psi);
      j["mutually_inverse"] = inv;
      text += inv ? "mutually inverse\n" : "not mutually inverse\n";
      ok = inv;
    }
  }
  if (j.contains("stated_power_equation"))
    text += std::string("stated power equation ") + (j["stated_power_equation"]["holds"] ? "holds" : "fails") + "\n";
  j["status"] = ok ? "pass" : "fail";
  text += ok ? "pass\n" : "fail\n";
  emit(c, j, text);
  return ok ? 0 : 1;
}

int cmd_verify(const Common& c, bool heavy, int workers, bool timings, bool list) {
  VerifyOptions o;
  o.heavy = heavy;
  o.seed = c.seed;
  o.budget = c.budget();
  o.workers = workers;
  o.timings = timings;
  auto jobs = paper_plan(o);
  if (list) {
    for (const auto& job : jobs) std::cout << job.id << "\n";
    return 0;
  }
  auto results = run_jobs(jobs, workers);
  json report = theorem_report(jobs, results, o);
  std::string text;
  for (std::size_t i = 0; i < jobs.size(); ++i)
    if (results[i].status == Status::Fail || results[i].status == Status::Unknown)
      text += status_name(results[i].status) + "  " + jobs[i].id + ": " + results[i].detail + "\n";
  for (const auto& cl : report["claims"])
    text += cl["status"].get<std::string>() + "  " + cl["id"].get<std::string>() + " (" +
            std::to_string(cl["pass"].get<int>()) + " pass, " + std::to_string(cl["fail"].get<int>()) + " fail, " +
            std::to_string(cl["unknown"].get<int>()) + " unknown, " + std::to_string(cl["skip"].get<int>()) +
            " skip)\n";
  emit(c, report, text);
  return exit_code(results);
}

void diagnostic(const std::string& kind, const std::string& message, std::optional<long> line = {},
                std::optional<long> position = {}) {
  json d = {{"error", kind}, {"message", message}};
  if (line) d["line"] = *line;
  if (position) d["position"] = *position;
  std::cerr << d.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"preprojective algebras of generalized Dynkin type"};
  app.require_subcommand(1);

  Common common;
  AlgebraChoice choice;

  auto* build = app.add_subcommand("build", "build an algebra and report its basis");
  auto* info = app.add_subcommand("info", "structural invariants and the symmetry verdict");
  auto* fingerprint = app.add_subcommand("fingerprint", "isomorphism invariants");
  for (auto* s : {build, info, fingerprint}) {
    add_common(s, common);
    add_choice(s, choice);
  }

  IsoArgs iso;
  auto* check = app.add_subcommand("check-iso", "check a pair of catalog maps or maps from files");
  add_common(check, common);
  check->add_option("--case", iso.family, "Aodd, Dodd, Deven, E6, E7, E8, L, *CharNot2, Scaling");
  check->add_option("--rank", iso.rank, "rank n");
  check->add_option("--theta", iso.theta, "v or i=v");
  check->add_option("--lambda", iso.lambda, "scaling factor");
  check->add_option("--scaling-case", iso.scaling_case, "Deven, E7, E8 or L");
  check->add_option("--map", iso.maps, "morphism file (.mor); a second one is the inverse");
  check->add_option("--source", iso.source, "source presentation (.qpa)");
  check->add_option("--target", iso.target, "target presentation (.qpa)");
  check->add_option("--param", iso.params, "NAME=VALUE");

  bool heavy = false, timings = false, list = false;
  int workers = 1;
  auto* verify = app.add_subcommand("verify-paper", "run the full verification plan");
  add_common(verify, common);
  verify->add_flag("--heavy", heavy, "include E8");
  verify->add_option("--jobs", workers, "worker threads");
  verify->add_flag("--timings", timings, "record job timings in the report");
  verify->add_flag("--list", list, "list the jobs and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (*build) return cmd_build(common, choice);
    if (*info) return cmd_info(common, choice);
    if (*fingerprint) return cmd_fingerprint(common, choice);
    if (*check) {
      if (iso.family.size() > 5 && iso.family.ends_with("prime")) iso.family.resize(iso.family.size() - 5);
      return cmd_check_iso(common, iso);
    }
    if (*verify) return cmd_verify(common, heavy, workers, timings, list);
  } catch (const DslError& e) {
    diagnostic("dsl", e.what(), e.line);
  } catch (const SyntaxError& e) {
    diagnostic("syntax", e.what(), {}, static_cast<long>(e.position));
  } catch (const UsageError& e) {
    diagnostic("usage", e.what());
  } catch (const InvalidRank& e) {
    diagnostic("rank", e.what());
  } catch (const CaseMismatch& e) {
    diagnostic("case", e.what());
  } catch (const RangeError& e) {
    diagnostic("range", e.what());
  } catch (const UnknownName& e) {
    diagnostic("name", e.what());
  } catch (const std::exception& e) {
    diagnostic("error", e.what());
    return 1;
  }
  return 3;
}
