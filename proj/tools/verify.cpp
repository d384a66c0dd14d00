#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace preproj::cli {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
    case Status::Skip: return "skip";
  }
  return "?";
}

const std::vector<ClaimInfo>& claim_table() {
  static const std::vector<ClaimInfo> t = {
      {"engine", "relations vanish, multiplication tables agree with normal forms, the basis does not depend on "
                 "the truncation degree, and left and right socles agree"},
      {"identities", "the displayed identities hold in the algebras where they are used"},
      {"catalog-isomorphisms", "each listed pair of maps is well defined and mutually inverse"},
      {"theta-collapse", "A'(theta) is isomorphic to A''(collapse(theta))"},
      {"scaling-stated", "A''(theta) is isomorphic to P*(Delta) by scaling arrows with lambda^k = theta, k as stated"},
      {"scaling-measured", "A''(theta) is isomorphic to P*(Delta) by scaling arrows with theta = sign * lambda^e"},
      {"preprojective-nakayama", "the Nakayama permutation of P(A_n) is i -> n-1-i"},
      {"preprojective-symmetric", "P(Delta) of Dynkin type is symmetric iff char K = 2 and Delta is D_2m, E_7 or E_8"},
      {"deformed-weakly-symmetric", "socle deformed preprojective algebras are weakly symmetric"},
      {"deformed-symmetric-iff-L", "a socle deformed preprojective algebra is symmetric iff it is P*(L_n)"},
      {"deformed-not-symmetric", "in characteristic 2, P*(D_2m), P*(E_7), P*(E_8) are weakly symmetric, not symmetric"},
      {"L-symmetric", "deformed preprojective algebras of type L_n are symmetric"},
      {"star-iso-iff-char-not-2", "for Delta in D_2m, E_7, E_8, L_n: P*(Delta) is isomorphic to P(Delta) iff char K != 2"},
      {"socle-equivalent", "P*(Delta)/soc and P(Delta)/soc have the same presentation"},
      {"socle-deformations", "proper socle deformations exist only in characteristic 2, and only for D_2m, E_7, E_8, L_n"},
  };
  return t;
}

namespace {

JobResult pass(std::string d = "") { return {Status::Pass, std::move(d), 0}; }
JobResult fail(std::string d) { return {Status::Fail, std::move(d), 0}; }
JobResult skip(std::string d) { return {Status::Skip, std::move(d), 0}; }

std::vector<FieldSpec> all_fields() { return {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()}; }

std::vector<DynkinType> dynkin_scope(bool heavy) {
  std::vector<DynkinType> out;
  for (int n = 2; n <= 5; ++n) out.push_back({Family::A, n});
  for (int n = 4; n <= 6; ++n) out.push_back({Family::D, n});
  out.push_back({Family::E, 6});
  out.push_back({Family::E, 7});
  if (heavy) out.push_back({Family::E, 8});
  return out;
}

std::vector<DynkinType> star_scope(bool heavy) {
  std::vector<DynkinType> out{{Family::D, 4}, {Family::D, 6}, {Family::E, 7}, {Family::L, 2}, {Family::L, 3}};
  if (heavy) out.push_back({Family::E, 8});
  return out;
}

bool symmetric_expected(const DynkinType& t, const FieldSpec& f) {
  if (f.characteristic() != 2) return false;
  return (t.family == Family::D && t.rank % 2 == 0) || (t.family == Family::E && t.rank >= 7);
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

JobResult engine_job(const Presentation& p, std::optional<int> expected_dim) {
  auto A = build_quotient(p);
  std::vector<std::string> bad;
  if (expected_dim && A.dimension() != *expected_dim)
    bad.push_back("dimension " + std::to_string(A.dimension()) + " != " + std::to_string(*expected_dim));
  for (const auto& r : p.relations)
    if (!A.normal_form(r).empty()) bad.push_back("relation " + format_element(r) + " does not vanish");
  const Quiver& q = A.quiver();
  for (int i = 0; i < A.dimension() && bad.size() < 5; ++i) {
    SparseVec unit{{i, Scalar::one(A.field())}};
    for (int a = 0; a < q.arrow_count(); ++a) {
      auto path = A.basis_path(i).then(Path::of_arrow(q, a));
      SparseVec expected = path ? A.nf_path(*path) : SparseVec{};
      if (A.right_arrow(unit, a) != expected) bad.push_back("table mismatch at " + format_path(q, A.basis_path(i)));
    }
  }
  Presentation wider = p;
  wider.cap = CapPolicy::fixed(A.cap_used() + 2);
  if (!same_structure_constants(A, build_quotient(wider))) bad.push_back("cap " + std::to_string(A.cap_used() + 2) + " differs");
  if (!same_subspace(left_socle(A).basis, right_socle(A).basis, A.field())) bad.push_back("left socle != right socle");
  if (!bad.empty()) return fail(join(bad));
  return pass("dim " + std::to_string(A.dimension()) + ", cap " + std::to_string(A.cap_used()));
}

JobResult identity_job(const QuotientAlgebra& A, IdentitySuite s, int n) {
  std::vector<std::string> bad;
  auto res = identity_regressions(A, s, n);
  for (const auto& r : res)
    if (!r.pass) bad.push_back(r.name);
  if (!bad.empty()) return fail("fails: " + join(bad));
  return pass(std::to_string(res.size()) + " identities");
}

JobResult pair_job(const CatalogPair& p) {
  auto w1 = is_well_defined(p.phi);
  auto w2 = is_well_defined(p.psi);
  std::vector<std::string> bad;
  if (!w1.ok) bad.push_back("phi does not kill relation " + w1.failing);
  if (!w2.ok) bad.push_back("psi does not kill relation " + w2.failing);
  if (bad.empty() && !verify_mutually_inverse(p.phi, p.psi)) bad.push_back("not mutually inverse");
  if (!bad.empty()) return fail(join(bad));
  return pass();
}

JobResult catalog_job(MorphismFamily fam, const MorphismParams& mp, const FieldSpec& f) {
  try {
    return pair_job(catalog_pair(fam, mp, f));
  } catch (const CharTwo&) {
    return skip("needs 1/2");
  } catch (const RangeError& e) {
    if (fam != MorphismFamily::Aodd) throw;
    auto A = build_quotient(socle_deformed_generic(SocleCase::AOdd, mp.rank, mp.theta, f));
    if (is_self_injective(A)) return fail(e.what());
    return skip(std::string(e.what()) + "; A'(theta) is not self-injective");
  }
}

JobResult scaling_job(SocleCase c, int n, const Scalar& lambda, const Scalar& theta, const FieldSpec& f) {
  JobResult r = pair_job(scaling_pair(c, n, theta, lambda, f));
  std::string d = "lambda " + lambda.str() + ", theta " + theta.str();
  r.detail = r.detail.empty() ? d : d + ": " + r.detail;
  return r;
}

JobResult verdict_job(const QuotientAlgebra& A, SymmetryVerdict::Kind expected, const SymmetryBudget& b) {
  SymmetryVerdict v = symmetry_decide(A, b);
  if (v.kind == SymmetryVerdict::Kind::Unknown) return {Status::Unknown, v.reason, 0};
  if (v.kind == SymmetryVerdict::Kind::Symmetric && !verify_symmetric_witness(A, v.witness))
    return fail("witness does not verify");
  if (v.kind == SymmetryVerdict::Kind::NotSymmetric && !v.certificate.empty() &&
      !verify_nonsymmetric_certificate(A, v.certificate, v.certificate_vertex))
    return fail("certificate does not verify");
  if (v.kind != expected) return fail("got " + kind_name(v.kind) + ", expected " + kind_name(expected));
  return pass(kind_name(v.kind) + (v.reason.empty() ? "" : " (" + v.reason + ")"));
}

ThetaVector theta_of(SocleCase c, int n, const std::string& kind, const FieldSpec& f, std::mt19937_64& rng) {
  ThetaVector th;
  for (int i : theta_indices(c, n)) {
    if (kind == "zero") th.set(i, Scalar::zero(f));
    else if (kind == "one") th.set(i, Scalar::one(f));
    else th.set(i, random_scalar(rng, f, false));
  }
  return th;
}

std::string theta_str(const ThetaVector& th) {
  std::string s;
  for (const auto& [i, v] : th.values) s += (s.empty() ? "" : ",") + std::to_string(i) + "=" + v.str();
  return s;
}

std::string family_label(MorphismFamily fam, int n) {
  std::string s = family_name(fam);
  return s[0] == 'E' ? s : s + std::to_string(n);
}

struct RankCase {
  MorphismFamily fam;
  int rank;
};

}  // namespace

std::vector<Job> paper_plan(const VerifyOptions& o) {
  std::vector<Job> jobs;
  auto add = [&](std::string id, std::vector<std::string> claims, std::function<JobResult()> run) {
    jobs.push_back({std::move(id), std::move(claims), std::move(run)});
  };
  SymmetryBudget budget = o.budget;

  // Engine soundness on P(Delta) and P*(Delta).
  std::vector<DynkinType> engine_types = dynkin_scope(o.heavy);
  engine_types.push_back({Family::L, 2});
  engine_types.push_back({Family::L, 3});
  for (const auto& f : all_fields())
    for (const auto& t : engine_types) {
      add("engine/P(" + t.str() + ")/" + f.name(), {"engine"},
          [t, f] { return engine_job(preprojective(t, f), expected_dimension(t)); });
      if (t.family != Family::A)
        add("engine/P*(" + t.str() + ")/" + f.name(), {"engine"},
            [t, f] { return engine_job(canonical_star(t, f), expected_dimension(t)); });
    }

  // Displayed identities.
  for (const auto& f : all_fields())
    for (std::string kind : {"zero", "one", "random"}) {
      auto rng_tag = "identities/" + f.name() + "/" + kind;
      auto id_job = [&](const std::string& name, SocleCase c, int n, bool collapsed, IdentitySuite s, int suite_n) {
        auto rng = seeded_rng(o.seed, rng_tag + "/" + name);
        ThetaVector th = theta_of(c, n, kind, f, rng);
        add("identities/" + name + "/" + f.name() + "/" + kind + "/theta=" + theta_str(th), {"identities"},
            [=] {
              Presentation p = collapsed ? socle_collapsed(c, n, th.get(theta_indices(c, n).front(), f), f)
                                         : socle_deformed_generic(c, n, th, f);
              return identity_job(build_quotient(p), s, suite_n);
            });
      };
      id_job("E6 in A'", SocleCase::E6, 6, false, IdentitySuite::E6, 0);
      id_job("D5 in A'", SocleCase::DOdd, 5, false, IdentitySuite::Dodd, 0);
      id_job("E7 in A'", SocleCase::E7, 7, false, IdentitySuite::E7, 0);
      id_job("E7 in A''", SocleCase::E7, 7, true, IdentitySuite::E7, 0);
      for (int n : {2, 3}) {
        id_job("L" + std::to_string(n) + " in A'", SocleCase::L, n, false, IdentitySuite::L, n);
        id_job("L" + std::to_string(n) + " in A''", SocleCase::L, n, true, IdentitySuite::L, n);
      }
      if (o.heavy) {
        id_job("E8 in A'", SocleCase::E8, 8, false, IdentitySuite::E8, 0);
        id_job("E8 in A''", SocleCase::E8, 8, true, IdentitySuite::E8, 0);
      }
    }
  for (const auto& f : all_fields()) {
    add("identities/E7 swap in P/" + f.name(), {"identities"},
        [f] { return identity_job(build_quotient(preprojective({Family::E, 7}, f)), IdentitySuite::E7Swap, 0); });
    if (o.heavy)
      add("identities/E8 swap in P/" + f.name(), {"identities"},
          [f] { return identity_job(build_quotient(preprojective({Family::E, 8}, f)), IdentitySuite::E8Swap, 0); });
  }

  // Catalog maps with theta: zero, one and three seeded random vectors.
  std::vector<RankCase> theta_cases{{MorphismFamily::Aodd, 3}, {MorphismFamily::Aodd, 5}, {MorphismFamily::Dodd, 5},
                                    {MorphismFamily::Deven, 4}, {MorphismFamily::Deven, 6}, {MorphismFamily::E6, 6},
                                    {MorphismFamily::E7, 7},    {MorphismFamily::Ln, 2},    {MorphismFamily::Ln, 3}};
  if (o.heavy) theta_cases.push_back({MorphismFamily::E8, 8});
  for (const auto& f : all_fields())
    for (const auto& rc : theta_cases)
      for (std::string kind : {"zero", "one", "random1", "random2", "random3"}) {
        SocleCase c = *family_case(rc.fam);
        auto rng = seeded_rng(o.seed, "catalog/" + family_label(rc.fam, rc.rank) + "/" + f.name() + "/" + kind);
        MorphismParams mp;
        mp.rank = rc.rank;
        mp.theta = theta_of(c, rc.rank, kind, f, rng);
        std::vector<std::string> claims{"catalog-isomorphisms"};
        if (has_collapse(c)) claims.push_back("theta-collapse");
        else claims.push_back("socle-deformations");
        add("catalog/" + family_label(rc.fam, rc.rank) + "/" + f.name() + "/" + kind + "/theta=" + theta_str(mp.theta),
            claims, [rc, mp, f] { return catalog_job(rc.fam, mp, f); });
      }

  // P(Delta) -> P*(Delta) in characteristic other than 2.
  std::vector<RankCase> half_cases{{MorphismFamily::DevenCharNot2, 4}, {MorphismFamily::DevenCharNot2, 6},
                                   {MorphismFamily::E7CharNot2, 7},    {MorphismFamily::LnCharNot2, 2},
                                   {MorphismFamily::LnCharNot2, 3}};
  if (o.heavy) half_cases.push_back({MorphismFamily::E8CharNot2, 8});
  for (const auto& f : all_fields())
    for (const auto& rc : half_cases) {
      MorphismParams mp;
      mp.rank = rc.rank;
      add("catalog/" + family_label(rc.fam, rc.rank) + "/" + f.name(),
          {"catalog-isomorphisms", "star-iso-iff-char-not-2", "socle-deformations"},
          [rc, mp, f] { return catalog_job(rc.fam, mp, f); });
    }

  // Scalings A''(theta) <- P*(Delta).
  std::vector<std::pair<SocleCase, int>> scale_cases{
      {SocleCase::DEven, 4}, {SocleCase::DEven, 6}, {SocleCase::L, 2}, {SocleCase::L, 3}, {SocleCase::E7, 7}};
  if (o.heavy) scale_cases.push_back({SocleCase::E8, 8});
  for (const auto& f : all_fields())
    for (const auto& [c, n] : scale_cases)
      for (int k = 1; k <= (f.is_prime() ? std::min<int>(3, f.characteristic() - 1) : 3); ++k) {
        std::string label = case_name(c) + (case_name(c)[0] == 'E' ? "" : std::to_string(n));
        std::string tag = label + "/" + f.name() + "/lambda" + std::to_string(k);
        auto rng = seeded_rng(o.seed, "scaling/" + tag);
        // Small prime fields: every nonzero lambda once.
        Scalar lambda = f.is_prime() && f.characteristic() <= 4 ? Scalar(f, k) : random_scalar(rng, f, true);
        Scalar stated = lambda.pow(stated_scaling_exponent(c, n));
        ScalingLaw law = derived_scaling_law(c, n);
        Scalar measured = Scalar(f, law.sign) * lambda.pow(law.exponent);
        add("scaling-stated/" + tag, {"scaling-stated"},
            [=, c = c, n = n] { return scaling_job(c, n, lambda, stated, f); });
        add("scaling-measured/" + tag, {"scaling-measured", "socle-deformations"},
            [=, c = c, n = n] { return scaling_job(c, n, lambda, measured, f); });
      }

  // Symmetry of P(Delta) for Dynkin types.
  for (const auto& f : all_fields())
    for (const auto& t : dynkin_scope(o.heavy)) {
      auto expected = symmetric_expected(t, f) ? SymmetryVerdict::Kind::Symmetric : SymmetryVerdict::Kind::NotSymmetric;
      add("symmetry/P(" + t.str() + ")/" + f.name(), {"preprojective-symmetric"},
          [t, f, expected, budget] { return verdict_job(build_quotient(preprojective(t, f)), expected, budget); });
    }

  for (const auto& f : all_fields())
    for (int n : {2, 3, 4, 5}) {
      DynkinType t{Family::A, n};
      add("nakayama/P(" + t.str() + ")/" + f.name(), {"preprojective-nakayama"}, [t, f] {
        auto nu = nakayama_permutation(build_quotient(preprojective(t, f)));
        for (int i = 0; i < t.rank; ++i)
          if (nu[i] != t.rank - 1 - i) return fail("nu(" + std::to_string(i) + ") = " + std::to_string(nu[i]));
        return pass();
      });
    }

  // P*(Delta) in characteristic 2.
  FieldSpec gf2 = FieldSpec::prime(2);
  for (const auto& t : star_scope(o.heavy)) {
    add("nakayama/P*(" + t.str() + ")/GF(2)", {"deformed-weakly-symmetric"}, [t, gf2] {
      auto A = build_quotient(canonical_star(t, gf2));
      if (!is_weakly_symmetric(A)) return fail("nakayama permutation is not the identity");
      return pass();
    });
    bool is_L = t.family == Family::L;
    std::vector<std::string> claims{"deformed-symmetric-iff-L"};
    claims.push_back(is_L ? "L-symmetric" : "deformed-not-symmetric");
    auto expected = is_L ? SymmetryVerdict::Kind::Symmetric : SymmetryVerdict::Kind::NotSymmetric;
    add("symmetry/P*(" + t.str() + ")/GF(2)", claims,
        [t, gf2, expected, budget] { return verdict_job(build_quotient(canonical_star(t, gf2)), expected, budget); });
    add("socle-equivalent/" + t.str() + "/GF(2)", {"socle-equivalent", "socle-deformations"}, [t, gf2] {
      auto P = build_quotient(preprojective(t, gf2));
      auto S = build_quotient(canonical_star(t, gf2));
      if (!same_presentation_mod_socle(P, S)) return fail("quotients by the socle differ");
      return pass();
    });
    add("not-isomorphic/" + t.str() + "/GF(2)", {"star-iso-iff-char-not-2", "socle-deformations"},
        [t, gf2, is_L, budget] {
          auto P = build_quotient(preprojective(t, gf2));
          auto S = build_quotient(canonical_star(t, gf2));
          auto fp = invariant_fingerprint(P, budget);
          auto fs = invariant_fingerprint(S, budget);
          if (fp == fs) return fail("fingerprints agree: " + fp.str());
          std::string how = is_L ? "frobenius " : "symmetry ";
          return pass(how + "P: " + fp.str() + " | P*: " + fs.str());
        });
  }
  for (const auto& f : all_fields())
    for (int n : {2, 3}) {
      DynkinType t{Family::L, n};
      add("symmetry/P(" + t.str() + ")/" + f.name(), {"L-symmetric"}, [t, f, budget] {
        return verdict_job(build_quotient(preprojective(t, f)), SymmetryVerdict::Kind::Symmetric, budget);
      });
      if (f.characteristic() != 2)
        add("symmetry/P*(" + t.str() + ")/" + f.name(), {"L-symmetric"}, [t, f, budget] {
          return verdict_job(build_quotient(canonical_star(t, f)), SymmetryVerdict::Kind::Symmetric, budget);
        });
    }
  return jobs;
}

std::vector<JobResult> run_jobs(const std::vector<Job>& jobs, int workers) {
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        results[i] = jobs[i].run();
      } catch (const std::exception& e) {
        results[i] = fail(std::string("error: ") + e.what());
      }
      results[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  workers = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

json theorem_report(const std::vector<Job>& jobs, const std::vector<JobResult>& results, const VerifyOptions& o) {
  json claims = json::array();
  for (const auto& c : claim_table()) {
    int counts[4] = {0, 0, 0, 0};
    json failures = json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (std::find(jobs[i].claims.begin(), jobs[i].claims.end(), c.id) == jobs[i].claims.end()) continue;
      ++counts[static_cast<int>(results[i].status)];
      if (results[i].status == Status::Fail || results[i].status == Status::Unknown) failures.push_back(jobs[i].id);
    }
    std::string status = counts[1] ? "fail" : counts[2] ? "unknown" : counts[0] ? "reproduced" : "not run";
    claims.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"status", status},
                      {"pass", counts[0]},
                      {"fail", counts[1]},
                      {"unknown", counts[2]},
                      {"skip", counts[3]},
                      {"not_passing", failures}});
  }
  json js = json::array();
  int totals[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    ++totals[static_cast<int>(results[i].status)];
    json j = {{"id", jobs[i].id}, {"claims", jobs[i].claims}, {"status", status_name(results[i].status)},
              {"detail", results[i].detail}};
    if (o.timings) j["seconds"] = results[i].seconds;
    js.push_back(j);
  }
  return {{"schema", kSchema},
          {"command", "verify-paper"},
          {"options", {{"heavy", o.heavy}, {"seed", o.seed}, {"budget_bits", o.budget.budget_bits},
                       {"samples", o.budget.samples}}},
          {"summary", {{"jobs", jobs.size()}, {"pass", totals[0]}, {"fail", totals[1]}, {"unknown", totals[2]},
                       {"skip", totals[3]}, {"exit_code", exit_code(results)}}},
          {"claims", claims},
          {"jobs", js}};
}

int exit_code(const std::vector<JobResult>& results) {
  bool unknown = false;
  for (const auto& r : results) {
    if (r.status == Status::Fail) return 1;
    if (r.status == Status::Unknown) unknown = true;
  }
  return unknown ? 2 : 0;
}

}  // namespace preproj::cli
