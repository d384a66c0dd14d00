#include "verify.hpp"

#include <doctest.h>

#include <set>

using namespace preproj;
using namespace preproj::cli;

TEST_CASE("scalars from the command line") {
  auto q = FieldSpec::rationals();
  CHECK(parse_scalar("-2", q) == Scalar(q, -2));
  CHECK(parse_scalar("3/6", q) == Scalar(q, BigRational(1, 2)));
  CHECK(parse_scalar("1/2", FieldSpec::prime(3)) == Scalar(FieldSpec::prime(3), 2));
  CHECK_THROWS_AS(parse_scalar("x", q), UsageError);
  CHECK_THROWS_AS(parse_scalar("1/0", q), UsageError);
  CHECK_THROWS_AS(parse_scalar("1/2", FieldSpec::prime(2)), UsageError);
}

TEST_CASE("theta vectors from the command line") {
  auto f = FieldSpec::prime(5);
  auto th = parse_theta({"1", "2=3"}, {0, 1, 2}, f);
  CHECK(th.get(0, f) == Scalar(f, 1));
  CHECK(th.get(2, f) == Scalar(f, 3));
  CHECK_THROWS_AS(parse_theta({"7=1"}, {0, 1, 2}, f), UsageError);
}

TEST_CASE("choosing algebras") {
  auto f = FieldSpec::prime(2);
  AlgebraChoice c;
  c.type = "D";
  c.rank = 4;
  CHECK(build_quotient(choose_presentation(c, f)).dimension() == 28);
  c.star = true;
  c.lr = 1;
  CHECK_THROWS_AS(choose_presentation(c, f), UsageError);
  AlgebraChoice none;
  CHECK_THROWS_AS(choose_presentation(none, f), UsageError);
}

TEST_CASE("seeded sampling is reproducible") {
  auto f = FieldSpec::rationals();
  auto r1 = seeded_rng(5, "tag");
  auto r2 = seeded_rng(5, "tag");
  auto r3 = seeded_rng(5, "other");
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    auto a = random_scalar(r1, f, true);
    CHECK(a == random_scalar(r2, f, true));
    CHECK_FALSE(a.is_zero());
    differs = differs || !(a == random_scalar(r3, f, true));
  }
  CHECK(differs);
  CHECK(stable_hash("") == 1469598103934665603ull);
}

TEST_CASE("exit codes follow the worst job") {
  using S = Status;
  auto r = [](S s) { return JobResult{s, "", 0}; };
  CHECK(exit_code({r(S::Pass), r(S::Skip)}) == 0);
  CHECK(exit_code({r(S::Pass), r(S::Unknown)}) == 2);
  CHECK(exit_code({r(S::Unknown), r(S::Fail)}) == 1);
}

TEST_CASE("a claim is reproduced only if every instance passes") {
  std::vector<Job> jobs{{"a", {"engine"}, {}}, {"b", {"engine"}, {}}, {"c", {"identities"}, {}}};
  VerifyOptions o;
  auto report = theorem_report(jobs, {{Status::Pass, "", 0}, {Status::Unknown, "", 0}, {Status::Skip, "", 0}}, o);
  std::map<std::string, std::string> status;
  for (const auto& c : report["claims"]) status[c["id"]] = c["status"];
  CHECK(status["engine"] == "unknown");
  CHECK(status["identities"] == "not run");
  CHECK(status["catalog-isomorphisms"] == "not run");
  CHECK(report["summary"]["exit_code"] == 2);
}

TEST_CASE("verification plan") {
  VerifyOptions o;
  auto jobs = paper_plan(o);
  std::set<std::string> ids, claims;
  for (const auto& j : jobs) {
    CHECK(ids.insert(j.id).second);
    for (const auto& c : j.claims) claims.insert(c);
  }
  for (const auto& c : claim_table()) CHECK(claims.count(c.id) == 1);
  for (const auto& j : jobs) CHECK(j.id.find("E8") == std::string::npos);
  o.heavy = true;
  CHECK(paper_plan(o).size() > jobs.size());
}

TEST_CASE("reports are reproducible across worker counts") {
  VerifyOptions o;
  o.seed = 3;
  auto jobs = paper_plan(o);
  auto one = theorem_report(jobs, run_jobs(jobs, 1), o).dump();
  auto two = theorem_report(paper_plan(o), run_jobs(paper_plan(o), 2), o).dump();
  CHECK(one == two);
  CHECK(one.find("seconds") == std::string::npos);
}
