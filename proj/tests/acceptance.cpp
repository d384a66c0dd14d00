// One line per acceptance criterion. Exit status 1 if any criterion fails.
#include "verify.hpp"

#include <cstring>
#include <iostream>

using namespace preproj::cli;

namespace {

bool has_claim(const Job& j, const std::string& c) {
  return std::find(j.claims.begin(), j.claims.end(), c) != j.claims.end();
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

struct Criterion {
  int number;
  std::string name;
  std::function<bool(const Job&)> selects;
};

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions o;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--heavy") == 0) o.heavy = true;
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) o.workers = std::atoi(argv[++i]);
  }
  auto jobs = paper_plan(o);
  auto results = run_jobs(jobs, o.workers);

  std::vector<Criterion> criteria{
      {1, "engine soundness", [](const Job& j) { return has_claim(j, "engine"); }},
      {2, "identity regressions", [](const Job& j) { return has_claim(j, "identities"); }},
      {3, "morphism catalog", [](const Job& j) { return has_claim(j, "catalog-isomorphisms") && starts_with(j.id, "catalog/"); }},
      {4, "P* versus P dichotomy", [](const Job& j) { return has_claim(j, "star-iso-iff-char-not-2"); }},
      {5, "symmetry matrix", [](const Job& j) { return starts_with(j.id, "symmetry/"); }},
      {6, "weak symmetry", [](const Job& j) { return starts_with(j.id, "nakayama/"); }},
      {7, "socle equivalence", [](const Job& j) { return has_claim(j, "socle-equivalent"); }},
      {8, "theta collapse and stated scaling",
       [](const Job& j) {
         if (has_claim(j, "scaling-stated")) return true;
         return has_claim(j, "theta-collapse") &&
                (starts_with(j.id, "catalog/Deven") || starts_with(j.id, "catalog/L") || starts_with(j.id, "catalog/E7/") ||
                 starts_with(j.id, "catalog/E8/"));
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    int n = 0, skipped = 0;
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (!c.selects(jobs[i])) continue;
      ++n;
      if (results[i].status == Status::Skip) ++skipped;
      if (results[i].status == Status::Fail || results[i].status == Status::Unknown)
        bad.push_back(status_name(results[i].status) + " " + jobs[i].id + ": " + results[i].detail);
    }
    bool ok = n > 0 && bad.empty();
    failed += !ok;
    std::cout << "criterion " << c.number << " (" << c.name << "): " << (ok ? "PASS" : "FAIL") << "  " << n
              << " jobs, " << skipped << " skipped, " << bad.size() << " not passing\n";
    for (const auto& b : bad) std::cout << "    " << b.substr(0, 160) << "\n";
  }
  int measured = 0, measured_pass = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i)
    if (has_claim(jobs[i], "scaling-measured")) {
      ++measured;
      measured_pass += results[i].status == Status::Pass;
    }
  std::cout << "note: scaling with theta = sign * lambda^e (measured exponents): " << measured_pass << "/" << measured
            << " pass\n";
  return failed ? 1 : 0;
}
