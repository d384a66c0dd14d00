#pragma once

#include "cli_common.hpp"

#include <functional>

namespace preproj::cli {

enum class Status { Pass, Fail, Unknown, Skip };
std::string status_name(Status s);

struct JobResult {
  Status status = Status::Pass;
  std::string detail;
  double seconds = 0;
};

struct Job {
  std::string id;
  std::vector<std::string> claims;
  std::function<JobResult()> run;
};

struct VerifyOptions {
  bool heavy = false;
  std::uint64_t seed = 1;
  SymmetryBudget budget;
  int workers = 1;
  bool timings = false;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
};
const std::vector<ClaimInfo>& claim_table();

std::vector<Job> paper_plan(const VerifyOptions& o);
/// Results are in job order regardless of the number of workers.
std::vector<JobResult> run_jobs(const std::vector<Job>& jobs, int workers);
json theorem_report(const std::vector<Job>& jobs, const std::vector<JobResult>& results, const VerifyOptions& o);
/// 0 if nothing failed or stayed unknown, 1 on any failure, 2 on unknown only.
int exit_code(const std::vector<JobResult>& results);

}  // namespace preproj::cli
