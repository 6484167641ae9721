#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cutofflab {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;          // every check held and the run met its time budget
  double seconds;
  double budget_seconds;
  std::string summary;  // one line, the first failing check when not passed
  nlohmann::json details;
};

struct AcceptanceOptions {
  int threads = 0;        // 0 selects default_thread_count()
  std::vector<int> only;  // empty runs every criterion
};

constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace cutofflab
