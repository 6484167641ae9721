#include "cutofflab/cutofflab.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"Runs the acceptance criteria and prints one PASS/FAIL line per criterion"};
  std::vector<int> known_fail;
  std::string report_path;
  int threads = 0;
  app.add_option("--known-fail", known_fail,
                 "criteria expected to fail; the exit code is 0 only when exactly these fail")
      ->delimiter(',');
  app.add_option("--report", report_path, "write the full JSON report to this path");
  app.add_option("--threads", threads, "worker threads for the Monte Carlo criterion");
  CLI11_PARSE(app, argc, argv);

  char* raw = nullptr;
  int all_passed = 0;
  if (cl_verify_all(threads, &raw, &all_passed) != CL_OK) {
    std::cerr << "acceptance run aborted: " << cl_last_error() << "\n";
    return 1;
  }
  std::unique_ptr<char, void (*)(char*)> guard(raw, cl_free);
  const nlohmann::json report = nlohmann::json::parse(raw);

  std::set<int> failed;
  for (const auto& c : report["criteria"]) {
    const int id = c["id"].get<int>();
    const bool ok = c["passed"].get<bool>();
    if (!ok) failed.insert(id);
    std::printf("%s %2d %-28s %8.2fs  %s\n", ok ? "PASS" : "FAIL", id, c["name"].get<std::string>().c_str(),
                c["seconds"].get<double>(), c["summary"].get<std::string>().c_str());
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << report.dump(2) << "\n";
  }

  const std::set<int> expected(known_fail.begin(), known_fail.end());
  if (failed == expected) {
    if (!expected.empty()) std::printf("failures match the expected set\n");
    return 0;
  }
  for (int id : failed)
    if (!expected.count(id)) std::printf("unexpected failure: criterion %d\n", id);
  for (int id : expected)
    if (!failed.count(id)) std::printf("expected failure did not occur: criterion %d\n", id);
  return 1;
}
