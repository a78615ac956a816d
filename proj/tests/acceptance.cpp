// Acceptance suite: runs the release criteria end to end and prints one
// verdict line each. Pass criterion ids as arguments to run a subset.
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "gel/verify.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) ids.emplace_back(argv[i]);
  if (ids.empty()) ids = gel::criterion_ids();

  gel::VerifyOptions opt;
  unsigned hw = std::thread::hardware_concurrency();
  opt.jobs = static_cast<int>(hw < 1 ? 1 : (hw > 8 ? 8 : hw));

  bool all_pass = true;
  for (const std::string& id : ids) {
    gel::CriterionResult r;
    try {
      r = gel::run_criterion(id, opt);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "unknown criterion '%s': %s\n", id.c_str(),
                   e.what());
      return 2;
    }
    all_pass = all_pass && r.pass;
    std::printf("[%s] %-13s %s | %s (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                r.id.c_str(), r.title.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
