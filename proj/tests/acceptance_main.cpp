#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "frobcalc/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> ids(argv + 1, argv + argc);
  if (ids.empty()) ids = frobcalc::criterion_ids();
  bool all = true;
  for (const auto& id : ids) {
    auto start = std::chrono::steady_clock::now();
    frobcalc::CriterionResult r = frobcalc::run_criterion(id);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::cout << frobcalc::format_result(r) << std::endl;
    std::cerr << "  (" << id << " took " << secs << " s)" << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
