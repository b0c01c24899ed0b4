// Prints one line per acceptance criterion. Exit status is nonzero when a
// criterion fails or errors; undecided criteria are reported but tolerated.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "utlab/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace utlab;
  std::vector<int> ids;
  std::uint64_t seed = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
    else if (arg == "--suite" && i + 1 < argc) ids = suite_criteria(parse_suite(argv[++i]));
    else ids.push_back(std::stoi(arg));
  }
  if (ids.empty())
    for (int id = 1; id <= kCriteria; ++id) ids.push_back(id);

  int bad = 0;
  for (int id : ids) {
    const auto r = run_criterion(id, seed);
    std::printf("criterion %2d %-9s %-52s %8.2f s  %s\n", r.id, outcome_tag(r.outcome).c_str(),
                r.title.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (r.outcome == Verdict::Fails || r.outcome == Verdict::Error) ++bad;
  }
  return bad ? 1 : 0;
}
