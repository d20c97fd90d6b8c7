// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <cstring>
#include <string>

#include "mfcat/acceptance.hpp"

int main(int argc, char** argv) {
  mfcat::AcceptanceOptions opts;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;
    else if (std::strcmp(argv[i], "--filter") == 0 && i + 1 < argc) opts.filter = argv[++i];
  }
  int failed = 0;
  for (int id = 1; id <= mfcat::kCriteria; ++id) {
    mfcat::CheckResult r = mfcat::run_criterion(id, opts);
    std::printf("criterion %2d: %s  %-36s %5zu cases  %7.2fs\n", r.id, r.passed() ? "PASS" : "FAIL",
                r.title.c_str(), r.cases, r.seconds);
    if (!r.passed()) ++failed;
    const std::size_t shown = verbose ? r.failures.size() : std::min<std::size_t>(r.failures.size(), 5);
    for (std::size_t k = 0; k < shown; ++k) std::printf("    %s\n", r.failures[k].c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
