// One line per acceptance criterion; suites run at their full default ranges.
#include <chrono>
#include <cstdio>

#include "gluecoeff/verify.hpp"

int main() {
  using namespace gluecoeff;
  VerifyConfig cfg;
  int failed = 0, index = 0;
  for (const SuiteInfo& s : suites()) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = run_suite(s.name, cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d %-18s %s (%llu checks, %.1fs)\n", r.pass ? "PASS" : "FAIL", index, r.name.c_str(),
                r.title.c_str(), static_cast<unsigned long long>(r.cases), secs);
    if (!r.note.empty()) std::printf("       note: %s\n", r.note.c_str());
    if (!r.pass) {
      std::printf("       counterexample: %s\n", r.counterexample.c_str());
      ++failed;
    }
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
