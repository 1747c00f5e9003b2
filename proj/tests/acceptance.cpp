#include <cstdio>

#include "casimir/checks.hpp"

// Runs the full golden-check battery and prints one line per criterion.
// Exit status is the number of failing checks.

int main() {
  auto results = casimir::run_golden_checks(true);
  int failures = 0;
  for (const auto& c : results) {
    std::printf("[%s] criterion %2d: %s\n", c.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str());
    if (!c.detail.empty()) std::printf("       %s\n", c.detail.c_str());
    if (!c.pass) ++failures;
  }
  std::printf("%zu checks, %d failures\n", results.size(), failures);
  return failures;
}
