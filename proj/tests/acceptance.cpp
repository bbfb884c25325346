// Acceptance suite: one line per criterion.

#include <cstdio>

#include "fflat/verify.hpp"

using namespace fflat;

int main() {
  const VerifyOptions options;
  int failures = 0;
  for (const auto& check : verify_registry()) {
    const CheckResult r = run_check(check, options);
    const char* tag = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    std::printf("[%s] %2d %-24s %-80s %.2fs", tag, check.criterion, check.name.c_str(), check.statement.c_str(),
                r.seconds);
    if (!r.reason.empty()) std::printf("  (%s)", r.reason.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (r.status != CheckStatus::Pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(verify_registry().size()) - failures,
              verify_registry().size());
  return failures == 0 ? 0 : 1;
}
