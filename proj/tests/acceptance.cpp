// Acceptance gate: runs every release criterion with its pinned tolerance and
// time budget, prints one line per criterion, and exits nonzero if any fails.
// The same checks back the `conevac verify` subcommand.

#include <algorithm>
#include <cstdio>
#include <string>

#include "conevac/verify.hpp"

int main() {
    const auto results = conevac::run_acceptance();
    bool ok = true;
    for (const auto& r : results) {
        std::fputs(conevac::format_criterion_line(r).c_str(), stdout);
        std::fputc('\n', stdout);
        ok = ok && r.passed;
    }
    std::printf("%zu/%zu criteria passed\n",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const auto& r) { return r.passed; })),
                results.size());
    return ok ? 0 : 1;
}
