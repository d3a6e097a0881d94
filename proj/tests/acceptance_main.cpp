// Acceptance suite: runs each criterion over the shipped fixture set and
// prints one pass/fail line per criterion.  Exit: 0 all pass, 1 a criterion
// failed, 2 a fault (two provably-equal routes disagreed).

#include <cstdio>
#include <string>

#include "sgh/fixtures.hpp"
#include "sgh/verify.hpp"

int main() {
    using namespace sgh;
    const Limits limits;
    const std::uint64_t seed = 0;
    FixtureSet fx = builtinFixtures(3, limits);
    std::vector<CheckResult> checks = runAcceptanceCriteria(fx, seed, limits);

    int status = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
        const CheckResult& c = checks[i];
        const char* verdict = c.passed ? "PASS" : (c.fault ? "FAULT" : "FAIL");
        std::printf("[%2zu/%zu] %-32s %-5s  %s%s%s (%lld instances, %lld ms)\n", i + 1,
                    checks.size(), c.name.c_str(), verdict, c.detail.c_str(),
                    c.range.empty() ? "" : " | range: ", c.range.c_str(),
                    static_cast<long long>(c.instances), static_cast<long long>(c.millis));
        if (!c.passed) status = std::max(status, c.fault ? 2 : 1);
    }
    std::printf("%s\n", status == 0 ? "acceptance: all criteria passed"
                                    : "acceptance: FAILED");
    return status;
}
