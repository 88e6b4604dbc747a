#ifndef DEGEN_CHECK_HPP
#define DEGEN_CHECK_HPP

#include <string>
#include <vector>

namespace degen {

// One verification line of a report.  "interval" marks a value the engine
// can only bound; "assumed" marks an external input taken on faith.
enum class CheckStatus { pass, fail, interval, assumed };

const char* status_name(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status;
    std::string expected;
    std::string actual;
};

inline Check eq_check(std::string name, std::string expected, std::string actual) {
    CheckStatus st = (expected == actual) ? CheckStatus::pass : CheckStatus::fail;
    return {std::move(name), st, std::move(expected), std::move(actual)};
}

inline bool any_fail(const std::vector<Check>& checks) {
    for (const Check& c : checks)
        if (c.status == CheckStatus::fail) return true;
    return false;
}

}  // namespace degen

#endif
