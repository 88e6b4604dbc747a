#ifndef DEGEN_REPORT_HPP
#define DEGEN_REPORT_HPP

// Verification reports: what a command computed, what it was asked, and
// how every acceptance-relevant value compares to its expected form.
//
// Serialization is deterministic: insertion-ordered keys, every number an
// exact decimal or "p/q" string, no timestamps.  Parsing the JSON output
// and re-serializing it reproduces the bytes.

#include <degen/check.hpp>

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace degen {

using Json = nlohmann::ordered_json;

// Static per build; the only version the tool ever reports.
const char* tool_version();

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    Json results = Json::object();
    std::vector<Check> checks;

    // Audit notes live inside results under "audit_notes".
    void note(const std::string& text);
    void add(Check c) { checks.push_back(std::move(c)); }

    // 0 when no check failed, 1 otherwise.
    int exit_code() const { return any_fail(checks) ? 1 : 0; }
};

std::string to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace degen

#endif
