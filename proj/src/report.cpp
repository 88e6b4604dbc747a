#include <degen/report.hpp>

#include <algorithm>
#include <sstream>

namespace degen {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::interval: return "interval";
        case CheckStatus::assumed: return "assumed";
    }
    return "?";
}

const char* tool_version() { return "0.1.0"; }

void Report::note(const std::string& text) {
    if (!results.contains("audit_notes")) results["audit_notes"] = Json::array();
    results["audit_notes"].push_back(text);
}

std::string to_json(const Report& r) {
    Json j;
    j["tool_version"] = tool_version();
    j["command"] = r.command;
    Json in = Json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = in;
    j["results"] = r.results;
    Json cs = Json::array();
    for (const Check& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["status"] = status_name(c.status);
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        cs.push_back(std::move(jc));
    }
    j["checks"] = std::move(cs);
    return j.dump(2) + "\n";
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

// Arrays of short scalars render inline; prose entries get one line each.
bool flat_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& v) {
        return is_scalar(v) && !(v.is_string() && v.get<std::string>().size() > 40);
    });
}

std::string inline_array(const Json& j) {
    std::string s = "[";
    for (size_t i = 0; i < j.size(); ++i) {
        if (i) s += ", ";
        s += scalar_str(j[i]);
    }
    return s + "]";
}

void render(std::ostringstream& os, const Json& j, int depth) {
    const std::string pad(2 * depth, ' ');
    if (j.is_object()) {
        size_t width = 0;
        for (auto it = j.begin(); it != j.end(); ++it)
            if (is_scalar(it.value()) || flat_array(it.value()))
                width = std::max(width, it.key().size());
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (is_scalar(v)) {
                os << pad << it.key() << std::string(width - it.key().size(), ' ') << " = "
                   << scalar_str(v) << "\n";
            } else if (flat_array(v)) {
                os << pad << it.key() << std::string(width - it.key().size(), ' ') << " = "
                   << inline_array(v) << "\n";
            } else {
                os << pad << it.key() << ":\n";
                render(os, v, depth + 1);
            }
        }
    } else if (j.is_array()) {
        for (const Json& v : j) {
            if (is_scalar(v)) {
                os << pad << "- " << scalar_str(v) << "\n";
            } else if (flat_array(v)) {
                os << pad << "- " << inline_array(v) << "\n";
            } else {
                os << pad << "-\n";
                render(os, v, depth + 1);
            }
        }
    } else {
        os << pad << scalar_str(j) << "\n";
    }
}

}  // namespace

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "degencalc " << tool_version() << "  " << r.command << "\n";

    if (!r.inputs.empty()) {
        os << "\ninputs:\n";
        size_t width = 0;
        for (const auto& [k, v] : r.inputs) width = std::max(width, k.size());
        for (const auto& [k, v] : r.inputs)
            os << "  " << k << std::string(width - k.size(), ' ') << " = " << v << "\n";
    }

    if (!r.results.empty()) {
        os << "\nresults:\n";
        render(os, r.results, 1);
    }

    if (!r.checks.empty()) {
        os << "\nchecks:\n";
        size_t width = 0;
        for (const Check& c : r.checks) width = std::max(width, c.name.size());
        for (const Check& c : r.checks) {
            os << "  [" << status_name(c.status) << "]";
            os << std::string(8 - std::string(status_name(c.status)).size(), ' ');
            os << c.name << std::string(width - c.name.size(), ' ');
            if (!c.expected.empty()) os << "  expected " << c.expected << ", got " << c.actual;
            else if (!c.actual.empty()) os << "  " << c.actual;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace degen
