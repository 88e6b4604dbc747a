#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run(const std::string& args) {
    std::string cmd = std::string(DEGENCALC_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("classify").status == 0);
    CHECK(run("table --type II --d1 5").status == 0);
    CHECK(run("table --type III --d1 5").status == 0);
    CHECK(run("invariants --d1 7").status == 0);
    CHECK(run("typeiv --d 8").status == 0);

    // The asserted degree-2 value contradicts exactness here; the report
    // carries a failed check.
    CHECK(run("table --type II --d1 6").status == 1);

    // Usage errors.
    CHECK(run("table --type II --d1 4").status == 2);
    CHECK(run("table --type V --d1 5").status == 2);
    CHECK(run("classify --max-a 0").status == 2);
    CHECK(run("typeiv --d 3").status == 2);
    CHECK(run("coh --level surface --e -1 --a 0 --b 0").status == 2);
    CHECK(run("--nonsense").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("json output is canonical and stable") {
    CmdResult a = run("table --type III --d1 6 --format json");
    CmdResult b = run("table --type III --d1 6 --format json");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(a.out);
    CHECK(doc.dump(2) + "\n" == a.out);

    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"tool_version", "command", "inputs", "results",
                                           "checks"});

    // Numbers travel as strings so nothing is rounded on the way out.
    CHECK(doc["results"]["rows"]["T_X"][1] == "438");
}

TEST_CASE("classify reports the full solution set") {
    CmdResult r = run("classify --format json");
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(r.out);
    REQUIRE(doc["results"]["solutions"].size() == 3);
    CHECK(doc["results"]["solutions"][1]["a"] == "2");
    CHECK(doc["results"]["solutions"][1]["b"] == "3");
    CHECK(doc["results"]["solutions"][1]["e"] == "1");

    bool noted = false;
    for (const auto& note : doc["results"]["audit_notes"])
        if (note.get<std::string>().find("8(b - e + 6)") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("table reports carry the reference-row values") {
    CmdResult r = run("table --type II --d1 5 --format json");
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(r.out);
    const auto& rows = doc["results"]["rows"];
    CHECK(rows["O(B)"] == nlohmann::ordered_json({"286", "0", "1", "0"}));
    CHECK(rows["T_Y"] == nlohmann::ordered_json({"16", "0", "1", "0"}));
    CHECK(rows["T_X"] == nlohmann::ordered_json({"0", "269", "0", "0"}));
    for (const auto& check : doc["checks"]) CHECK(check["status"] != "fail");
}

TEST_CASE("invariants report flags the volume exponent") {
    CmdResult text = run("invariants --d1 9");
    CHECK(text.status == 0);
    CHECK(text.out.find("2(d1-4)^3 = 250") != std::string::npos);
    CHECK(text.out.find("2(d1-4)^2 would give 50") != std::string::npos);
}

TEST_CASE("cover splits invariants from anti-invariants") {
    CmdResult r = run("cover --type III --d1 5 --format json");
    REQUIRE(r.status == 0);
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["results"]["invariant"] == nlohmann::ordered_json({"286", "0", "1", "0"}));
}
