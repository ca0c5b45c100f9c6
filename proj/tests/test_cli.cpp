// Integration tests that drive the installed CLI binary and assert exit
// codes and output schema.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef KRPHASE_CLI_PATH
#error "KRPHASE_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(KRPHASE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("compute --d 2 --m 1") {
    const RunResult res = run_cli("compute --d 2 --m 1");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j.at("class").at("strong") == 1);
    CHECK(j.at("class").at("weak1").at("[1]") == 0);
    CHECK(j.at("class").at("weak2").at("[1,2]") == 0);
    CHECK(j.at("closed_form_check") == "ok");
    CHECK(j.at("degree").at("conclusive") == true);
}

TEST_CASE("compute --d 1 --m -5: the mu class") {
    const RunResult res = run_cli("compute --d 1 --m -5");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j.at("class").at("strong") == 0);
    CHECK(j.at("class").at("weak1").at("[1]") == 1);
}

TEST_CASE("compute --d 3 --m 7: trivial phase") {
    const RunResult res = run_cli("compute --d 3 --m 7");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j.at("class").at("strong") == 0);
    for (const auto& [key, v] : j.at("class").at("weak1").items()) CHECK(v == 0);
    for (const auto& [key, v] : j.at("class").at("weak2").items()) CHECK(v == 0);
}

TEST_CASE("compute on stacked axes") {
    const RunResult res = run_cli("compute --d 3 --m 0 --axes 2");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j.at("class").at("strong") == -1);
    CHECK(j.at("class").at("weak1").at("[2]") == 0);
    CHECK(j.at("closed_form_check") == "ok");
    CHECK_FALSE(j.contains("degree"));  // oracle requires full axes
}

TEST_CASE("exit code 2 at a closing mass") {
    CHECK(run_cli("compute --d 2 --m 0").exit_code == 2);
    CHECK(run_cli("compute --d 2 --m 2").exit_code == 2);
}

TEST_CASE("exit code 1 on bad arguments") {
    CHECK(run_cli("compute --d 2").exit_code == 1);
    CHECK(run_cli("compute --d -1 --m 0").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("compute --d 2 --m 0.5 --extra-b 7").exit_code == 1);
}

TEST_CASE("gap subcommand") {
    const RunResult closed = run_cli("gap --d 2 --m 0");
    REQUIRE(closed.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(closed.out);
    CHECK(j.at("gap") == "0");
    CHECK(j.at("m_in_closing_set") == true);
    CHECK(j.at("closing_masses") == nlohmann::json({-2, 0, 2}));

    const RunResult open = run_cli("gap --d 1 --m 0");
    REQUIRE(open.exit_code == 0);
    CHECK(nlohmann::json::parse(open.out).at("gap") == "2");

    const RunResult d3 = run_cli("gap --d 3 --m 1.5 --grid 64");
    REQUIRE(d3.exit_code == 0);
    CHECK(std::stod(nlohmann::json::parse(d3.out).at("gap").get<std::string>()) > 0.0);
}

TEST_CASE("classify subcommand") {
    const RunResult res = run_cli("classify --a 1 --b 0");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j.at("j") == 0);
    CHECK(j.at("theta_sq") == 1);
    CHECK(j.at("theta_role") == "time-reversal");

    const nlohmann::json j36 =
        nlohmann::json::parse(run_cli("classify --a 3 --b 0").out);
    CHECK(j36.at("j") == 6);
    CHECK(j36.at("theta_sq") == -1);
    CHECK(j36.at("theta_role") == "particle-hole");

    const nlohmann::json j5 = nlohmann::json::parse(run_cli("classify --a 0 --b 4").out);
    CHECK(j5.at("j") == 5);
    CHECK(j5.at("theta_sq") == -1);
    CHECK(j5.at("xi_theta_sq") == -1);
}

TEST_CASE("check subcommand passes and is tolerance-sensitive") {
    CHECK(run_cli("check --max-d 2").exit_code == 0);
    CHECK(run_cli("check --max-d 2 --tol 1e-30").exit_code != 0);
}

TEST_CASE("JSON output is stable across runs") {
    const RunResult a = run_cli("compute --d 2 --m 1");
    const RunResult b = run_cli("compute --d 2 --m 1");
    CHECK(a.out == b.out);

    const RunResult t = run_cli("compute --d 2 --m 1 --format table");
    REQUIRE(t.exit_code == 0);
    CHECK(t.out.find("strong") != std::string::npos);
}
