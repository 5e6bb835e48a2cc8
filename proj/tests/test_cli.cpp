#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Run the installed binary with stdout captured and stderr dropped; the tool
// must never read stdin, so none is offered.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + FINV_CLI_PATH + "\" " + args +
                      " 2>/dev/null < /dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string grid_file(const std::string& contents) {
    std::string path = "/tmp/finv_cli_grid_" + std::to_string(getpid()) + ".json";
    std::ofstream f(path);
    f << contents;
    return path;
}

}  // namespace

TEST_CASE("eis prints exact Eisenstein coefficients") {
    RunResult text = run_cli("eis --weight 4 --prec 4");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "G_4 = 1/240 + q + 9*q^2 + 28*q^3 + O(q^4)\n");

    RunResult json = run_cli("eis --weight 4 --prec 6 --json");
    CHECK(json.exit_code == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["kind"] == "G");
    CHECK(j["coefficients"] ==
          nlohmann::json({"1/240", "1", "9", "28", "73", "126"}));

    RunResult norm = run_cli("eis --weight 4 --prec 3 --normalized");
    CHECK(norm.exit_code == 0);
    CHECK(norm.out == "E_4 = 1 + 240*q + 2160*q^2 + O(q^3)\n");

    CHECK(run_cli("eis --weight 5 --prec 4").exit_code == 2);
    CHECK(run_cli("eis --prec 4").exit_code == 2);  // missing required flag
}

TEST_CASE("series prints the ring generators") {
    RunResult e1 = run_cli("series --name E1 --prec 5");
    CHECK(e1.exit_code == 0);
    CHECK(e1.out == "E1 = 1 + 6*q + 6*q^3 + 6*q^4 + O(q^5)\n");

    RunResult eps = run_cli("series --name epsilon --prec 5 --json");
    CHECK(eps.exit_code == 0);
    auto j = nlohmann::json::parse(eps.out);
    CHECK(j["level"] == 2);
    CHECK(j["coefficients"] == nlohmann::json({"0", "1", "8", "28", "64"}));

    CHECK(run_cli("series --name E1 --level 2 --prec 5").exit_code == 2);
    CHECK(run_cli("series --name bogus --prec 5").exit_code == 2);
}

TEST_CASE("reduce-cohomology normalizes and pairs") {
    RunResult r = run_cli("reduce-cohomology --n 3 --poly \"t1*t2^2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "reduced: -t1^2*t2\ntop pairing: -1\n");

    RunResult j = run_cli("reduce-cohomology --n 4 --poly \"t1^3*t2^2*t3\" --json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["top_pairing"] == 1);
    CHECK(parsed["reduced"] == "t1^3*t2^2*t3");

    CHECK(run_cli("reduce-cohomology --n 3 --poly \"t9\"").exit_code == 2);
    CHECK(run_cli("reduce-cohomology --n 3 --poly \"2t1\"").exit_code == 2);
}

TEST_CASE("f-transfer reports are deterministic and exact") {
    std::string path = grid_file(R"({"n": 2, "level": 3, "pairings": [0, 1, 0]})");

    RunResult a = run_cli("f-transfer --input " + path + " --json --oracle");
    RunResult b = run_cli("f-transfer --input " + path + " --json --oracle");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);  // byte-identical reruns

    auto j = nlohmann::json::parse(a.out);
    CHECK(j["classification"] == "beta_{4/4}");
    CHECK(j["torsion_order"] == 2);
    CHECK(j["stable_under_doubling"] == true);
    CHECK(j["oracle_agrees"] == true);

    RunResult text = run_cli("f-transfer --input " + path);
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("beta_{4/4}") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run_cli("f-transfer --input /nonexistent.json").exit_code == 2);
    std::string bad = grid_file(R"({"n": 2, "level": 3})");
    CHECK(run_cli("f-transfer --input " + bad).exit_code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("flag computes the tautological grids end to end") {
    RunResult r = run_cli("flag --n 3 --lines 1,2 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    std::string cls = j["classification"];
    CHECK((cls == "beta_{4/2,2}" || cls == "-beta_{4/2,2}"));
    CHECK(j["torsion_order"] == 4);

    RunResult z = run_cli("flag --n 4 --lines 1,3 --json");
    CHECK(z.exit_code == 0);
    CHECK(nlohmann::json::parse(z.out)["classification"] == "0");

    CHECK(run_cli("flag --n 3 --lines 12").exit_code == 2);
    CHECK(run_cli("flag --n 3 --lines 1,1").exit_code == 2);
    CHECK(run_cli("flag --n 3 --lines 1,2 --level 7").exit_code == 2);
}

TEST_CASE("e-transfer evaluates single transfers") {
    RunResult r = run_cli("e-transfer --n 1 --index 1 --json");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == "239/240");

    RunResult text = run_cli("e-transfer --n 2 --index 2");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "e = 1/252\n");

    CHECK(run_cli("e-transfer --n 0 --index 1").exit_code == 2);
    CHECK(run_cli("e-transfer --n 1 --index abc").exit_code == 2);
}

TEST_CASE("verify-paper drives the exit-code contract") {
    RunResult ok = run_cli("verify-paper --cases 2 --json");
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["error"] == 0);

    RunResult again = run_cli("verify-paper --cases 2 --json");
    CHECK(again.out == ok.out);  // byte-identical reruns

    // Starving the congruence engine of precision must surface as a
    // computational error, never as a silent pass.
    RunResult starved = run_cli("verify-paper --prec 8 --cases 1");
    CHECK(starved.exit_code == 1);
}

TEST_CASE("usage errors exit with the invalid-input code") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("eis --weight notanumber").exit_code == 2);
}
