#include "cledger/constants.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Runs the CLI with a shell, capturing stdout. `env` is prepended verbatim.
int run(const std::string& args, std::string* output = nullptr,
        const std::string& env = "") {
    const std::string out_path = "/tmp/cledger_cli_stdout.txt";
    const std::string cmd =
        env + " " + std::string(CLEDGER_CLI_PATH) + " " + args + " > " + out_path +
        " 2> /dev/null";
    const int rc = std::system(cmd.c_str());
    if (output) *output = slurp(out_path);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::size_t line_count(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

} // namespace

TEST_CASE("check subcommand") {
    std::string out;
    CHECK(run("check", &out) == 0);
    CHECK(out.find("21 total, 21 passed, 0 failed") != std::string::npos);

    CHECK(run("check --format csv", &out) == 0);
    CHECK(out.rfind("id,lhs,rhs,gap_decades,tolerance,dimension_ok,passed\n", 0) == 0);

    CHECK(run("check --format json", &out) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc["summary"]["total"] == 21);

    CHECK(run("check --rel E17,E26", &out) == 0);
    CHECK(run("check --rel E17 --tol E17=0.1", &out) == 1);
    CHECK(run("check --rel BOGUS", &out) == 2);
    CHECK(run("check --constants /nonexistent/file", &out) == 2);
}

TEST_CASE("simulate subcommand") {
    std::string out;
    CHECK(run("simulate --steps 100 --dt 0.1tau --format csv", &out) == 0);
    CHECK(out.rfind("t,N,G,R,H,rho\n", 0) == 0);
    CHECK(line_count(out) == 102); // header + 101 samples

    CHECK(run("simulate --steps 100 --dt 0.1tau --format json", &out) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc["series"]["N"].size() == 101);
    CHECK(doc["config"]["mode"] == "deterministic");

    CHECK(run("simulate --dt 2tau --t-end 10tau", &out) == 2);
    CHECK(run("simulate --mode stochastic --steps 10 --dt 0.5tau", &out) == 2);
    CHECK(run("simulate --dt wat", &out) == 2);
    CHECK(run("simulate --dt 1ns", &out) == 2);
}

TEST_CASE("stochastic reruns are byte-identical") {
    const std::string args =
        "simulate --mode stochastic --ensemble 64 --seed 42 --steps 200 --dt 0.5tau "
        "--format csv --out ";
    CHECK(run(args + "/tmp/cledger_a.csv") == 0);
    CHECK(run(args + "/tmp/cledger_b.csv") == 0);
    const std::string a = slurp("/tmp/cledger_a.csv");
    CHECK_FALSE(a.empty());
    CHECK(a == slurp("/tmp/cledger_b.csv"));
    CHECK(a.rfind("t,N,G,R,H,rho,N_mean,N_std\n", 0) == 0);
}

TEST_CASE("algebra subcommand") {
    std::string out;
    CHECK(run("algebra", &out) == 0);
    CHECK(run("algebra --suite clifford", &out) == 0);
    CHECK(out.find("max deviation 0") != std::string::npos);

    CHECK(run("algebra --suite snyder --format json", &out) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc["snyder"]["compton_factor"] == 2.0);

    CHECK(run("algebra --suite onshell --trials 200 --seed 7 --format json", &out) == 0);
    const auto on = nlohmann::json::parse(out);
    CHECK(on["onshell"]["max_relative_residual"].get<double>() <= 1e-9);
    CHECK(on["onshell"]["bad_nullspace_count"] == 0);

    CHECK(run("algebra --suite bogus", &out) == 2);
}

TEST_CASE("constants subcommand round-trips") {
    std::string out;
    CHECK(run("constants", &out) == 0);
    CHECK_NOTHROW(cledger::ConstantsTable::parse(out));

    CHECK(run("constants --format json", &out) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc["entries"].size() == 25);
    CHECK(doc["fingerprint"].get<std::string>().size() == 16);
}

TEST_CASE("report subcommand") {
    std::string out;
    CHECK(run("report --format json --trials 100", &out) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc.contains("check"));
    CHECK(doc.contains("algebra"));
    CHECK(doc.contains("simulate"));
    CHECK(doc["check"]["summary"]["failed"] == 0);

    CHECK(run("report --potential --points 8", &out) == 0);
    CHECK(out.rfind("r,V_natural,V_cgs\n", 0) == 0);
    CHECK(line_count(out) == 9);
}

TEST_CASE("constants resolution order") {
    std::ofstream("/tmp/cledger_env.cgs") << cledger::ConstantsTable::builtin().serialize();
    std::string out;
    CHECK(run("check", &out, "COMPTON_LEDGER_CONSTANTS=/tmp/cledger_env.cgs") == 0);
    CHECK(run("check", &out, "COMPTON_LEDGER_CONSTANTS=/nonexistent/file") == 2);
    // explicit flag wins over the environment
    CHECK(run("check --constants /tmp/cledger_env.cgs", &out,
              "COMPTON_LEDGER_CONSTANTS=/nonexistent/file") == 0);

    std::ofstream("/tmp/cledger_bad.cgs") << "garbage\n";
    CHECK(run("check --constants /tmp/cledger_bad.cgs", &out) == 2);
}

TEST_CASE("output goes to --out when given") {
    std::string out;
    CHECK(run("check --format json --out /tmp/cledger_out.json", &out) == 0);
    CHECK(out.empty());
    CHECK(nlohmann::json::accept(slurp("/tmp/cledger_out.json")));
    CHECK(run("check --out /no/such/dir/out.txt", &out) == 2);
}
