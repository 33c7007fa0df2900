#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;  // path to the built binary, passed on the command line

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    const std::string err_file = "/tmp/ringstab_cli_err.txt";
    const std::string cmd = "'" + g_cli + "' " + args + " 2>" + err_file;
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err_in(err_file);
    std::stringstream err_text;
    err_text << err_in.rdbuf();
    result.err = err_text.str();
    return result;
}

nlohmann::json parse(const RunResult& result) { return nlohmann::json::parse(result.out); }

double num(const nlohmann::json& v) { return std::stod(v.get<std::string>()); }

}  // namespace

TEST_CASE("classify emits a stable verdict with exit 0") {
    const RunResult result = run("classify --n 14 --ratio 10");
    CHECK(result.exit_code == 0);
    const nlohmann::json record = parse(result);
    CHECK(record["command"] == "classify");
    CHECK(record["inputs"]["n"] == "14");
    CHECK(record["inputs"]["ratio"] == "10");
    CHECK(record["results"]["verdict"] == "stable");
    CHECK(record["results"]["zero_mode_count"] == 1);
    CHECK(record["results"]["eigenvalues"].size() == 14);
    CHECK(record["results"]["failed_conditions"].empty());
    CHECK(record["version"].is_string());
}

TEST_CASE("classify rejects a ratio on an odd ring with exit 2") {
    const RunResult result = run("classify --n 9 --ratio 2");
    CHECK(result.exit_code == 2);
    CHECK(result.out.empty());
    CHECK(result.err.find("one-parameter") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("classify --n 2").exit_code == 2);             // below the valid range
    CHECK(run("classify").exit_code == 2);                   // missing required option
    CHECK(run("classify --n 8 --ratio -1").exit_code == 2);  // nonpositive ratio
    CHECK(run("").exit_code == 2);                           // missing subcommand
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("spectrum --n 9 --ratio 2").exit_code == 2);  // odd ring, ratio != 1
}

TEST_CASE("interval endpoints match the published values") {
    const nlohmann::json four = parse(run("interval --j 4"));
    CHECK(four["results"]["kind"] == "finite");
    CHECK(std::abs(num(four["results"]["lo"]) - 0.39601454048825) <= 1e-9);
    CHECK(std::abs(num(four["results"]["hi"]) - 2.525159805412902) <= 1e-9);
    const nlohmann::json nine = parse(run("interval --j 9"));
    CHECK(nine["results"]["kind"] == "all_ratios");
    const nlohmann::json two = parse(run("interval --j 2"));
    CHECK(two["results"]["kind"] == "empty");
}

TEST_CASE("rank reports the mode table") {
    const nlohmann::json record = parse(run("rank --n 8"));
    CHECK(record["results"]["rank"] == 6);
    CHECK(record["results"]["mass_parameters"] == 2);
    CHECK(record["results"]["f1"].size() == 8);
    CHECK(num(record["results"]["f1"][0]) == 0.0);
}

TEST_CASE("spectrum reports analytic and oracle lists with their deviation") {
    const nlohmann::json record = parse(run("spectrum --n 8 --ratio 2"));
    CHECK(record["results"]["analytic"].size() == 8);
    CHECK(record["results"]["oracle"].size() == 8);
    CHECK(num(record["results"]["max_deviation"]) <= 1e-9);
}

TEST_CASE("fn-table emits CSV and flags singular ranges") {
    const RunResult table = run("fn-table --fn F --from 0.5 --to 6.0 --points 12");
    CHECK(table.exit_code == 0);
    std::istringstream lines(table.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "phi,value");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 12);

    // A range crossing the singular angle 0 is a computation error.
    const RunResult singular = run("fn-table --fn f --from -1 --to 1 --points 3");
    CHECK(singular.exit_code == 1);
    CHECK(singular.err.find("computation error") != std::string::npos);
}

TEST_CASE("version flag prints the tool version") {
    const RunResult result = run("--version");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("numbers round-trip through their 15-digit serialization") {
    const nlohmann::json record = parse(run("classify --n 10 --ratio 3"));
    for (const auto& entry : record["results"]["eigenvalues"]) {
        const std::string text = entry.get<std::string>();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", std::stod(text));
        CHECK(text == buf);
    }
}

TEST_CASE("rank tolerance inside the mode range is an error, not a guess") {
    // Band (0.03, 3) around zero_tol = 0.3 contains several mode magnitudes.
    const RunResult result = run("rank --n 8 --zero-tol 0.3");
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("ambiguous") != std::string::npos);
}

TEST_CASE("byte-identical output on repeated invocations") {
    const RunResult first = run("classify --n 12 --ratio 0.25");
    const RunResult second = run("classify --n 12 --ratio 0.25");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    const RunResult table_a = run("fn-table --fn f --from 0.3 --to 6.0 --points 50");
    const RunResult table_b = run("fn-table --fn f --from 0.3 --to 6.0 --points 50");
    CHECK(table_a.out == table_b.out);
}

int main(int argc, char** argv) {
    std::vector<char*> doctest_args;
    for (int i = 0; i < argc; ++i) {
        if (i == 1 && argv[i][0] != '-') {
            g_cli = argv[i];
            continue;
        }
        doctest_args.push_back(argv[i]);
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-ringstab-binary> [doctest args]\n");
        return 1;
    }
    doctest::Context context(static_cast<int>(doctest_args.size()), doctest_args.data());
    return context.run();
}
