#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef NODALTORUS_CLI_PATH
#error "NODALTORUS_CLI_PATH must point at the built command-line binary"
#endif
#ifndef NODALTORUS_SOURCE_DIR
#error "NODALTORUS_SOURCE_DIR must point at the repository root"
#endif

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out; // stdout and stderr merged
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd;
    if (!env_prefix.empty())
        cmd += "env " + env_prefix + " ";
    cmd += std::string(NODALTORUS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (const char c : text)
        if (c == '\n')
            ++n;
    return n;
}

} // namespace

TEST_CASE("cli: spectrum json output is pinned") {
    const auto r = run_cli("spectrum --sign + --params 1,2,3,4 --cutoff 40/3 --format json");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["sign"] == "+");
    CHECK(j["cutoff"] == "40/3");
    CHECK(j["eigenvalue_unit"] == "4*pi^2");
    CHECK(j["line_count"] == 43);
    CHECK(j["total_reps"] == 174);
    CHECK(j["lines"][0]["eigenvalue"] == "3/2");
    CHECK(j["lines"][0]["degeneracy"] == 2);
    CHECK(j["lines"][3]["eigenvalue"] == "3");
    CHECK(j["lines"][3]["nodal_pairs"][0] == Json::array({4, 5}));
}

TEST_CASE("cli: spectrum --lines picks the cutoff") {
    const auto r = run_cli("spectrum --params 1,2,3,4 --lines 6");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["cutoff"] == "7/2");
    CHECK(j["line_count"] == 6);
}

TEST_CASE("cli: spectrum csv has the documented header and row count") {
    const auto r = run_cli("spectrum --params 1,2,3,4 --cutoff 40/3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("eigenvalue,degeneracy,q1,q2,q3,q4,nu_im,nu_re\n", 0) == 0);
    CHECK(count_lines(r.out) == 1 + 174);

    const auto ra = run_cli("spectrum --params 1,2,3,4 --cutoff 40/3 --format csv --approx");
    REQUIRE(ra.exit_code == 0);
    CHECK(ra.out.rfind("eigenvalue,degeneracy,q1,q2,q3,q4,nu_im,nu_re,eigenvalue_approx\n", 0) ==
          0);
}

TEST_CASE("cli: spectrum rejects bad input with exit 2") {
    CHECK(run_cli("spectrum --params 0,1,2,3 --cutoff 2").exit_code == 2);
    CHECK(run_cli("spectrum --params 1,2,3 --cutoff 2").exit_code == 2);
    CHECK(run_cli("spectrum --params 1,2,3,4").exit_code == 2); // neither cutoff nor lines
    CHECK(run_cli("spectrum --params 1,2,3,4 --cutoff 2 --lines 3").exit_code == 2);
    CHECK(run_cli("spectrum --params 1,2,3,4 --cutoff x").exit_code == 2);
    CHECK(run_cli("spectrum --sign ? --params 1,2,3,4 --cutoff 2").exit_code == 2);
    CHECK(run_cli("spectrum --params 1,2,3,4 --cutoff 2 --format yaml").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli: compare distinguishes the generic pair") {
    const auto r = run_cli("compare --params 1,2,3,4 --cutoff 12");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["distinguished"] == true);
    CHECK(j["first_difference"]["eigenvalue"] == "12");
    CHECK(j["first_difference"]["index"] == 37);

    const auto pretty = run_cli("compare --params 1,2,3,4 --cutoff 12 --format pretty");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.out.find("distinguished at eigenvalue 12") != std::string::npos);
}

TEST_CASE("cli: compare exits 3 when not distinguished") {
    // Isometric tori: never distinguished, at any cutoff.
    const auto r = run_cli("compare --params 1,1,2,3 --cutoff 60 --format pretty");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("none below cutoff") != std::string::npos);

    // Generic tori below the first difference: agreement so far.
    const auto low = run_cli("compare --params 1,2,3,4 --cutoff 23/2");
    CHECK(low.exit_code == 3);
    const Json j = Json::parse(low.out);
    CHECK(j["distinguished"] == false);
    CHECK(j["first_difference"].is_null());
}

TEST_CASE("cli: verify-theorem passes with the shipped golden lists") {
    const auto r = run_cli("verify-theorem --max-m 4");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["golden"]["match"] == true);
    CHECK(j["m4"]["only_plus"].size() == 24);
    CHECK(j["m4"]["only_minus"].size() == 24);

    const auto pretty = run_cli("verify-theorem --format pretty");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.out.rfind("PASS", 0) == 0);
}

TEST_CASE("cli: verify-theorem rejects max-m below 4") {
    CHECK(run_cli("verify-theorem --max-m 3").exit_code == 2);
}

TEST_CASE("cli: verify-theorem fails on a tampered golden list") {
    const fs::path tmp = fs::temp_directory_path() / "nodaltorus_tampered_golden";
    fs::create_directories(tmp);
    const fs::path src = fs::path(NODALTORUS_SOURCE_DIR) / "data" / "golden";
    {
        std::ifstream in(src / "e4_only_plus.txt");
        REQUIRE(in.good());
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line))
            lines.push_back(line);
        REQUIRE(lines.size() == 24);
        lines[0] = "1*a"; // canonical but wrong
        std::ofstream out(tmp / "e4_only_plus.txt");
        for (const auto& l : lines)
            out << l << "\n";
    }
    fs::copy_file(src / "e4_only_minus.txt", tmp / "e4_only_minus.txt",
                  fs::copy_options::overwrite_existing);

    const auto r = run_cli("verify-theorem --golden-dir " + tmp.string());
    CHECK(r.exit_code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(j["golden"]["match"] == false);
    // The bogus line is in the golden file but never computed; the true form
    // it displaced is computed but no longer expected.
    CHECK(j["golden"]["missing_plus"] == Json::array({"1*a"}));
    CHECK(j["golden"]["unexpected_plus"].size() == 1);

    CHECK(run_cli("verify-theorem --golden-dir /nonexistent-golden").exit_code == 2);
}

TEST_CASE("cli: validate-nodal passes and the injected bug fails") {
    const auto r = run_cli("validate-nodal --max-m 2");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["rows"].size() == 40);
    CHECK(j["mismatches"] == 0);

    const auto bug = run_cli("validate-nodal --max-m 2 --inject-bug drop-plus-one");
    CHECK(bug.exit_code == 1);
    const Json jb = Json::parse(bug.out);
    CHECK(jb["pass"] == false);
    CHECK(jb["mismatches"] == 20);
    CHECK(jb["variant"] == "drop-plus-one");

    CHECK(run_cli("validate-nodal --max-m 2 --inject-bug nonsense").exit_code == 2);
}

TEST_CASE("cli: validate-nodal csv") {
    const auto r = run_cli("validate-nodal --max-m 1 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("q1,q2,q3,q4,part,formula,slab,floodfill,res,grid,match\n", 0) == 0);
    CHECK(count_lines(r.out) == 1 + 8); // 4 canonical vectors, both parts
}

TEST_CASE("cli: e-sets dump") {
    const auto r = run_cli("e-sets --m 4");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["m"] == 4);
    CHECK(j["e_plus"].size() == 78);
    CHECK(j["e_minus"].size() == 78);
    CHECK(j["only_plus"].size() == 24);
    CHECK(j["only_minus"].size() == 24);
    CHECK(j["common"].size() == 54);
    CHECK(j["equal"] == false);

    // The factored pretty style puts the physical unit up front.
    const auto pretty = run_cli("e-sets --m 1 --format pretty");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.out.find("(4*pi^2/12)(9a+b+c+d)") != std::string::npos);
    CHECK(pretty.out.find("sets equal") != std::string::npos);
}

TEST_CASE("cli: isometric-check") {
    const auto r = run_cli("isometric-check --params 1,1,2,3");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["difference_found"] == false);
    CHECK(j["lines_compared"].get<std::size_t>() >= 25);

    // Pairwise distinct parameters violate the precondition.
    CHECK(run_cli("isometric-check --params 1,2,3,4").exit_code == 2);
}

TEST_CASE("cli: output is deterministic and thread-count independent") {
    const std::string cmd = "validate-nodal --max-m 2 --format json";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    const auto c = run_cli(cmd, "NODALTORUS_THREADS=1");
    const auto d = run_cli(cmd, "NODALTORUS_THREADS=7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out == d.out);
}

TEST_CASE("cli: --output writes the file") {
    const fs::path tmp = fs::temp_directory_path() / "nodaltorus_spectrum_out.json";
    fs::remove(tmp);
    const auto r = run_cli("spectrum --params 1,2,3,4 --lines 1 -o " + tmp.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(tmp);
    REQUIRE(in.good());
    Json j;
    in >> j;
    CHECK(j["line_count"] == 1);
    CHECK(j["lines"][0]["eigenvalue"] == "3/2");
    fs::remove(tmp);
}
