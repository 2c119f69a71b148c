#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef PTSPEC_CLI_PATH
#error "PTSPEC_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tag = std::to_string(counter++);
    const std::string out_path = "cli_stdout_" + tag + ".txt";
    const std::string err_path = "cli_stderr_" + tag + ".txt";
    const std::string cmd = std::string("\"") + PTSPEC_CLI_PATH + "\" " + args +
                            " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.code = (status == -1) ? -1 : WEXITSTATUS(status);
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return res;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char ch : text)
        if (ch == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("two-level spectrum on stdout") {
    const auto res = run_cli("spectrum --dim 2 --a 0.6");
    CHECK(res.code == 0);
    CHECK(res.out.find("a,b,c,class,e1_re,e1_im,e2_re,e2_im,jordan_defect\n") == 0);
    CHECK(res.out.find("RealSimple") != std::string::npos);
    CHECK(res.out.find("-0.8") != std::string::npos);
    CHECK(count_lines(res.out) == 2);
}

TEST_CASE("sweep crosses the boundary between 1.0 and 1.1") {
    const auto res = run_cli("spectrum --dim 3 --b 0.5 --sweep a 0 2 21");
    CHECK(res.code == 0);
    CHECK(count_lines(res.out) == 22);
    std::istringstream in(res.out);
    std::string line;
    std::getline(in, line);  // header
    int k = 0;
    while (std::getline(in, line)) {
        const double a = 0.1 * k++;
        const bool real = line.find("RealSimple") != std::string::npos;
        const bool broken = line.find("ComplexPair") != std::string::npos;
        if (a < 1.05) {
            CHECK(real);
        } else {
            CHECK(broken);
        }
    }
    CHECK(k == 21);
}

TEST_CASE("boundary json document") {
    const std::string path = "boundary_doc.json";
    const auto res = run_cli(
        "boundary --method parametric --resolution 100 --format json --output " +
        path);
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(slurp(path));
    std::remove(path.c_str());
    CHECK(doc["config"]["subcommand"] == "boundary");
    CHECK(doc["config"]["method"] == "parametric");
    CHECK(doc["config"]["resolution"] == 100);
    CHECK(doc["records"].size() == 400);
    CHECK(doc["records"][0]["method"] == "parametric");
}

TEST_CASE("boundary csv round-trips byte for byte") {
    const auto res = run_cli("boundary --method parametric --resolution 50");
    REQUIRE(res.code == 0);
    CHECK(count_lines(res.out) == 201);
    std::istringstream in(res.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "method,beta_or_theta,a,b,z,y");
    while (std::getline(in, line)) {
        std::ostringstream rebuilt;
        std::string cell;
        std::istringstream cells(line);
        int idx = 0;
        while (std::getline(cells, cell, ',')) {
            if (idx == 0) {
                rebuilt << cell;
            } else {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g",
                              std::strtod(cell.c_str(), nullptr));
                rebuilt << ',' << buf;
            }
            ++idx;
        }
        CHECK(rebuilt.str() == line);
    }
}

TEST_CASE("bisected boundary at nonzero c") {
    const auto res =
        run_cli("boundary --method bisect --c 1 --resolution 16 --format json");
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["records"].size() == 16);
    CHECK(doc["config"]["c"] == 1.0);
    CHECK(doc["records"][0]["method"] == "bisect");
}

TEST_CASE("boundary svg") {
    const auto res =
        run_cli("boundary --method parametric --resolution 64 --format svg");
    REQUIRE(res.code == 0);
    CHECK(res.out.rfind("<svg", 0) == 0);
    CHECK(res.out.find("</svg>") != std::string::npos);
    CHECK(res.out.find("<polyline") != std::string::npos);
}

TEST_CASE("dep output at c = 0") {
    const auto res = run_cli("dep --c 0");
    CHECK(res.code == 0);
    CHECK(count_lines(res.out) == 5);
    CHECK(res.out.find("1.4142135623730951") != std::string::npos);
    CHECK(res.out.find("-1.4142135623730951") != std::string::npos);
}

TEST_CASE("metric point evaluation") {
    const auto res = run_cli("metric --a 0.5 --gamma 0");
    CHECK(res.code == 0);
    CHECK(count_lines(res.out) == 2);
    CHECK(res.out.find("0.75") != std::string::npos);
    CHECK(res.out.find("0.5,0,", 0) != std::string::npos);
}

TEST_CASE("metric grid sweep") {
    const auto res =
        run_cli("metric --a-grid -0.9 0.9 7 --gamma-grid 0 1.5 4 --format json");
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["records"].size() == 28);
    CHECK(doc["config"]["a_grid"]["count"] == 7);
}

TEST_CASE("lemma grid") {
    const auto res = run_cli("lemma --b-grid 0.01 0.1 10");
    CHECK(res.code == 0);
    CHECK(count_lines(res.out) == 11);
    CHECK(res.out.rfind("b,eta,eta_over_b2\n", 0) == 0);
    CHECK(res.out.find("0.16677") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("spectrum --dim 4").code == 2);
    CHECK(run_cli("spectrum --nonsense 1").code == 2);
    CHECK(run_cli("spectrum --dim 3 --sweep a 0 1 1").code == 2);
    CHECK(run_cli("spectrum --dim 3 --sweep q 0 1 5").code == 2);
    CHECK(run_cli("boundary --method parametric --c 1").code == 2);
    CHECK(run_cli("boundary --method bisect --resolution 4").code == 2);
    CHECK(run_cli("boundary --method walk").code == 2);
    CHECK(run_cli("boundary --method bisect --tol 1e-16").code == 2);
    CHECK(run_cli("metric --a 0.5").code == 2);
    CHECK(run_cli("metric --a 0.5 --gamma 0 --a-grid 0 0.5 3").code == 2);
    CHECK(run_cli("metric --a 0.5 --gamma 0 --format svg").code == 2);
    CHECK(run_cli("dep --format svg").code == 2);
    CHECK(run_cli("lemma --b 0.1 --format xml").code == 2);
    CHECK(run_cli("lemma").code == 2);
}

TEST_CASE("domain errors exit with 1") {
    CHECK(run_cli("spectrum --dim 2 --b 1").code == 1);
    CHECK(run_cli("spectrum --dim 3 --c -2").code == 1);
    CHECK(run_cli("dep --c -3.5").code == 1);
    CHECK(run_cli("metric --a 1 --gamma 0").code == 1);
    CHECK(run_cli("lemma --b 2").code == 1);
    CHECK(run_cli("boundary --method bisect --c 20 --resolution 8").code == 1);
    const auto res = run_cli("spectrum --dim 2 --b 1");
    CHECK(res.err.find("error:") != std::string::npos);
    CHECK(res.err.find("b") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    const auto top = run_cli("--help");
    CHECK(top.code == 0);
    CHECK(top.out.find("spectrum") != std::string::npos);
    CHECK(top.out.find("boundary") != std::string::npos);
    const auto sub = run_cli("boundary --help");
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--method") != std::string::npos);
}
