#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(EMBCON_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return std::string(EMBCON_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

// Second whitespace-separated token of the first line, as an integer.
int value_of(const std::string& text) {
    std::istringstream ss(first_line(text));
    std::string word;
    int value = -1;
    ss >> word >> value;
    REQUIRE(ss);
    return value;
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() /
               ("embcon_cli_test_" + std::to_string(getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("validate speaks plainly and uses the exit codes") {
    CliResult ok = run_cli("validate " + fixture("grid3.egf"));
    CHECK(ok.code == 0);
    CHECK(first_line(ok.out).rfind("valid", 0) == 0);
    CHECK(run_cli("validate " + fixture("bad_syntax.egf")).code == 3);
    CHECK(run_cli("validate " + fixture("bad_crossing.egf")).code == 2);
    CHECK(run_cli("validate /nonexistent/nothing.egf").code == 2);
    CHECK(run_cli("frobnicate x").code == 64);
    CHECK(run_cli("generate grid").code == 64);  // missing parameters
}

TEST_CASE("faces and ribbon radius reports") {
    CliResult faces = run_cli("faces " + fixture("grid3.egf"));
    CHECK(faces.code == 0);
    CHECK(first_line(faces.out) == "faces 5");
    CliResult mu = run_cli("ribbon-radius " + fixture("grid3.egf"));
    CHECK(mu.code == 0);
    CHECK(first_line(mu.out) == "mu 1");
    CliResult per = run_cli("ribbon-radius --per-crossing " +
                            fixture("k5_onecross.egf"));
    CHECK(per.code == 0);
    CHECK(first_line(per.out) == "mu 2");
    CHECK(per.out.find("crossing 5 mu 1") != std::string::npos);
}

TEST_CASE("connectivity text and json outputs") {
    CliResult text = run_cli("connectivity vertex " + fixture("grid3.egf"));
    CHECK(text.code == 0);
    CHECK(first_line(text.out) == "kappa 2");
    CHECK(text.out.find("\ncut ") != std::string::npos);

    CliResult js = run_cli("connectivity vertex --json " + fixture("grid3.egf"));
    CHECK(js.code == 0);
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("kappa").get<int>() == 2);
    CHECK(doc.at("mode").get<std::string>() == "dp");
    CHECK(doc.at("cut").size() == 2);
    CHECK(doc.at("certificate").contains("mu"));

    CliResult lam = run_cli("connectivity edge " + fixture("k5_onecross.egf"));
    CHECK(lam.code == 0);
    CHECK(first_line(lam.out) == "lambda 4");

    CliResult triv =
        run_cli("connectivity vertex --json " + fixture("k5_onecross.egf"));
    auto tdoc = nlohmann::json::parse(triv.out);
    CHECK(tdoc.at("mode").get<std::string>() == "trivial");
}

TEST_CASE("search and oracle agree on the fixture corpus") {
    for (const std::string name :
         {"grid3.egf", "cycle5.egf", "k5_onecross.egf"}) {
        INFO(name);
        for (const std::string mode : {"vertex", "edge"}) {
            CliResult fast =
                run_cli("connectivity " + mode + " " + fixture(name));
            CliResult slow = run_cli("oracle " + mode + " " + fixture(name));
            REQUIRE(fast.code == 0);
            REQUIRE(slow.code == 0);
            CHECK(value_of(fast.out) == value_of(slow.out));
        }
    }
}

TEST_CASE("generate writes valid canonical files") {
    auto dir = scratch_dir();
    auto out = (dir / "c74.egf").string();
    CHECK(run_cli("generate clique-in-face 7 4 -o " + out).code == 0);
    CHECK(run_cli("validate " + out).code == 0);
    auto planted = (dir / "planted.egf").string();
    CHECK(run_cli("generate counterexample 4 2 1 -o " + planted).code == 0);
    CHECK(run_cli("validate " + planted).code == 0);
    // Stdout generation matches the checked-in fixture byte for byte.
    CliResult grid = run_cli("generate grid 3 3");
    CHECK(grid.code == 0);
    CHECK(grid.out == read_file(fixture("grid3.egf")));
    std::filesystem::remove_all(dir);
}

TEST_CASE("bench prints one row per size plus the scaling summary") {
    CliResult res = run_cli("bench grid --sizes 4,6,8");
    REQUIRE(res.code == 0);
    std::istringstream ss(res.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(ss, line))
        if (!line.empty()) lines.push_back(line);
    REQUIRE(lines.size() >= 5);
    CHECK(lines[0].rfind("class", 0) == 0);
    for (int i = 1; i <= 3; ++i) CHECK(lines[i].rfind("grid ", 0) == 0);
    CHECK(lines.back().rfind("ratio-of-ratios", 0) == 0);
}

TEST_CASE("debug dump leaves dot and pace files behind") {
    auto dir = scratch_dir() / "dump";
    CliResult res = run_cli("connectivity vertex " + fixture("grid3.egf") +
                            " --debug-dump " + dir.string());
    REQUIRE(res.code == 0);
    CHECK(std::filesystem::exists(dir / "radial.dot"));
    bool slice_dot = false, slice_td = false;
    for (auto& e : std::filesystem::directory_iterator(dir)) {
        auto n = e.path().filename().string();
        if (n.rfind("slice_", 0) == 0 && n.find(".dot") != std::string::npos)
            slice_dot = true;
        if (n.rfind("slice_", 0) == 0 && n.find(".td") != std::string::npos)
            slice_td = true;
    }
    CHECK(slice_dot);
    CHECK(slice_td);
    std::filesystem::remove_all(dir.parent_path());
}
