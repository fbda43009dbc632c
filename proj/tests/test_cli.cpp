#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Exercises the installed exit-code contract of the command-line tool:
// 0 success, 1 parse/usage, 2 fan invalid, 3 not cellular/complete,
// 4 class not a member.

namespace {

namespace fs = std::filesystem;

std::string data(const std::string& name) {
    return std::string(TKRING_DATA_DIR) + "/" + name;
}

int run(const std::string& args, std::string* output = nullptr) {
    fs::path tmp = fs::temp_directory_path() / "tkring_cli_out.txt";
    std::string cmd = std::string(TKRING_CLI_PATH) + " " + args + " > " +
                      tmp.string() + " 2> /dev/null";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(tmp);
        std::stringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    return WEXITSTATUS(status);
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("validate exit codes") {
    REQUIRE(run("validate --fan " + data("ex36.json")) == 0);

    fs::path overlap = write_temp("tkring_overlap.json", R"({
      "rank": 2,
      "rays": [[1, 0], [1, 1], [0, 1]],
      "max_cones": [[0, 1], [0, 2]]
    })");
    std::string out;
    REQUIRE(run("validate --fan " + overlap.string(), &out) == 2);
    REQUIRE(out.find("\"valid\": false") != std::string::npos);

    fs::path broken = write_temp("tkring_broken.json", "{ not json");
    REQUIRE(run("validate --fan " + broken.string()) == 1);

    REQUIRE(run("validate --fan /nonexistent/fan.json") == 1);
    REQUIRE(run("frobnicate --fan x") == 1);
}

TEST_CASE("cellular exit codes and v handling") {
    REQUIRE(run("cellular --fan " + data("ex36.json")) == 0);
    REQUIRE(run("cellular --fan " + data("rem37.json")) == 3);
    // flag overrides the document
    REQUIRE(run("cellular --fan " + data("ex36.json") + " --v 3,1") == 3);

    fs::path no_v = write_temp("tkring_nov.json", R"({
      "rank": 2,
      "rays": [[1, 0], [0, 1]],
      "max_cones": [[0, 1]]
    })");
    REQUIRE(run("cellular --fan " + no_v.string()) == 1);
    REQUIRE(run("cellular --fan " + no_v.string() + " --v 1,2") == 0);
    REQUIRE(run("cellular --fan " + no_v.string() + " --v 1,banana") == 1);
}

TEST_CASE("completeness exit codes") {
    REQUIRE(run("complete --fan " + data("ex6.json")) == 0);
    REQUIRE(run("complete --fan " + data("ex36.json")) == 3);
}

TEST_CASE("k-ring commands require a complete cellular fan") {
    REQUIRE(run("gkm --fan " + data("ex6.json")) == 0);
    std::string rejection;
    REQUIRE(run("gkm --fan " + data("ex36.json"), &rejection) == 3);
    REQUIRE(rejection.find("\"condition\": \"not complete\"") != std::string::npos);
    REQUIRE(run("basis --fan " + data("ex6.json")) == 0);
    REQUIRE(run("structconst --fan " + data("ex6.json")) == 0);
    REQUIRE(run("basis --fan " + data("ex6.json") + " --v 4,1") == 3);
}

TEST_CASE("class file commands") {
    for (int i = 1; i <= 5; ++i) {
        std::string cf = data("ex6_f" + std::to_string(i) + ".json");
        REQUIRE(run("plp --fan " + data("ex6.json") + " --class " + cf) == 0);
        REQUIRE(run("coords --fan " + data("ex6.json") + " --class " + cf) == 0);
    }

    fs::path bad = write_temp("tkring_badclass.json", R"({
      "rank": 2,
      "components": [[{"c": 1, "e": [0, 0]}], [], [], [], []]
    })");
    std::string out;
    REQUIRE(run("coords --fan " + data("ex6.json") + " --class " + bad.string(), &out) == 4);
    REQUIRE(out.find("violated_edges") != std::string::npos);

    REQUIRE(run("coords --fan " + data("ex6.json")) == 1);  // --class required
}

TEST_CASE("output is byte-identical across runs and --out matches stdout") {
    std::string a, b;
    REQUIRE(run("basis --fan " + data("ex6.json"), &a) == 0);
    REQUIRE(run("basis --fan " + data("ex6.json"), &b) == 0);
    REQUIRE(a == b);
    REQUIRE_FALSE(a.empty());
    REQUIRE(a.back() == '\n');

    fs::path out_file = fs::temp_directory_path() / "tkring_basis_out.json";
    REQUIRE(run("basis --fan " + data("ex6.json") + " --out " + out_file.string()) == 0);
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    REQUIRE(ss.str() == a);
}

TEST_CASE("published coordinates come out triangular through the pipeline") {
    std::string out;
    REQUIRE(run("coords --fan " + data("ex6.json") + " --class " + data("ex6_f2.json"),
                &out) == 0);
    // position 2 carries the unit, later positions vanish
    REQUIRE(out.find("\"coordinates\"") != std::string::npos);
    auto pos = out.find("\"coordinates\"");
    REQUIRE(out.find("\"c\": 1", pos) != std::string::npos);
}
