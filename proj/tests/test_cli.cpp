#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Gamma(3)/Gamma(9/4): the D^{3/4} image of t^2 at t = 1
constexpr double kG3OverG94 = 1.7652202421133396119;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(FRACQ_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (const std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    fs::path path = fs::temp_directory_path() / ("fracq_cli_" + std::to_string(getpid()));
    TempDir() { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verify") {
    const auto r = run("verify --no-timestamp");
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["rows"].size() >= 12);
    std::string prev;
    for (const auto& row : j["rows"]) {
        CHECK(row["pass"] == true);
        CHECK(row["suite"].get<std::string>() >= prev);
        prev = row["suite"].get<std::string>();
    }
    CHECK(run("verify --no-timestamp").out == r.out);
    CHECK(json::parse(run("verify").out).contains("timestamp"));

    const auto csv = run("verify --format csv");
    CHECK(csv.out.rfind("suite,anchor,residual,tolerance,pass\n", 0) == 0);
    CHECK(csv.out.find(",false") == std::string::npos);

    CHECK(run("verify --tolerance 1e-30").code == 1);
}

TEST_CASE("verify at integer order adds the classical reduction") {
    TempDir dir;
    write(dir.file("c.json"), R"({"orders": [1, 1, 1]})");
    const auto r = run("verify --format csv --config " + dir.file("c.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("classical-reduction,maxwell,") != std::string::npos);
    CHECK(run("verify --format csv").out.find("classical-reduction") == std::string::npos);
}

TEST_CASE("manufacture and residual") {
    TempDir dir;
    const auto a = dir.file("a.json"), b = dir.file("b.json");
    REQUIRE(run("manufacture --seed 42 --out " + a).code == 0);
    REQUIRE(run("manufacture --seed 42 --out " + b).code == 0);
    CHECK(read(a) == read(b));
    REQUIRE(run("manufacture --seed 43 --out " + b).code == 0);
    CHECK(read(a) != read(b));

    const auto ok = run("residual --no-timestamp --system maxwell --fields " + a);
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["rows"].size() == 5);

    // add t1^2 to E1: Div E picks up Gamma(3)/Gamma(9/4) t1^{5/4}
    json f = json::parse(read(a));
    bool merged = false;
    for (auto& t : f["E"][0])
        if (t["exp"] == json({"2", "0", "0"})) {
            t["re"] = t["re"].get<double>() + 1.0;
            merged = true;
        }
    if (!merged) f["E"][0].push_back({{"re", 1.0}, {"im", 0.0}, {"exp", {"2", "0", "0"}}});
    write(b, f.dump());
    const auto bad = run("residual --no-timestamp --system maxwell --fields " + b);
    CHECK(bad.code == 1);
    const auto row = json::parse(bad.out)["rows"][0];
    CHECK(row["anchor"] == "div-e");
    CHECK(row["pass"] == false);
    CHECK(row["residual"].get<double>() == doctest::Approx(kG3OverG94).epsilon(1e-12));

    // a small manual edit of one coefficient is caught
    json g = json::parse(read(a));
    g["E"][1][0]["re"] = g["E"][1][0]["re"].get<double>() + 1e-3;
    write(b, g.dump());
    CHECK(run("residual --system maxwell --fields " + b).code == 1);

    write(b, R"({"E": [[], [], []], "B": [[], [], []], "rho": [], "j": [[], [], []]})");
    CHECK(run("residual --system maxwell --fields " + b).code == 0);
    write(b, R"({"psi0": [], "phi": [[], [], []], "theta": [[], [], []], "p0": []})");
    for (const char* s : {"moisil_teodorescu", "generalized_mt", "ideal_fluid", "stokes", "oseen_form1", "oseen_form2"})
        CHECK(run(std::string("residual --system ") + s + " --fields " + b).code == 0);
}

TEST_CASE("oracle") {
    TempDir dir;
    write(dir.file("t2.json"), R"({"field": [{"re": 1, "exp": [2, 0, 0]}]})");
    const auto r = run("oracle --no-timestamp --mu 1/2 --axis 1 --fields " + dir.file("t2.json"));
    CHECK(r.code == 0);
    const auto rows = json::parse(r.out)["rows"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["residual"].get<double>() <= 1e-3);
    CHECK(rows[1]["residual"].get<double>() >= 1.8);

    write(dir.file("c.json"), R"({"field": [{"re": 3, "exp": [0, 0, 0]}]})");
    const auto c = run("oracle --no-timestamp --mu 1/4 --axis 2 --fields " + dir.file("c.json"));
    CHECK(c.code == 0);
    CHECK(json::parse(c.out)["rows"][0]["residual"] == 0.0);

    CHECK(run("oracle --mu 1 --axis 1 --fields " + dir.file("t2.json")).code == 2);
    CHECK(run("oracle --mu 0 --axis 1 --fields " + dir.file("t2.json")).code == 2);
    CHECK(run("oracle --mu 1/2 --axis 0 --fields " + dir.file("t2.json")).code == 2);
}

TEST_CASE("usage and input errors exit 2") {
    TempDir dir;
    write(dir.file("bad.json"), "{\n  \"E\": [[], [], []],\n  \"B\": [\n}\n");
    write(dir.file("deg.json"), R"({"medium": {"g1": 0, "g2": 1, "g3": 1, "omega": 1}})");
    write(dir.file("w0.json"), R"({"medium": {"g1": 1, "g2": 1, "g3": 1, "omega": 0}})");
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify --format xml").code == 2);
    CHECK(run("verify --tolerance -1").code == 2);
    CHECK(run("verify --config " + dir.file("missing.json")).code == 2);
    CHECK(run("verify --config " + dir.file("w0.json")).code == 2);
    CHECK(run("residual --system maxwell --fields " + dir.file("bad.json")).code == 2);
    CHECK(run("residual --system nope --fields " + dir.file("bad.json")).code == 2);
    CHECK(run("residual --system stokes --fields " + dir.file("deg.json")).code == 2);
    CHECK(run("manufacture --out " + dir.file("x.json") + " --config " + dir.file("deg.json")).code == 2);
    CHECK(run("--help").code == 0);

    const std::string cmd = std::string(FRACQ_CLI) + " residual --system maxwell --fields " + dir.file("bad.json") + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    char buf[512] = {};
    const std::size_t n = fread(buf, 1, sizeof buf - 1, p);
    pclose(p);
    CHECK(std::string(buf, n).find("bad.json:4:1: syntax error") != std::string::npos);
}
