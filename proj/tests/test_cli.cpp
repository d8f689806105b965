#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfsmith/io.hpp"

using namespace hopfsmith;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(HOPFSMITH_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

json run_json(const std::string& args, int expect) {
    Run r = run("--json --no-timing " + args);
    CHECK_MESSAGE(r.code == expect, args);
    return json::parse(r.out);
}

std::string data(const std::string& f) { return (fs::path(HOPFSMITH_DATA) / f).string(); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// exit code implied by the statuses of the checks
int implied(const json& j) {
    bool unknown = false;
    for (auto& c : j["checks"]) {
        if (c["status"] == "fail") return 1;
        if (c["status"] == "unknown") unknown = true;
    }
    return unknown ? 2 : 0;
}

}  // namespace

TEST_CASE("census and products") {
    CHECK(run_json("census " + data("point.json"), 0)["data"]["census"] == json({1}));
    CHECK(run_json("gray " + data("globe1.json") + " " + data("globe1.json"), 0)["data"]["census"] ==
          json({4, 4, 1}));
    CHECK(run_json("gray mnd mnd", 0)["data"]["census"] == json({1, 2, 5, 4, 4}));
    json s = run_json("smash " + data("mnd.json") + " " + data("mnd.json"), 0);
    CHECK(s["data"]["census"] == json({1, 0, 1, 4, 4}));
    CHECK(s["data"]["basepoint"] == "o*o");
}

TEST_CASE("product output files") {
    fs::path dir = fs::temp_directory_path() / "hopfsmith_cli_test";
    fs::create_directories(dir);
    fs::path out = dir / "g.json", dot = dir / "g.dot";
    run_json("gray mnd mnd -o " + out.string() + " --dot " + dot.string(), 0);
    PointedPresentation G = pointed_from_json(read_json(out));
    CHECK(G.base.census() == std::vector<int>{1, 2, 5, 4, 4});
    std::string d = slurp(dot);
    CHECK(d.rfind("digraph", 0) == 0);
    CHECK(d.find("\"m*m\"") != std::string::npos);
    CHECK(run_json("census " + out.string(), 0)["data"]["census"] == json({1, 2, 5, 4, 4}));
    fs::remove_all(dir);
}

TEST_CASE("linear subcommands") {
    for (std::string b : {"z2", "s3", "fz3", "monoid", "sweedler", "superline"}) {
        json j = run_json("shear-check " + data(b + ".json"), 0);
        CHECK(implied(j) == 0);
    }
    json c = run_json("shear-check " + data("corrupted_z2.json"), 1);
    CHECK(implied(c) == 1);
    json a = run_json("antipode " + data("sweedler.json"), 0);
    CHECK(a["data"]["S_order"] == 4);
    json m = run_json("antipode " + data("monoid.json"), 0);
    CHECK(m["data"]["hopf"] == false);
    run_json("integrals " + data("s3.json"), 0);
}

TEST_CASE("reconstruct") {
    run_json("reconstruct " + data("family_z2.json"), 0);
    run_json("reconstruct " + data("family_sweedler.json"), 0);
    run_json("reconstruct " + data("family_z2.json") + " --reference " + data("corrupted_z2.json"), 1);
    run_json("reconstruct " + data("family_z2_trivial.json"), 1);
    json j = run_json("reconstruct " + data("family_z2_sign.json"), 1);
    bool closure = false;
    for (auto& c : j["checks"])
        if (c.contains("witness") && c["witness"].get<std::string>().find("closure") != std::string::npos)
            closure = true;
    CHECK(closure);
}

TEST_CASE("proof skeleton") {
    json j = run_json("proof-skeleton", 0);
    CHECK(j["data"].contains("counts"));
    run_json("proof-skeleton --mutate 3", 1);
}

TEST_CASE("usage and input errors exit 64") {
    CHECK(run("").code == 64);
    CHECK(run("bogus").code == 64);
    CHECK(run("census").code == 64);
    CHECK(run("census " + data("nofile.json")).code == 64);
    CHECK(run("--budget notanumber census mnd").code == 64);
}

TEST_CASE("exit code agrees with the reported statuses") {
    for (auto& e : fs::directory_iterator(HOPFSMITH_DATA)) {
        std::string f = e.path().filename().string();
        if (f.rfind("family", 0) == 0 || f.rfind("retract", 0) == 0) continue;
        json j = read_json(e.path());
        if (j.contains("generators")) continue;
        Run r = run("--json --no-timing shear-check " + e.path().string());
        json out = json::parse(r.out);
        CHECK_MESSAGE(r.code == implied(out), f);
        CHECK(out["exit"] == r.code);
    }
}

TEST_CASE("json output is deterministic") {
    std::vector<std::string> cases = {"gray mnd mnd", "shear-check " + data("s3.json"),
                                      "reconstruct " + data("family_z2.json"), "proof-skeleton"};
    for (auto& args : cases) {
        Run a = run("--json --no-timing " + args), b = run("--json --no-timing " + args);
        CHECK(a.out == b.out);
        CHECK(a.out.find("timing_ms") == std::string::npos);
    }
    CHECK(run("--json census mnd").out.find("timing_ms") != std::string::npos);
}

TEST_CASE("prose output") {
    Run r = run("shear-check " + data("corrupted_z2.json"));
    CHECK(r.code == 1);
    CHECK(r.out.find("[fail]") != std::string::npos);
}
