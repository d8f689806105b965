#include <doctest.h>

#include <filesystem>

#include "hopfsmith/fixtures.hpp"
#include "hopfsmith/io.hpp"

using namespace hopfsmith;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() { return fs::path(HOPFSMITH_DATA); }

bool same_bialgebra(const Bialgebra& a, const Bialgebra& b) {
    return a.n == b.n && a.F == b.F && a.grading == b.grading && a.braiding == b.braiding && a.m == b.m &&
           a.u == b.u && a.delta == b.delta && a.eps == b.eps;
}

}  // namespace

TEST_CASE("built-in presentations round trip exactly") {
    for (std::string n : {"point", "globe0", "globe1", "globe2", "globe3", "globe4", "mnd", "adj", "o2", "eo2"}) {
        auto P = builtin_presentation(n);
        REQUIRE_MESSAGE(P.has_value(), n);
        json j = pointed_json(*P);
        PointedPresentation back = pointed_from_json(j);
        CHECK(pointed_json(back).dump() == j.dump());
        CHECK(back.base.census() == P->base.census());
        CHECK(back.basepoint == P->basepoint);
    }
    CHECK_FALSE(builtin_presentation("nope").has_value());
}

TEST_CASE("gray products round trip") {
    GrayProduct G = gray(mnd().base, mnd().base);
    json j = presentation_json(G.pres);
    CHECK(presentation_json(presentation_from_json(j)).dump() == j.dump());
    CHECK(presentation_from_json(j).rels.size() == G.pres.rels.size());
}

TEST_CASE("data files parse and re-serialize bit-exactly") {
    int seen = 0;
    for (auto& e : fs::directory_iterator(data_dir())) {
        std::string f = e.path().filename().string();
        json j = read_json(e.path());
        if (f.rfind("family", 0) == 0) {
            GeneratingFamily F = family_from_json(j, data_dir());
            CHECK(!F.comodules.empty());
        } else if (f.rfind("retract", 0) == 0) {
            CHECK(retract_json(retract_from_json(j)).dump() == j.dump());
        } else if (j.contains("generators")) {
            CHECK_MESSAGE(pointed_json(pointed_from_json(j)).dump() == j.dump(), f);
        } else {
            CHECK_MESSAGE(bialgebra_json(bialgebra_from_json(j)).dump() == j.dump(), f);
        }
        seen++;
    }
    CHECK(seen >= 12);
}

TEST_CASE("bialgebra files match the fixtures") {
    CHECK(same_bialgebra(load_bialgebra((data_dir() / "sweedler.json").string()), sweedler()));
    CHECK(same_bialgebra(load_bialgebra((data_dir() / "superline.json").string()), super_line()));
    CHECK(same_bialgebra(load_bialgebra("s3"), group_s3()));
    CHECK(same_bialgebra(load_bialgebra("Q[Z/2]"), group_z2()));
    Bialgebra T = taft3();
    Bialgebra back = bialgebra_from_json(bialgebra_json(T));
    CHECK(same_bialgebra(back, T));
    CHECK(back.F->degree() == 2);
}

TEST_CASE("the generic retract round trips") {
    RetractRecord R = generic_retract();
    json j = retract_json(R);
    RetractRecord back = retract_from_json(j);
    CHECK(retract_json(back).dump() == j.dump());
    CHECK(check_retract(back).empty());
    CHECK(retract_json(retract_from_json(read_json(data_dir() / "retract_generic.json"))).dump() == j.dump());
}

TEST_CASE("families") {
    GeneratingFamily F = load_family((data_dir() / "family_z2.json").string());
    CHECK(F.H.n == 2);
    CHECK(F.comodules.size() == 1);
    CHECK(F.depth == 2);
    json j = family_json(F);
    GeneratingFamily back = family_from_json(j);
    CHECK(back.comodules[0].rho == F.comodules[0].rho);

    json k = {{"bialgebra", "sweedler"}, {"comodules", {"regular", "trivial"}}};
    GeneratingFamily G = family_from_json(k);
    CHECK(G.comodules.size() == 2);
    CHECK(G.comodules[1].d == 1);
    CHECK(load_family("z2").comodules.size() == 1);
}

TEST_CASE("malformed input raises IoError") {
    CHECK_THROWS_AS(read_json(data_dir() / "missing.json"), IoError);
    CHECK_THROWS_AS(load_bialgebra("nonexistent"), IoError);
    CHECK_THROWS_AS(load_presentation("nonexistent"), IoError);

    json b = bialgebra_json(group_z2());
    json bad = b;
    bad["m"][0].erase(0);
    CHECK_THROWS_AS(bialgebra_from_json(bad), IoError);
    bad = b;
    bad["grading"] = {0, 2};
    CHECK_THROWS_AS(bialgebra_from_json(bad), IoError);
    bad = b;
    bad["braiding"] = "twist";
    CHECK_THROWS_AS(bialgebra_from_json(bad), IoError);
    bad = b;
    bad["m"][0][0] = 1.5;
    CHECK_THROWS_AS(bialgebra_from_json(bad), IoError);
    bad = b;
    bad.erase("delta");
    CHECK_THROWS_AS(bialgebra_from_json(bad), IoError);

    json p = pointed_json(mnd());
    p["basepoint"] = "A";
    CHECK_THROWS_AS(pointed_from_json(p), IoError);
    p = pointed_json(mnd());
    p["generators"][2]["src"] = "(gen zz)";
    CHECK_THROWS_AS(pointed_from_json(p), IoError);

    json f = {{"bialgebra", "z2"}, {"comodules", {{{"dim", 1}, {"rho", {{"1"}, {"1"}}}}}}};
    CHECK_THROWS_AS(family_from_json(f), IoError);
    f = {{"bialgebra", "z2"}, {"comodules", {"sideways"}}};
    CHECK_THROWS_AS(family_from_json(f), IoError);
}

TEST_CASE("run report exit contract") {
    RunReport r;
    CHECK(r.exit_code() == 0);
    r.check("a", true);
    CHECK(r.exit_code() == 0);
    r.record("b", "unknown", "budget");
    CHECK(r.exit_code() == 2);
    r.check("c", false, "(0,1): 1 vs 2");
    CHECK(r.exit_code() == 1);
    CHECK_THROWS_AS(r.record("d", "maybe"), IoError);

    json j = r.to_json({"census", "mnd"}, std::nullopt);
    CHECK(j["exit"] == 1);
    CHECK_FALSE(j.contains("timing_ms"));
    CHECK(j["checks"].size() == 3);
    CHECK(j["checks"][2]["status"] == "fail");
    CHECK(r.to_json({"x"}, 1.5).contains("timing_ms"));
}

TEST_CASE("write then read") {
    fs::path p = fs::temp_directory_path() / "hopfsmith_io_test.json";
    json j = bialgebra_json(sweedler());
    write_json(p, j);
    CHECK(read_json(p) == j);
    fs::remove(p);
}
