#include <doctest.h>

#include <chrono>

#include "hopfsmith/walking.hpp"

using namespace hopfsmith;

TEST_CASE("globes and their boundaries") {
    CHECK(globe(0).census() == std::vector<int>{1});
    CHECK(globe(2).census() == std::vector<int>{2, 2, 1});
    CHECK(globe(4).census() == std::vector<int>{2, 2, 2, 2, 1});
    CHECK(boundary_globe(3).census() == std::vector<int>{2, 2, 2});
    CHECK(boundary_globe(0).gens.empty());
    CHECK_THROWS(globe(5));
    CHECK_THROWS(globe(-1));
    for (int n = 0; n <= 4; n++) CHECK(validate_presentation(globe(n)).empty());
}

TEST_CASE("suspension") {
    Presentation S1 = suspend(globe(1)), G2 = globe(2);
    CHECK(S1.census() == G2.census());
    CHECK(validate_presentation(S1).empty());
    // the top cell goes between the two parallel 1-cells in both
    for (const Presentation* P : {&S1, &G2}) {
        auto top = P->of_dim(2).front();
        CHECK(top->src->dim == 1);
        CHECK(eq(*P, boundary(*P, top->src, Side::Source, 0), boundary(*P, top->tgt, Side::Source, 0)) ==
              Verdict::Equal);
    }
    CHECK(suspend(Presentation{}).census() == std::vector<int>{2});

    Presentation M1;  // Mnd cut at dimension 1
    for (auto& g : mnd().base.gens)
        if (g.dim <= 1) M1.add(g);
    CHECK(suspend(M1).census() == std::vector<int>{2, 1, 1});
    CHECK_THROWS(suspend(globe(4)));
    CHECK(suspend(suspend(point())).census() == globe(2).census());
}

TEST_CASE("walking structures") {
    PointedPresentation M = mnd(), A = adj();
    CHECK(M.base.census() == std::vector<int>{1, 1, 2});
    CHECK(M.base.rels.size() == 3);
    CHECK(A.base.census() == std::vector<int>{2, 2, 2});
    CHECK(A.base.rels.size() == 2);
    CHECK(A.basepoint == "a");
    CHECK(same(A.base.at("l").src, A.base.g("a")));
    CHECK(oriental2().census() == std::vector<int>{3, 3, 1});
    CHECK(e_oriental2().census() == std::vector<int>{5, 5, 1});
    for (auto& r : A.base.rels) CHECK(eq(A.base, r.lhs, r.rhs) == Verdict::Equal);
}

TEST_CASE("proof skeleton chain") {
    auto t0 = std::chrono::steady_clock::now();
    SkeletonReport r = proof_skeleton_check();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(r.composable);
    CHECK(r.boundary_matches);
    CHECK(r.failed_step == -1);
    CHECK(r.shear_matches_universal);
    CHECK(r.counts["L"] >= 2);
    CHECK(r.counts["R"] >= 2);
    CHECK(r.counts["four-cell"] >= 1);
    CHECK(r.counts["collapse-trivial"] >= 1);
    CHECK(s < 10.0);
    for (auto& st : r.steps) {
        if (st.cls == CellClass::LType || st.cls == CellClass::RType) CHECK(st.adjunctible);
        if (st.cls == CellClass::FourCell) CHECK(st.span > 0);
    }
}

TEST_CASE("every single-step mutation fails at that step") {
    SkeletonChain c = skeleton_chain();
    REQUIRE(!c.steps.empty());
    for (std::size_t i = 0; i < c.steps.size(); i++) {
        SkeletonReport r = check_chain(mutate_chain(c, i));
        CHECK_FALSE(r.composable);
        CHECK(r.failed_step == static_cast<int>(i));
        CHECK_FALSE(r.undecided);
    }
}

TEST_CASE("an empty chain is vacuously consistent") {
    SkeletonChain c = skeleton_chain();
    c.steps.clear();
    c.target = c.source;
    SkeletonReport r = check_chain(c);
    CHECK(r.composable);
    CHECK(r.boundary_matches);
    CHECK(r.counts.empty());
}

TEST_CASE("layers3 splits whiskered composites") {
    GrayProduct G = gray(oriental2(), oriental2());
    TermP mm = G.pres.g("mu*mu");
    CHECK(layers3(G.pres, boundary(G.pres, mm, Side::Source, 3)).size() == 4);
    CHECK(layers3(G.pres, boundary(G.pres, mm, Side::Target, 3)).size() == 2);
    TermP xmu = G.pres.g("x*mu");
    auto inv_layers = layers3(G.pres, inv(xmu));
    REQUIRE(inv_layers.size() == 1);
    CHECK(inv_layers[0]->kind == Kind::Inv);
}
