#include <doctest.h>

#include <chrono>

#include "hopfsmith/fixtures.hpp"
#include "hopfsmith/tannaka.hpp"

using namespace hopfsmith;

namespace {

const Field* Q = Field::rationals();

// Q[Z/2]-comodule as a Z/2-graded space: degree of each basis vector.
Comodule graded(const Bialgebra& H, const std::vector<int>& deg) {
    Comodule M;
    M.d = deg.size();
    M.rho = Matrix(Q, H.n * M.d, M.d);
    for (std::size_t j = 0; j < M.d; j++) M.rho.set(static_cast<std::size_t>(deg[j]) * M.d + j, j, 1);
    return M;
}

// graded maps between graded spaces: sum over degrees of products of multiplicities
std::size_t graded_hom_dim(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t n = 0;
    for (int p = 0; p < 2; p++) {
        std::size_t x = 0, y = 0;
        for (int d : a) x += d == p;
        for (int d : b) y += d == p;
        n += x * y;
    }
    return n;
}

}  // namespace

TEST_CASE("regular and trivial comodules are valid") {
    for (auto& H : fixture_bialgebras()) {
        if (H.braiding == Braiding::Koszul) continue;
        CHECK_MESSAGE(comodule_problems(H, regular_comodule(H)).empty(), H.name);
        CHECK(comodule_problems(H, trivial_comodule(H, 2)).empty());
    }
}

TEST_CASE("an invalid coaction is reported") {
    Bialgebra H = group_z2();
    Comodule M;
    M.d = 1;
    M.rho = Matrix::from_ints(Q, {{1}, {1}});
    CHECK_FALSE(comodule_problems(H, M).empty());
}

TEST_CASE("hom spaces over Q[Z/2] follow the grading") {
    Bialgebra H = group_z2();
    Comodule R = regular_comodule(H), T = trivial_comodule(H);
    Comodule RR = tensor_comodule(H, R, R);
    CHECK(comodule_problems(H, RR).empty());
    CHECK(comodule_hom(H, R, R).size() == 2);
    CHECK(comodule_hom(H, T, R).size() == 1);
    CHECK(comodule_hom(H, RR, R).size() == 4);
    CHECK(comodule_hom(H, R, RR).size() == 4);
    CHECK(comodule_hom(H, RR, RR).size() == 8);

    // compare against the grading oracle on a few graded spaces
    std::vector<std::vector<int>> spaces = {{0}, {1}, {0, 1}, {0, 0, 1}, {1, 1, 0, 1}};
    for (auto& a : spaces)
        for (auto& b : spaces) CHECK(comodule_hom(H, graded(H, a), graded(H, b)).size() == graded_hom_dim(a, b));
}

TEST_CASE("comodule maps intertwine") {
    Bialgebra H = group_s3();
    Comodule R = regular_comodule(H);
    auto hom = comodule_hom(H, R, R);
    CHECK(hom.size() == H.n);
    Matrix I = Matrix::identity(Q, H.n);
    for (auto& phi : hom) CHECK(kron(I, phi) * R.rho == R.rho * phi);
}

TEST_CASE("dual comodules") {
    Bialgebra H = group_s3();
    Comodule D = dual_comodule(H, regular_comodule(H));
    CHECK(comodule_problems(H, D).empty());
    CHECK(D.d == H.n);
    CHECK_THROWS_AS(dual_comodule(idempotent_monoid(), regular_comodule(idempotent_monoid())), NoAntipode);
}

TEST_CASE("round trips") {
    auto t0 = std::chrono::steady_clock::now();
    for (auto H : {group_z2(), group_s3(), sweedler(), idempotent_monoid(), functions_z3()}) {
        RoundTrip r = round_trip(H, 2);
        CHECK_MESSAGE(r.rec.isomorphism, H.name);
        CHECK(r.flags_agree());
        CHECK(r.ok());
        CHECK(r.rec.B.n == H.n);
        CHECK(check_bialgebra(r.rec.B).ok());
        CHECK(r.rec.coalgebra_map);
        CHECK(r.rec.bialgebra_map);
        CHECK(r.rec.B.n <= r.rec.presented_dim);
        CHECK(r.hopf_in == is_hopf(H));
    }
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 30.0);
}

TEST_CASE("a corrupted reference is not isomorphic") {
    GeneratingFamily F{group_z2(), {regular_comodule(group_z2())}, 2};
    Bialgebra bad = group_z2();
    bad.m.set(1, 3, 0);
    bad.m.set(0, 3, 0);
    Reconstruction r = coend_reconstruct(F, bad);
    CHECK(r.coalgebra_map);
    CHECK_FALSE(r.bialgebra_map);
    CHECK_FALSE(r.isomorphism);
}

TEST_CASE("the trivial family reconstructs the ground field") {
    Bialgebra H = group_z2();
    GeneratingFamily F{H, {trivial_comodule(H)}, 2};
    Reconstruction r = coend_reconstruct(F);
    CHECK(r.B.n == 1);
    CHECK_FALSE(r.isomorphism);
    CHECK(check_bialgebra(r.B).ok());
}

TEST_CASE("adding the trivial comodule does not change the coend") {
    Bialgebra H = sweedler();
    GeneratingFamily F1{H, {regular_comodule(H)}, 2};
    GeneratingFamily F2{H, {regular_comodule(H), trivial_comodule(H)}, 2};
    Reconstruction a = coend_reconstruct(F1), b = coend_reconstruct(F2);
    CHECK(a.B.n == b.B.n);
    CHECK(b.isomorphism);
    CHECK(b.presented_dim == a.presented_dim + 1);
}

TEST_CASE("closure failures name the product") {
    Bialgebra H = group_z2();
    GeneratingFamily F{H, {graded(H, {1})}, 2};
    try {
        coend_reconstruct(F);
        FAIL("expected a closure failure");
    } catch (const TannakaError& e) {
        CHECK(std::string(e.what()).find("closure") != std::string::npos);
    }
}

TEST_CASE("unsupported inputs throw") {
    Bialgebra H = group_z2();
    CHECK_THROWS_AS(coend_reconstruct(GeneratingFamily{H, {regular_comodule(H)}, 1}), TannakaError);
    Bialgebra S = super_line();
    CHECK_THROWS_AS(round_trip(S, 2), TannakaError);
}
