#include <doctest.h>

#include <chrono>

#include "hopfsmith/evaluate.hpp"
#include "hopfsmith/fixtures.hpp"
#include "hopfsmith/walking.hpp"

using namespace hopfsmith;

namespace {

// For a monoid algebra: g (x) h -> gh (x) g, straight from the table.
Matrix monoid_ne(const Bialgebra& B) {
    std::size_t n = B.n;
    Matrix M(B.F, n * n, n * n);
    for (std::size_t g = 0; g < n; g++)
        for (std::size_t h = 0; h < n; h++) {
            Matrix gh = B.m * kron(Matrix::unit_column(B.F, n, g), Matrix::unit_column(B.F, n, h));
            for (std::size_t k = 0; k < n; k++)
                if (!gh(k, 0).is_zero()) M.at(k * n + g, g * n + h) = gh(k, 0);
        }
    return M;
}

}  // namespace

TEST_CASE("universal shear evaluates to the NE shear") {
    auto t0 = std::chrono::steady_clock::now();
    UniversalShear U = universal_shear();
    auto fx = fixture_bialgebras();
    CHECK(fx.size() >= 6);
    for (auto& B : fx) {
        Matrix e = evaluate_diagram(U.gray.pres, U.cell, bimonad_context(B));
        CHECK_MESSAGE(e == shear(B, ShearDir::NE), B.name);
    }
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 5.0);
}

TEST_CASE("NE shear against the monoid table") {
    for (auto B : {group_z2(), group_s3(), idempotent_monoid()}) CHECK(shear(B, ShearDir::NE) == monoid_ne(B));
}

TEST_CASE("evaluation is functorial on the two shear steps") {
    UniversalShear U = universal_shear();
    for (auto& B : fixture_bialgebras()) {
        EvalContext ctx = bimonad_context(B);
        Matrix I = id_of(B);
        Matrix e1 = evaluate_diagram(U.gray.pres, U.step1, ctx), e2 = evaluate_diagram(U.gray.pres, U.step2, ctx);
        CHECK(e1 == kron(B.delta, I));
        CHECK(e2 == kron(B.m, I) * kron(I, braid(B)));
        CHECK(e2 * e1 == evaluate_diagram(U.gray.pres, U.cell, ctx));
    }
}

TEST_CASE("identities evaluate to identities") {
    UniversalShear U = universal_shear();
    for (auto& B : fixture_bialgebras()) {
        Matrix e = evaluate_diagram(U.gray.pres, id(U.left_picture), bimonad_context(B));
        CHECK(e.is_identity());
        CHECK(e.rows() == B.n * B.n);
    }
}

TEST_CASE("factor permutations") {
    Bialgebra B = group_z2();
    CHECK(factor_permutation(B, {1, 0}) == braid(B));
    CHECK(factor_permutation(B, {0, 1, 2}).is_identity());
    CHECK(identity_power(B, 3).rows() == 8);
    Bialgebra S = super_line();
    Matrix br = factor_permutation(S, {1, 0});
    // theta (x) theta picks up a sign
    CHECK(br(3, 3) == Scalar(Field::rationals(), -1L));
    CHECK((br * br).is_identity());
}

TEST_CASE("evaluation rejects cells of the wrong dimension") {
    UniversalShear U = universal_shear();
    CHECK_THROWS_AS(evaluate_diagram(U.gray.pres, U.left_picture, bimonad_context(group_z2())), EvalError);
}
