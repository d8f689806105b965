#include <doctest.h>

#include <chrono>
#include <random>

#include "hopfsmith/fixtures.hpp"

using namespace hopfsmith;

namespace {

const Field* Q = Field::rationals();

Matrix col(const Bialgebra& B, std::size_t i) { return Matrix::unit_column(B.F, B.n, i); }

// product of basis vectors i and j as a column
Matrix mul(const Bialgebra& B, std::size_t i, std::size_t j) { return B.m * kron(col(B, i), col(B, j)); }

bool proportional(const Matrix& a, const Matrix& b) {
    return rank(hstack({a.rows() == 1 ? a.transpose() : a, b.rows() == 1 ? b.transpose() : b})) == 1;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density) {
    Matrix M(Q, r, c);
    for (std::size_t i = 0; i < r; i++)
        for (std::size_t j = 0; j < c; j++)
            if (static_cast<int>(rng() % 10) < density) M.set(i, j, static_cast<long>(rng() % 7) - 3);
    return M;
}

}  // namespace

TEST_CASE("fixture corpus satisfies the axioms") {
    for (auto& B : fixture_bialgebras()) {
        BialgebraReport r = check_bialgebra(B);
        CHECK_MESSAGE(r.ok(), B.name);
        CHECK(r.failing() == nullptr);
    }
    CHECK(fixture_bialgebras().size() == 6);
}

TEST_CASE("the corrupted fixture fails with a coordinate witness") {
    BialgebraReport r = check_bialgebra(corrupted_z2());
    CHECK_FALSE(r.ok());
    const AxiomResult* f = r.failing();
    REQUIRE(f != nullptr);
    CHECK(f->witness.find('(') != std::string::npos);
    CHECK(f->witness.find("vs") != std::string::npos);
}

TEST_CASE("malformed tensors throw") {
    Bialgebra B = group_z2();
    B.m = Matrix(Q, 2, 3);
    CHECK_THROWS_AS(check_shapes(B), ShapeError);
}

TEST_CASE("Sweedler relations") {
    // basis 1, g, x, gx
    Bialgebra B = sweedler();
    CHECK(mul(B, 1, 1) == col(B, 0));
    CHECK(mul(B, 2, 2).is_zero());
    CHECK(mul(B, 1, 2) == col(B, 3));
    CHECK(mul(B, 2, 1) == col(B, 3).scaled(Scalar(Q, -1L)));
    CHECK(mul(B, 0, 2) == col(B, 2));
    // the relations and associativity pin down the whole table
    CHECK(mul(B, 3, 1) == B.m * kron(mul(B, 1, 2), col(B, 1)));
    CHECK(mul(B, 3, 3).is_zero());
    CHECK(B.eps * col(B, 2) == Matrix(Q, 1, 1));
}

TEST_CASE("SE shear of Q[Z/2] permutes g_i (x) g_j to g_i (x) g_i g_j") {
    Bialgebra B = group_z2();
    Matrix se = shear(B, ShearDir::SE);
    for (std::size_t i = 0; i < 2; i++)
        for (std::size_t j = 0; j < 2; j++)
            CHECK(se.column(i * 2 + j) == Matrix::unit_column(Q, 4, i * 2 + ((i + j) % 2)));
}

TEST_CASE("shear invertibility") {
    auto t0 = std::chrono::steady_clock::now();
    for (auto& B : fixture_bialgebras()) {
        std::size_t full = B.n * B.n;
        bool nw = rank(shear(B, ShearDir::NW)) == full, se = rank(shear(B, ShearDir::SE)) == full;
        bool ne = rank(shear(B, ShearDir::NE)) == full, sw = rank(shear(B, ShearDir::SW)) == full;
        CHECK_MESSAGE(nw == se, B.name);
        CHECK_MESSAGE(ne == sw, B.name);
        CHECK(is_hopf(B) == se);
        CHECK(is_cohopf(B) == ne);
    }
    Bialgebra M = idempotent_monoid();
    for (ShearDir d : {ShearDir::NW, ShearDir::NE, ShearDir::SW, ShearDir::SE}) CHECK(rank(shear(M, d)) == 3);
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 1.0);
}

TEST_CASE("Sweedler shear is invertible") {
    CHECK(det(shear(sweedler(), ShearDir::SE)) != Scalar(Q, 0L));
    CHECK(det(shear(sweedler(), ShearDir::NE)) != Scalar(Q, 0L));
}

TEST_CASE("antipodes") {
    auto t0 = std::chrono::steady_clock::now();
    for (auto& B : fixture_bialgebras()) {
        if (!is_hopf(B)) continue;
        HopfData H = antipode(B);
        CHECK_MESSAGE(convolution_ok(B, H.S), B.name);
        CHECK((shear(B, ShearDir::SE) * shear_inverse_from(B, H.S)).is_identity());
        CHECK((shear_inverse_from(B, H.S) * shear(B, ShearDir::SE)).is_identity());
        auto S2 = antipode_by_convolution(B);
        REQUIRE(S2.has_value());
        CHECK(*S2 == H.S);
        CHECK(antipode_from_integrals(B, integrals(B)) == H.S);
        // coHopf exactly when S is invertible
        CHECK(is_cohopf(B) == inverse(H.S).has_value());
        CHECK(H.Sinv.has_value() == is_cohopf(B));
    }
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 5.0);
}

TEST_CASE("antipode of a group algebra inverts group elements") {
    Bialgebra B = group_s3();
    Matrix S = antipode(B).S;
    for (std::size_t i = 0; i < B.n; i++) CHECK(B.m * kron(col(B, i), S * col(B, i)) == B.u);
}

TEST_CASE("Sweedler antipode has order four") {
    Bialgebra B = sweedler();
    Matrix S = antipode(B).S;
    CHECK_FALSE(power(S, 2).is_identity());
    CHECK(power(S, 4).is_identity());
    Matrix S2 = *antipode_by_convolution(B);
    CHECK_FALSE(power(S2, 2).is_identity());
    CHECK(power(S2, 4).is_identity());
    CHECK(S * col(B, 1) == col(B, 1));
}

TEST_CASE("super line antipode negates theta") {
    Matrix S = antipode(super_line()).S;
    CHECK(S == Matrix::from_ints(Q, {{1, 0}, {0, -1}}));
}

TEST_CASE("non-Hopf bialgebras report a kernel") {
    try {
        antipode(idempotent_monoid());
        FAIL("expected NoAntipode");
    } catch (const NoAntipode& e) {
        CHECK(e.kernel.cols() == 1);
        CHECK((shear(idempotent_monoid(), ShearDir::SE) * e.kernel).is_zero());
    }
    CHECK_FALSE(antipode_by_convolution(idempotent_monoid()).has_value());
}

TEST_CASE("integrals are lines with nonzero pairing") {
    auto t0 = std::chrono::steady_clock::now();
    for (auto& B : fixture_bialgebras()) {
        if (!is_hopf(B)) continue;
        IntegralData I = integrals(B);
        REQUIRE_MESSAGE(I.integrals.size() == 1, B.name);
        REQUIRE(I.cointegrals.size() == 1);
        REQUIRE(I.pairing.has_value());
        CHECK_FALSE(I.pairing->is_zero());
        CHECK(is_integral(B, I.integrals[0], I.integral_degree[0]));
        CHECK(is_cointegral(B, I.cointegrals[0], I.cointegral_degree[0]));
    }
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 2.0);
}

TEST_CASE("group algebra integrals are delta_e and the sum of elements") {
    for (auto B : {group_z2(), group_s3()}) {
        IntegralData I = integrals(B);
        Matrix delta_e(Q, 1, B.n), sum(Q, B.n, 1);
        delta_e.set(0, 0, 1);
        for (std::size_t i = 0; i < B.n; i++) sum.set(i, 0, 1);
        CHECK(proportional(I.integrals[0], delta_e));
        CHECK(proportional(I.cointegrals[0], sum));
        CHECK_FALSE(is_integral(B, B.eps, 0));
    }
}

TEST_CASE("duality") {
    for (auto& B : fixture_bialgebras()) {
        Bialgebra D = dual(B);
        CHECK_MESSAGE(check_bialgebra(D).ok(), D.name);
        Bialgebra DD = dual(D);
        CHECK(DD.m == B.m);
        CHECK(DD.delta == B.delta);
        CHECK(is_hopf(D) == is_hopf(B));
        if (is_hopf(B)) CHECK(antipode(D).S == antipode(B).S.transpose());
    }
}

TEST_CASE("extension field arithmetic") {
    const Field* F = Field::parse("x^2+x+1");
    CHECK(F->degree() == 2);
    CHECK_FALSE(F->has_rational_root());
    Scalar w(F, std::vector<mpq_class>{0, 1});
    CHECK((w * w * w).is_one());
    CHECK((w * w + w + Scalar(F, 1L)).is_zero());
    CHECK((w * w.inverse()).is_one());
    CHECK(Scalar::parse(F, w.str()) == w);
    CHECK(Field::parse("x^2+x+1") == F);
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::parse("x^2-1")->has_rational_root());
    CHECK_THROWS_AS(Scalar(Q, 0L).inverse(), FieldError);
    Scalar h(Q, mpq_class(1, 2));
    CHECK((h + h).is_one());
    CHECK(Scalar::parse(Q, "-3/4") == Scalar(Q, mpq_class(-3, 4)));
}

TEST_CASE("Taft T3 over the cyclotomic field") {
    Bialgebra T = taft3();
    CHECK(T.n == 9);
    CHECK(is_hopf(T));
    Matrix S = antipode(T).S;
    CHECK(convolution_ok(T, S));
    CHECK(power(S, 6).is_identity());
    CHECK_FALSE(power(S, 2).is_identity());
}

TEST_CASE("random matrices: rank, nullspace, inverse") {
    std::mt19937 rng(5);
    for (int it = 0; it < 40; it++) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix A = random_matrix(rng, r, c, 1 + it % 9);
        std::size_t k = rank(A);
        Matrix N = nullspace(A);
        CHECK(k + N.cols() == c);
        CHECK((A * N).is_zero());
        CHECK(rank(A.transpose()) == k);
        if (N.cols() > 0) CHECK(rank(N) == N.cols());
        if (r == c) {
            auto inv = inverse(A);
            CHECK(inv.has_value() == (k == r));
            CHECK(inv.has_value() == !det(A).is_zero());
            if (inv) {
                CHECK((A * *inv).is_identity());
                CHECK((*inv * A).is_identity());
            }
        }
        Matrix b = A * random_matrix(rng, c, 1, 5);
        auto x = solve(A, b);
        REQUIRE(x.has_value());
        CHECK(A * *x == b);
    }
}

TEST_CASE("kron is bilinear and multiplicative") {
    std::mt19937 rng(9);
    Matrix a = random_matrix(rng, 2, 3, 6), b = random_matrix(rng, 3, 2, 6);
    Matrix c = random_matrix(rng, 3, 2, 6), d = random_matrix(rng, 2, 2, 6);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(kron(a, b).rows() == 6);
    CHECK(kron(a, b).cols() == 6);
    CHECK_THROWS_AS(a * a, ShapeError);
}
