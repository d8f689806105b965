#include <doctest.h>

#include <chrono>
#include <map>

#include "hopfsmith/walking.hpp"

using namespace hopfsmith;

namespace {

std::vector<int> product_census(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); i++)
        for (std::size_t j = 0; j < b.size(); j++) c[i + j] += a[i] * b[j];
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Surviving generators of a smash: pairs avoiding both basepoints, plus the new basepoint.
std::vector<int> smash_census_oracle(const PointedPresentation& P, const PointedPresentation& Q) {
    std::vector<int> c(P.base.maxDim + Q.base.maxDim + 1, 0);
    c[0] = 1;
    for (auto& p : P.base.gens)
        for (auto& q : Q.base.gens)
            if (p.name != P.basepoint && q.name != Q.basepoint) c[p.dim + q.dim]++;
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

}  // namespace

TEST_CASE("Gray censuses") {
    auto t0 = std::chrono::steady_clock::now();
    CHECK(gray(globe(1), globe(1)).pres.census() == std::vector<int>{4, 4, 1});
    CHECK(gray(mnd().base, mnd().base).pres.census() == std::vector<int>{1, 2, 5, 4, 4});
    CHECK(smash(mnd(), mnd()).pres.census() == std::vector<int>{1, 0, 1, 4, 4});
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 1.0);
}

TEST_CASE("census is multiplicative") {
    for (int p = 0; p <= 4; p++)
        for (int q = 0; p + q <= 4; q++) {
            GrayProduct G = gray(globe(p), globe(q));
            CHECK(G.pres.census() == product_census(globe(p).census(), globe(q).census()));
            CHECK(validate_presentation(G.pres).empty());
        }
    std::vector<Presentation> shipped = {mnd().base, adj().base, oriental2(), point()};
    for (auto& P : shipped)
        for (auto& Q : shipped) {
            if (P.maxDim + Q.maxDim > 4) continue;
            CHECK(gray(P, Q).pres.census() == product_census(P.census(), Q.census()));
        }
}

TEST_CASE("the point is a unit") {
    for (Presentation P : {mnd().base, adj().base, oriental2()}) {
        GrayProduct G = gray(P, point());
        CHECK(G.pres.census() == P.census());
        CHECK(G.pres.rels.size() == P.rels.size());
        for (auto& [n, pq] : G.provenance) CHECK(G.pres.at(n).dim == P.at(pq.first).dim);
    }
}

TEST_CASE("products of walking structures are valid") {
    CHECK(validate_presentation(gray(mnd().base, mnd().base).pres).empty());
    CHECK(validate_presentation(smash(mnd(), mnd()).pres).empty());
    CHECK(validate_presentation(gray(e_oriental2(), e_oriental2()).pres).empty());
}

TEST_CASE("smash censuses against a pair count") {
    CHECK(smash(mnd(), mnd()).pres.census() == smash_census_oracle(mnd(), mnd()));
    CHECK(smash(adj(), adj()).pres.census() == smash_census_oracle(adj(), adj()));
    CHECK(smash(adj(), adj()).pres.census() == std::vector<int>{2, 4, 8, 8, 4});
    PointedPresentation pt{point(), "x"};
    CHECK(smash(pt, mnd()).pres.census() == std::vector<int>{1});
}

TEST_CASE("universal shear boundaries") {
    auto t0 = std::chrono::steady_clock::now();
    UniversalShear U = universal_shear();
    const Presentation& G = U.gray.pres;
    CHECK(U.cell->dim == 3);
    CHECK(eq(G, boundary(G, U.cell, Side::Source, 2), U.left_picture) == Verdict::Equal);
    CHECK(eq(G, boundary(G, U.cell, Side::Target, 2), U.right_picture) == Verdict::Equal);
    for (Side sd : {Side::Source, Side::Target}) {
        TermP s2 = boundary(G, U.cell, Side::Source, 2), t2 = boundary(G, U.cell, Side::Target, 2);
        CHECK(eq(G, boundary(G, s2, sd, 1), boundary(G, t2, sd, 1)) == Verdict::Equal);
        CHECK(eq(G, boundary(G, boundary(G, s2, sd, 1), Side::Source, 0),
                 boundary(G, boundary(G, t2, sd, 1), Side::Source, 0)) == Verdict::Equal);
    }
    CHECK_FALSE(check_term(G, U.cell).has_value());
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 1.0);
    // the two pictures differ; with relations present eq never claims Distinct
    CHECK(eq(G, U.left_picture, U.right_picture, 200) != Verdict::Equal);
}

TEST_CASE("collapse image of the shear") {
    UniversalShear U = universal_shear();
    std::vector<std::string> names;
    collect_gens(U.image, names);
    std::map<std::string, int> seen;
    for (auto& n : names)
        if (U.smash.pres.at(n).dim >= 2) seen[n]++;
    CHECK(seen == std::map<std::string, int>{{"A*A", 2}, {"A*m", 1}, {"m*A", 1}});
}

TEST_CASE("collapse commutes with boundaries") {
    SmashProduct S = smash(mnd(), mnd());
    const Presentation& G = S.gray.pres;
    for (auto& g : G.gens) {
        if (g.dim == 0) continue;
        TermP t = G.g(g.name), img = S.collapse.apply(t);
        for (Side sd : {Side::Source, Side::Target}) {
            TermP a = S.collapse.apply(boundary(G, t, sd, g.dim - 1));
            TermP b = boundary(S.pres, img, sd, g.dim - 1);
            CHECK_MESSAGE(eq(S.pres, a, b) == Verdict::Equal, g.name);
        }
    }
    UniversalShear U = universal_shear();
    for (Side sd : {Side::Source, Side::Target})
        CHECK(eq(U.smash.pres, U.smash.collapse.apply(boundary(U.gray.pres, U.cell, sd, 2)),
                 boundary(U.smash.pres, U.image, sd, 2)) == Verdict::Equal);
}

TEST_CASE("bimonad cells") {
    SmashProduct S = smash(mnd(), mnd());
    const Presentation& P = S.pres;
    BimndCells c = bimnd_cells(S);
    TermP pt = P.g(S.basepoint);
    CHECK(eq(P, boundary(P, c.underlying, Side::Source, 1), id(pt)) == Verdict::Equal);
    CHECK(eq(P, boundary(P, c.underlying, Side::Target, 1), id(pt)) == Verdict::Equal);
    CHECK(eq(P, boundary(P, c.counit, Side::Source, 2), c.underlying) == Verdict::Equal);
    CHECK(eq(P, boundary(P, c.counit, Side::Target, 2), id(id(pt))) == Verdict::Equal);
    TermP two = compose(P, 1, c.underlying, c.underlying);
    CHECK(eq(P, boundary(P, c.mult, Side::Source, 2), two) == Verdict::Equal);
    CHECK(eq(P, boundary(P, c.mult, Side::Target, 2), c.underlying) == Verdict::Equal);
    CHECK(eq(P, boundary(P, c.comult, Side::Source, 2), c.underlying) == Verdict::Equal);
    CHECK(eq(P, boundary(P, c.comult, Side::Target, 2), two) == Verdict::Equal);
}

TEST_CASE("tensor of terms lands in the product") {
    Presentation O = oriental2();
    GrayProduct G = gray(O, O);
    TermP t = tensor(O, O, O.g("mu"), O.g("x"));
    CHECK(t->dim == 3);
    CHECK_FALSE(check_term(G.pres, t).has_value());
    TermP xy = tensor(O, O, comp(0, O.g("x"), O.g("y")), O.g("a"));
    CHECK(xy->dim == 1);
}
