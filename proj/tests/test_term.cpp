#include <doctest.h>

#include <random>

#include "hopfsmith/eq.hpp"
#include "hopfsmith/walking.hpp"

using namespace hopfsmith;

namespace {

// Random valid 2-cell of Mnd: a chain of whiskered m and u layers on A^k.
TermP random_mnd_2cell(const Presentation& P, std::mt19937& rng, int layers) {
    TermP A = P.g("A"), o = P.g("o");
    auto word = [&](int k) {
        TermP w = id(o);
        for (int i = 0; i < k; i++) w = i == 0 ? A : comp(0, w, A);
        return w;
    };
    int k = 1 + static_cast<int>(rng() % 3);
    TermP t = id(word(k));
    for (int s = 0; s < layers; s++) {
        bool merge = k >= 2 && rng() % 2;
        int pos = static_cast<int>(rng() % (merge ? k - 1 : k + 1));
        TermP g = merge ? P.g("m") : P.g("u");
        int right = k - pos - (merge ? 2 : 0);
        TermP layer = g;
        if (pos > 0) layer = cw(0, word(pos), layer);
        if (right > 0) layer = cw(0, layer, word(right));
        t = compose(P, 1, t, layer);
        k += merge ? -1 : 1;
    }
    return t;
}

}  // namespace

TEST_CASE("dimensions of identities and composites") {
    TermP o = gen("o", 0), A = gen("A", 1);
    CHECK(id(A)->dim == 2);
    CHECK(comp(0, A, A)->dim == 1);
    CHECK(id_tower(o, 3)->dim == 3);
    CHECK_THROWS_AS(comp(0, A, o), TermError);
    CHECK_THROWS_AS(comp(1, A, A), TermError);
    CHECK_THROWS_AS(inv(o), TermError);
}

TEST_CASE("boundaries in Mnd") {
    Presentation P = mnd().base;
    TermP m = P.g("m"), A = P.g("A");
    CHECK(same(boundary(P, m, Side::Source, 1), comp(0, A, A)));
    CHECK(same(boundary(P, m, Side::Target, 1), A));
    CHECK(same(boundary(P, id(A), Side::Source, 1), A));
    CHECK(same(boundary(P, m, Side::Source, 0), P.g("o")));
    CHECK_THROWS(boundary(P, m, Side::Source, 2));
    CHECK_THROWS(boundary(P, A, Side::Target, 1));
}

TEST_CASE("s-expressions round trip") {
    Presentation P = mnd().base;
    auto look = dim_lookup(P);
    for (std::string s : {"(gen m)", "(id (gen A))", "(comp1 (comp0 (id (gen A)) (gen m)) (gen m))",
                          "(comp0 (gen u) (id (gen A)))"}) {
        TermP t = parse_sexpr(s, look);
        CHECK(to_sexpr(t) == s);
        CHECK(same(parse_sexpr(to_sexpr(t), look), t));
    }
    CHECK_THROWS_AS(parse_sexpr("(gen nope)", look), TermError);
    CHECK_THROWS_AS(parse_sexpr("(comp7 (gen A) (gen A))", look), TermError);
    CHECK_THROWS_AS(parse_sexpr("(gen A", look), TermError);
    CHECK_THROWS_AS(parse_sexpr("(id (gen A)) junk", look), TermError);
}

TEST_CASE("random Mnd terms: round trip and globularity") {
    Presentation P = mnd().base;
    std::mt19937 rng(7);
    for (int i = 0; i < 40; i++) {
        TermP t = random_mnd_2cell(P, rng, 1 + i % 5);
        CHECK(same(parse_term(P, to_sexpr(t)), t));
        CHECK_FALSE(check_term(P, t).has_value());
        TermP s1 = boundary(P, t, Side::Source, 1), t1 = boundary(P, t, Side::Target, 1);
        for (Side sd : {Side::Source, Side::Target})
            CHECK(eq(P, boundary(P, s1, sd, 0), boundary(P, t1, sd, 0)) == Verdict::Equal);
    }
}

TEST_CASE("simplify drops unit composites") {
    Presentation P = mnd().base;
    TermP A = P.g("A"), o = P.g("o");
    CHECK(same(simplify(comp(0, id(o), A)), A));
    CHECK(same(simplify(inv(inv(P.g("m")))), P.g("m")));
    int levels = 0;
    CHECK(same(strip_ids(id(id(A)), &levels), A));
    CHECK(levels == 2);
    CHECK(is_identity(id(A)));
    CHECK_FALSE(is_identity(A));
}

TEST_CASE("presentation bookkeeping") {
    Presentation P;
    P.add_gen("x", 0);
    CHECK_THROWS_AS(P.add_gen("x", 0), TermError);
    CHECK_THROWS_AS(P.add_gen("y", 5), TermError);
    CHECK_THROWS_AS(P.add_gen("f", 1), TermError);
    CHECK(P.census() == std::vector<int>{1});
    CHECK_THROWS_AS(P.at("nope"), TermError);
}

TEST_CASE("validate_presentation") {
    CHECK(validate_presentation(mnd().base).empty());
    CHECK(validate_presentation(adj().base).empty());
    CHECK(validate_presentation(oriental2()).empty());
    CHECK(validate_presentation(e_oriental2()).empty());

    SUBCASE("source of the wrong dimension") {
        Presentation P = mnd().base;
        P.add(Generator{"bad", 2, P.g("o"), P.g("A"), false});
        auto v = validate_presentation(P);
        REQUIRE(v.size() == 1);
        CHECK(v[0].where == "generator bad");
    }
    SUBCASE("relation with different 0-boundaries") {
        Presentation P = adj().base;
        P.rels.push_back(Relation{1, P.g("l"), P.g("r"), false});
        auto v = validate_presentation(P);
        CHECK(v.size() == 1);
    }
    SUBCASE("non-parallel generator") {
        Presentation P = oriental2();
        P.add_gen("nu", 2, P.g("x"), P.g("w"));
        CHECK(validate_presentation(P).size() >= 1);
    }
}
