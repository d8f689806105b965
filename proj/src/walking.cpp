#include "hopfsmith/walking.hpp"

namespace hopfsmith {

namespace {

TermP lift(const TermP& t) {
    switch (t->kind) {
    case Kind::Gen: return gen(t->name, t->dim + 1);
    case Kind::Id: return id(lift(t->a));
    case Kind::Inv: return inv(lift(t->a));
    case Kind::Comp: return comp(t->k + 1, lift(t->a), lift(t->b));
    }
    throw TermError("bad term");
}

std::string fresh(const Presentation& P, std::string n) {
    while (P.has(n)) n += "'";
    return n;
}

}  // namespace

Presentation point() {
    Presentation P;
    P.add_gen("x", 0);
    return P;
}

Presentation suspend(const Presentation& P) {
    if (P.maxDim > 3) throw TermError("suspension above dimension 4");
    Presentation S;
    std::string n0 = fresh(P, "0"), n1 = fresh(P, "1");
    if (n1 == n0) n1 += "'";
    S.add_gen(n0, 0);
    S.add_gen(n1, 0);
    for (auto& g : P.gens) {
        if (g.dim == 0)
            S.add_gen(g.name, 1, gen(n0, 0), gen(n1, 0), g.invertible);
        else
            S.add_gen(g.name, g.dim + 1, lift(g.src), lift(g.tgt), g.invertible);
    }
    for (auto& r : P.rels) S.relate(lift(r.lhs), lift(r.rhs), r.oriented);
    return S;
}

Presentation globe(int n) {
    if (n < 0 || n > 4) throw TermError("globe dimension out of range");
    Presentation P = point();
    for (int i = 0; i < n; i++) P = suspend(P);
    return P;
}

Presentation boundary_globe(int n) {
    if (n < 0 || n > 4) throw TermError("globe dimension out of range");
    Presentation P;
    for (int i = 0; i < n; i++) P = suspend(P);
    return P;
}

PointedPresentation mnd() {
    Presentation P;
    P.add_gen("o", 0);
    TermP o = gen("o", 0);
    P.add_gen("A", 1, o, o);
    TermP A = gen("A", 1), iA = id(A);
    P.add_gen("m", 2, comp(0, A, A), A);
    P.add_gen("u", 2, id(o), A);
    TermP m = gen("m", 2), u = gen("u", 2);
    // associativity towards the left comb, then both unit laws
    P.relate(comp(1, comp(0, iA, m), m), comp(1, comp(0, m, iA), m));
    P.relate(comp(1, comp(0, u, iA), m), iA);
    P.relate(comp(1, comp(0, iA, u), m), iA);
    return {P, "o"};
}

PointedPresentation adj() {
    Presentation P;
    P.add_gen("a", 0);
    P.add_gen("b", 0);
    TermP a = gen("a", 0), b = gen("b", 0);
    P.add_gen("l", 1, a, b);
    P.add_gen("r", 1, b, a);
    TermP l = gen("l", 1), r = gen("r", 1);
    P.add_gen("eps", 2, comp(0, r, l), id(b));
    P.add_gen("eta", 2, id(a), comp(0, l, r));
    TermP eps = gen("eps", 2), eta = gen("eta", 2);
    P.relate(comp(1, comp(0, eta, id(l)), comp(0, id(l), eps)), id(l));
    P.relate(comp(1, comp(0, id(r), eta), comp(0, eps, id(r))), id(r));
    return {P, "a"};
}

Presentation oriental2() {
    Presentation P;
    for (auto n : {"a", "b", "c"}) P.add_gen(n, 0);
    P.add_gen("x", 1, gen("a", 0), gen("b", 0));
    P.add_gen("y", 1, gen("b", 0), gen("c", 0));
    P.add_gen("w", 1, gen("a", 0), gen("c", 0));
    P.add_gen("mu", 2, comp(0, gen("x", 1), gen("y", 1)), gen("w", 1));
    return P;
}

Presentation e_oriental2() {
    Presentation P;
    for (auto n : {"z", "a", "b", "c", "d"}) P.add_gen(n, 0);
    P.add_gen("e1", 1, gen("z", 0), gen("a", 0));
    P.add_gen("x", 1, gen("a", 0), gen("b", 0));
    P.add_gen("y", 1, gen("b", 0), gen("c", 0));
    P.add_gen("w", 1, gen("a", 0), gen("c", 0));
    P.add_gen("e2", 1, gen("c", 0), gen("d", 0));
    P.add_gen("mu", 2, comp(0, gen("x", 1), gen("y", 1)), gen("w", 1));
    return P;
}

}  // namespace hopfsmith
