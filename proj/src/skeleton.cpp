#include <algorithm>

#include "hopfsmith/walking.hpp"

namespace hopfsmith {

const char* class_name(CellClass c) {
    switch (c) {
    case CellClass::LType: return "L";
    case CellClass::RType: return "R";
    case CellClass::FourCell: return "four-cell";
    case CellClass::CollapseTrivial: return "collapse-trivial";
    case CellClass::Other: return "other";
    }
    return "?";
}

TermP gray_map(const GrayProduct& G, const Presentation& P2, const Presentation& Q2,
               const std::map<std::string, TermP>& fP, const std::map<std::string, TermP>& fQ, const TermP& t) {
    switch (t->kind) {
    case Kind::Gen: {
        auto it = G.provenance.find(t->name);
        if (it == G.provenance.end()) throw GrayError("no provenance for " + t->name);
        return tensor(P2, Q2, fP.at(it->second.first), fQ.at(it->second.second));
    }
    case Kind::Id: return id(gray_map(G, P2, Q2, fP, fQ, t->a));
    case Kind::Inv: return inv(gray_map(G, P2, Q2, fP, fQ, t->a));
    case Kind::Comp:
        return cw(t->k, gray_map(G, P2, Q2, fP, fQ, t->a), gray_map(G, P2, Q2, fP, fQ, t->b));
    }
    throw TermError("bad term");
}

std::vector<TermP> layers3(const Presentation& P, const TermP& t) {
    switch (t->kind) {
    case Kind::Gen: return t->dim == 3 ? std::vector<TermP>{t} : std::vector<TermP>{};
    case Kind::Id: return {};
    case Kind::Inv: {
        auto l = layers3(P, t->a);
        std::reverse(l.begin(), l.end());
        for (auto& x : l) x = inv(x);
        return l;
    }
    case Kind::Comp: {
        auto la = layers3(P, t->a), lb = layers3(P, t->b);
        if (t->k >= 2) {
            la.insert(la.end(), lb.begin(), lb.end());
            return la;
        }
        TermP bs = t->b->dim == 3 ? boundary(P, t->b, Side::Source, 2) : t->b;
        TermP at = t->a->dim == 3 ? boundary(P, t->a, Side::Target, 2) : t->a;
        std::vector<TermP> out;
        for (auto& l : la) out.push_back(cw(t->k, l, bs));
        for (auto& l : lb) out.push_back(cw(t->k, at, l));
        return out;
    }
    }
    throw TermError("bad term");
}

namespace {

struct Shear2 {
    TermP shear, whiskered;  // in gray(O2, O2)
};

// The shear with x,y,w,mu in place of A,A,A,m, and its whiskering by the crossing x*y.
Shear2 oriental_shear(const Presentation& G) {
    auto g = [&](const char* n) { return G.g(n); };
    TermP L1 = cw(0, g("x*x"), id(comp(0, g("b*y"), g("y*c"))));
    TermP L4 = cw(0, g("mu*a"), g("c*w"));
    TermP R1 = cw(0, comp(0, g("a*x"), g("x*b")), g("y*y"));
    TermP R4 = cw(0, g("w*a"), g("c*mu"));
    TermP step1 = compose(G, 1, L1, compose(G, 1, cw(0, g("x*a"), g("y*mu")), L4));
    TermP step2 = compose(G, 1, R1, compose(G, 1, cw(0, g("mu*x"), g("c*y")), R4));
    Shear2 s;
    s.shear = compose(G, 2, step1, step2);
    TermP beta = cw(0, g("a*x"), cw(0, g("x*y"), g("y*c")));
    s.whiskered = compose(G, 1, beta, s.shear);
    return s;
}

// O2 -> eO2: x -> e1;x, y -> y;e2, w -> e1;w;e2, mu whiskered.
std::map<std::string, TermP> e_embedding(const Presentation& E) {
    auto g = [&](const char* n) { return E.g(n); };
    return {{"a", g("z")},
            {"b", g("b")},
            {"c", g("d")},
            {"x", comp(0, g("e1"), g("x"))},
            {"y", comp(0, g("y"), g("e2"))},
            {"w", comp(0, g("e1"), comp(0, g("w"), g("e2")))},
            {"mu", comp(0, id(g("e1")), comp(0, g("mu"), id(g("e2"))))}};
}

std::map<std::string, TermP> mnd_collapse(const Presentation& M) {
    TermP o = M.g("o"), A = M.g("A");
    return {{"a", o}, {"b", o}, {"c", o}, {"x", A}, {"y", A}, {"w", A}, {"mu", M.g("m")}};
}

void classify(const GrayProduct& G, ChainStep& st) {
    std::vector<std::string> names;
    collect_gens(st.cell, names);
    for (auto& n : names) {
        if (G.pres.at(n).dim != 3) continue;
        st.generator = n;
        auto [p, q] = G.provenance.at(n);
        if (q == "mu" && p != "mu")
            st.cls = p == "w" ? CellClass::CollapseTrivial : CellClass::RType;
        else if (p == "mu" && q != "mu")
            st.cls = q == "w" ? CellClass::CollapseTrivial : CellClass::LType;
        else
            st.cls = CellClass::Other;
    }
    st.adjunctible = st.cls == CellClass::LType || st.cls == CellClass::RType;
    st.inverted = st.cell->kind == Kind::Inv;
}

}  // namespace

SkeletonChain skeleton_chain() {
    Presentation O = oriental2(), E = e_oriental2();
    GrayProduct GO = gray(O, O);
    const Presentation& G = GO.pres;
    SkeletonChain C;
    C.gray = gray(E, E);
    auto F = e_embedding(E);
    auto img = [&](const TermP& t) { return gray_map(GO, E, E, F, F, t); };

    Shear2 sh = oriental_shear(G);
    C.shear_image = img(sh.whiskered);
    C.source = img(boundary(G, sh.whiskered, Side::Source, 2));
    C.target = img(boundary(G, sh.whiskered, Side::Target, 2));

    // mu*mu runs x*mu, y*mu, mu*x, mu*y into mu*w, w*mu; the middle two are the shear
    TermP mm = G.g("mu*mu");
    auto s = layers3(G, boundary(G, mm, Side::Source, 3));
    auto t = layers3(G, boundary(G, mm, Side::Target, 3));
    if (s.size() != 4 || t.size() != 2) throw GrayError("unexpected shape of the mu*mu boundary");

    auto push = [&](const TermP& o2cell, const std::string& label) {
        auto ls = layers3(C.gray.pres, img(o2cell));
        for (std::size_t i = 0; i < ls.size(); i++) {
            ChainStep st;
            st.label = label + " [" + std::to_string(i + 1) + "/" + std::to_string(ls.size()) + "]";
            st.cell = ls[i];
            classify(C.gray, st);
            C.steps.push_back(st);
        }
        return ls.size();
    };
    push(inv(s[0]), "x*mu^-1");
    ChainStep four;
    four.label = "mu*mu";
    four.generator = "mu*mu";
    four.cls = CellClass::FourCell;
    four.cell = img(boundary(G, mm, Side::Source, 2));
    four.cell_target = img(boundary(G, mm, Side::Target, 2));
    std::size_t at = C.steps.size();
    C.steps.push_back(four);
    std::size_t n = push(t[0], "mu*w");
    n += push(t[1], "w*mu");
    C.steps[at].span = static_cast<int>(n);
    push(inv(s[3]), "mu*y^-1");
    return C;
}

SkeletonChain mutate_chain(const SkeletonChain& c, std::size_t i) {
    SkeletonChain m = c;
    ChainStep& st = m.steps.at(i);
    if (st.cls == CellClass::FourCell) {
        std::swap(st.cell, st.cell_target);
    } else {
        st.cell = st.cell->kind == Kind::Inv ? st.cell->a : inv(st.cell);
        st.inverted = !st.inverted;
    }
    st.label += " (reversed)";
    return m;
}

SkeletonReport check_chain(const SkeletonChain& c, long budget) {
    const Presentation& P = c.gray.pres;
    SkeletonReport r;
    r.steps = c.steps;
    r.shear_image = c.shear_image;
    for (auto& st : c.steps) r.counts[class_name(st.cls)]++;

    auto fail = [&](int i, const std::string& what, Verdict v) {
        r.undecided = v == Verdict::Unknown;
        r.composable = false;
        r.boundary_matches = false;
        r.failed_step = i;
        r.failure = what;
    };
    TermP node = c.source;
    std::vector<std::pair<std::size_t, TermP>> pending;  // (step index, expected 2-cell) after that step
    for (std::size_t i = 0; i < c.steps.size(); i++) {
        const ChainStep& st = c.steps[i];
        if (st.cls == CellClass::FourCell) {
            Verdict v = eq(P, st.cell, node, budget);
            if (v != Verdict::Equal) {
                fail(static_cast<int>(i), st.label + ": 2-source is " + verdict_name(v) + " from the current 2-cell", v);
                return r;
            }
            pending.push_back({i + st.span, st.cell_target});
            continue;
        }
        TermP s2 = boundary(P, st.cell, Side::Source, 2);
        Verdict v = eq(P, s2, node, budget);
        if (v != Verdict::Equal) {
            fail(static_cast<int>(i), st.label + ": 2-source is " + verdict_name(v) + " from the previous 2-target", v);
            return r;
        }
        node = boundary(P, st.cell, Side::Target, 2);
        for (auto& [j, want] : pending) {
            if (j != i) continue;
            Verdict w = eq(P, want, node, budget);
            if (w != Verdict::Equal) {
                fail(static_cast<int>(i), "four-cell target is " + std::string(verdict_name(w)) + " after " + st.label, w);
                return r;
            }
        }
    }
    Verdict v = eq(P, node, c.target, budget);
    r.boundary_matches = v == Verdict::Equal;
    r.undecided = v == Verdict::Unknown;
    if (!r.boundary_matches) r.failure = std::string("final 2-target is ") + verdict_name(v) + " from the shear image's";
    return r;
}

SkeletonReport proof_skeleton_check(long budget) {
    SkeletonReport r = check_chain(skeleton_chain(), budget);
    // the O2 shear lands on the universal shear under x, y, w -> A, mu -> m
    Presentation O = oriental2();
    GrayProduct GO = gray(O, O);
    UniversalShear U = universal_shear();
    const Presentation& M = mnd().base;
    auto f = mnd_collapse(M);
    TermP image = gray_map(GO, M, M, f, f, oriental_shear(GO.pres).shear);
    const Presentation& G = U.gray.pres;
    r.shear_matches_universal = true;
    for (Side sd : {Side::Source, Side::Target})
        r.shear_matches_universal &=
            eq(G, boundary(G, image, sd, 2), boundary(G, U.cell, sd, 2), budget) == Verdict::Equal;
    return r;
}

}  // namespace hopfsmith
