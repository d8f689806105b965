#include "hopfsmith/mates.hpp"

#include "hopfsmith/walking.hpp"

namespace hopfsmith {

namespace {

bool same_cell(const Presentation& P, const TermP& a, const TermP& b, long budget) {
    return a->dim == b->dim && eq(P, a, b, budget) == Verdict::Equal;
}

void expect(const Presentation& P, const TermP& got, const TermP& want, const std::string& what, long budget) {
    if (!same_cell(P, got, want, budget))
        throw MateError(what + ": got " + to_sexpr(got) + ", expected " + to_sexpr(want));
}

TermP b1(const Presentation& P, const TermP& t, Side s) { return boundary(P, t, s, 1); }

}  // namespace

AdjunctionRecord identity_adjunction(std::shared_ptr<const Presentation> P, const TermP& x) {
    TermP i = id(x);
    return {std::move(P), i, i, id(i), id(i)};
}

std::shared_ptr<const Presentation> adj_presentation() {
    static const auto P = std::make_shared<const Presentation>(adj().base);
    return P;
}

AdjunctionRecord walking_adjunction() {
    auto P = adj_presentation();
    return {P, P->g("l"), P->g("r"), P->g("eps"), P->g("eta")};
}

std::pair<TermP, TermP> zigzags(const AdjunctionRecord& a) {
    TermP zl = cw(1, cw(0, a.eta, a.l), cw(0, a.l, a.eps));
    TermP zr = cw(1, cw(0, a.r, a.eta), cw(0, a.eps, a.r));
    return {zl, zr};
}

Verdict zigzag_verdict(const AdjunctionRecord& a, long budget) {
    auto [zl, zr] = zigzags(a);
    Verdict v1 = eq(*a.P, zl, id(a.l), budget), v2 = eq(*a.P, zr, id(a.r), budget);
    if (v1 == Verdict::Equal && v2 == Verdict::Equal) return Verdict::Equal;
    if (v1 == Verdict::Distinct || v2 == Verdict::Distinct) return Verdict::Distinct;
    return Verdict::Unknown;
}

void check_square(const Presentation& P, const Square& s, long budget) {
    if (s.alpha->dim != 2) throw MateError("square filler must be a 2-cell");
    expect(P, b1(P, s.alpha, Side::Source), comp(0, s.h, s.k), "square source", budget);
    expect(P, b1(P, s.alpha, Side::Target), comp(0, s.f, s.g), "square target", budget);
}

TermP right_mate(const Presentation& P, const Square& s, const AdjunctionRecord& adjf, const AdjunctionRecord& adjk,
                 long budget) {
    check_square(P, s, budget);
    expect(P, adjf.l, s.f, "right mate: adjunction for f", budget);
    expect(P, adjk.l, s.k, "right mate: adjunction for k", budget);
    TermP fR = adjf.r, kR = adjk.r;
    return compose_all(P, 1,
                       {cw(0, comp(0, fR, s.h), adjk.eta), cw(0, fR, cw(0, s.alpha, kR)),
                        cw(0, adjf.eps, comp(0, s.g, kR))},
                       budget);
}

TermP left_mate(const Presentation& P, const Square& s, const AdjunctionRecord& adjh, const AdjunctionRecord& adjg,
                long budget) {
    check_square(P, s, budget);
    expect(P, adjh.r, s.h, "left mate: adjunction for h", budget);
    expect(P, adjg.r, s.g, "left mate: adjunction for g", budget);
    TermP hL = adjh.l, gL = adjg.l;
    return compose_all(P, 1,
                       {cw(0, adjh.eta, comp(0, s.k, gL)), cw(0, hL, cw(0, s.alpha, gL)),
                        cw(0, comp(0, hL, s.f), adjg.eps)},
                       budget);
}

Square right_mate_square(const Presentation& P, const Square& s, const AdjunctionRecord& adjf,
                         const AdjunctionRecord& adjk, long budget) {
    return {s.g, adjk.r, adjf.r, s.h, right_mate(P, s, adjf, adjk, budget)};
}

Square left_mate_square(const Presentation& P, const Square& s, const AdjunctionRecord& adjh,
                        const AdjunctionRecord& adjg, long budget) {
    return {adjh.l, s.f, s.k, adjg.l, left_mate(P, s, adjh, adjg, budget)};
}

std::vector<MateFixture> adj_mate_fixtures() {
    auto P = adj_presentation();
    TermP a = P->g("a"), b = P->g("b"), l = P->g("l"), r = P->g("r");
    AdjunctionRecord W = walking_adjunction(), Ia = identity_adjunction(P, a), Ib = identity_adjunction(P, b);
    std::vector<MateFixture> v;
    v.push_back({"identity on l", {l, id(b), id(a), l, id(l)}, W, W, Ia, Ib});
    v.push_back({"eta", {l, r, id(a), id(a), P->g("eta")}, W, Ia, Ia, W});
    v.push_back({"eps", {id(b), id(b), r, l, P->g("eps")}, Ib, W, W, Ib});
    v.push_back({"identity on r", {id(b), r, r, id(a), id(r)}, Ib, Ia, W, W});
    return v;
}

MateReport double_mates(const MateFixture& m, long budget) {
    const Presentation& P = *m.f.P;
    MateReport rep;
    rep.name = m.name;
    EqStats st;
    Square rm = right_mate_square(P, m.square, m.f, m.k, budget);
    TermP back = left_mate(P, rm, m.f, m.k, budget);
    rep.right_then_left = eq(P, back, m.square.alpha, budget, &st);
    Square lm = left_mate_square(P, m.square, m.h, m.g, budget);
    TermP back2 = right_mate(P, lm, m.h, m.g, budget);
    rep.left_then_right = eq(P, back2, m.square.alpha, budget, &st);
    rep.steps = st.steps;
    return rep;
}

RetractRecord generic_retract() {
    auto Pm = std::make_shared<Presentation>();
    Presentation& P = *Pm;
    P.add_gen("pt", 0);
    P.add_gen("X", 0);
    TermP pt = P.g("pt"), X = P.g("X");
    P.add_gen("f", 1, pt, X);
    P.add_gen("g", 1, X, pt);
    P.add_gen("fR", 1, X, pt);
    P.add_gen("gL", 1, pt, X);
    TermP f = P.g("f"), g = P.g("g"), fR = P.g("fR"), gL = P.g("gL");
    P.add_gen("alpha", 2, id(pt), comp(0, f, g), true);
    P.add_gen("eta_f", 2, id(pt), comp(0, f, fR));
    P.add_gen("eps_f", 2, comp(0, fR, f), id(X));
    P.add_gen("eta_g", 2, id(pt), comp(0, gL, g));
    P.add_gen("eps_g", 2, comp(0, g, gL), id(X));
    auto zig = [&](TermP l, TermP r, TermP eps, TermP eta) {
        P.relate(cw(1, cw(0, eta, l), cw(0, l, eps)), id(l));
        P.relate(cw(1, cw(0, r, eta), cw(0, eps, r)), id(r));
    };
    zig(f, fR, P.g("eps_f"), P.g("eta_f"));
    zig(gL, g, P.g("eps_g"), P.g("eta_g"));

    TermP beta = cw(0, P.g("eps_f"), g);
    TermP delta = cw(0, f, P.g("eps_g"));
    P.add_gen("betaL", 2, g, comp(0, fR, comp(0, f, g)));
    P.add_gen("deltaR", 2, f, comp(0, f, comp(0, g, gL)));
    TermP betaL = P.g("betaL"), deltaR = P.g("deltaR");
    P.add_gen("beta_unit", 3, id(g), comp(1, betaL, beta));
    P.add_gen("beta_counit", 3, comp(1, beta, betaL), id(comp(0, fR, comp(0, f, g))));
    P.add_gen("delta_unit", 3, id(comp(0, f, comp(0, g, gL))), comp(1, delta, deltaR));
    P.add_gen("delta_counit", 3, comp(1, deltaR, delta), id(f));
    // betaL -| beta and delta -| deltaR
    auto zig3 = [&](TermP left, TermP right, TermP unit, TermP counit) {
        P.relate(comp(2, cw(1, unit, left), cw(1, left, counit)), id(left));
        P.relate(comp(2, cw(1, right, unit), cw(1, counit, right)), id(right));
    };
    zig3(betaL, beta, P.g("beta_unit"), P.g("beta_counit"));
    zig3(delta, deltaR, P.g("delta_unit"), P.g("delta_counit"));

    RetractRecord R;
    R.P = Pm;
    R.basepoint = "pt";
    R.X = "X";
    R.f = f;
    R.g = g;
    R.alpha = P.g("alpha");
    R.adj_f = {Pm, f, fR, P.g("eps_f"), P.g("eta_f")};
    R.adj_g = {Pm, gL, g, P.g("eps_g"), P.g("eta_g")};
    R.beta = beta;
    R.betaL = betaL;
    R.beta_unit = P.g("beta_unit");
    R.beta_counit = P.g("beta_counit");
    R.delta = delta;
    R.deltaR = deltaR;
    R.delta_unit = P.g("delta_unit");
    R.delta_counit = P.g("delta_counit");
    return R;
}

RetractRecord trivial_retract() {
    auto Pm = std::make_shared<Presentation>();
    Pm->add_gen("pt", 0);
    TermP pt = Pm->g("pt"), i1 = id(pt), i2 = id(i1), i3 = id(i2);
    RetractRecord R;
    R.P = Pm;
    R.basepoint = R.X = "pt";
    R.f = R.g = i1;
    R.alpha = i2;
    R.adj_f = R.adj_g = identity_adjunction(Pm, pt);
    R.beta = R.betaL = R.delta = R.deltaR = i2;
    R.beta_unit = R.beta_counit = R.delta_unit = R.delta_counit = i3;
    return R;
}

std::vector<std::string> check_retract(const RetractRecord& R, long budget) {
    const Presentation& P = *R.P;
    std::vector<std::string> bad;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
    };
    TermP pt = P.g(R.basepoint), X = P.g(R.X);
    TermP fR = R.adj_f.r, gL = R.adj_g.l;
    need(R.alpha->kind != Kind::Gen || P.at(R.alpha->name).invertible, "alpha is not marked invertible");
    need(same_cell(P, b1(P, R.alpha, Side::Source), id(pt), budget), "alpha source is not the identity");
    need(same_cell(P, b1(P, R.alpha, Side::Target), comp(0, R.f, R.g), budget), "alpha target is not f;g");
    need(same_cell(P, R.adj_f.l, R.f, budget), "adjunction for f is on another 1-cell");
    need(same_cell(P, R.adj_g.r, R.g, budget), "adjunction for g is on another 1-cell");
    need(zigzag_verdict(R.adj_f, budget) == Verdict::Equal, "zigzags for f do not hold");
    need(zigzag_verdict(R.adj_g, budget) == Verdict::Equal, "zigzags for g do not hold");
    need(same_cell(P, b1(P, R.betaL, Side::Source), R.g, budget), "betaL source is not g");
    need(same_cell(P, b1(P, R.betaL, Side::Target), comp(0, fR, comp(0, R.f, R.g)), budget), "betaL target");
    need(same_cell(P, b1(P, R.deltaR, Side::Source), R.f, budget), "deltaR source is not f");
    need(same_cell(P, b1(P, R.deltaR, Side::Target), comp(0, R.f, comp(0, R.g, gL)), budget), "deltaR target");
    (void)X;
    return bad;
}

HopfSquare hopf_square_terms(const RetractRecord& R, long budget) {
    auto bad = check_retract(R, budget);
    if (!bad.empty()) throw MateError("invalid retract: " + bad.front());
    const Presentation& P = *R.P;
    TermP pt = P.g(R.basepoint), f = R.f, g = R.g, a = R.alpha, ai = inv(R.alpha);
    TermP fR = R.adj_f.r, gL = R.adj_g.l;
    AdjunctionRecord Ipt = identity_adjunction(R.P, pt);
    HopfSquare S;

    Square sq{f, g, id(pt), id(pt), a};
    S.alpha_rmate = right_mate(P, sq, R.adj_f, Ipt, budget);  // fR => g
    S.alpha_lmate = left_mate(P, sq, Ipt, R.adj_g, budget);   // gL => f
    // (alpha^rmate)^L is (fR.alpha^-1) after betaL
    TermP rmateL = compose(P, 1, R.betaL, cw(0, fR, ai), budget);
    S.alpha_sharp = left_mate(P, Square{fR, id(pt), g, id(pt), rmateL}, R.adj_g, Ipt, budget);
    S.H = compose_all(P, 1, {S.alpha_sharp, cw(0, gL, S.alpha_rmate), cw(0, S.alpha_lmate, g), ai}, budget);

    TermP gammaL = compose(P, 1, a, cw(0, f, R.betaL), budget);
    TermP gamma = compose(P, 1, cw(0, f, R.beta), ai, budget);
    TermP deltaR = compose(P, 1, a, cw(0, R.deltaR, g), budget);
    TermP delta = compose(P, 1, cw(0, R.delta, g), ai, budget);
    S.simple1 = compose(P, 1, gammaL, gamma, budget);
    S.simple2 = compose(P, 1, deltaR, delta, budget);
    S.unit = compose_all(P, 1, {a, cw(0, f, R.beta_unit), ai}, budget);
    S.mult = compose_all(P, 1, {gammaL, cw(0, f, R.beta_counit), gamma}, budget);
    S.comult = compose_all(P, 1, {deltaR, cw(0, R.delta_unit, g), delta}, budget);
    S.counit = compose_all(P, 1, {a, cw(0, R.delta_counit, g), ai}, budget);

    auto soften = [](Verdict v) { return v == Verdict::Distinct ? Verdict::Unknown : v; };
    S.H_vs_simple1 = soften(eq(P, S.H, S.simple1, budget));
    S.H_vs_simple2 = soften(eq(P, S.H, S.simple2, budget));

    auto need = [&](bool ok, const std::string& what) {
        if (!ok) S.problems.push_back(what);
    };
    TermP one = id(id(pt));
    auto b2 = [&](const TermP& t, Side s) { return boundary(P, t, s, 2); };
    need(same_cell(P, b1(P, S.H, Side::Source), id(pt), budget), "H 1-source");
    need(same_cell(P, b1(P, S.H, Side::Target), id(pt), budget), "H 1-target");
    need(same_cell(P, b2(S.mult, Side::Source), comp(1, S.simple1, S.simple1), budget), "mult 2-source");
    need(same_cell(P, b2(S.mult, Side::Target), S.simple1, budget), "mult 2-target");
    need(same_cell(P, b2(S.unit, Side::Source), one, budget), "unit 2-source");
    need(same_cell(P, b2(S.unit, Side::Target), S.simple1, budget), "unit 2-target");
    need(same_cell(P, b2(S.comult, Side::Source), S.simple2, budget), "comult 2-source");
    need(same_cell(P, b2(S.comult, Side::Target), comp(1, S.simple2, S.simple2), budget), "comult 2-target");
    need(same_cell(P, b2(S.counit, Side::Source), S.simple2, budget), "counit 2-source");
    need(same_cell(P, b2(S.counit, Side::Target), one, budget), "counit 2-target");
    return S;
}

}  // namespace hopfsmith
