#include "hopfsmith/walking.hpp"

#include <algorithm>

namespace hopfsmith {

std::string pair_name(const std::string& p, const std::string& q) { return p + "*" + q; }

TermP cw(int k, TermP a, TermP b) {
    int d = std::max(a->dim, b->dim);
    return comp(k, id_tower(a, d - a->dim), id_tower(b, d - b->dim));
}

namespace {

TermP subst(const TermP& t, const std::function<std::string(const std::string&)>& rename, int shift) {
    switch (t->kind) {
    case Kind::Gen: return gen(rename(t->name), t->dim + shift);
    case Kind::Id: return id(subst(t->a, rename, shift));
    case Kind::Inv: return inv(subst(t->a, rename, shift));
    case Kind::Comp: return comp(t->k, subst(t->a, rename, shift), subst(t->b, rename, shift));
    }
    throw TermError("bad term");
}

struct Tensor {
    const Presentation& P;
    const Presentation& Q;

    TermP bP(const TermP& t, Side s, int k) const { return boundary(P, t, s, k); }
    TermP bQ(const TermP& t, Side s, int k) const { return boundary(Q, t, s, k); }

    [[noreturn]] void unsupported(const TermP& s, const TermP& t) const {
        throw GrayError("tensor of " + to_sexpr(s) + " with " + to_sexpr(t) + " is outside the case table");
    }

    TermP operator()(const TermP& s0, const TermP& t0) const {
        TermP s = simplify(s0), t = simplify(t0);
        if (s->dim + t->dim > 4) throw GrayError("tensor above dimension 4");
        if (s->dim == 0) {
            std::string x = s->name;
            return subst(t, [&](const std::string& g) { return pair_name(x, g); }, 0);
        }
        if (t->dim == 0) {
            std::string y = t->name;
            return subst(s, [&](const std::string& g) { return pair_name(g, y); }, t->dim);
        }
        if (s->kind == Kind::Id) return id((*this)(s->a, t));
        if (t->kind == Kind::Id) return id((*this)(s, t->a));
        if (s->kind == Kind::Inv || t->kind == Kind::Inv) unsupported(s, t);
        if (s->kind == Kind::Comp) return comp_left(s, t);
        if (t->kind == Kind::Comp) return comp_right(s, t);
        return gen(pair_name(s->name, t->name), s->dim + t->dim);
    }

    TermP comp_left(const TermP& s, const TermP& t) const {
        const auto& T = *this;
        if (s->dim == 1) {
            TermP a1 = s->a, a2 = s->b;
            if (t->dim == 1) {
                TermP sb = bQ(t, Side::Source, 0), tb = bQ(t, Side::Target, 0);
                return comp(1, cw(0, T(a1, t), id(T(a2, tb))), cw(0, id(T(a1, sb)), T(a2, t)));
            }
            if (t->dim == 2) {
                TermP b = bQ(t, Side::Source, 1), b2 = bQ(t, Side::Target, 1);
                TermP sb = bQ(t, Side::Source, 0), tb = bQ(t, Side::Target, 0);
                TermP x1 = cw(1, cw(0, T(a1, t), id(T(a2, tb))), id(cw(0, id(T(a1, sb)), T(a2, b2))));
                TermP x2 = cw(1, id(cw(0, T(a1, b), id(T(a2, tb)))), cw(0, id(T(a1, sb)), T(a2, t)));
                return comp(2, x1, x2);
            }
        }
        if (s->dim == 2 && s->k == 1 && t->dim == 1) {
            TermP al1 = s->a, al2 = s->b;
            TermP sa = bP(s, Side::Source, 0), ta = bP(s, Side::Target, 0);
            TermP sb = bQ(t, Side::Source, 0), tb = bQ(t, Side::Target, 0);
            TermP st1 = cw(1, T(al1, t), cw(0, T(al2, sb), id(T(ta, t))));
            TermP st2 = cw(1, id(cw(0, id(T(sa, t)), T(al1, tb))), T(al2, t));
            return comp(2, st1, st2);
        }
        if (s->dim == 2 && s->k == 0 && t->dim == 1) {
            // horizontal composite: pull p across t first, then q
            TermP p = s->a, q = s->b;
            TermP sb = bQ(t, Side::Source, 0), tb = bQ(t, Side::Target, 0);
            TermP q0 = bP(q, Side::Source, 1), p1 = bP(p, Side::Target, 1);
            return comp(1, cw(0, T(p, t), id(T(q0, tb))), cw(0, id(T(p1, sb)), T(q, t)));
        }
        unsupported(s, t);
    }

    TermP comp_right(const TermP& s, const TermP& t) const {
        const auto& T = *this;
        if (t->dim == 1) {
            TermP b1 = t->a, b2 = t->b;
            TermP sa = bP(s, Side::Source, 0), ta = bP(s, Side::Target, 0);
            if (s->dim == 1) return comp(1, cw(0, id(T(sa, b1)), T(s, b2)), cw(0, T(s, b1), id(T(ta, b2))));
            if (s->dim == 2) {
                TermP a = bP(s, Side::Source, 1), a2 = bP(s, Side::Target, 1);
                TermP x1 = cw(1, id(cw(0, id(T(sa, b1)), T(a, b2))), cw(0, T(s, b1), id(T(ta, b2))));
                TermP x2 = cw(1, cw(0, id(T(sa, b1)), T(s, b2)), id(cw(0, T(a2, b1), id(T(ta, b2)))));
                return comp(2, x1, x2);
            }
        }
        if (t->dim == 2 && t->k == 1 && s->dim == 1) {
            TermP be1 = t->a, be2 = t->b;
            TermP sa = bP(s, Side::Source, 0), ta = bP(s, Side::Target, 0);
            TermP tb = bQ(t, Side::Target, 0), sb = bQ(t, Side::Source, 0);
            TermP st1 = cw(1, cw(0, T(sa, be1), id(T(s, tb))), T(s, be2));
            TermP st2 = cw(1, T(s, be1), cw(0, id(T(s, sb)), T(ta, be2)));
            return comp(2, st1, st2);
        }
        if (t->dim == 2 && t->k == 0 && s->dim == 1) {
            TermP q1 = t->a, q2 = t->b;
            TermP sa = bP(s, Side::Source, 0), ta = bP(s, Side::Target, 0);
            TermP b1 = bQ(q1, Side::Source, 1), b2 = bQ(q2, Side::Target, 1);
            return comp(1, cw(0, id(T(sa, b1)), T(s, q2)), cw(0, T(s, q1), id(T(ta, b2))));
        }
        unsupported(s, t);
    }

    // Boundary of the generator pair (p, q) following the case table.
    std::pair<TermP, TermP> pair_boundary(const Generator& p, const Generator& q) const {
        const auto& T = *this;
        TermP ps = P.g(p.name), qs = Q.g(q.name);
        int dp = p.dim, dq = q.dim;
        if (dp == 0) return {T(ps, q.src), T(ps, q.tgt)};
        if (dq == 0) return {T(p.src, qs), T(p.tgt, qs)};
        TermP x = bP(ps, Side::Source, 0), x2 = bP(ps, Side::Target, 0);
        TermP y = bQ(qs, Side::Source, 0), y2 = bQ(qs, Side::Target, 0);
        if (dp == 1 && dq == 1)
            return {comp(0, T(x, qs), T(ps, y2)), comp(0, T(ps, y), T(x2, qs))};
        if (dp == 2 && dq == 1) {
            TermP a = p.src, a2 = p.tgt;
            return {comp(1, T(a, qs), cw(0, T(ps, y), id(T(x2, qs)))),
                    comp(1, cw(0, id(T(x, qs)), T(ps, y2)), T(a2, qs))};
        }
        if (dp == 1 && dq == 2) {
            TermP b = q.src, b2 = q.tgt;
            return {comp(1, cw(0, T(x, qs), id(T(ps, y2))), T(ps, b2)),
                    comp(1, T(ps, b), cw(0, id(T(ps, y)), T(x2, qs)))};
        }
        if (dp == 2 && dq == 2) {
            TermP a = p.src, a2 = p.tgt, b = q.src, b2 = q.tgt;
            TermP s1 = cw(1, T(a, qs), cw(0, T(ps, y), id(T(x2, b2))));
            TermP s2 = cw(1, T(ps, b), cw(0, id(T(a2, y)), T(x2, qs)));
            TermP t1 = cw(1, cw(0, T(x, qs), id(T(a, y2))), T(ps, b2));
            TermP t2 = cw(1, cw(0, id(T(x, b)), T(ps, y2)), T(a2, qs));
            return {comp(2, s1, s2), comp(2, t1, t2)};
        }
        if (dp == 3 && dq == 1) {
            TermP A = p.src, A2 = p.tgt;
            TermP a = bP(ps, Side::Source, 1), a2 = bP(ps, Side::Target, 1);
            TermP g_y2 = cw(1, cw(0, id(T(x, qs)), T(ps, y2)), T(a2, qs));
            TermP g_y = cw(1, T(a, qs), cw(0, T(ps, y), id(T(x2, qs))));
            return {comp(2, T(A, qs), g_y2), comp(2, g_y, T(A2, qs))};
        }
        if (dp == 1 && dq == 3) {
            TermP B = q.src, B2 = q.tgt;
            TermP b = bQ(qs, Side::Source, 1), b2 = bQ(qs, Side::Target, 1);
            TermP g_x = cw(1, cw(0, T(x, qs), id(T(ps, y2))), T(ps, b2));
            TermP g_x2 = cw(1, T(ps, b), cw(0, id(T(ps, y)), T(x2, qs)));
            return {comp(2, g_x, T(ps, B2)), comp(2, T(ps, B), g_x2)};
        }
        throw GrayError("generator pair " + p.name + ", " + q.name + " of dimensions (" + std::to_string(dp) + "," +
                        std::to_string(dq) + ") is outside the case table");
    }
};

}  // namespace

TermP tensor(const Presentation& P, const Presentation& Q, const TermP& s, const TermP& t) {
    return Tensor{P, Q}(s, t);
}

GrayProduct gray(const Presentation& P, const Presentation& Q) {
    GrayProduct G;
    Tensor T{P, Q};
    for (int d = 0; d <= P.maxDim + Q.maxDim; d++) {
        for (auto& p : P.gens)
            for (auto& q : Q.gens) {
                if (p.dim + q.dim != d) continue;
                if (d > 4) throw GrayError("generator pair " + p.name + ", " + q.name + " exceeds dimension 4");
                std::string n = pair_name(p.name, q.name);
                if (d == 0) {
                    G.pres.add_gen(n, 0);
                } else {
                    auto [s, t] = T.pair_boundary(p, q);
                    G.pres.add_gen(n, d, s, t, p.invertible || q.invertible);
                }
                G.provenance[n] = {p.name, q.name};
            }
    }
    for (auto& r : P.rels)
        for (auto* y : Q.of_dim(0)) {
            TermP ys = gen(y->name, 0);
            G.pres.relate(T(r.lhs, ys), T(r.rhs, ys), r.oriented);
        }
    for (auto& r : Q.rels)
        for (auto* x : P.of_dim(0)) {
            TermP xs = gen(x->name, 0);
            G.pres.relate(T(xs, r.lhs), T(xs, r.rhs), r.oriented);
        }
    return G;
}

TermP CollapseMap::apply(const TermP& t) const {
    std::function<TermP(const TermP&)> go = [&](const TermP& x) -> TermP {
        switch (x->kind) {
        case Kind::Gen: {
            auto it = assign.find(x->name);
            if (it == assign.end()) throw TermError("collapse: unknown generator " + x->name);
            return it->second;
        }
        case Kind::Id: return id(go(x->a));
        case Kind::Inv: return inv(go(x->a));
        case Kind::Comp: return comp(x->k, go(x->a), go(x->b));
        }
        throw TermError("bad term");
    };
    return simplify(go(t));
}

SmashProduct smash(const PointedPresentation& P, const PointedPresentation& Q) {
    SmashProduct S;
    S.gray = gray(P.base, Q.base);
    S.basepoint = pair_name(P.basepoint, Q.basepoint);
    S.collapse.base = S.basepoint;
    TermP base = gen(S.basepoint, 0);
    for (auto& g : S.gray.pres.gens) {
        auto [p, q] = S.gray.provenance.at(g.name);
        if (p == P.basepoint || q == Q.basepoint) {
            S.collapse.assign[g.name] = id_tower(base, g.dim);
            if (g.name == S.basepoint) S.pres.add_gen(g.name, 0);
            continue;
        }
        S.collapse.assign[g.name] = gen(g.name, g.dim);
        if (g.dim == 0)
            S.pres.add_gen(g.name, 0);
        else
            S.pres.add_gen(g.name, g.dim, S.collapse.apply(g.src), S.collapse.apply(g.tgt), g.invertible);
    }
    for (auto& r : S.gray.pres.rels) {
        TermP l = S.collapse.apply(r.lhs), rr = S.collapse.apply(r.rhs);
        if (same(l, rr)) continue;
        S.pres.relate(l, rr, r.oriented);
    }
    return S;
}

}  // namespace hopfsmith
