#include "hopfsmith/presentation.hpp"

namespace hopfsmith {

void Presentation::add(Generator g) {
    if (g.dim < 0 || g.dim > 4) throw TermError("generator " + g.name + ": dimension out of range");
    if (index_.count(g.name)) throw TermError("duplicate generator " + g.name);
    if (g.dim > 0 && (!g.src || !g.tgt)) throw TermError("generator " + g.name + " lacks a boundary");
    if (g.dim > maxDim) maxDim = g.dim;
    index_[g.name] = gens.size();
    gens.push_back(std::move(g));
}

void Presentation::add_gen(const std::string& name, int dim, TermP s, TermP t, bool invertible) {
    add(Generator{name, dim, std::move(s), std::move(t), invertible});
}

void Presentation::relate(TermP lhs, TermP rhs, bool oriented) {
    int d = lhs->dim;
    rels.push_back(Relation{d, std::move(lhs), std::move(rhs), oriented});
}

const Generator* Presentation::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &gens[it->second];
}

const Generator& Presentation::at(const std::string& name) const {
    const Generator* g = find(name);
    if (!g) throw TermError("unknown generator " + name);
    return *g;
}

TermP Presentation::g(const std::string& name) const { return gen(name, at(name).dim); }

std::vector<int> Presentation::census() const {
    std::vector<int> c(maxDim + 1, 0);
    for (auto& g : gens) c[g.dim]++;
    return c;
}

std::vector<const Generator*> Presentation::of_dim(int d) const {
    std::vector<const Generator*> r;
    for (auto& g : gens)
        if (g.dim == d) r.push_back(&g);
    return r;
}

TermP boundary(const Presentation& P, const TermP& t, Side side, int k) {
    if (k < 0 || k >= t->dim)
        throw BoundaryError("boundary" + std::to_string(k) + " of a " + std::to_string(t->dim) + "-cell");
    int top = t->dim - 1;
    switch (t->kind) {
    case Kind::Gen: {
        const Generator& g = P.at(t->name);
        TermP b = side == Side::Source ? g.src : g.tgt;
        return k == top ? b : boundary(P, b, side, k);
    }
    case Kind::Id:
        return k == top ? t->a : boundary(P, t->a, side, k);
    case Kind::Inv:
        return k == top ? boundary(P, t->a, opposite(side), k) : boundary(P, t->a, side, k);
    case Kind::Comp: {
        int j = t->k;
        if (k < j) return boundary(P, t->a, side, k);
        if (k == j) return side == Side::Source ? boundary(P, t->a, side, k) : boundary(P, t->b, side, k);
        return simplify(comp(j, boundary(P, t->a, side, k), boundary(P, t->b, side, k)));
    }
    }
    throw BoundaryError("bad term");
}

namespace {

// Y is a unit for comp_k when it is an identity tower on a cell of dim <= k.
bool unit_for(const TermP& y, int k) {
    int n = 0;
    TermP base = strip_ids(y, &n);
    return n > 0 && base->dim <= k;
}

}  // namespace

TermP simplify(const TermP& t) {
    switch (t->kind) {
    case Kind::Gen: return t;
    case Kind::Id: {
        TermP a = simplify(t->a);
        return a == t->a ? t : id(a);
    }
    case Kind::Inv: {
        TermP a = simplify(t->a);
        if (a->kind == Kind::Id) return a;
        if (a->kind == Kind::Inv) return a->a;
        return a == t->a ? t : inv(a);
    }
    case Kind::Comp: {
        TermP a = simplify(t->a), b = simplify(t->b);
        int k = t->k;
        if (unit_for(b, k)) return a;
        if (unit_for(a, k)) return b;
        if (a->kind == Kind::Id && b->kind == Kind::Id) {
            if (k == t->dim - 1) return a;
            return id(simplify(comp(k, a->a, b->a)));
        }
        if (a == t->a && b == t->b) return t;
        return comp(k, a, b);
    }
    }
    return t;
}

std::function<int(const std::string&)> dim_lookup(const Presentation& P) {
    return [&P](const std::string& n) { return P.at(n).dim; };
}

TermP parse_term(const Presentation& P, const std::string& s) { return parse_sexpr(s, dim_lookup(P)); }

void collect_gens(const TermP& t, std::vector<std::string>& out) {
    switch (t->kind) {
    case Kind::Gen: out.push_back(t->name); break;
    case Kind::Id:
    case Kind::Inv: collect_gens(t->a, out); break;
    case Kind::Comp:
        collect_gens(t->a, out);
        collect_gens(t->b, out);
        break;
    }
}

}  // namespace hopfsmith
