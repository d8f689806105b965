#include "hopfsmith/eq.hpp"

#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hopfsmith {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

long default_budget() {
    if (const char* s = std::getenv("HOPFSMITH_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10000;
}

namespace {

struct Budget {
    long left;
    EqStats* stats;
    bool take() {
        if (stats) stats->steps++;
        if (left <= 0) return false;
        left--;
        return true;
    }
};

// ---- dimension 1 ----

struct Rule1 {
    std::vector<Letter> lhs, rhs;
};

std::vector<Rule1> rules1(const Presentation& P) {
    std::vector<Rule1> r;
    for (auto& rel : P.rels)
        if (rel.dim == 1 && rel.oriented) r.push_back({flatten1(P, rel.lhs).letters, flatten1(P, rel.rhs).letters});
    return r;
}

bool has_rels(const Presentation& P, int d) {
    for (auto& rel : P.rels)
        if (rel.dim == d) return true;
    return false;
}

Word normalize1(const Presentation& P, Word w, Budget& b, bool& complete) {
    w = free_reduce(std::move(w));
    auto rules = rules1(P);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& r : rules) {
            if (r.lhs.empty() || r.lhs.size() > w.letters.size()) continue;
            auto it = std::search(w.letters.begin(), w.letters.end(), r.lhs.begin(), r.lhs.end());
            if (it == w.letters.end()) continue;
            if (!b.take()) {
                complete = false;
                return w;
            }
            std::vector<Letter> n(w.letters.begin(), it);
            n.insert(n.end(), r.rhs.begin(), r.rhs.end());
            n.insert(n.end(), it + r.lhs.size(), w.letters.end());
            w.letters = std::move(n);
            w = free_reduce(std::move(w));
            changed = true;
            break;
        }
    }
    return w;
}

Verdict eq_words(const Presentation& P, const Word& a, const Word& b, Budget& bud) {
    if (a == b) return Verdict::Equal;
    bool complete = true;
    Word na = normalize1(P, a, bud, complete), nb = normalize1(P, b, bud, complete);
    if (na == nb) return Verdict::Equal;
    if (na.base != nb.base) return Verdict::Distinct;
    if (word_target(P, na) != word_target(P, nb)) return Verdict::Distinct;
    if (!has_rels(P, 1)) return Verdict::Distinct;
    return Verdict::Unknown;
}

// ---- dimension 2 ----

struct Rule2 {
    Diagram2 lhs, rhs;
    std::map<std::string, int> need;
};

std::vector<Rule2> rules2(const Presentation& P, bool oriented_only, bool both_ways) {
    std::vector<Rule2> r;
    auto add = [&](const Diagram2& l, const Diagram2& rr) {
        if (l.layers.empty() && (!both_ways || rr.layers.empty())) return;
        Rule2 x{l, rr, {}};
        for (auto& ly : l.layers) x.need[ly.gen + (ly.inv ? "~" : "")]++;
        r.push_back(std::move(x));
    };
    for (auto& rel : P.rels) {
        if (rel.dim != 2) continue;
        if (oriented_only && !rel.oriented) continue;
        Diagram2 l = flatten2(P, rel.lhs), rr = flatten2(P, rel.rhs);
        add(l, rr);
        if (both_ways || !rel.oriented) add(rr, l);
    }
    return r;
}

std::map<std::string, int> gen_bag(const Diagram2& d) {
    std::map<std::string, int> m;
    for (auto& l : d.layers) m[l.gen + (l.inv ? "~" : "")]++;
    return m;
}

bool bag_contains(const std::map<std::string, int>& have, const std::map<std::string, int>& need) {
    for (auto& [k, v] : need) {
        auto it = have.find(k);
        if (it == have.end() || it->second < v) return false;
    }
    return true;
}

bool cancellable(const std::map<std::string, int>& bag) {
    for (auto& [k, v] : bag)
        if (k.back() != '~' && bag.count(k + "~")) return true;
    return false;
}

std::vector<std::vector<Letter>> words_along(const Diagram2& d) {
    std::vector<std::vector<Letter>> ws;
    Word w = d.src;
    ws.push_back(w.letters);
    for (auto& l : d.layers) {
        std::vector<Letter> n(w.letters.begin(), w.letters.begin() + l.pos);
        n.insert(n.end(), l.out.begin(), l.out.end());
        n.insert(n.end(), w.letters.begin() + l.pos + l.in.size(), w.letters.end());
        w.letters = std::move(n);
        ws.push_back(w.letters);
    }
    return ws;
}

// Rewrites at window starting at layer i if the rule's lhs matches there.
std::optional<Diagram2> try_rule(const Diagram2& d, const std::vector<std::vector<Letter>>& ws, std::size_t i,
                                 const Rule2& r) {
    const auto& L = r.lhs.layers;
    if (L.empty() || i + L.size() > d.layers.size()) return std::nullopt;
    long o = static_cast<long>(d.layers[i].pos) - static_cast<long>(L[0].pos);
    if (o < 0) return std::nullopt;
    for (std::size_t j = 0; j < L.size(); j++) {
        const Layer2& x = d.layers[i + j];
        if (x.gen != L[j].gen || x.inv != L[j].inv || static_cast<long>(x.pos) != static_cast<long>(L[j].pos) + o)
            return std::nullopt;
    }
    const auto& w = ws[i];
    const auto& s = r.lhs.src.letters;
    if (static_cast<std::size_t>(o) + s.size() > w.size() || !std::equal(s.begin(), s.end(), w.begin() + o))
        return std::nullopt;
    Diagram2 n{d.src, {}};
    n.layers.assign(d.layers.begin(), d.layers.begin() + i);
    for (auto l : r.rhs.layers) {
        l.pos += o;
        n.layers.push_back(std::move(l));
    }
    n.layers.insert(n.layers.end(), d.layers.begin() + i + L.size(), d.layers.end());
    return n;
}

// Inserts an lhs whose rhs is an identity wherever the word carries its source.
void insertions(const Diagram2& d, const std::vector<std::vector<Letter>>& ws, const Rule2& r,
                std::vector<Diagram2>& out) {
    if (!r.lhs.layers.empty() || r.rhs.layers.empty()) return;
    const auto& s = r.rhs.src.letters;
    for (std::size_t i = 0; i <= d.layers.size(); i++) {
        const auto& w = ws[i];
        for (std::size_t o = 0; o + s.size() <= w.size(); o++) {
            if (!std::equal(s.begin(), s.end(), w.begin() + o)) continue;
            Diagram2 n{d.src, {}};
            n.layers.assign(d.layers.begin(), d.layers.begin() + i);
            for (auto l : r.rhs.layers) {
                l.pos += o;
                n.layers.push_back(std::move(l));
            }
            n.layers.insert(n.layers.end(), d.layers.begin() + i, d.layers.end());
            out.push_back(std::move(n));
        }
    }
}

std::optional<Diagram2> try_cancel(const Diagram2& d, std::size_t i) {
    if (i + 1 >= d.layers.size()) return std::nullopt;
    const Layer2 &x = d.layers[i], &y = d.layers[i + 1];
    if (x.gen != y.gen || x.inv == y.inv || x.pos != y.pos) return std::nullopt;
    Diagram2 n{d.src, {}};
    n.layers.assign(d.layers.begin(), d.layers.begin() + i);
    n.layers.insert(n.layers.end(), d.layers.begin() + i + 2, d.layers.end());
    return n;
}

// Breadth-first walk over interchange linearizations. visit returns true to stop.
// Returns false when the budget ran out before the class was exhausted.
bool walk_class(const Diagram2& d, Budget& bud, const std::function<bool(const Diagram2&)>& visit, bool* stopped) {
    std::unordered_set<std::string> seen;
    std::deque<Diagram2> q;
    q.push_back(d);
    seen.insert(diagram_key(d));
    *stopped = false;
    while (!q.empty()) {
        Diagram2 cur = std::move(q.front());
        q.pop_front();
        if (!bud.take()) return false;
        if (visit(cur)) {
            *stopped = true;
            return true;
        }
        for (std::size_t i = 0; i + 1 < cur.layers.size(); i++) {
            for (int alt = 0; alt < 2; alt++) {
                if (alt == 1 && !zero_contact(cur.layers[i], cur.layers[i + 1])) break;
                Layer2 n2, n1;
                if (!swap_layers(cur.layers[i], cur.layers[i + 1], n2, n1, alt == 1)) continue;
                Diagram2 nx = cur;
                nx.layers[i] = n2;
                nx.layers[i + 1] = n1;
                if (seen.insert(diagram_key(nx)).second) q.push_back(std::move(nx));
            }
        }
    }
    return true;
}

std::optional<Diagram2> find_redex(const Diagram2& d, const std::vector<Rule2>& rules, Budget& bud, bool& complete) {
    auto bag = gen_bag(d);
    std::vector<const Rule2*> live;
    for (auto& r : rules)
        if (bag_contains(bag, r.need)) live.push_back(&r);
    bool cancel = cancellable(bag);
    if (live.empty() && !cancel) return std::nullopt;
    std::optional<Diagram2> found;
    bool stopped = false;
    bool done = walk_class(
        d, bud,
        [&](const Diagram2& x) {
            auto ws = words_along(x);
            for (std::size_t i = 0; i < x.layers.size(); i++) {
                if (cancel)
                    if (auto n = try_cancel(x, i)) {
                        found = std::move(n);
                        return true;
                    }
                for (auto* r : live)
                    if (auto n = try_rule(x, ws, i, *r)) {
                        found = std::move(n);
                        return true;
                    }
            }
            return false;
        },
        &stopped);
    if (!done) complete = false;
    return found;
}

Diagram2 normalize2_impl(const Presentation& P, const Diagram2& d, Budget& bud, bool& complete) {
    auto rules = rules2(P, true, false);
    Diagram2 cur = canonical(d);
    while (true) {
        auto n = find_redex(cur, rules, bud, complete);
        if (!n) break;
        cur = canonical(*n);
    }
    return cur;
}

std::map<std::string, int> signed_counts(const Diagram2& d) {
    std::map<std::string, int> m;
    for (auto& l : d.layers) m[l.gen] += l.inv ? -1 : 1;
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

bool has_inv(const Diagram2& d) {
    for (auto& l : d.layers)
        if (l.inv) return true;
    return false;
}

// Expands a canonical node by every rewrite in every linearization.
std::vector<Diagram2> neighbours(const Diagram2& d, const std::vector<Rule2>& rules, Budget& bud) {
    std::vector<Diagram2> out;
    std::set<std::string> seen;
    bool stopped = false;
    walk_class(
        d, bud,
        [&](const Diagram2& x) {
            auto ws = words_along(x);
            auto push = [&](Diagram2 n) {
                Diagram2 c = canonical(n);
                if (seen.insert(diagram_key(c)).second) out.push_back(std::move(c));
            };
            for (std::size_t i = 0; i < x.layers.size(); i++) {
                if (auto n = try_cancel(x, i)) push(std::move(*n));
                for (auto& r : rules)
                    if (auto n = try_rule(x, ws, i, r)) push(std::move(*n));
            }
            for (auto& r : rules) {
                std::vector<Diagram2> ins;
                insertions(x, ws, r, ins);
                for (auto& n : ins) push(std::move(n));
            }
            return false;
        },
        &stopped);
    return out;
}

Verdict bidirectional(const Diagram2& a, const Diagram2& b, const std::vector<Rule2>& rules, Budget& bud) {
    std::unordered_map<std::string, int> side;
    std::deque<std::pair<Diagram2, int>> q;
    side[diagram_key(a)] = 0;
    side[diagram_key(b)] = 1;
    q.emplace_back(a, 0);
    q.emplace_back(b, 1);
    std::size_t max_layers = std::max(a.layers.size(), b.layers.size()) + 4;
    while (!q.empty() && bud.left > 0) {
        auto [cur, s] = std::move(q.front());
        q.pop_front();
        for (auto& n : neighbours(cur, rules, bud)) {
            if (n.layers.size() > max_layers) continue;
            std::string k = diagram_key(n);
            auto it = side.find(k);
            if (it != side.end()) {
                if (it->second != s) return Verdict::Equal;
                continue;
            }
            side[k] = s;
            q.emplace_back(std::move(n), s);
        }
    }
    return Verdict::Unknown;
}

Verdict eq2_impl(const Presentation& P, const Diagram2& a, const Diagram2& b, Budget& bud) {
    Verdict vs = eq_words(P, a.src, b.src, bud);
    if (vs == Verdict::Distinct) return vs;
    Verdict vt = eq_words(P, target_word(a), target_word(b), bud);
    if (vt == Verdict::Distinct) return vt;
    if (vs == Verdict::Unknown || vt == Verdict::Unknown) return Verdict::Unknown;
    if (a.src != b.src) return Verdict::Unknown;
    Diagram2 ca = canonical(a), cb = canonical(b);
    if (ca == cb) return Verdict::Equal;
    bool rels = has_rels(P, 2);
    if (!rels && signed_counts(a) != signed_counts(b)) return Verdict::Distinct;
    bool complete = true;
    Diagram2 na = normalize2_impl(P, a, bud, complete);
    Diagram2 nb = normalize2_impl(P, b, bud, complete);
    if (na == nb) return Verdict::Equal;
    std::string kb = diagram_key(nb);
    if (!has_inv(na) && !has_inv(nb)) {
        bool stopped = false;
        bool done = walk_class(na, bud, [&](const Diagram2& x) { return diagram_key(x) == kb; }, &stopped);
        if (stopped) return Verdict::Equal;
        if (done && !rels) return Verdict::Distinct;
    }
    if (!rels && !complete) return Verdict::Unknown;
    auto all = rules2(P, false, true);
    return bidirectional(na, nb, all, bud);
}

// ---- dimension 3 ----

// Layer identity up to interchange: canonical source diagram with the
// generator's own layers marked.
std::string marked_key(const Diagram2& below, std::size_t pos, const Diagram2& g, const Diagram2& above,
                       const std::string& tag) {
    Diagram2 mid{target_word(below), {}};
    for (auto l : g.layers) {
        l.pos += pos;
        mid.layers.push_back(std::move(l));
    }
    Diagram2 s = concat2(concat2(below, mid), above);
    std::vector<int> mark;
    for (std::size_t i = 0; i < below.layers.size(); i++) mark.push_back(-1);
    for (std::size_t i = 0; i < g.layers.size(); i++) mark.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < above.layers.size(); i++) mark.push_back(-1);
    std::vector<std::size_t> order;
    Diagram2 c = canonical(s, &order);
    std::string k = tag + "#" + std::to_string(pos) + "#" + diagram_key(c) + "#";
    for (auto i : order) k += std::to_string(mark[i]) + ",";
    // An empty generator source pins nothing; record where it sits.
    if (g.layers.empty()) k += "@" + std::to_string(below.layers.size()) + "/" + word_key(mid.src);
    return k;
}

std::string src_key(const Layer3& l) {
    return marked_key(l.below, l.pos, l.gin, l.above, l.gen + (l.inv ? "~" : ""));
}

std::string tgt_key(const Layer3& l) {
    return marked_key(l.below, l.pos, l.gout, l.above, l.gen + (l.inv ? "" : "~"));
}

std::vector<std::string> layer_keys(const Diagram3& d) {
    std::vector<const Layer3*> st;
    for (auto& l : d.layers) {
        if (!st.empty() && st.back()->gen == l.gen && st.back()->inv != l.inv && tgt_key(*st.back()) == src_key(l)) {
            st.pop_back();
            continue;
        }
        st.push_back(&l);
    }
    std::vector<std::string> keys;
    for (auto* l : st) keys.push_back(src_key(*l));
    return keys;
}

Verdict eq_impl(const Presentation& P, const TermP& a, const TermP& b, Budget& bud);

Verdict eq3_impl(const Presentation& P, const TermP& a, const TermP& b, Budget& bud) {
    Verdict vs = eq_impl(P, boundary(P, a, Side::Source, 2), boundary(P, b, Side::Source, 2), bud);
    if (vs == Verdict::Distinct) return vs;
    Verdict vt = eq_impl(P, boundary(P, a, Side::Target, 2), boundary(P, b, Side::Target, 2), bud);
    if (vt == Verdict::Distinct) return vt;
    if (vs != Verdict::Equal || vt != Verdict::Equal) return Verdict::Unknown;
    if (same(simplify(a), simplify(b))) return Verdict::Equal;
    Diagram3 da = flatten3(P, a), db = flatten3(P, b);
    if (layer_keys(da) == layer_keys(db)) return Verdict::Equal;
    return Verdict::Unknown;
}

Verdict eq_impl(const Presentation& P, const TermP& a, const TermP& b, Budget& bud) {
    if (a->dim != b->dim) return Verdict::Distinct;
    switch (a->dim) {
    case 0: return a->name == b->name ? Verdict::Equal : Verdict::Distinct;
    case 1: return eq_words(P, flatten1(P, a), flatten1(P, b), bud);
    case 2: return eq2_impl(P, flatten2(P, a), flatten2(P, b), bud);
    case 3: return eq3_impl(P, a, b, bud);
    default: {
        Verdict vs = eq_impl(P, boundary(P, a, Side::Source, 3), boundary(P, b, Side::Source, 3), bud);
        if (vs == Verdict::Distinct) return vs;
        Verdict vt = eq_impl(P, boundary(P, a, Side::Target, 3), boundary(P, b, Side::Target, 3), bud);
        if (vt == Verdict::Distinct) return vt;
        if (vs == Verdict::Equal && vt == Verdict::Equal && same(simplify(a), simplify(b))) return Verdict::Equal;
        return Verdict::Unknown;
    }
    }
}

}  // namespace

Verdict eq(const Presentation& P, const TermP& a, const TermP& b, long budget, EqStats* stats) {
    Budget bud{budget, stats};
    return eq_impl(P, a, b, bud);
}

Verdict eq2(const Presentation& P, const Diagram2& a, const Diagram2& b, long budget, EqStats* stats) {
    Budget bud{budget, stats};
    return eq2_impl(P, a, b, bud);
}

Diagram2 normalize2(const Presentation& P, const Diagram2& d, long budget, bool* complete, EqStats* stats) {
    Budget bud{budget, stats};
    bool c = true;
    Diagram2 r = normalize2_impl(P, d, bud, c);
    if (complete) *complete = c;
    return r;
}

TermP compose(const Presentation& P, int k, TermP a, TermP b, long budget) {
    int d = std::max(a->dim, b->dim);
    if (k >= std::min(a->dim, b->dim))
        throw CompositionError("comp" + std::to_string(k) + " needs both cells above dimension " + std::to_string(k), a, b);
    a = id_tower(a, d - a->dim);
    b = id_tower(b, d - b->dim);
    TermP ta = boundary(P, a, Side::Target, k), sb = boundary(P, b, Side::Source, k);
    Verdict v = eq(P, ta, sb, budget);
    if (v != Verdict::Equal)
        throw CompositionError("comp" + std::to_string(k) + " boundary mismatch (" + verdict_name(v) + "): " +
                                   to_sexpr(ta) + " vs " + to_sexpr(sb),
                               ta, sb);
    return comp(k, a, b);
}

TermP compose_all(const Presentation& P, int k, const std::vector<TermP>& ts, long budget) {
    if (ts.empty()) throw TermError("compose_all of nothing");
    TermP r = ts[0];
    for (std::size_t i = 1; i < ts.size(); i++) r = compose(P, k, r, ts[i], budget);
    return r;
}

namespace {

std::optional<std::string> check_rec(const Presentation& P, const TermP& t, long budget, bool top_inv) {
    switch (t->kind) {
    case Kind::Gen: {
        const Generator* g = P.find(t->name);
        if (!g) return "unknown generator " + t->name;
        if (g->dim != t->dim) return "generator " + t->name + " used at the wrong dimension";
        if (top_inv && !g->invertible) return "inverse of non-invertible generator " + t->name;
        return std::nullopt;
    }
    case Kind::Id: return check_rec(P, t->a, budget, false);
    case Kind::Inv: return check_rec(P, t->a, budget, true);
    case Kind::Comp: {
        if (auto e = check_rec(P, t->a, budget, top_inv)) return e;
        if (auto e = check_rec(P, t->b, budget, top_inv)) return e;
        try {
            TermP ta = boundary(P, t->a, Side::Target, t->k), sb = boundary(P, t->b, Side::Source, t->k);
            Verdict v = eq(P, ta, sb, budget);
            if (v != Verdict::Equal)
                return "comp" + std::to_string(t->k) + " boundary mismatch (" + verdict_name(v) + ") in " + to_sexpr(t);
        } catch (const TermError& e) {
            return std::string(e.what());
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> check_term(const Presentation& P, const TermP& t, long budget) {
    try {
        return check_rec(P, t, budget, false);
    } catch (const TermError& e) {
        return std::string(e.what());
    }
}

std::vector<Violation> validate_presentation(const Presentation& P, long budget) {
    std::vector<Violation> out;
    for (auto& g : P.gens) {
        if (g.dim == 0) continue;
        std::string where = "generator " + g.name;
        if (g.src->dim != g.dim - 1 || g.tgt->dim != g.dim - 1) {
            out.push_back({where, "boundary of wrong dimension"});
            continue;
        }
        std::vector<std::string> names;
        collect_gens(g.src, names);
        collect_gens(g.tgt, names);
        bool strat = true;
        for (auto& n : names) {
            const Generator* h = P.find(n);
            if (!h || h->dim >= g.dim) strat = false;
        }
        if (!strat) {
            out.push_back({where, "boundary mentions a generator that is unknown or not of lower dimension"});
            continue;
        }
        if (auto e = check_term(P, g.src, budget)) out.push_back({where + " source", *e});
        if (auto e = check_term(P, g.tgt, budget)) out.push_back({where + " target", *e});
        if (g.dim >= 2) {
            try {
                for (Side s : {Side::Source, Side::Target}) {
                    Verdict v = eq(P, boundary(P, g.src, s, g.dim - 2), boundary(P, g.tgt, s, g.dim - 2), budget);
                    if (v != Verdict::Equal)
                        out.push_back({where, std::string("source and target not parallel (") + verdict_name(v) + ")"});
                }
            } catch (const TermError& e) {
                out.push_back({where, e.what()});
            }
        }
    }
    for (std::size_t i = 0; i < P.rels.size(); i++) {
        const Relation& r = P.rels[i];
        std::string where = "relation " + std::to_string(i);
        if (r.lhs->dim != r.dim || r.rhs->dim != r.dim) {
            out.push_back({where, "side of wrong dimension"});
            continue;
        }
        auto el = check_term(P, r.lhs, budget), er = check_term(P, r.rhs, budget);
        if (el) out.push_back({where + " lhs", *el});
        if (er) out.push_back({where + " rhs", *er});
        if (el || er || r.dim == 0) continue;
        try {
            bool bad = false;
            for (int k = 0; k < r.dim && !bad; k++) {
                for (Side s : {Side::Source, Side::Target}) {
                    Verdict v = eq(P, boundary(P, r.lhs, s, k), boundary(P, r.rhs, s, k), budget);
                    if (v != Verdict::Equal) {
                        out.push_back({where, "sides not parallel at dimension " + std::to_string(k) + " (" +
                                                  verdict_name(v) + ")"});
                        bad = true;
                        break;
                    }
                }
            }
        } catch (const TermError& e) {
            out.push_back({where, e.what()});
        }
    }
    return out;
}

}  // namespace hopfsmith
