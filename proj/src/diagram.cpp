#include "hopfsmith/diagram.hpp"

#include <algorithm>
#include <tuple>

namespace hopfsmith {

namespace {

std::string obj_name(const TermP& t) {
    if (t->kind != Kind::Gen || t->dim != 0) throw BoundaryError("expected a 0-generator, got " + to_sexpr(t));
    return t->name;
}

std::string letter_src(const Presentation& P, const Letter& l) {
    const Generator& g = P.at(l.name);
    return obj_name(l.inv ? g.tgt : g.src);
}

std::string letter_tgt(const Presentation& P, const Letter& l) {
    const Generator& g = P.at(l.name);
    return obj_name(l.inv ? g.src : g.tgt);
}

std::vector<Letter> apply_layer(const std::vector<Letter>& w, const Layer2& l) {
    if (l.pos + l.in.size() > w.size() || !std::equal(l.in.begin(), l.in.end(), w.begin() + l.pos))
        throw BoundaryError("layer " + l.gen + " does not match its word at position " + std::to_string(l.pos));
    std::vector<Letter> r(w.begin(), w.begin() + l.pos);
    r.insert(r.end(), l.out.begin(), l.out.end());
    r.insert(r.end(), w.begin() + l.pos + l.in.size(), w.end());
    return r;
}

Diagram2 whisk(const Layer3& l, const Diagram2& g) {
    Diagram2 d;
    d.src = target_word(l.below);
    for (auto x : g.layers) {
        x.pos += l.pos;
        d.layers.push_back(std::move(x));
    }
    // The middle word must carry g's source at pos.
    const auto& w = d.src.letters;
    if (l.pos + g.src.letters.size() > w.size() ||
        !std::equal(g.src.letters.begin(), g.src.letters.end(), w.begin() + l.pos))
        throw BoundaryError("3-layer " + l.gen + " does not match its context");
    return d;
}

Layer3 whisker_right(Layer3 l, const Diagram2& x) {
    l.below = comp0_2(l.below, x);
    l.above = comp0_2(l.above, identity2(target_word(x)));
    return l;
}

Layer3 whisker_left(const Diagram2& y, Layer3 l) {
    Word ty = target_word(y);
    l.below = comp0_2(y, l.below);
    l.pos += ty.letters.size();
    l.above = comp0_2(identity2(ty), l.above);
    return l;
}

}  // namespace

Word flatten1(const Presentation& P, const TermP& t) {
    if (t->dim != 1) throw BoundaryError("flatten1 on a " + std::to_string(t->dim) + "-cell");
    switch (t->kind) {
    case Kind::Gen: {
        const Generator& g = P.at(t->name);
        return Word{obj_name(g.src), {Letter{t->name, false}}};
    }
    case Kind::Id: return Word{obj_name(t->a), {}};
    case Kind::Comp: {
        Word a = flatten1(P, t->a), b = flatten1(P, t->b);
        if (word_target(P, a) != b.base)
            throw BoundaryError("comp0 of 1-cells with mismatched objects: " + to_sexpr(t));
        a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
        return a;
    }
    case Kind::Inv: {
        Word a = flatten1(P, t->a);
        Word r{word_target(P, a), {}};
        for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) r.letters.push_back(Letter{it->name, !it->inv});
        return r;
    }
    }
    throw BoundaryError("bad term");
}

std::string word_target(const Presentation& P, const Word& w) {
    std::string cur = w.base;
    for (auto& l : w.letters) {
        if (letter_src(P, l) != cur) throw BoundaryError("word is not composable at letter " + l.name);
        cur = letter_tgt(P, l);
    }
    return cur;
}

Word free_reduce(Word w) {
    std::vector<Letter> r;
    for (auto& l : w.letters) {
        if (!r.empty() && r.back().name == l.name && r.back().inv != l.inv)
            r.pop_back();
        else
            r.push_back(l);
    }
    w.letters = std::move(r);
    return w;
}

std::string word_key(const Word& w) {
    std::string s = w.base + ":";
    for (auto& l : w.letters) s += l.name + (l.inv ? "^-1" : "") + ",";
    return s;
}

Diagram2 identity2(const Word& w) { return Diagram2{w, {}}; }

Word target_word(const Diagram2& d) {
    Word w = d.src;
    for (auto& l : d.layers) w.letters = apply_layer(w.letters, l);
    return w;
}

Diagram2 flatten2(const Presentation& P, const TermP& t) {
    if (t->dim != 2) throw BoundaryError("flatten2 on a " + std::to_string(t->dim) + "-cell");
    switch (t->kind) {
    case Kind::Gen: {
        const Generator& g = P.at(t->name);
        Word s = flatten1(P, g.src), u = flatten1(P, g.tgt);
        return Diagram2{s, {Layer2{0, t->name, false, s.letters, u.letters}}};
    }
    case Kind::Id: return identity2(flatten1(P, t->a));
    case Kind::Comp: {
        Diagram2 a = flatten2(P, t->a), b = flatten2(P, t->b);
        if (t->k == 1) {
            if (target_word(a) != b.src)
                throw BoundaryError("comp1 of 2-cells with mismatched 1-boundary: " + word_key(target_word(a)) +
                                    " vs " + word_key(b.src));
            return concat2(a, b);
        }
        if (word_target(P, a.src) != b.src.base) throw BoundaryError("comp0 of 2-cells with mismatched objects");
        return comp0_2(a, b);
    }
    case Kind::Inv: return inverse2(flatten2(P, t->a));
    }
    throw BoundaryError("bad term");
}

Diagram2 concat2(const Diagram2& x, const Diagram2& y) {
    Diagram2 r = x;
    r.layers.insert(r.layers.end(), y.layers.begin(), y.layers.end());
    return r;
}

Diagram2 comp0_2(const Diagram2& x, const Diagram2& y) {
    Diagram2 r = x;
    r.src.letters.insert(r.src.letters.end(), y.src.letters.begin(), y.src.letters.end());
    std::size_t shift = target_word(x).letters.size();
    for (auto l : y.layers) {
        l.pos += shift;
        r.layers.push_back(std::move(l));
    }
    return r;
}

Diagram2 inverse2(const Diagram2& d) {
    Diagram2 r;
    r.src = target_word(d);
    for (auto it = d.layers.rbegin(); it != d.layers.rend(); ++it) {
        Layer2 l = *it;
        std::swap(l.in, l.out);
        l.inv = !l.inv;
        r.layers.push_back(std::move(l));
    }
    return r;
}

std::string diagram_key(const Diagram2& d) {
    std::string s = word_key(d.src) + "|";
    for (auto& l : d.layers) s += l.gen + (l.inv ? "^-1" : "") + "@" + std::to_string(l.pos) + ";";
    return s;
}

bool zero_contact(const Layer2& l1, const Layer2& l2) {
    return l1.out.empty() && l2.in.empty() && l1.pos == l2.pos;
}

bool swap_layers(const Layer2& l1, const Layer2& l2, Layer2& n2, Layer2& n1, bool right) {
    bool left_ok = l2.pos + l2.in.size() <= l1.pos;
    bool right_ok = l2.pos >= l1.pos + l1.out.size();
    if (left_ok && right_ok) {
        left_ok = !right;
        right_ok = right;
    }
    if (left_ok) {
        n2 = l2;
        n1 = l1;
        n1.pos = l1.pos + l2.out.size() - l2.in.size();
        return true;
    }
    if (right_ok) {
        n2 = l2;
        n2.pos = l2.pos - l1.out.size() + l1.in.size();
        n1 = l1;
        return true;
    }
    return false;
}

Diagram2 canonical(const Diagram2& d, std::vector<std::size_t>* order) {
    std::vector<std::pair<Layer2, std::size_t>> rem;
    for (std::size_t i = 0; i < d.layers.size(); i++) rem.emplace_back(d.layers[i], i);
    Diagram2 out{d.src, {}};
    if (order) order->clear();
    while (!rem.empty()) {
        std::size_t best = rem.size();
        std::tuple<std::size_t, int, std::string, std::size_t> best_key;
        for (std::size_t j = 0; j < rem.size(); j++) {
            Layer2 cur = rem[j].first;
            bool ok = true;
            for (std::size_t t = j; t-- > 0;) {
                Layer2 n2, n1;
                if (!swap_layers(rem[t].first, cur, n2, n1)) {
                    ok = false;
                    break;
                }
                cur = n2;
            }
            if (!ok) continue;
            auto key = std::make_tuple(cur.pos, cur.in.empty() ? 0 : 1, cur.gen, rem[j].second);
            if (best == rem.size() || key < best_key) {
                best = j;
                best_key = key;
            }
        }
        Layer2 cur = rem[best].first;
        for (std::size_t t = best; t-- > 0;) {
            Layer2 n2, n1;
            swap_layers(rem[t].first, cur, n2, n1);
            cur = n2;
            rem[t].first = n1;
        }
        out.layers.push_back(cur);
        if (order) order->push_back(rem[best].second);
        rem.erase(rem.begin() + best);
    }
    return out;
}

Diagram3 flatten3(const Presentation& P, const TermP& t) {
    if (t->dim != 3) throw BoundaryError("flatten3 on a " + std::to_string(t->dim) + "-cell");
    switch (t->kind) {
    case Kind::Gen: {
        const Generator& g = P.at(t->name);
        Diagram2 gin = flatten2(P, g.src), gout = flatten2(P, g.tgt);
        Layer3 l{identity2(gin.src), 0, t->name, false, gin, gout, identity2(target_word(gin))};
        return Diagram3{gin, {l}};
    }
    case Kind::Id: return Diagram3{flatten2(P, t->a), {}};
    case Kind::Inv: {
        Diagram3 a = flatten3(P, t->a);
        Diagram3 r{target2(a), {}};
        for (auto it = a.layers.rbegin(); it != a.layers.rend(); ++it) {
            Layer3 l = *it;
            std::swap(l.gin, l.gout);
            l.inv = !l.inv;
            r.layers.push_back(std::move(l));
        }
        return r;
    }
    case Kind::Comp: {
        Diagram3 a = flatten3(P, t->a), b = flatten3(P, t->b);
        Diagram3 r;
        if (t->k == 2) {
            r.src = a.src;
            r.layers = a.layers;
            r.layers.insert(r.layers.end(), b.layers.begin(), b.layers.end());
        } else if (t->k == 1) {
            Diagram2 ta = target2(a);
            r.src = concat2(a.src, b.src);
            for (auto l : a.layers) {
                l.above = concat2(l.above, b.src);
                r.layers.push_back(std::move(l));
            }
            for (auto l : b.layers) {
                l.below = concat2(ta, l.below);
                r.layers.push_back(std::move(l));
            }
        } else {
            Diagram2 ta = target2(a);
            r.src = comp0_2(a.src, b.src);
            for (auto& l : a.layers) r.layers.push_back(whisker_right(l, b.src));
            for (auto& l : b.layers) r.layers.push_back(whisker_left(ta, l));
        }
        return r;
    }
    }
    throw BoundaryError("bad term");
}

Diagram2 layer_source(const Layer3& l) { return concat2(concat2(l.below, whisk(l, l.gin)), l.above); }
Diagram2 layer_target(const Layer3& l) { return concat2(concat2(l.below, whisk(l, l.gout)), l.above); }

Diagram2 target2(const Diagram3& d) { return d.layers.empty() ? d.src : layer_target(d.layers.back()); }

}  // namespace hopfsmith
