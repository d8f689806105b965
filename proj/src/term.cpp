#include "hopfsmith/term.hpp"

#include <cctype>

namespace hopfsmith {

TermP gen(const std::string& name, int dim) {
    if (dim < 0 || dim > 4) throw TermError("generator dimension out of range: " + name);
    auto t = std::make_shared<Term>();
    t->kind = Kind::Gen;
    t->name = name;
    t->dim = dim;
    return t;
}

TermP id(TermP x) {
    if (x->dim >= 4) throw TermError("identity above dimension 4");
    auto t = std::make_shared<Term>();
    t->kind = Kind::Id;
    t->dim = x->dim + 1;
    t->a = std::move(x);
    return t;
}

TermP id_tower(TermP t, int levels) {
    for (int i = 0; i < levels; i++) t = id(t);
    return t;
}

TermP comp(int k, TermP a, TermP b) {
    if (a->dim != b->dim)
        throw TermError("comp" + std::to_string(k) + " of cells of dimensions " +
                        std::to_string(a->dim) + " and " + std::to_string(b->dim));
    if (k < 0 || k >= a->dim) throw TermError("comp" + std::to_string(k) + " on a " + std::to_string(a->dim) + "-cell");
    auto t = std::make_shared<Term>();
    t->kind = Kind::Comp;
    t->k = k;
    t->dim = a->dim;
    t->a = std::move(a);
    t->b = std::move(b);
    return t;
}

TermP inv(TermP x) {
    if (x->dim == 0) throw TermError("inverse of a 0-cell");
    auto t = std::make_shared<Term>();
    t->kind = Kind::Inv;
    t->dim = x->dim;
    t->a = std::move(x);
    return t;
}

bool same(const TermP& a, const TermP& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->dim != b->dim) return false;
    switch (a->kind) {
    case Kind::Gen: return a->name == b->name;
    case Kind::Id:
    case Kind::Inv: return same(a->a, b->a);
    case Kind::Comp: return a->k == b->k && same(a->a, b->a) && same(a->b, b->b);
    }
    return false;
}

std::size_t term_size(const TermP& t) {
    switch (t->kind) {
    case Kind::Gen: return 1;
    case Kind::Id:
    case Kind::Inv: return 1 + term_size(t->a);
    case Kind::Comp: return 1 + term_size(t->a) + term_size(t->b);
    }
    return 0;
}

TermP strip_ids(const TermP& t, int* levels) {
    TermP x = t;
    int n = 0;
    while (x->kind == Kind::Id) {
        x = x->a;
        n++;
    }
    if (levels) *levels = n;
    return x;
}

bool is_identity(const TermP& t) {
    switch (t->kind) {
    case Kind::Gen: return false;
    case Kind::Id: return true;
    case Kind::Inv: return is_identity(t->a);
    case Kind::Comp: return is_identity(t->a) && is_identity(t->b);
    }
    return false;
}

std::string to_sexpr(const TermP& t) {
    switch (t->kind) {
    case Kind::Gen: return "(gen " + t->name + ")";
    case Kind::Id: return "(id " + to_sexpr(t->a) + ")";
    case Kind::Inv: return "(inv " + to_sexpr(t->a) + ")";
    case Kind::Comp:
        return "(comp" + std::to_string(t->k) + " " + to_sexpr(t->a) + " " + to_sexpr(t->b) + ")";
    }
    return "";
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    const std::function<int(const std::string&)>& dim_of;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw TermError("s-expression: " + what + " at offset " + std::to_string(i) + " in \"" + s + "\"");
    }
    void expect(char c) {
        ws();
        if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
        i++;
    }
    std::string atom() {
        ws();
        std::size_t j = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' && s[i] != ')') i++;
        if (j == i) fail("expected atom");
        return s.substr(j, i - j);
    }
    TermP term() {
        expect('(');
        std::string head = atom();
        TermP r;
        if (head == "gen") {
            std::string n = atom();
            r = gen(n, dim_of(n));
        } else if (head == "id") {
            r = id(term());
        } else if (head == "inv") {
            r = inv(term());
        } else if (head.size() == 5 && head.compare(0, 4, "comp") == 0 && std::isdigit(static_cast<unsigned char>(head[4]))) {
            int k = head[4] - '0';
            TermP a = term();
            TermP b = term();
            r = comp(k, a, b);
        } else {
            fail("unknown head '" + head + "'");
        }
        expect(')');
        return r;
    }
};

}  // namespace

TermP parse_sexpr(const std::string& s, const std::function<int(const std::string&)>& dim_of) {
    Parser p{s, 0, dim_of};
    TermP t = p.term();
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return t;
}

}  // namespace hopfsmith
