#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfsmith/term.hpp"

namespace hopfsmith {

struct Generator {
    std::string name;
    int dim = 0;
    TermP src, tgt;  // null for dim 0
    bool invertible = false;
};

struct Relation {
    int dim = 0;
    TermP lhs, rhs;
    bool oriented = false;
};

class Presentation {
public:
    int maxDim = 0;
    std::vector<Generator> gens;
    std::vector<Relation> rels;

    // Adds a generator. Throws TermError on duplicate names or dim > 4.
    void add(Generator g);
    void add_gen(const std::string& name, int dim, TermP src = nullptr, TermP tgt = nullptr, bool invertible = false);
    void relate(TermP lhs, TermP rhs, bool oriented = true);

    const Generator* find(const std::string& name) const;
    const Generator& at(const std::string& name) const;
    bool has(const std::string& name) const { return find(name) != nullptr; }
    // Generator cell as a term.
    TermP g(const std::string& name) const;
    std::vector<int> census() const;
    std::vector<const Generator*> of_dim(int d) const;

private:
    std::map<std::string, std::size_t> index_;
};

struct PointedPresentation {
    Presentation base;
    std::string basepoint;
};

struct BoundaryError : TermError {
    using TermError::TermError;
};

// k-dimensional source or target of t; 0 <= k < dim(t).
TermP boundary(const Presentation& P, const TermP& t, Side side, int k);
inline TermP src(const Presentation& P, const TermP& t) { return boundary(P, t, Side::Source, t->dim - 1); }
inline TermP tgt(const Presentation& P, const TermP& t) { return boundary(P, t, Side::Target, t->dim - 1); }

// Unit laws, identity fusion and double inverses, bottom up. Sound rewriting only.
TermP simplify(const TermP& t);

// Dimension lookup for parse_sexpr.
std::function<int(const std::string&)> dim_lookup(const Presentation& P);
TermP parse_term(const Presentation& P, const std::string& s);

// Generators mentioned in t (including inside identities).
void collect_gens(const TermP& t, std::vector<std::string>& out);

}  // namespace hopfsmith
