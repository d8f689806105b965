#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

namespace hopfsmith {

struct Term;
using TermP = std::shared_ptr<const Term>;

enum class Kind { Gen, Id, Comp, Inv };
enum class Side { Source, Target };

inline Side opposite(Side s) { return s == Side::Source ? Side::Target : Side::Source; }

// Immutable pasting expression. dim is cached at construction.
struct Term {
    Kind kind;
    std::string name;  // Gen only
    int k = 0;         // Comp only
    int dim = 0;
    TermP a, b;        // Id/Inv use a; Comp uses a, b
};

struct TermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TermP gen(const std::string& name, int dim);
TermP id(TermP t);
TermP id_tower(TermP t, int levels);
// Raw constructor: checks dimensions only. Use compose() for boundary checks.
TermP comp(int k, TermP a, TermP b);
TermP inv(TermP t);

bool same(const TermP& a, const TermP& b);
std::size_t term_size(const TermP& t);

// Strips identity towers: returns the base term and the number of Id layers.
TermP strip_ids(const TermP& t, int* levels = nullptr);
bool is_identity(const TermP& t);

std::string to_sexpr(const TermP& t);
// Needs a dimension lookup for generator names; throws TermError on bad input.
TermP parse_sexpr(const std::string& s, const std::function<int(const std::string&)>& dim_of);

}  // namespace hopfsmith
