#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfsmith/bialgebra.hpp"
#include "hopfsmith/diagram.hpp"

namespace hopfsmith {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A 2-diagram's crossings ("dots") each carry one copy of B; a 3-generator
// maps the dots of its source to the dots of its target.
struct EvalContext {
    Bialgebra B;
    std::string dot = "A*A";
    std::map<std::string, Matrix> assign;
};

// m*A -> m, A*m -> Delta, u*A -> u, A*u -> epsilon; valid for gray(Mnd,Mnd) and smash(Mnd,Mnd).
EvalContext bimonad_context(const Bialgebra& B);

// List indices of the dot layers of d, in the order their tensor factors appear.
std::vector<std::size_t> reading_order(const Diagram2& d, const std::string& dot);

// Factor permutation on B^{(x)k}: new factor t is old factor perm[t], with Koszul signs.
Matrix factor_permutation(const Bialgebra& B, const std::vector<std::size_t>& perm);

// Kronecker power of the identity.
Matrix identity_power(const Bialgebra& B, std::size_t k);

Matrix evaluate_layer(const Layer3& l, const EvalContext& ctx);
// t is a 3-cell of P; P is gray(Mnd,Mnd) or smash(Mnd,Mnd).
Matrix evaluate_diagram(const Presentation& P, const TermP& t, const EvalContext& ctx);

}  // namespace hopfsmith
