#include "hopfsmith/evaluate.hpp"

#include <algorithm>

namespace hopfsmith {

EvalContext bimonad_context(const Bialgebra& B) {
    EvalContext c{B, "A*A", {}};
    c.assign["m*A"] = B.m;
    c.assign["A*m"] = B.delta;
    c.assign["u*A"] = B.u;
    c.assign["A*u"] = B.eps;
    return c;
}

std::vector<std::size_t> reading_order(const Diagram2& d, const std::string& dot) {
    std::vector<std::size_t> order;
    canonical(d, &order);
    std::vector<std::size_t> r;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (d.layers[*it].gen == dot) r.push_back(*it);
    return r;
}

Matrix identity_power(const Bialgebra& B, std::size_t k) {
    std::size_t N = 1;
    for (std::size_t i = 0; i < k; i++) N *= B.n;
    return Matrix::identity(B.F, N);
}

Matrix factor_permutation(const Bialgebra& B, const std::vector<std::size_t>& perm) {
    std::size_t k = perm.size(), n = B.n, N = 1;
    for (std::size_t i = 0; i < k; i++) N *= n;
    Matrix P(B.F, N, N);
    std::vector<std::size_t> digit(k);
    for (std::size_t col = 0; col < N; col++) {
        std::size_t c = col;
        for (std::size_t i = k; i-- > 0;) {
            digit[i] = c % n;
            c /= n;
        }
        auto odd = [&](std::size_t i) { return !B.grading.empty() && (B.grading[i] & 1); };
        int sign = 1;
        if (B.braiding == Braiding::Koszul)
            for (std::size_t a = 0; a < k; a++)
                for (std::size_t b = a + 1; b < k; b++)
                    // old factors perm[a] and perm[b] end up in this order
                    if (perm[a] > perm[b] && odd(digit[perm[a]]) && odd(digit[perm[b]])) sign = -sign;
        std::size_t row = 0;
        for (std::size_t t = 0; t < k; t++) row = row * n + digit[perm[t]];
        P.set(row, col, sign);
    }
    return P;
}

namespace {

std::size_t count_dots(const std::vector<Layer2>& ls, std::size_t from, std::size_t to, const std::string& dot) {
    std::size_t c = 0;
    for (std::size_t i = from; i < to; i++) c += ls[i].gen == dot;
    return c;
}

// Local order: dots of `below`, then the generator's dots in its own reading order, then `above`.
std::vector<std::size_t> local_order(const Diagram2& whole, std::size_t nb, const Diagram2& g, const std::string& dot) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nb; i++)
        if (whole.layers[i].gen == dot) out.push_back(i);
    for (std::size_t i : reading_order(g, dot)) out.push_back(nb + i);
    for (std::size_t i = nb + g.layers.size(); i < whole.layers.size(); i++)
        if (whole.layers[i].gen == dot) out.push_back(i);
    return out;
}

// perm taking the `from` arrangement to the `to` arrangement
std::vector<std::size_t> relabel(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
    std::vector<std::size_t> perm;
    for (std::size_t x : to) perm.push_back(std::find(from.begin(), from.end(), x) - from.begin());
    return perm;
}

}  // namespace

Matrix evaluate_layer(const Layer3& l, const EvalContext& ctx) {
    const std::string& dot = ctx.dot;
    auto it = ctx.assign.find(l.gen);
    if (it == ctx.assign.end()) throw EvalError("no assignment for generator " + l.gen);
    Matrix G = it->second;
    if (l.inv) {
        auto gi = inverse(G);
        if (!gi) throw EvalError("formal inverse of " + l.gen + " evaluates to a singular matrix");
        G = *gi;
    }
    std::size_t gin = count_dots(l.gin.layers, 0, l.gin.layers.size(), dot);
    std::size_t gout = count_dots(l.gout.layers, 0, l.gout.layers.size(), dot);
    std::size_t N = ctx.B.n;
    auto pw = [&](std::size_t k) {
        std::size_t r = 1;
        for (std::size_t i = 0; i < k; i++) r *= N;
        return r;
    };
    if (G.cols() != pw(gin) || G.rows() != pw(gout))
        throw EvalError("assignment for " + l.gen + " has shape " + std::to_string(G.rows()) + "x" +
                        std::to_string(G.cols()) + " but the cell has " + std::to_string(gin) + " -> " +
                        std::to_string(gout) + " dots");
    Diagram2 S = layer_source(l), T = layer_target(l);
    std::size_t nb = l.below.layers.size();
    std::size_t before = count_dots(l.below.layers, 0, nb, dot);
    std::size_t after = count_dots(l.above.layers, 0, l.above.layers.size(), dot);
    Matrix mid = kron(kron(identity_power(ctx.B, before), G), identity_power(ctx.B, after));
    auto rs = reading_order(S, dot), ls = local_order(S, nb, l.gin, dot);
    auto rt = reading_order(T, dot), lt = local_order(T, nb, l.gout, dot);
    return factor_permutation(ctx.B, relabel(lt, rt)) * mid * factor_permutation(ctx.B, relabel(rs, ls));
}

Matrix evaluate_diagram(const Presentation& P, const TermP& t, const EvalContext& ctx) {
    if (t->dim != 3) throw EvalError("evaluate_diagram expects a 3-cell, got dimension " + std::to_string(t->dim));
    Diagram3 d = flatten3(P, t);
    std::size_t k = reading_order(d.src, ctx.dot).size();
    Matrix M = identity_power(ctx.B, k);
    for (auto& l : d.layers) {
        std::size_t have = reading_order(layer_source(l), ctx.dot).size();
        if (have != k) throw EvalError("layer " + l.gen + " expects " + std::to_string(have) + " dots, got " + std::to_string(k));
        M = evaluate_layer(l, ctx) * M;
        k = reading_order(layer_target(l), ctx.dot).size();
    }
    return M;
}

}  // namespace hopfsmith
