#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfsmith/bialgebra.hpp"

namespace hopfsmith {

struct TannakaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Left comodule: rho(m_j) = sum_{h,i} rho[h*d + i, j] e_h (x) m_i.
struct Comodule {
    std::string name;
    std::size_t d = 0;
    Matrix rho;  // (n*d) x d
};

// Failed invariants (coassociativity, counit); empty when valid.
std::vector<std::string> comodule_problems(const Bialgebra& H, const Comodule& M);

// Basis of comodule maps M -> N, each a d_N x d_M matrix.
std::vector<Matrix> comodule_hom(const Bialgebra& H, const Comodule& M, const Comodule& N);

Comodule trivial_comodule(const Bialgebra& H, std::size_t d = 1);
Comodule regular_comodule(const Bialgebra& H);
// codiagonal coaction on M (x) N, basis m_a (x) n_b at a*d_N + b
Comodule tensor_comodule(const Bialgebra& H, const Comodule& M, const Comodule& N);
// left dual: rho(xi^i) = sum_j S(t_ij) (x) xi^j where rho(m_j) = sum_i t_ij (x) m_i
Comodule dual_comodule(const Bialgebra& H, const Comodule& M);

struct GeneratingFamily {
    Bialgebra H;  // ambient bialgebra; supplies the tensor product of comodules
    std::vector<Comodule> comodules;
    int depth = 2;
};

struct Reconstruction {
    Bialgebra B;        // the coend
    Matrix canonical;   // coend -> reference (or ambient) coordinates
    std::size_t presented_dim = 0;  // sum of d_i^2
    std::size_t relations = 0;      // rank of the relation span
    bool coalgebra_map = false;     // against the ambient bialgebra
    bool bialgebra_map = false;     // against the reference
    bool invertible = false;
    bool isomorphism = false;
    std::vector<std::string> notes;
};

// Throws TannakaError on a closure failure, naming the product that does not embed.
Reconstruction coend_reconstruct(const GeneratingFamily& F, const std::optional<Bialgebra>& reference = std::nullopt);

struct RoundTrip {
    Reconstruction rec;
    bool hopf_in = false, hopf_out = false;
    bool cohopf_in = false, cohopf_out = false;
    bool flags_agree() const { return hopf_in == hopf_out && cohopf_in == cohopf_out; }
    bool ok() const { return rec.isomorphism && flags_agree(); }
};

// family = {regular comodule}, closed to depth, reference = H.
RoundTrip round_trip(const Bialgebra& H, int depth = 2);

}  // namespace hopfsmith
