#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfsmith/eq.hpp"

namespace hopfsmith {

// Composition is diagrammatic throughout: comp(0, a, b) is "a then b".
// eps: r;l => id, eta: id => l;r.
struct AdjunctionRecord {
    std::shared_ptr<const Presentation> P;
    TermP l, r, eps, eta;
};

struct MateError : TermError {
    using TermError::TermError;
};

// l = r = id_x, eps = eta = identity.
AdjunctionRecord identity_adjunction(std::shared_ptr<const Presentation> P, const TermP& x);
// l -| r of adj().
AdjunctionRecord walking_adjunction();

// (eta l)(l eps) on l and (r eta)(eps r) on r.
std::pair<TermP, TermP> zigzags(const AdjunctionRecord& a);
// Both zigzags against identities; Equal only if both are.
Verdict zigzag_verdict(const AdjunctionRecord& a, long budget = default_budget());

// alpha: h;k => f;g with f: A -> B, g: B -> D, h: A -> C, k: C -> D.
struct Square {
    TermP f, g, h, k, alpha;
};

void check_square(const Presentation& P, const Square& s, long budget = default_budget());

// f -| f^R and k -| k^R; returns f^R;h => g;k^R.
TermP right_mate(const Presentation& P, const Square& s, const AdjunctionRecord& adjf, const AdjunctionRecord& adjk,
                 long budget = default_budget());
// h^L -| h and g^L -| g; returns k;g^L => h^L;f.
TermP left_mate(const Presentation& P, const Square& s, const AdjunctionRecord& adjh, const AdjunctionRecord& adjg,
                long budget = default_budget());
// The mates as squares, ready for the opposite mate.
Square right_mate_square(const Presentation& P, const Square& s, const AdjunctionRecord& adjf,
                         const AdjunctionRecord& adjk, long budget = default_budget());
Square left_mate_square(const Presentation& P, const Square& s, const AdjunctionRecord& adjh,
                        const AdjunctionRecord& adjg, long budget = default_budget());

struct MateFixture {
    std::string name;
    Square square;
    AdjunctionRecord f, k;  // for the right mate
    AdjunctionRecord h, g;  // for the left mate
};

struct MateReport {
    std::string name;
    Verdict right_then_left = Verdict::Unknown;
    Verdict left_then_right = Verdict::Unknown;
    long steps = 0;
};

std::shared_ptr<const Presentation> adj_presentation();
// Squares in Adj built from l, r, eps, eta and identities.
std::vector<MateFixture> adj_mate_fixtures();
MateReport double_mates(const MateFixture& m, long budget = default_budget());

// Pointed retract pt -f-> X -g-> pt with alpha: id => f;g invertible, f -| fR, gL -| g,
// and witnesses for condition [ii]: beta = fR;f;g => g (eps_f whiskered by g) has a left
// adjoint betaL, delta = f;g;gL => f (f whiskered by eps_g) has a right adjoint deltaR.
struct RetractRecord {
    std::shared_ptr<const Presentation> P;
    std::string basepoint, X;
    TermP f, g, alpha;
    AdjunctionRecord adj_f, adj_g;
    TermP beta, betaL, beta_unit, beta_counit;     // unit: id_g => betaL;beta, counit: beta;betaL => id
    TermP delta, deltaR, delta_unit, delta_counit; // unit: id => delta;deltaR, counit: deltaR;delta => id_f
};

RetractRecord generic_retract();
// f = g = id, alpha and every witness trivial.
RetractRecord trivial_retract();
// Problems found; empty when the record is valid.
std::vector<std::string> check_retract(const RetractRecord& R, long budget = default_budget());

struct HopfSquare {
    TermP alpha_rmate, alpha_lmate, alpha_sharp;
    TermP H;          // 3x3 pasting
    TermP simple1;    // alpha ; f.betaL ; f.beta ; alpha^-1
    TermP simple2;    // alpha ; deltaR.g ; delta.g ; alpha^-1
    TermP mult, unit, counit, comult;
    Verdict H_vs_simple1 = Verdict::Unknown;  // Distinct is reported as Unknown
    Verdict H_vs_simple2 = Verdict::Unknown;
    std::vector<std::string> problems;  // boundary checks that failed
};

HopfSquare hopf_square_terms(const RetractRecord& R, long budget = default_budget());

}  // namespace hopfsmith
