#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfsmith/eq.hpp"

namespace hopfsmith {

Presentation point();
Presentation globe(int n);
Presentation boundary_globe(int n);
Presentation suspend(const Presentation& P);

// Mnd: object o, 1-cell A, m: A;A => A, u: id => A.
PointedPresentation mnd();
// Adj: l: a -> b, r: b -> a, eps: r;l => id_b, eta: id_a => l;r. Pointed at a.
PointedPresentation adj();
// x: a -> b, y: b -> c, w: a -> c, mu: x;y => w.
Presentation oriental2();
// oriental2 plus e1: z -> a and e2: c -> d.
Presentation e_oriental2();

std::string pair_name(const std::string& p, const std::string& q);

struct GrayProduct {
    Presentation pres;
    std::map<std::string, std::pair<std::string, std::string>> provenance;
};

struct GrayError : TermError {
    using TermError::TermError;
};

GrayProduct gray(const Presentation& P, const Presentation& Q);
// s (x) t for a P-term s and a Q-term t, inside gray(P, Q).
TermP tensor(const Presentation& P, const Presentation& Q, const TermP& s, const TermP& t);
// Padding composite without boundary checks.
TermP cw(int k, TermP a, TermP b);

struct CollapseMap {
    std::string base;                      // codomain point
    std::map<std::string, TermP> assign;   // every domain generator
    TermP apply(const TermP& t) const;
};

struct SmashProduct {
    GrayProduct gray;
    Presentation pres;
    CollapseMap collapse;
    std::string basepoint;
};

SmashProduct smash(const PointedPresentation& P, const PointedPresentation& Q);

struct UniversalShear {
    GrayProduct gray;      // gray(Mnd, Mnd)
    SmashProduct smash;    // smash(Mnd, Mnd)
    TermP cell;            // 3-cell in gray(Mnd, Mnd)
    TermP image;           // its collapse
    TermP left_picture;    // fixture: source 2-cell
    TermP right_picture;   // fixture: target 2-cell
    TermP step1, step2;    // whiskered A*m and m*A
};

UniversalShear universal_shear();

struct BimndCells {
    TermP underlying, mult, unit, comult, counit;
};
BimndCells bimnd_cells(const SmashProduct& S);

// Image of a gray(P, Q) term under generator assignments P -> P2 and Q -> Q2,
// landing in gray(P2, Q2): each pair p*q goes to tensor(fP[p], fQ[q]).
TermP gray_map(const GrayProduct& G, const Presentation& P2, const Presentation& Q2,
               const std::map<std::string, TermP>& fP, const std::map<std::string, TermP>& fQ, const TermP& t);

// A 3-cell split into whiskered single generators (or inverses), in order.
std::vector<TermP> layers3(const Presentation& P, const TermP& t);

enum class CellClass { LType, RType, FourCell, CollapseTrivial, Other };
const char* class_name(CellClass c);

struct ChainStep {
    std::string label;
    TermP cell;  // whiskered 3-cell; for a 4-cell entry its 2-source
    TermP cell_target;  // 4-cell entries only: 2-target
    int span = 0;       // 4-cell entries: number of following steps it fills
    std::string generator;
    CellClass cls = CellClass::Other;
    bool adjunctible = false;
    bool inverted = false;
};

struct SkeletonReport {
    bool composable = true;
    bool boundary_matches = true;
    int failed_step = -1;  // first step whose source does not match
    bool undecided = false;  // the failing comparison was Unknown, not Distinct
    std::string failure;
    std::vector<ChainStep> steps;
    std::map<std::string, int> counts;
    TermP shear_image;  // shear, whiskered by the crossing, in gray(eO2, eO2)
    bool shear_matches_universal = false;  // O2 shear maps onto the Mnd shear's boundary
};

struct SkeletonChain {
    GrayProduct gray;  // gray(eO2, eO2)
    TermP source, target;  // expected total 2-boundary
    TermP shear_image;
    std::vector<ChainStep> steps;
};

SkeletonChain skeleton_chain();
SkeletonReport check_chain(const SkeletonChain& c, long budget = default_budget());
// Same chain with step i reversed.
SkeletonChain mutate_chain(const SkeletonChain& c, std::size_t i);
SkeletonReport proof_skeleton_check(long budget = default_budget());

}  // namespace hopfsmith
