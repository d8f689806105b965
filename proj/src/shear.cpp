#include "hopfsmith/walking.hpp"

namespace hopfsmith {

UniversalShear universal_shear() {
    UniversalShear U;
    PointedPresentation M = mnd();
    U.smash = smash(M, M);
    U.gray = U.smash.gray;
    const Presentation& G = U.gray.pres;

    TermP A = G.g("A*o"), B = G.g("o*A");
    TermP X = G.g("A*A");
    TermP mA = G.g("m*o"), mB = G.g("o*m");
    TermP BA = comp(0, B, A);

    // B2 A2 B1 A1: cross B2 past A2, merge the B's, cross past A1, merge the A's
    TermP L1 = cw(0, X, id(BA));
    TermP L2 = cw(0, A, cw(0, mB, A));
    TermP L3 = cw(0, A, X);
    TermP L4 = cw(0, mA, B);
    U.left_picture = compose_all(G, 1, {L1, L2, L3, L4});

    TermP R1 = cw(0, BA, X);
    TermP R2 = cw(0, B, cw(0, mA, B));
    TermP R3 = cw(0, X, B);
    TermP R4 = cw(0, A, mB);
    U.right_picture = compose_all(G, 1, {R1, R2, R3, R4});

    U.step1 = compose(G, 1, L1, compose(G, 1, cw(0, A, G.g("A*m")), L4));
    U.step2 = compose(G, 1, R1, compose(G, 1, cw(0, G.g("m*A"), B), R4));
    U.cell = compose(G, 2, U.step1, U.step2);
    U.image = U.smash.collapse.apply(U.cell);
    return U;
}

BimndCells bimnd_cells(const SmashProduct& S) {
    const Presentation& P = S.pres;
    return {P.g("A*A"), P.g("m*A"), P.g("u*A"), P.g("A*m"), P.g("A*u")};
}

}  // namespace hopfsmith
