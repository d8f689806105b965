#pragma once

#include <vector>

#include "hopfsmith/bialgebra.hpp"

namespace hopfsmith {

// Monoid algebra from a multiplication table over indices 0..n-1, unit at index e.
Bialgebra monoid_algebra(const std::string& name, const std::vector<std::vector<int>>& table, int e = 0);

Bialgebra group_z2();
Bialgebra group_s3();
Bialgebra functions_z3();  // dual of Q[Z/3]
Bialgebra idempotent_monoid();
// Taft algebra of order N at q (g^N = 1, x^N = 0, xg = q gx), basis g^a x^b at a + N*b.
Bialgebra taft(int N, const Scalar& q, const std::string& name);
Bialgebra sweedler();
Bialgebra super_line();
Bialgebra taft3();  // over Q[x]/(x^2+x+1)
Bialgebra corrupted_z2();

// The acceptance corpus: Q[Z/2], Q[S3], Q^{Z/3}, Q[M], Sweedler, super line.
std::vector<Bialgebra> fixture_bialgebras();
// corpus plus extras
std::vector<Bialgebra> all_fixtures();
std::vector<std::vector<int>> s3_elements();

}  // namespace hopfsmith
