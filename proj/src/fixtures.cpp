#include "hopfsmith/fixtures.hpp"

#include <algorithm>

namespace hopfsmith {

Bialgebra monoid_algebra(const std::string& name, const std::vector<std::vector<int>>& table, int e) {
    const Field* Q = Field::rationals();
    Bialgebra B;
    B.name = name;
    B.n = table.size();
    size_t n = B.n;
    B.grading.assign(n, 0);
    B.m = Matrix(Q, n, n * n);
    B.u = Matrix::unit_column(Q, n, e);
    B.delta = Matrix(Q, n * n, n);
    B.eps = Matrix(Q, 1, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) B.m.set(table[i][j], i * n + j, 1);
        B.delta.set(i * n + i, i, 1);
        B.eps.set(0, i, 1);
    }
    return B;
}

Bialgebra group_z2() { return monoid_algebra("Q[Z/2]", {{0, 1}, {1, 0}}); }

std::vector<std::vector<int>> s3_elements() {
    std::vector<int> p{0, 1, 2};
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Bialgebra group_s3() {
    auto el = s3_elements();
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; i++)
        for (int j = 0; j < 6; j++) {
            std::vector<int> c(3);
            for (int k = 0; k < 3; k++) c[k] = el[i][el[j][k]];
            t[i][j] = static_cast<int>(std::find(el.begin(), el.end(), c) - el.begin());
        }
    return monoid_algebra("Q[S3]", t);
}

Bialgebra functions_z3() {
    std::vector<std::vector<int>> t(3, std::vector<int>(3));
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) t[i][j] = (i + j) % 3;
    Bialgebra D = dual(monoid_algebra("Q[Z/3]", t));
    D.name = "Q^{Z/3}";
    return D;
}

Bialgebra idempotent_monoid() { return monoid_algebra("Q[M]", {{0, 1}, {1, 1}}); }

Bialgebra taft(int N, const Scalar& q, const std::string& name) {
    const Field* F = q.field();
    size_t n = static_cast<size_t>(N) * N;
    auto idx = [N](int a, int b) { return static_cast<size_t>(a + N * b); };
    Bialgebra B;
    B.name = name;
    B.F = F;
    B.n = n;
    B.grading.assign(n, 0);
    std::vector<Scalar> qp(N * N + 1, Scalar(F, 1L));
    for (size_t k = 1; k < qp.size(); k++) qp[k] = qp[k - 1] * q;
    // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
    B.m = Matrix(F, n, n * n);
    for (int a = 0; a < N; a++)
        for (int b = 0; b < N; b++)
            for (int c = 0; c < N; c++)
                for (int d = 0; d < N; d++) {
                    if (b + d >= N) continue;
                    B.m.at(idx((a + c) % N, b + d), idx(a, b) * n + idx(c, d)) = qp[(b * c) % N];
                }
    B.u = Matrix::unit_column(F, n, idx(0, 0));
    B.eps = Matrix(F, 1, n);
    for (int a = 0; a < N; a++) B.eps.set(0, idx(a, 0), 1);
    // Delta is multiplicative: Delta(g^a x^b) = Delta(g)^a Delta(x)^b in H (x) H
    // (x1 (x) x2)(y1 (x) y2) = x1 y1 (x) x2 y2; everything is even here
    auto mul2 = [&](const Matrix& X, const Matrix& Y) {
        Matrix Z(F, n * n, 1);
        for (size_t i = 0; i < n * n; i++) {
            if (X(i, 0).is_zero()) continue;
            for (size_t j = 0; j < n * n; j++) {
                if (Y(j, 0).is_zero()) continue;
                size_t x1 = i / n, x2 = i % n, y1 = j / n, y2 = j % n;
                Scalar c = X(i, 0) * Y(j, 0);
                for (size_t p = 0; p < n; p++) {
                    const Scalar& a = B.m(p, x1 * n + y1);
                    if (a.is_zero()) continue;
                    for (size_t q = 0; q < n; q++) {
                        const Scalar& b = B.m(q, x2 * n + y2);
                        if (!b.is_zero()) Z.at(p * n + q, 0) += c * a * b;
                    }
                }
            }
        }
        return Z;
    };
    Matrix dg(F, n * n, 1), dx(F, n * n, 1), one(F, n * n, 1);
    dg.set(idx(1, 0) * n + idx(1, 0), 0, 1);
    dx.set(idx(0, 1) * n + idx(0, 0), 0, 1);
    dx.set(idx(1, 0) * n + idx(0, 1), 0, 1);
    one.set(idx(0, 0) * n + idx(0, 0), 0, 1);
    B.delta = Matrix(F, n * n, n);
    for (int a = 0; a < N; a++)
        for (int b = 0; b < N; b++) {
            Matrix v = one;
            for (int k = 0; k < a; k++) v = mul2(v, dg);
            for (int k = 0; k < b; k++) v = mul2(v, dx);
            for (size_t r = 0; r < n * n; r++) B.delta.at(r, idx(a, b)) = v(r, 0);
        }
    return B;
}

Bialgebra sweedler() { return taft(2, Scalar(Field::rationals(), -1L), "Sweedler"); }

Bialgebra taft3() {
    const Field* F = Field::parse("x^2+x+1");
    return taft(3, Scalar(F, std::vector<mpq_class>{0, 1}), "Taft T3");
}

Bialgebra super_line() {
    const Field* Q = Field::rationals();
    Bialgebra B;
    B.name = "Q[theta]/(theta^2)";
    B.n = 2;
    B.grading = {0, 1};
    B.braiding = Braiding::Koszul;
    B.m = Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 1, 1, 0}});
    B.u = Matrix::from_ints(Q, {{1}, {0}});
    B.delta = Matrix::from_ints(Q, {{1, 0}, {0, 1}, {0, 1}, {0, 0}});
    B.eps = Matrix::from_ints(Q, {{1, 0}});
    return B;
}

Bialgebra corrupted_z2() {
    Bialgebra B = group_z2();
    B.name = "Q[Z/2] corrupted";
    B.delta.set(3, 1, 2);
    return B;
}

std::vector<Bialgebra> fixture_bialgebras() {
    return {group_z2(), group_s3(), functions_z3(), idempotent_monoid(), sweedler(), super_line()};
}

std::vector<Bialgebra> all_fixtures() {
    auto v = fixture_bialgebras();
    v.push_back(taft3());
    return v;
}

}  // namespace hopfsmith
