#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfsmith/matrix.hpp"

namespace hopfsmith {

enum class Braiding { Flip, Koszul };

// Index convention for tensor factors: (i, j) -> i*n + j.
struct Bialgebra {
    std::string name;
    const Field* F = Field::rationals();
    size_t n = 0;
    std::vector<int> grading;  // 0/1 per basis vector
    Braiding braiding = Braiding::Flip;
    Matrix m, u, delta, eps;   // n x n^2, n x 1, n^2 x n, 1 x n
};

struct AxiomResult {
    std::string name;
    bool ok = true;
    std::string witness;  // "(row,col): lhs vs rhs" for the first failing coordinate
};

struct BialgebraReport {
    std::vector<AxiomResult> axioms;
    bool ok() const;
    const AxiomResult* failing() const;
};

BialgebraReport check_bialgebra(const Bialgebra& B);
// Throws ShapeError on malformed tensors.
void check_shapes(const Bialgebra& B);

Matrix id_of(const Bialgebra& B);
Matrix braid(const Bialgebra& B);
// (f (x) g) with the Koszul sign for g of degree dg passing basis vectors of f's domain.
Matrix tensor_maps(const Matrix& f, const std::vector<int>& dom_f, const Matrix& g, int dg);

enum class ShearDir { NW, NE, SW, SE };
const char* shear_name(ShearDir d);
Matrix shear(const Bialgebra& B, ShearDir d);
bool is_hopf(const Bialgebra& B);
bool is_cohopf(const Bialgebra& B);

struct HopfData {
    Bialgebra B;
    Matrix S;
    std::optional<Matrix> Sinv;
};

struct NoAntipode : std::runtime_error {
    Matrix kernel;  // basis of ker(sh_SE) as columns
    NoAntipode(const std::string& what, Matrix k) : std::runtime_error(what), kernel(std::move(k)) {}
};

HopfData antipode(const Bialgebra& B);
// (id (x) m)(id (x) S (x) id)(Delta (x) id)
Matrix shear_inverse_from(const Bialgebra& B, const Matrix& S);
// Convolution axioms m(S (x) id)Delta = u eps = m(id (x) S)Delta.
bool convolution_ok(const Bialgebra& B, const Matrix& S);
// Independent route: solve the linear system of the convolution axioms for S.
std::optional<Matrix> antipode_by_convolution(const Bialgebra& B);

struct IntegralData {
    std::vector<Matrix> integrals;    // 1 x n rows
    std::vector<int> integral_degree;
    std::vector<Matrix> cointegrals;  // n x 1 columns
    std::vector<int> cointegral_degree;
    std::optional<Scalar> pairing;    // integrals[0] * cointegrals[0]
};

struct ConditionNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntegralData integrals(const Bialgebra& B);
bool is_integral(const Bialgebra& B, const Matrix& lambda, int degree);
bool is_cointegral(const Bialgebra& B, const Matrix& Lambda, int degree);
Matrix antipode_from_integrals(const Bialgebra& B, const IntegralData& I);

Bialgebra dual(const Bialgebra& B);

}  // namespace hopfsmith
