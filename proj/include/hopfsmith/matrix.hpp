#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfsmith/field.hpp"

namespace hopfsmith {

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() : F_(Field::rationals()) {}
    Matrix(const Field* F, size_t r, size_t c);
    static Matrix identity(const Field* F, size_t n);
    static Matrix from_ints(const Field* F, const std::vector<std::vector<long>>& rows);
    // e_i as a column of length n
    static Matrix unit_column(const Field* F, size_t n, size_t i);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    const Field* field() const { return F_; }
    const Scalar& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }
    Scalar& at(size_t i, size_t j) { return d_[i * c_ + j]; }
    void set(size_t i, size_t j, long v) { d_[i * c_ + j] = Scalar(F_, v); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    Matrix column(size_t j) const;
    Matrix row(size_t i) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    // first differing coordinate, if any
    std::optional<std::pair<size_t, size_t>> diff(const Matrix& o) const;
    std::string str() const;

private:
    const Field* F_;
    size_t r_ = 0, c_ = 0;
    std::vector<Scalar> d_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& ms);
Matrix vstack(const std::vector<Matrix>& ms);
Matrix power(const Matrix& a, int k);

struct Echelon {
    Matrix R;                   // reduced row echelon form
    std::vector<size_t> pivots; // pivot column per nonzero row
};
Echelon rref(const Matrix& a);
size_t rank(const Matrix& a);
// Basis of {x : a x = 0}, as columns of the result (cols = nullity).
Matrix nullspace(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
Scalar det(const Matrix& a);
// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace hopfsmith
