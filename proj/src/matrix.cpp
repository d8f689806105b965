#include "hopfsmith/matrix.hpp"

#include <sstream>

namespace hopfsmith {

Matrix::Matrix(const Field* F, size_t r, size_t c) : F_(F), r_(r), c_(c), d_(r * c, Scalar(F, 0L)) {}

Matrix Matrix::identity(const Field* F, size_t n) {
    Matrix m(F, n, n);
    for (size_t i = 0; i < n; i++) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_ints(const Field* F, const std::vector<std::vector<long>>& rows) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(F, rows.size(), c);
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != c) throw ShapeError("ragged rows");
        for (size_t j = 0; j < c; j++) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::unit_column(const Field* F, size_t n, size_t i) {
    Matrix m(F, n, 1);
    m.set(i, 0, 1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_)
        throw ShapeError("product of " + std::to_string(r_) + "x" + std::to_string(c_) + " and " +
                         std::to_string(o.r_) + "x" + std::to_string(o.c_));
    Matrix m(F_->rational() ? o.F_ : F_, r_, o.c_);
    for (size_t i = 0; i < r_; i++)
        for (size_t k = 0; k < c_; k++) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.c_; j++) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) m.at(i, j).addmul(a, b);
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeError("sum of mismatched shapes");
    Matrix m = *this;
    for (size_t i = 0; i < d_.size(); i++) m.d_[i] += o.d_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeError("difference of mismatched shapes");
    Matrix m = *this;
    for (size_t i = 0; i < d_.size(); i++) m.d_[i] -= o.d_[i];
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.d_) x *= s;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(F_, c_, r_);
    for (size_t i = 0; i < r_; i++)
        for (size_t j = 0; j < c_; j++) m.at(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::column(size_t j) const {
    Matrix m(F_, r_, 1);
    for (size_t i = 0; i < r_; i++) m.at(i, 0) = (*this)(i, j);
    return m;
}

Matrix Matrix::row(size_t i) const {
    Matrix m(F_, 1, c_);
    for (size_t j = 0; j < c_; j++) m.at(0, j) = (*this)(i, j);
    return m;
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

bool Matrix::is_zero() const {
    for (auto& x : d_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const { return r_ == c_ && *this == identity(F_, r_); }

std::optional<std::pair<size_t, size_t>> Matrix::diff(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return std::make_pair(r_, c_);
    for (size_t i = 0; i < r_; i++)
        for (size_t j = 0; j < c_; j++)
            if ((*this)(i, j) != o(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

std::string Matrix::str() const {
    std::ostringstream s;
    for (size_t i = 0; i < r_; i++) {
        s << "[";
        for (size_t j = 0; j < c_; j++) s << (j ? " " : "") << (*this)(i, j).str();
        s << "]\n";
    }
    return s.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.field()->rational() ? b.field() : a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++)
        for (size_t j = 0; j < a.cols(); j++) {
            const Scalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (size_t k = 0; k < b.rows(); k++)
                for (size_t l = 0; l < b.cols(); l++) {
                    const Scalar& y = b(k, l);
                    if (!y.is_zero()) m.at(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return m;
}

Matrix hstack(const std::vector<Matrix>& ms) {
    if (ms.empty()) throw ShapeError("hstack of nothing");
    size_t r = ms[0].rows(), c = 0;
    for (auto& m : ms) {
        if (m.rows() != r) throw ShapeError("hstack row mismatch");
        c += m.cols();
    }
    Matrix out(ms[0].field(), r, c);
    size_t off = 0;
    for (auto& m : ms) {
        for (size_t i = 0; i < r; i++)
            for (size_t j = 0; j < m.cols(); j++) out.at(i, off + j) = m(i, j);
        off += m.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& ms) {
    if (ms.empty()) throw ShapeError("vstack of nothing");
    size_t c = ms[0].cols(), r = 0;
    for (auto& m : ms) {
        if (m.cols() != c) throw ShapeError("vstack column mismatch");
        r += m.rows();
    }
    Matrix out(ms[0].field(), r, c);
    size_t off = 0;
    for (auto& m : ms) {
        for (size_t i = 0; i < m.rows(); i++)
            for (size_t j = 0; j < c; j++) out.at(off + i, j) = m(i, j);
        off += m.rows();
    }
    return out;
}

Matrix power(const Matrix& a, int k) {
    Matrix r = Matrix::identity(a.field(), a.rows());
    for (int i = 0; i < k; i++) r = r * a;
    return r;
}

Echelon rref(const Matrix& a) {
    Echelon e{a, {}};
    Matrix& R = e.R;
    size_t rows = R.rows(), cols = R.cols(), r = 0;
    std::vector<size_t> nz;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t p = r;
        while (p < rows && R(p, c).is_zero()) p++;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = 0; j < cols; j++) std::swap(R.at(p, j), R.at(r, j));
        Scalar inv = R(r, c).inverse();
        nz.clear();
        for (size_t j = c; j < cols; j++)
            if (!R(r, j).is_zero()) {
                R.at(r, j) *= inv;
                nz.push_back(j);
            }
        for (size_t i = 0; i < rows; i++) {
            if (i == r || R(i, c).is_zero()) continue;
            Scalar f = R(i, c);
            for (size_t j : nz) R.at(i, j).submul(f, R(r, j));
        }
        e.pivots.push_back(c);
        r++;
    }
    return e;
}

size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix nullspace(const Matrix& a) {
    Echelon e = rref(a);
    size_t n = a.cols();
    std::vector<bool> piv(n, false);
    for (size_t c : e.pivots) piv[c] = true;
    std::vector<size_t> free;
    for (size_t c = 0; c < n; c++)
        if (!piv[c]) free.push_back(c);
    Matrix N(a.field(), n, free.size());
    for (size_t k = 0; k < free.size(); k++) {
        N.set(free[k], k, 1);
        for (size_t r = 0; r < e.pivots.size(); r++) N.at(e.pivots[r], k) = -e.R(r, free[k]);
    }
    return N;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse of a non-square matrix");
    size_t n = a.rows();
    Echelon e = rref(hstack({a, Matrix::identity(a.field(), n)}));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) inv.at(i, j) = e.R(i, n + j);
    return inv;
}

Scalar det(const Matrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
    Matrix R = a;
    size_t n = R.rows();
    Scalar d(a.field(), 1L);
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && R(p, c).is_zero()) p++;
        if (p == n) return Scalar(a.field(), 0L);
        if (p != c) {
            for (size_t j = 0; j < n; j++) std::swap(R.at(p, j), R.at(c, j));
            d = -d;
        }
        d *= R(c, c);
        Scalar inv = R(c, c).inverse();
        for (size_t i = c + 1; i < n; i++) {
            if (R(i, c).is_zero()) continue;
            Scalar f = R(i, c) * inv;
            for (size_t j = c; j < n; j++)
                if (!R(c, j).is_zero()) R.at(i, j).submul(f, R(c, j));
        }
    }
    return d;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
    size_t n = a.cols();
    Echelon e = rref(hstack({a, b}));
    Matrix x(a.field(), n, b.cols());
    for (size_t r = 0; r < e.pivots.size(); r++) {
        if (e.pivots[r] >= n) return std::nullopt;
        for (size_t j = 0; j < b.cols(); j++) x.at(e.pivots[r], j) = e.R(r, n + j);
    }
    return x;
}

}  // namespace hopfsmith
