#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfsmith {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Q, or Q[x]/(f) for a monic f. Instances are interned and never freed, so
// raw pointers stay valid.
class Field {
public:
    static const Field* rationals();
    // Coefficients low to high, monic, degree >= 1. Degree 1 is Q itself.
    static const Field* extension(const std::vector<mpq_class>& monic);
    // "Q" or a polynomial string such as "x^2+x+1".
    static const Field* parse(const std::string& s);

    int degree() const { return static_cast<int>(mod_.size()) - 1; }
    bool rational() const { return degree() == 1; }
    const std::vector<mpq_class>& modulus() const { return mod_; }
    std::string name() const;
    // True when f has a rational root (so the quotient is not a field).
    bool has_rational_root() const;

private:
    explicit Field(std::vector<mpq_class> m) : mod_(std::move(m)) {}
    std::vector<mpq_class> mod_;
};

std::vector<mpq_class> parse_poly(const std::string& s);
std::string poly_string(const std::vector<mpq_class>& c);

// a0 + rest[0] x + rest[1] x^2 + ... ; rest is empty for rationals.
class Scalar {
public:
    Scalar() : f_(Field::rationals()) {}
    Scalar(const Field* f, long v) : f_(f), a0_(v) {}
    Scalar(const Field* f, mpq_class v) : f_(f), a0_(std::move(v)) {}
    Scalar(const Field* f, std::vector<mpq_class> coeffs);

    const Field* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;
    std::vector<mpq_class> coeffs() const;
    std::string str() const;
    static Scalar parse(const Field* f, const std::string& s);

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // In-place a += b * c without temporaries on the rational path.
    void addmul(const Scalar& b, const Scalar& c);
    void submul(const Scalar& b, const Scalar& c);

private:
    const Field* f_;
    mpq_class a0_;
    std::vector<mpq_class> rest_;
    void trim();
    static const Field* join(const Field* a, const Field* b);
};

}  // namespace hopfsmith
