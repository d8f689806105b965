#include "hopfsmith/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace hopfsmith {

namespace {

using Poly = std::vector<mpq_class>;

void trim_poly(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// p mod f, f monic
void reduce(Poly& p, const Poly& f) {
    int d = static_cast<int>(f.size()) - 1;
    for (int k = static_cast<int>(p.size()) - 1; k >= d; k--) {
        if (p[k] == 0) continue;
        mpq_class c = p[k];
        for (int i = 0; i <= d; i++) p[k - d + i] -= c * f[i];
    }
    if (static_cast<int>(p.size()) > d) p.resize(d);
    trim_poly(p);
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    trim_poly(r);
    return r;
}

Poly psub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    trim_poly(r);
    return r;
}

// quotient and remainder
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
    trim_poly(a);
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1);
    mpq_class lead = b.back();
    for (int k = static_cast<int>(a.size()) - 1; k >= static_cast<int>(b.size()) - 1; k--) {
        mpq_class c = a[k] / lead;
        int s = k - static_cast<int>(b.size()) + 1;
        q[s] = c;
        for (size_t i = 0; i < b.size(); i++) a[s + i] -= c * b[i];
    }
    trim_poly(a);
    trim_poly(q);
    return {q, a};
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw FieldError("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

std::string strip(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    return r;
}

}  // namespace

Poly parse_poly(const std::string& in) {
    std::string s = strip(in);
    if (s.empty()) throw FieldError("empty polynomial");
    Poly p;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i + 1;
        while (j < s.size() && s[j] != '+' && s[j] != '-') j++;
        std::string t = s.substr(i, j - i);
        i = j;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            t = t.substr(1);
        }
        if (t.empty()) throw FieldError("bad polynomial '" + in + "'");
        size_t xp = t.find('x');
        mpq_class c = 1;
        int e = 0;
        if (xp == std::string::npos) {
            c = parse_rational(t);
        } else {
            std::string cs = t.substr(0, xp);
            if (!cs.empty() && cs.back() == '*') cs.pop_back();
            if (!cs.empty()) c = parse_rational(cs);
            std::string es = t.substr(xp + 1);
            if (es.empty())
                e = 1;
            else if (es[0] == '^')
                e = std::stoi(es.substr(1));
            else
                throw FieldError("bad polynomial term '" + t + "'");
        }
        if (neg) c = -c;
        if (static_cast<int>(p.size()) <= e) p.resize(e + 1);
        p[e] += c;
    }
    trim_poly(p);
    return p;
}

std::string poly_string(const Poly& c) {
    std::ostringstream o;
    bool first = true;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; k--) {
        if (c[k] == 0) continue;
        mpq_class v = c[k];
        if (v < 0) {
            o << "-";
            v = -v;
        } else if (!first) {
            o << "+";
        }
        first = false;
        if (k == 0 || v != 1) o << v.get_str();
        if (k >= 1) o << "x";
        if (k >= 2) o << "^" << k;
    }
    if (first) return "0";
    return o.str();
}

const Field* Field::rationals() {
    static const Field Q(Poly{0, 1});
    return &Q;
}

const Field* Field::extension(const Poly& monic) {
    Poly f = monic;
    trim_poly(f);
    if (f.size() < 2) throw FieldError("modulus must have degree >= 1");
    if (f.back() != 1) throw FieldError("modulus must be monic");
    if (f.size() == 2) return rationals();
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<Field>> table;
    std::string key = poly_string(f);
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(key);
    if (it != table.end()) return it->second.get();
    auto* F = new Field(f);
    table.emplace(key, std::unique_ptr<Field>(F));
    return F;
}

const Field* Field::parse(const std::string& s) {
    std::string t = strip(s);
    if (t == "Q") return rationals();
    return extension(parse_poly(t));
}

std::string Field::name() const { return rational() ? "Q" : "Q[x]/(" + poly_string(mod_) + ")"; }

bool Field::has_rational_root() const {
    if (rational()) return true;
    // clear denominators
    mpz_class l = 1;
    for (auto& c : mod_) l = lcm(l, mpz_class(c.get_den()));
    std::vector<mpz_class> z;
    for (auto& c : mod_) z.push_back(mpz_class(c * l));
    if (z[0] == 0) return true;
    mpz_class a0 = abs(z[0]), an = abs(z.back());
    const long cap = 1000000;
    if (a0 > cap || an > cap) return false;
    auto divisors = [](long n) {
        std::vector<long> d;
        for (long i = 1; i * i <= n; i++)
            if (n % i == 0) {
                d.push_back(i);
                if (i != n / i) d.push_back(n / i);
            }
        return d;
    };
    for (long p : divisors(a0.get_si()))
        for (long q : divisors(an.get_si()))
            for (int sg : {1, -1}) {
                mpq_class r(sg * p, q);
                r.canonicalize();
                mpq_class v = 0;
                for (int k = static_cast<int>(mod_.size()) - 1; k >= 0; k--) v = v * r + mod_[k];
                if (v == 0) return true;
            }
    return false;
}

Scalar::Scalar(const Field* f, std::vector<mpq_class> c) : f_(f) {
    if (!c.empty()) a0_ = c[0];
    if (c.size() > 1) rest_.assign(c.begin() + 1, c.end());
    if (!f_->rational()) {
        Poly p = coeffs();
        reduce(p, f_->modulus());
        a0_ = p.empty() ? mpq_class(0) : p[0];
        rest_.assign(p.size() > 1 ? p.begin() + 1 : p.end(), p.end());
    } else if (!rest_.empty()) {
        // Q = Q[x]/(x): evaluate at 0
        rest_.clear();
    }
    trim();
}

void Scalar::trim() {
    while (!rest_.empty() && rest_.back() == 0) rest_.pop_back();
}

bool Scalar::is_zero() const { return a0_ == 0 && rest_.empty(); }
bool Scalar::is_one() const { return a0_ == 1 && rest_.empty(); }

std::vector<mpq_class> Scalar::coeffs() const {
    Poly p;
    p.push_back(a0_);
    p.insert(p.end(), rest_.begin(), rest_.end());
    return p;
}

std::string Scalar::str() const {
    if (rest_.empty()) return a0_.get_str();
    return poly_string(coeffs());
}

Scalar Scalar::parse(const Field* f, const std::string& s) {
    std::string t = strip(s);
    if (t.find('x') == std::string::npos) return Scalar(f, parse_rational(t));
    if (f->rational()) throw FieldError("polynomial scalar '" + s + "' over Q");
    return Scalar(f, parse_poly(t));
}

const Field* Scalar::join(const Field* a, const Field* b) {
    if (a == b) return a;
    if (a->rational()) return b;
    if (b->rational()) return a;
    throw FieldError("mixing scalars from " + a->name() + " and " + b->name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r.f_ = join(f_, o.f_);
    r.a0_ += o.a0_;
    if (r.rest_.size() < o.rest_.size()) r.rest_.resize(o.rest_.size());
    for (size_t i = 0; i < o.rest_.size(); i++) r.rest_[i] += o.rest_[i];
    r.trim();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a0_ = -r.a0_;
    for (auto& c : r.rest_) c = -c;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    const Field* f = join(f_, o.f_);
    if (rest_.empty() && o.rest_.empty()) return Scalar(f, mpq_class(a0_ * o.a0_));
    Poly p = pmul(coeffs(), o.coeffs());
    reduce(p, f->modulus());
    Scalar r(f, 0L);
    if (!p.empty()) r.a0_ = p[0];
    if (p.size() > 1) r.rest_.assign(p.begin() + 1, p.end());
    return r;
}

void Scalar::addmul(const Scalar& b, const Scalar& c) {
    if (rest_.empty() && b.rest_.empty() && c.rest_.empty()) {
        f_ = join(f_, join(b.f_, c.f_));
        a0_ += b.a0_ * c.a0_;
        return;
    }
    *this = *this + b * c;
}

void Scalar::submul(const Scalar& b, const Scalar& c) {
    if (rest_.empty() && b.rest_.empty() && c.rest_.empty()) {
        f_ = join(f_, join(b.f_, c.f_));
        a0_ -= b.a0_ * c.a0_;
        return;
    }
    *this = *this - b * c;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (rest_.empty()) return Scalar(f_, mpq_class(1 / a0_));
    // extended Euclid: s*a + t*f = g
    Poly r0 = f_->modulus(), r1 = coeffs();
    Poly s0, s1 = {1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(r0, r1);
        Poly s2 = psub(s0, pmul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1) throw FieldError("element " + str() + " is not invertible in " + f_->name());
    mpq_class g = r0[0];
    for (auto& c : s0) c /= g;
    return Scalar(f_, s0);
}

bool Scalar::operator==(const Scalar& o) const { return a0_ == o.a0_ && rest_ == o.rest_; }

}  // namespace hopfsmith
