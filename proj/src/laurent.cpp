#include "qlorentz/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qlorentz {

bool LaurentPoly::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == GaussRat(1);
}

bool LaurentPoly::is_real() const {
    for (auto& [e, c] : c_)
        if (c.im != 0) return false;
    return true;
}

void LaurentPoly::add_to(int exp, const GaussRat& c) {
    auto it = c_.find(exp);
    if (it == c_.end()) {
        if (!c.is_zero()) c_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto& [e, c] : b.c_) r.add_to(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto& [e, c] : b.c_) r.add_to(e, -c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (auto& [e, c] : a.c_) r.c_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.c_)
        for (auto& [eb, cb] : b.c_) r.add_to(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const GaussRat& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (auto& [e, v] : c_) r.c_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_.emplace(e + dexp, v);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r(1);
    LaurentPoly base = *this;
    while (n) {
        if (n & 1) r *= base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::conj() const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_.emplace(e, v.conj());
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (auto& [e, v] : c_)
        if (e != 0) r.c_.emplace(e - 1, v * GaussRat(e));
    return r;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.c_.begin(), ib = b.c_.begin();
    for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (!(ia->second == ib->second)) return ia->second < ib->second;
    }
    return ib != b.c_.end();
}

int LaurentPoly::sign_at_probe() const {
    // value = A(3/2) + sqrt(3/2)*B(3/2) from the even/odd split in s
    mpq_class A = 0, B = 0, q32(3, 2);
    for (auto& [e, c] : c_) {
        if (c.im != 0) throw std::domain_error("sign of non-real polynomial");
        // s^e = (3/2)^(e/2) or s*(3/2)^((e-1)/2)
        int k = (e >= 0 ? e : e - 1) / 2;  // floor division
        bool odd = ((e % 2) + 2) % 2 == 1;
        mpq_class p = 1;
        if (k >= 0)
            for (int i = 0; i < k; ++i) p *= q32;
        else
            for (int i = 0; i < -k; ++i) p /= q32;
        if (odd) B += c.re * p;
        else A += c.re * p;
    }
    if (A == 0 && B == 0) return 0;
    int sa = sgn(A), sb = sgn(B);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // compare |A| vs sqrt(3/2)|B| exactly
    mpq_class a2 = A * A, b2 = B * B * q32;
    int c = cmp(a2, b2);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        if (!first) os << " + ";
        first = false;
        bool cplx = c.im != 0 && c.re != 0;
        if (cplx) os << "(" << c.str() << ")";
        else os << c.str();
        if (e != 0) os << "*s^" << e;
    }
    return os.str();
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot, LaurentPoly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.min_exp() < 0 || b.min_exp() < 0)
        throw std::domain_error("poly_divmod expects non-negative exponents");
    quot = LaurentPoly();
    rem = a;
    int db = b.max_exp();
    GaussRat lb = b.coeff(db);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        int e = rem.max_exp() - db;
        GaussRat c = rem.coeff(rem.max_exp()) / lb;
        quot.add_to(e, c);
        rem -= b.shifted(e).scaled(c);
    }
}

namespace {
// strip s^k, returning polynomial with nonzero constant term
LaurentPoly strip_s(const LaurentPoly& p) { return p.is_zero() ? p : p.shifted(-p.min_exp()); }
} // namespace

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    a = strip_s(a);
    b = strip_s(b);
    while (!b.is_zero()) {
        LaurentPoly q, r;
        poly_divmod(a, b, q, r);
        a = b;
        b = strip_s(r);
    }
    if (a.is_zero()) return a;
    // monic normalization
    return a.scaled(GaussRat(1) / a.coeff(a.max_exp()));
}

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return a;
    int shift = a.min_exp() - b.min_exp();
    LaurentPoly q, r;
    poly_divmod(strip_s(a), strip_s(b), q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q.shifted(shift);
}

mpq_class content_and_primitive(const LaurentPoly& p, LaurentPoly& primitive) {
    if (p.is_zero()) {
        primitive = p;
        return 0;
    }
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : p.coeffs()) {
        if (c.im != 0) throw std::domain_error("content of non-real polynomial");
        mpz_class n = c.re.get_num(), d = c.re.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(p.coeff(p.max_exp()).re) < 0) content = -content;
    primitive = p.scaled(GaussRat(mpq_class(1) / content));
    return content;
}

std::vector<LaurentPoly> squarefree_decompose(const LaurentPoly& p) {
    // Yun's algorithm over QQ; input primitive, positive leading, nonzero constant term.
    std::vector<LaurentPoly> out;
    if (p.is_constant()) return out;
    LaurentPoly a = p, dp = p.derivative();
    LaurentPoly g = poly_gcd(a, dp);
    LaurentPoly w = poly_exact_div(a, g);
    LaurentPoly z = poly_exact_div(dp, g);
    while (true) {
        LaurentPoly h = z - w.derivative();
        if (h.is_zero()) {
            out.push_back(w);
            break;
        }
        LaurentPoly f = poly_gcd(w, h);
        out.push_back(f);
        w = poly_exact_div(w, f);
        z = poly_exact_div(h, f);
        if (w.is_constant()) break;
    }
    // normalize factors to primitive, positive leading
    for (auto& f : out) {
        LaurentPoly prim;
        content_and_primitive(f, prim);
        f = prim;
    }
    return out;
}

} // namespace qlorentz
