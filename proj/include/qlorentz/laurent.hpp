#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlorentz/gaussrat.hpp"
#include "qlorentz/halfint.hpp"

namespace qlorentz {

/// Laurent polynomial in s = q^(1/2) with Gaussian-rational coefficients.
/// No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long n) { set(0, GaussRat(n)); }
    LaurentPoly(const GaussRat& c) { set(0, c); }

    static LaurentPoly monomial(int exp, GaussRat c = GaussRat(1)) {
        LaurentPoly p;
        p.set(exp, std::move(c));
        return p;
    }
    /// s^twice = q^(twice/2); exponent given as HalfInt power of q.
    static LaurentPoly qpow(HalfInt e) { return monomial(e.twice()); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_real() const;
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    /// True if a single term c*s^k.
    bool is_monomial() const { return c_.size() == 1; }

    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    const std::map<int, GaussRat>& coeffs() const { return c_; }
    GaussRat coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? GaussRat() : it->second;
    }
    void set(int exp, GaussRat c) {
        if (c.is_zero()) c_.erase(exp);
        else c_[exp] = std::move(c);
    }
    void add_to(int exp, const GaussRat& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& b) { *this = *this - b; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& b) { *this = *this * b; return *this; }
    LaurentPoly scaled(const GaussRat& c) const;
    LaurentPoly shifted(int dexp) const;
    LaurentPoly pow(unsigned n) const;
    LaurentPoly conj() const;          // i -> -i, s fixed (q real)
    LaurentPoly derivative() const;    // d/ds

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    /// Exact sign at s = sqrt(3/2); requires real coefficients.
    int sign_at_probe() const;

    std::string str() const;

private:
    std::map<int, GaussRat> c_;
};

/// Quotient/remainder over QQ(i): a = q*b + r with deg r < deg b.
/// Operates on true polynomials (min_exp >= 0); Laurent inputs are shifted by the caller.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot, LaurentPoly& rem);

/// Monic gcd over QQ(i)[s] of the polynomial parts (s-power factors stripped).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

/// Exact division; throws if b does not divide a.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Square-free decomposition of a primitive integer polynomial with
/// positive leading coefficient: p = prod_i f_i^i (Yun's algorithm).
/// Each f_i is primitive with positive leading coefficient.
std::vector<LaurentPoly> squarefree_decompose(const LaurentPoly& p);

/// Rational content of a real polynomial: p = content * primitive,
/// primitive has coprime integer coefficients and positive leading coefficient.
mpq_class content_and_primitive(const LaurentPoly& p, LaurentPoly& primitive);

} // namespace qlorentz
