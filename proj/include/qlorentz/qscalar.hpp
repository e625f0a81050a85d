#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlorentz/halfint.hpp"
#include "qlorentz/laurent.hpp"
#include "qlorentz/numeric.hpp"

namespace qlorentz {

/// Rational function num/den over QQ(i)[s,1/s] in canonical form:
/// den is a polynomial in s with nonzero constant term, monic leading
/// coefficient, and gcd(num, den) = 1.
class RatFn {
public:
    RatFn() : num_(), den_(1) {}
    RatFn(LaurentPoly n) : num_(std::move(n)), den_(1) {}
    RatFn(LaurentPoly n, LaurentPoly d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& b) { *this = *this + b; return *this; }
    RatFn& operator*=(const RatFn& b) { *this = *this * b; return *this; }

    RatFn conj() const;
    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RatFn& a, const RatFn& b) {
        if (!(a.num_ == b.num_)) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    NComplex eval(const NumericContext& ctx) const;
    std::string str() const;

private:
    LaurentPoly num_, den_;
    void reduce();
};

/// Exact scalar of the coefficient ring: a sum of surd terms c*sqrt(r) with
/// c a rational function and r a canonical square-free radicand (an integer
/// polynomial in s with square-free content, positive at q > 1; r = 1 marks
/// radical-free terms).  The canonical form is unique, so structural equality
/// decides mathematical equality.
class QScalar {
public:
    struct Term {
        RatFn coeff;
        LaurentPoly rad;  // canonical; rad == 1 means no radical
    };

    QScalar() = default;
    QScalar(long n) { *this = from_ratfn(RatFn(LaurentPoly(n))); }
    QScalar(const RatFn& c) { *this = from_ratfn(c); }

    static QScalar from_ratfn(const RatFn& c);
    static QScalar surd(const RatFn& coeff, const LaurentPoly& radicand);
    static QScalar rational(const mpq_class& r) { return from_ratfn(RatFn(LaurentPoly(GaussRat(r)))); }
    static QScalar imaginary_unit() { return from_ratfn(RatFn(LaurentPoly(GaussRat::imaginary_unit()))); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_rational_function() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].rad.is_one()); }
    bool is_single_term() const { return terms_.size() == 1; }
    const std::vector<Term>& terms() const { return terms_; }

    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    QScalar& operator+=(const QScalar& b) { *this = *this + b; return *this; }
    QScalar& operator-=(const QScalar& b) { *this = *this - b; return *this; }
    QScalar& operator*=(const QScalar& b) { *this = *this * b; return *this; }

    QScalar conj() const;
    QScalar pow(unsigned n) const;

    /// Multiplicative inverse.  Always possible for one- and two-term values;
    /// deeper surd sums are inverted by recursive conjugation and may fail.
    std::optional<QScalar> try_inverse() const;
    QScalar inverse() const;
    friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

    friend bool operator==(const QScalar& a, const QScalar& b);
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    NComplex eval(const NumericContext& ctx) const;
    std::complex<double> evald(double q) const { return eval(NumericContext(q)).to_double(); }

    std::string str() const;

private:
    std::vector<Term> terms_;  // sorted by radicand
    void insert_term(Term t);
};

// ---- constructors for the scalars of the theory ----

/// q-integer [n] = (q^n - q^-n)/(q - q^-1); defined for half-integer n.
QScalar qint(HalfInt n);
/// [n]! for non-negative integer n.
QScalar qfac(int n);
/// q^e for half-integer e.
QScalar qpow(HalfInt e);
/// lambda = q - q^-1.
QScalar lambda_();
/// Square root: requires a radical-free single-term value, positive for q > 1.
QScalar sqrt(const QScalar& x);
/// sqrt(qint(n)), as a convenience.
QScalar sqrt_qint(HalfInt n);

inline QScalar qs(long n) { return QScalar(n); }

} // namespace qlorentz
