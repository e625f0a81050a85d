#include "qlorentz/qscalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlorentz {

RatFn::RatFn(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RatFn with zero denominator");
    reduce();
}

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // move the denominator's s-power into the numerator
    int k = den_.min_exp();
    if (k != 0) {
        den_ = den_.shifted(-k);
        num_ = num_.shifted(-k);
    }
    if (!den_.is_one()) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
            int k2 = den_.min_exp();
            if (k2 != 0) {
                den_ = den_.shifted(-k2);
                num_ = num_.shifted(-k2);
            }
        }
        GaussRat lead = den_.coeff(den_.max_exp());
        if (!(lead == GaussRat(1))) {
            den_ = den_.scaled(GaussRat(1) / lead);
            num_ = num_.scaled(GaussRat(1) / lead);
        }
    }
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFn operator-(const RatFn& a) {
    RatFn r = a;
    r.num_ = -r.num_;
    return r;
}
RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return RatFn();
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}
RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::domain_error("RatFn division by zero");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::conj() const { return RatFn(num_.conj(), den_.conj()); }

NComplex eval_poly(const LaurentPoly& p, const NumericContext& ctx) {
    unsigned long prec = ctx.bits();
    mpf_class s(0, prec), q(ctx.q, prec);
    mpf_sqrt(s.get_mpf_t(), q.get_mpf_t());
    NComplex acc(prec);
    // Horner over the exponent range
    if (p.is_zero()) return acc;
    int lo = p.min_exp(), hi = p.max_exp();
    for (int e = hi; e >= lo; --e) {
        acc.re *= s;
        acc.im *= s;
        GaussRat c = p.coeff(e);
        if (!c.is_zero()) {
            acc.re += mpf_class(mpq_class(c.re), prec);
            acc.im += mpf_class(mpq_class(c.im), prec);
        }
    }
    if (lo != 0) {
        mpf_class spow(1, prec);
        for (int i = 0; i < std::abs(lo); ++i) spow *= s;
        if (lo > 0) {
            acc.re *= spow;
            acc.im *= spow;
        } else {
            acc.re /= spow;
            acc.im /= spow;
        }
    }
    return acc;
}

NComplex RatFn::eval(const NumericContext& ctx) const {
    NComplex n = eval_poly(num_, ctx);
    if (den_.is_one()) return n;
    NComplex d = eval_poly(den_, ctx);
    mpf_class m = d.re * d.re + d.im * d.im;
    return {mpf_class((n.re * d.re + n.im * d.im) / m), mpf_class((n.im * d.re - n.re * d.im) / m)};
}

std::string RatFn::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---- QScalar ----

namespace {

// Canonicalize one surd term.  Returns coeff and radicand with the radicand an
// integer polynomial in s (trailing exponent 0 or 1), square-free polynomial
// part, square-free positive content, positive leading coefficient.
QScalar::Term normalize_surd(RatFn coeff, LaurentPoly rad) {
    if (coeff.is_zero() || rad.is_zero()) return {RatFn(), LaurentPoly(1)};
    if (!rad.is_real()) throw std::domain_error("non-surd radicand: complex radicand");

    // clear rational denominators: sqrt(R/d) = sqrt(R*d)/d
    mpz_class den_lcm = 1;
    for (auto& [e, c] : rad.coeffs()) {
        mpz_class d = c.re.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (den_lcm != 1) {
        coeff = coeff * RatFn(LaurentPoly(GaussRat(mpq_class(1, den_lcm))));
        rad = rad.scaled(GaussRat(mpq_class(den_lcm)));
    }

    // extract s^k
    int k = rad.min_exp();
    LaurentPoly p = rad.shifted(-k);
    int khalf = (k >= 0 ? k : k - 1) / 2;  // floor
    int kres = k - 2 * khalf;              // 0 or 1
    if (khalf != 0) coeff = coeff * RatFn(LaurentPoly::monomial(khalf));

    // sign: fold -1 into i
    if (sgn(p.coeff(p.max_exp()).re) < 0) {
        p = -p;
        coeff = coeff * RatFn(LaurentPoly(GaussRat::imaginary_unit()));
    }

    // integer content: extract the square part
    LaurentPoly prim;
    mpq_class content = content_and_primitive(p, prim);
    mpz_class cnum = content.get_num();  // content is a positive integer here
    mpz_class sq, rem_root;
    mpz_sqrtrem(sq.get_mpz_t(), rem_root.get_mpz_t(), cnum.get_mpz_t());
    // factor square part out of cnum: cnum = e^2 * f with f square-free
    mpz_class e = 1, f = cnum;
    for (mpz_class d = 2; d * d <= f;) {
        mpz_class d2 = d * d;
        if (f % d2 == 0) {
            f /= d2;
            e *= d;
        } else {
            ++d;
        }
    }
    if (e != 1) coeff = coeff * RatFn(LaurentPoly(GaussRat(mpq_class(e))));

    // square-free split of the primitive polynomial part
    LaurentPoly odd_part(1);
    if (!prim.is_constant()) {
        auto factors = squarefree_decompose(prim);
        for (size_t i = 0; i < factors.size(); ++i) {
            unsigned mult = static_cast<unsigned>(i + 1);
            if (mult / 2 > 0) coeff = coeff * RatFn(factors[i].pow(mult / 2));
            if (mult % 2 == 1) odd_part *= factors[i];
        }
    }

    LaurentPoly out_rad = odd_part.scaled(GaussRat(mpq_class(f))).shifted(kres);
    if (out_rad.is_one()) return {coeff, out_rad};
    if (out_rad.sign_at_probe() <= 0)
        throw std::domain_error("negative radicand: " + out_rad.str());
    return {coeff, out_rad};
}

} // namespace

void QScalar::insert_term(Term t) {
    if (t.coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t.rad,
                               [](const Term& a, const LaurentPoly& r) { return a.rad < r; });
    if (it != terms_.end() && it->rad == t.rad) {
        it->coeff += t.coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(t));
    }
}

QScalar QScalar::from_ratfn(const RatFn& c) {
    QScalar r;
    if (!c.is_zero()) r.terms_.push_back({c, LaurentPoly(1)});
    return r;
}

QScalar QScalar::surd(const RatFn& coeff, const LaurentPoly& radicand) {
    QScalar r;
    r.insert_term(normalize_surd(coeff, radicand));
    return r;
}

bool QScalar::is_one() const {
    return terms_.size() == 1 && terms_[0].rad.is_one() && terms_[0].coeff.is_poly() &&
           terms_[0].coeff.num().is_one();
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    QScalar r = a;
    for (auto& t : b.terms_) r.insert_term(t);
    return r;
}
QScalar operator-(const QScalar& a, const QScalar& b) {
    QScalar r = a;
    for (auto& t : b.terms_) r.insert_term({-t.coeff, t.rad});
    return r;
}
QScalar operator-(const QScalar& a) {
    QScalar r;
    for (auto& t : a.terms_) r.terms_.push_back({-t.coeff, t.rad});
    return r;
}
QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar r;
    for (auto& ta : a.terms_)
        for (auto& tb : b.terms_) {
            RatFn c = ta.coeff * tb.coeff;
            if (c.is_zero()) continue;
            if (ta.rad.is_one() && tb.rad.is_one()) {
                r.insert_term({std::move(c), ta.rad});
            } else if (ta.rad == tb.rad) {
                r.insert_term({c * RatFn(ta.rad), LaurentPoly(1)});
            } else {
                r.insert_term(normalize_surd(std::move(c), ta.rad * tb.rad));
            }
        }
    return r;
}

QScalar QScalar::conj() const {
    QScalar r;
    for (auto& t : terms_) r.insert_term({t.coeff.conj(), t.rad});
    return r;
}

QScalar QScalar::pow(unsigned n) const {
    QScalar r(1), base = *this;
    while (n) {
        if (n & 1) r *= base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool operator==(const QScalar& a, const QScalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].rad == b.terms_[i].rad && a.terms_[i].coeff == b.terms_[i].coeff))
            return false;
    return true;
}

std::optional<QScalar> QScalar::try_inverse() const {
    if (terms_.empty()) return std::nullopt;
    if (terms_.size() == 1) {
        const Term& t = terms_[0];
        // (c*sqrt(r))^-1 = (1/(c r)) sqrt(r)
        RatFn inv_coeff = RatFn(LaurentPoly(1)) / (t.coeff * RatFn(t.rad));
        return surd(inv_coeff, t.rad);
    }
    // split x = A + B and recurse on x * (A - B) which has fewer radicands
    size_t half_count = terms_.size() / 2;
    QScalar A, B;
    for (size_t i = 0; i < terms_.size(); ++i)
        (i < half_count ? A : B).terms_.push_back(terms_[i]);
    QScalar y = A - B;
    QScalar z = *this * y;
    if (z.terms_.size() >= terms_.size()) return std::nullopt;
    auto zi = z.try_inverse();
    if (!zi) return std::nullopt;
    return y * *zi;
}

QScalar QScalar::inverse() const {
    auto r = try_inverse();
    if (!r) throw std::domain_error("QScalar not invertible: " + str());
    return *r;
}

NComplex QScalar::eval(const NumericContext& ctx) const {
    unsigned long prec = ctx.bits();
    NComplex acc(prec);
    for (auto& t : terms_) {
        NComplex c = t.coeff.eval(ctx);
        if (!t.rad.is_one()) {
            NComplex rv = eval_poly(t.rad, ctx);
            if (rv.re < 0) throw std::domain_error("radicand evaluates negative");
            mpf_class root(0, prec);
            mpf_sqrt(root.get_mpf_t(), rv.re.get_mpf_t());
            c.re *= root;
            c.im *= root;
        }
        acc += c;
    }
    return acc;
}

std::string QScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")";
        if (!t.rad.is_one()) os << "*sqrt(" << t.rad.str() << ")";
    }
    return os.str();
}

// ---- named constructors ----

QScalar qint(HalfInt n) {
    int t = n.twice();
    if (t == 0) return QScalar();
    if (t % 2 == 0) {
        int m = t / 2, sign = 1;
        if (m < 0) {
            m = -m;
            sign = -1;
        }
        LaurentPoly p;
        for (int e = m - 1; e >= 1 - m; e -= 2) p.set(2 * e, GaussRat(sign));
        return QScalar::from_ratfn(RatFn(std::move(p)));
    }
    // half-integer argument: q^n = s^(2n) = s^t, so (s^t - s^-t)/(s^2 - s^-2)
    LaurentPoly num = LaurentPoly::monomial(t) - LaurentPoly::monomial(-t);
    LaurentPoly den = LaurentPoly::monomial(2) - LaurentPoly::monomial(-2);
    return QScalar::from_ratfn(RatFn(std::move(num), std::move(den)));
}

QScalar qfac(int n) {
    QScalar r(1);
    for (int i = 2; i <= n; ++i) r *= qint(hi(i));
    return r;
}

QScalar qpow(HalfInt e) { return QScalar::from_ratfn(RatFn(LaurentPoly::monomial(e.twice()))); }

QScalar lambda_() {
    LaurentPoly p = LaurentPoly::monomial(2) - LaurentPoly::monomial(-2);
    return QScalar::from_ratfn(RatFn(std::move(p)));
}

QScalar sqrt(const QScalar& x) {
    if (x.is_zero()) return x;
    if (!x.is_rational_function())
        throw std::domain_error("non-surd radicand: sqrt of nested or multi-term value");
    const RatFn& c = x.terms()[0].coeff;
    // sqrt(num/den) = sqrt(num*den)/den
    LaurentPoly r = c.num() * c.den();
    if (!r.is_real() || r.sign_at_probe() <= 0)
        throw std::domain_error("non-surd radicand: sqrt of non-positive value");
    return QScalar::surd(RatFn(LaurentPoly(1), c.den()), r);
}

QScalar sqrt_qint(HalfInt n) { return sqrt(qint(n)); }

} // namespace qlorentz
