#pragma once

#include <map>
#include <vector>

#include "qlorentz/clebsch.hpp"
#include "qlorentz/suq2.hpp"

namespace qlorentz {

/// PBW monomial F^f K^(h/2) E^e.
struct PBWKey {
    int f = 0, h = 0, e = 0;
    friend auto operator<=>(const PBWKey&, const PBWKey&) = default;
};

/// Normal-ordered element of U_q(sl2) with half-integer K powers.
class AlgElem {
public:
    AlgElem() = default;
    AlgElem(long n) {
        if (n != 0) t_[PBWKey{}] = QScalar(n);
    }
    AlgElem(const QScalar& c) {
        if (!c.is_zero()) t_[PBWKey{}] = c;
    }
    static AlgElem monomial(int f, int h, int e, QScalar c = QScalar(1));
    static AlgElem gen(Gen g);
    /// Vectorial generators and the W element.
    static AlgElem J(int A);
    static AlgElem W();

    const std::map<PBWKey, QScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const PBWKey& k, const QScalar& c);

    friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator-(const AlgElem& a);
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);  // normal-ordered product
    friend AlgElem operator*(const QScalar& c, const AlgElem& a);
    AlgElem& operator+=(const AlgElem& b) { *this = *this + b; return *this; }
    AlgElem& operator-=(const AlgElem& b) { *this = *this - b; return *this; }
    AlgElem& operator*=(const AlgElem& b) { *this = *this * b; return *this; }
    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    std::map<PBWKey, QScalar> t_;
};

AlgElem normal_mul(const AlgElem& a, const AlgElem& b);

/// Element of U_q(sl2) (x) U_q(sl2), the q-Lorentz algebra as an algebra.
class LorentzElem {
public:
    using Key = std::pair<PBWKey, PBWKey>;

    LorentzElem() = default;
    LorentzElem(long n) {
        if (n != 0) t_[{PBWKey{}, PBWKey{}}] = QScalar(n);
    }
    LorentzElem(const QScalar& c) {
        if (!c.is_zero()) t_[{PBWKey{}, PBWKey{}}] = c;
    }
    static LorentzElem tensor(const AlgElem& x, const AlgElem& y);
    static LorentzElem left(const AlgElem& x) { return tensor(x, AlgElem(1)); }
    static LorentzElem right(const AlgElem& y) { return tensor(AlgElem(1), y); }

    const std::map<Key, QScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Key& k, const QScalar& c);

    friend LorentzElem operator+(const LorentzElem& a, const LorentzElem& b);
    friend LorentzElem operator-(const LorentzElem& a, const LorentzElem& b);
    friend LorentzElem operator-(const LorentzElem& a);
    friend LorentzElem operator*(const LorentzElem& a, const LorentzElem& b);
    friend LorentzElem operator*(const QScalar& c, const LorentzElem& a);
    LorentzElem& operator+=(const LorentzElem& b) { *this = *this + b; return *this; }
    LorentzElem& operator-=(const LorentzElem& b) { *this = *this - b; return *this; }
    LorentzElem& operator*=(const LorentzElem& b) { *this = *this * b; return *this; }
    friend bool operator==(const LorentzElem& a, const LorentzElem& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    std::map<Key, QScalar> t_;
};

// Hopf structure of U_q(sl2); the coproduct lands in the tensor square.
LorentzElem coproduct(const AlgElem& x);
AlgElem antipode(const AlgElem& x);
AlgElem antipode_inv(const AlgElem& x);
QScalar counit(const AlgElem& x);
AlgElem star(const AlgElem& x);

QScalar counit(const LorentzElem& x);

/// Hopf adjoint actions inside U_q(sl2).
AlgElem adjoint_left(const AlgElem& g, const AlgElem& h);
AlgElem adjoint_right(const AlgElem& h, const AlgElem& g);

/// Representation of an element (uses weight-diagonal K^(1/2)).
QMatrix rep_alg(Spin j, const AlgElem& x);
QMatrix rep_lorentz(Spin j1, Spin j2, const LorentzElem& x);

/// Dual pairing <x, M^{a1}_{b1} ... M^{an}_{bn}> against words in the matrix
/// quantum group generators; word given as index pairs (a_i, b_i) with
/// indices in {0,1} for {-,+}.
QScalar dual_pairing(const AlgElem& x, const std::vector<std::pair<int, int>>& word);

} // namespace qlorentz
