#pragma once

#include <array>

#include "qlorentz/lorentz.hpp"

namespace qlorentz {

// 4-vector component order used throughout: {0, -, +, 3} as indices 0..3.

/// Normal-ordered polynomial in the momentum generators, monomials ordered
/// P_- P_3 P_+ P_0.
struct MomKey {
    int em = 0, e3 = 0, ep = 0, e0 = 0;
    friend auto operator<=>(const MomKey&, const MomKey&) = default;
    bool trivial() const { return em == 0 && e3 == 0 && ep == 0 && e0 == 0; }
    int degree() const { return em + e3 + ep + e0; }
};

class MomentumPoly {
public:
    MomentumPoly() = default;
    MomentumPoly(long n) {
        if (n != 0) t_[MomKey{}] = QScalar(n);
    }
    MomentumPoly(const QScalar& c) {
        if (!c.is_zero()) t_[MomKey{}] = c;
    }
    /// P_mu, mu in the 4-vector order {0,-,+,3}.
    static MomentumPoly P(int mu);
    static MomentumPoly monomial(MomKey k, QScalar c = QScalar(1));

    const std::map<MomKey, QScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const MomKey& k, const QScalar& c);

    friend MomentumPoly operator+(const MomentumPoly& a, const MomentumPoly& b);
    friend MomentumPoly operator-(const MomentumPoly& a, const MomentumPoly& b);
    friend MomentumPoly operator-(const MomentumPoly& a);
    friend MomentumPoly operator*(const MomentumPoly& a, const MomentumPoly& b);
    friend MomentumPoly operator*(const QScalar& c, const MomentumPoly& a);
    MomentumPoly& operator+=(const MomentumPoly& b) { *this = *this + b; return *this; }
    MomentumPoly& operator-=(const MomentumPoly& b) { *this = *this - b; return *this; }
    friend bool operator==(const MomentumPoly& a, const MomentumPoly& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    std::map<MomKey, QScalar> t_;
};

/// Lorentz part of the Poincare normal form: a rotation PBW monomial times a
/// boost PBW monomial (boost normal form b^bb c^cc a^na or b^bb c^cc d^nd).
struct BoostKey {
    int bb = 0, cc = 0, ad = 0;  // ad > 0: a^ad, ad < 0: d^(-ad)
    friend auto operator<=>(const BoostKey&, const BoostKey&) = default;
    bool trivial() const { return bb == 0 && cc == 0 && ad == 0; }
};
struct LorKey {
    PBWKey rot;
    BoostKey boost;
    friend auto operator<=>(const LorKey&, const LorKey&) = default;
};

/// Element of the boost algebra (SU_q(2)^op with the determinant relation).
class BoostElem {
public:
    BoostElem() = default;
    BoostElem(long n) {
        if (n != 0) t_[BoostKey{}] = QScalar(n);
    }
    BoostElem(const QScalar& c) {
        if (!c.is_zero()) t_[BoostKey{}] = c;
    }
    static BoostElem gen(char g);  // 'a','b','c','d'
    static BoostElem monomial(BoostKey k, QScalar c = QScalar(1));

    const std::map<BoostKey, QScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const BoostKey& k, const QScalar& c);

    friend BoostElem operator+(const BoostElem& a, const BoostElem& b);
    friend BoostElem operator-(const BoostElem& a, const BoostElem& b);
    friend BoostElem operator*(const BoostElem& a, const BoostElem& b);
    friend BoostElem operator*(const QScalar& c, const BoostElem& a);
    BoostElem& operator+=(const BoostElem& b) { *this = *this + b; return *this; }
    friend bool operator==(const BoostElem& a, const BoostElem& b) { return a.t_ == b.t_; }

    /// As an element of the tensor square (for cross checks with the engine).
    LorentzElem to_lorentz() const;

private:
    std::map<BoostKey, QScalar> t_;
};

/// Element of the q-Poincare algebra in the normal form
/// (momenta) x (rotations) x (boosts).
class PoincareElem {
public:
    PoincareElem() = default;
    PoincareElem(long n) {
        if (n != 0) t_[{MomKey{}, LorKey{}}] = QScalar(n);
    }
    PoincareElem(const QScalar& c) {
        if (!c.is_zero()) t_[{MomKey{}, LorKey{}}] = c;
    }
    static PoincareElem momentum(const MomentumPoly& p);
    static PoincareElem P(int mu) { return momentum(MomentumPoly::P(mu)); }
    static PoincareElem rotation(const AlgElem& x);
    static PoincareElem boost(const BoostElem& x);
    static PoincareElem boost_gen(char g) { return boost(BoostElem::gen(g)); }

    using Key = std::pair<MomKey, LorKey>;
    const std::map<Key, QScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Key& k, const QScalar& c);

    friend PoincareElem operator+(const PoincareElem& a, const PoincareElem& b);
    friend PoincareElem operator-(const PoincareElem& a, const PoincareElem& b);
    friend PoincareElem operator-(const PoincareElem& a);
    friend PoincareElem operator*(const PoincareElem& a, const PoincareElem& b);
    friend PoincareElem operator*(const QScalar& c, const PoincareElem& a);
    PoincareElem& operator+=(const PoincareElem& b) { *this = *this + b; return *this; }
    PoincareElem& operator-=(const PoincareElem& b) { *this = *this - b; return *this; }
    PoincareElem& operator*=(const PoincareElem& b) { *this = *this * b; return *this; }
    friend bool operator==(const PoincareElem& a, const PoincareElem& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    std::map<Key, QScalar> t_;
};

PoincareElem poincare_mul(const PoincareElem& a, const PoincareElem& b);

/// Hopf data of a Lorentz element in the double basis: value plus coproduct
/// legs, antipode, inverse antipode, and counit.  Closed under products.
struct DoubleHopf {
    PoincareElem value;
    std::vector<std::pair<PoincareElem, PoincareElem>> cop;
    PoincareElem S, Sinv;
    QScalar eps;
};
DoubleHopf hopf_rotation(Gen g);
DoubleHopf hopf_boost(char g);
DoubleHopf hopf_mul(const DoubleHopf& x, const DoubleHopf& y);

/// Hopf adjoint actions of a double-basis Lorentz element on the Poincare algebra.
PoincareElem adjoint_left(const DoubleHopf& g, const PoincareElem& h);
PoincareElem adjoint_right(const PoincareElem& h, const DoubleHopf& g);

/// Move all momenta to the right: x = sum (lorentz monomial) * (momentum
/// monomial); returned as pairs (pure Lorentz part, momentum monomial).
std::vector<std::pair<PoincareElem, MomKey>> to_momenta_right(const PoincareElem& x);

// ---- the structures of the paper ----

/// q-Pauli matrices sigma_mu with lowered indices, order {0,-,+,3}.
struct PauliSet {
    std::array<QMatrix, 4> lower;   // (sigma_mu)_{a b-dot}
    std::array<QMatrix, 4> mixed;   // (sigma_mu)_a{}^{b-dot}
    std::array<QMatrix, 4> upper3;  // sigma^A = g^{AB} sigma_B (spatial only, indices 1..3)
};
PauliSet pauli_matrices();
VerificationReport pauli_relations_check();

/// 4x4 Lambda representation of named generators.
enum class LGen { E, F, K, Kinv, a, b, c, d, Jm, J3, Jp, W, One };
QMatrix lambda_rep(LGen g);
VerificationReport lambda_rep_check();

VerificationReport minkowski_relations_check();

/// The invariant quadratic P_mu P^mu as a momentum polynomial.
MomentumPoly momentum_square();
MomentumPoly momentum_square_abcd();  // via DA - q^-2 BC

/// The q-Pauli-Lubanski vector W-tilde and the two right 4-vectors it is
/// built from.
struct PauliLubanski {
    std::array<PoincareElem, 4> W;   // W-tilde_mu, order {0,-,+,3}
    std::array<PoincareElem, 4> Z;   // Z-tilde_mu
    std::array<PoincareElem, 4> jP;  // j(P_mu)
};
const PauliLubanski& pauli_lubanski();
VerificationReport pauli_lubanski_check();

/// Boost a 4-vector from its zero component by the adjoint action.
std::array<PoincareElem, 4> boost_vector_from_zero(const PoincareElem& v0, bool left_action);

/// Momentum eigenvalue classification.
struct MomentumEigenvalue {
    std::array<QScalar, 4> p;  // p_0, p_-, p_+, p_3
};
enum class MomentumClass { massive, massless, invalid };
struct Classification {
    MomentumClass kind;
    QScalar mass_or_k;  // +-m for massive (signed), k for massless
};
Classification classify_momentum(const MomentumEigenvalue& p);

/// chi-tilde_p: replace right-moved momenta by eigenvalues.
PoincareElem chi_tilde(const PoincareElem& x, const MomentumEigenvalue& p);

struct LittleAlgebra {
    MomentumClass kind;
    std::vector<PoincareElem> generators;  // chi-tilde images of W-tilde
    VerificationReport relations;
};
LittleAlgebra little_algebra(const MomentumEigenvalue& p);

VerificationReport euclidean_center_check();
VerificationReport xi_map_check();

} // namespace qlorentz
