#pragma once

#include <vector>

#include "qlorentz/matrix.hpp"
#include "qlorentz/report.hpp"

namespace qlorentz {

struct Spin {
    HalfInt j;
    Spin() = default;
    explicit Spin(HalfInt jj) : j(jj) {}
    int dim() const { return j.twice() + 1; }
    /// basis index of weight m (basis ordered m = -j .. +j ascending)
    int index(HalfInt m) const { return (m.twice() + j.twice()) / 2; }
    HalfInt weight(int idx) const { return hi2(2 * idx - j.twice()); }
};

inline Spin spin(HalfInt j) { return Spin(j); }

enum class Gen { E, F, K, Kinv, Khalf, Khalfinv };

struct EFKRep {
    Spin j;
    QMatrix E, F, K, Kinv;
};

struct VectorialRep {
    Spin j;
    QMatrix Jm, J3, Jp, W;
};

/// Irreducible representation in the E,F,K form.
EFKRep rep_efk(Spin j);
/// Vectorial generators J_-, J_3, J_+ and the Casimir element W.
VectorialRep rep_vectorial(Spin j);
QMatrix rep_gen(Spin j, Gen g);
/// rho^j(J_A), A in {-1,0,+1}.
QMatrix rep_J(Spin j, int A);
/// rho^j(W) is this multiple of the identity.
QScalar w_eigenvalue(HalfInt j);

QMatrix antipode_on(Spin j, Gen g);
/// Matrix of the coproduct of g on D^{j1} (x) D^{j2}.
QMatrix coproduct_on(Spin j1, Spin j2, Gen g);
QScalar counit(Gen g);

/// rho(x*) = rho(x)^dagger for the generators.
VerificationReport star_check(Spin j);

/// Checks that an indexed family A_mu, mu = -j..j, satisfies the three
/// commutation conditions of an irreducible D^j tensor operator with respect
/// to ambient matrices E, F, K.
VerificationReport tensor_op_conditions(Spin j, const QMatrix& E, const QMatrix& F,
                                        const QMatrix& K, const std::vector<QMatrix>& family,
                                        const std::string& tag);

} // namespace qlorentz
