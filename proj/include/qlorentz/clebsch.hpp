#pragma once

#include <array>
#include <vector>

#include "qlorentz/report.hpp"
#include "qlorentz/suq2.hpp"

namespace qlorentz {

/// q-Clebsch-Gordan coefficient <j1 j2; m1 m2 | j m>_q.
/// Computed constructively: the highest-weight vector of spin j inside
/// D^{j1} (x) D^{j2} is the kernel of the coproduct raising operator, with its
/// |j1,j1> (x) |j2,j-j1> component fixed positive; lower weights follow by
/// applying the coproduct lowering operator with the standard normalization.
/// Zero outside the selection rules.  Tables are memoized per (j1,j2).
QScalar cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m);

/// q-Racah coefficient R_q(a,b,j;c,j',j'').  Zero when every
/// <c j; gamma m|j'' m''> vanishes.
QScalar racah(HalfInt a, HalfInt b, HalfInt j, HalfInt c, HalfInt jp, HalfInt jpp);

VerificationReport cgc_symmetry_check(HalfInt n, HalfInt j, HalfInt jp);
VerificationReport racah_table_check(int jmax_twice);

// 3-vector indices A run over {-1,0,+1} = {-,3,+} mapped to positions {0,1,2}.
inline int vidx(int A) { return A + 1; }
// 4-vector basis order is {0,-,+,3}; position of a stored 3-vector index there.
inline int spat4(int a3) { return a3 == 0 ? 1 : (a3 == 1 ? 3 : 2); }

/// Metric and epsilon tensor of the vector representation with every index
/// placement used in the calculus.
struct Tensor3 {
    std::array<std::array<QScalar, 3>, 3> g_up, g_dn;         // g^{AB}, g_{AB}
    // eps[A][B][C]: uud = eps^{AB}_C, uuu = eps^{ABC}, dud = eps_A{}^B{}_C,
    // udd = eps^A{}_{BC}, ddd = eps_{ABC}
    QScalar uud[3][3][3], uuu[3][3][3], dud[3][3][3], udd[3][3][3], ddd[3][3][3];
};
const Tensor3& tensors3();

struct SpinorMetric {
    QMatrix lower;  // eps_{ab}
    QMatrix upper;  // eps^{ab} = -eps_{ab}
};
SpinorMetric spinor_metric();

/// eta^{mu nu} and eta_{mu nu} on the 4-vector basis {0,-,+,3}.
QMatrix minkowski_metric_up();
QMatrix minkowski_metric_dn();

/// Projectors of D^1 (x) D^1 = D^0 + D^1 + D^2 as 9x9 matrices on index
/// pairs (A,B) (row-major over {-,3,+}).
struct Proj3 {
    QMatrix P0, P1, P3;
};
Proj3 projectors3();

/// Projectors of the 4-vector square Lambda (x) Lambda, 16x16 on index pairs
/// over {0,-,+,3}, plus symmetrizer and antisymmetrizer.
struct LorentzProj {
    QMatrix P00, P10, P01, P11, PS, PA;
};
const LorentzProj& lorentz_projectors();

VerificationReport eps_identities_suite();

/// Unnormalized basis vectors of D^{(k1,k2)} inside
/// D^{(j1,j2)} (x) D^{(j1p,j2p)}, as columns on the product basis
/// |(m1,m2)> (x) |(m1p,m2p)| in row-major order.
std::vector<QMatrix> lorentz_cgc_basis(HalfInt j1, HalfInt j2, HalfInt j1p, HalfInt j2p,
                                       HalfInt k1, HalfInt k2);

} // namespace qlorentz
