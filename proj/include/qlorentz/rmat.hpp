#pragma once

#include "qlorentz/algebra.hpp"

namespace qlorentz {

/// (rho^{j1} (x) rho^{j2}) of the universal R-matrix (finite by nilpotency).
QMatrix r_image(HalfInt j1, HalfInt j2);
QMatrix r_image_inv(HalfInt j1, HalfInt j2);
/// Grading (first-factor weight index) that makes r_image diagonal-plus-raising.
std::vector<int> r_image_grading(HalfInt j1, HalfInt j2);

VerificationReport yang_baxter_check(HalfInt j1, HalfInt j2, HalfInt j3);

/// L-matrix with entries in U_q(sl2); sign +1 / -1, supported for j in {1/2, 1}.
struct LMatrix {
    int sign;
    HalfInt j;
    std::vector<std::vector<AlgElem>> a;  // a[row][col]
    int dim() const { return static_cast<int>(a.size()); }
};
LMatrix l_matrix(int sign, HalfInt j);

/// FRT relations and coproduct/counit properties of the L-matrices.
VerificationReport l_matrix_suite();

struct LorentzRep {
    HalfInt j1, j2;
    int dim() const { return (j1.twice() + 1) * (j2.twice() + 1); }
};
inline LorentzRep rep_half_zero() { return {half, hi(0)}; }
inline LorentzRep rep_zero_half() { return {hi(0), half}; }
inline LorentzRep rep_vector4() { return {half, half}; }

enum class WhichR { I, II };

/// Representation image of the q-Lorentz R-matrices R_I, R_II on
/// D^{(j1,j2)} (x) D^{(j1',j2')}, unnormalized.
QMatrix lorentz_r_image(WhichR which, LorentzRep r1, LorentzRep r2);

/// Basis change between the spin basis {--,-+,+-,++} and the 4-vector basis
/// {0,-,+,3}: columns of T are the 4-vector basis vectors.
struct VectorBasis {
    QMatrix T, Tinv;
};
const VectorBasis& vector_basis();

/// 4-vector representation of a Lorentz-algebra element.
QMatrix lambda_rep_elem(const LorentzElem& x);

/// The Lambda-form L-matrix of R_I as a 4x4 matrix of Lorentz-algebra
/// elements, block diagonal (1, t^A_B) in the basis {0,-,+,3}.
std::vector<std::vector<LorentzElem>> l_lambda_plus();

} // namespace qlorentz
