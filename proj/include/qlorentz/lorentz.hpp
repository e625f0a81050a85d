#pragma once

#include "qlorentz/rmat.hpp"

namespace qlorentz {

/// Quantum-double boost generators as concrete elements of the tensor square.
struct BoostMatrix {
    LorentzElem a, b, c, d;
};
const BoostMatrix& boosts();

/// Rotations embedded by the coproduct, i(x) = Delta(x).
LorentzElem rotations_embedded(Gen g);
LorentzElem rotations_embedded(const AlgElem& x);
LorentzElem embedded_J(int A);
LorentzElem embedded_W();

/// The vectorial generators of the RS-form.
struct RSGenerators {
    LorentzElem R[3];  // R_-, R_3, R_+
    LorentzElem S[3];
    LorentzElem U, V;
    const LorentzElem& R_A(int A) const { return R[A + 1]; }
    const LorentzElem& S_A(int A) const { return S[A + 1]; }
};
const RSGenerators& rs_generators();

/// The defining relations of the boost algebra, incl. the determinant relation.
VerificationReport verify_su2op();
/// RR, SS, mixed RS and scalar exchange relations of the RS-form.
VerificationReport verify_rs_relations();
/// Every printed conversion identity between the three presentations.
VerificationReport conversion_suite();
/// The four displayed matrix relations between boosts and E, F, K, K^-1.
VerificationReport rotation_boost_commutation_suite();
/// Star and reality checks that close only in representations.
VerificationReport lorentz_representation_suite();

} // namespace qlorentz
