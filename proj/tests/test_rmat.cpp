#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlorentz/lorentz.hpp"
#include "qlorentz/rmat.hpp"

using namespace qlorentz;

static QScalar q(int n) { return qpow(hi(n)); }

TEST_CASE("spinor R-matrix") {
    QMatrix R = qpow(half) * r_image(half, half);
    QMatrix want(4, 4);
    want.at(0, 0) = q(1);
    want.at(1, 1) = QScalar(1);
    want.at(2, 2) = QScalar(1);
    want.at(3, 3) = q(1);
    want.at(2, 1) = lambda_();
    CHECK(R == want);
    CHECK(r_image(hi(0), hi(2)) == QMatrix::identity(5));
    CHECK(r_image(hi2(3), hi(0)) == QMatrix::identity(4));
    // inverse
    CHECK(r_image(half, hi(1)) * r_image_inv(half, hi(1)) == QMatrix::identity(6));
}

TEST_CASE("vector R-matrix against the closed formula") {
    const Tensor3& t = tensors3();
    QMatrix R = q(-2) * r_image(hi(1), hi(1));
    QMatrix Rinv = q(2) * r_image_inv(hi(1), hi(1));
    for (int A = 0; A < 3; ++A)
        for (int B = 0; B < 3; ++B)
            for (int C = 0; C < 3; ++C)
                for (int D = 0; D < 3; ++D) {
                    // R^{AB}_{CD} = d^B_C d^A_D - q^-3 lam g^{BA} g_{CD} - q^-2 eps^{BAX} eps_{DCX}
                    QScalar want = (B == C && A == D) ? QScalar(1) : QScalar();
                    want -= q(-3) * lambda_() * t.g_up[B][A] * t.g_dn[C][D];
                    QScalar ee;
                    for (int X = 0; X < 3; ++X) ee += t.uuu[B][A][X] * t.ddd[D][C][X];
                    want -= q(-2) * ee;
                    CHECK(R.at(A * 3 + B, C * 3 + D) == want);
                    // the inverse in closed form; its metric term enters with
                    // the opposite sign of the direct one
                    QScalar wanti = (A == D && B == C) ? QScalar(1) : QScalar();
                    wanti += q(3) * lambda_() * t.g_up[A][B] * t.g_dn[D][C];
                    QScalar ee2;
                    for (int X = 0; X < 3; ++X) ee2 += t.uuu[A][B][X] * t.ddd[C][D][X];
                    wanti -= q(2) * ee2;
                    CHECK(Rinv.at(A * 3 + B, C * 3 + D) == wanti);
                }
    // projector decomposition of R-hat
    Proj3 p = projectors3();
    QMatrix rhat = swap_row_pair(R, 3, 3);
    // the antisymmetric channel picks up the minus sign; the scalar channel
    // eigenvalue is +q^-6 (consistent with the entrywise formula above)
    CHECK(rhat == qpow(hi(-6)) * p.P0 - qpow(hi(-4)) * p.P1 + p.P3);
}

TEST_CASE("Yang-Baxter for all triples from {1/2, 1}") {
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c) CHECK(yang_baxter_check(hi2(a), hi2(b), hi2(c)).all_pass());
    // a scalar leg is trivial
    CHECK(yang_baxter_check(hi(0), half, hi(1)).all_pass());
}

TEST_CASE("L-matrices") {
    LMatrix lm = l_matrix(-1, half);
    CHECK(lm.a[1][0] == AlgElem::monomial(1, 1, 0, -qpow(half) * lambda_()));
    LMatrix lp1 = l_matrix(+1, hi(1));
    CHECK(lp1.a[0][2] == AlgElem::monomial(0, -2, 2, lambda_() * lambda_()));
    CHECK_THROWS(l_matrix(+1, hi2(3)));
    CHECK(l_matrix_suite().all_pass());
}

TEST_CASE("q-Lorentz R-matrices on the vector square") {
    const LorentzProj& lp = lorentz_projectors();
    const VectorBasis& vb = vector_basis();
    QMatrix TT = kron(vb.T, vb.T), TTi = kron(vb.Tinv, vb.Tinv);
    QMatrix RI = TTi * lorentz_r_image(WhichR::I, rep_vector4(), rep_vector4()) * TT;
    QMatrix RII = q(1) * (TTi * lorentz_r_image(WhichR::II, rep_vector4(), rep_vector4()) * TT);
    QMatrix RIhat = swap_row_pair(RI, 4, 4), RIIhat = swap_row_pair(RII, 4, 4);
    CHECK(RIhat == lp.P00 - q(-2) * lp.P10 - q(2) * lp.P01 + lp.P11);
    CHECK(RIIhat == q(-2) * lp.P00 - lp.P10 - lp.P01 + q(2) * lp.P11);
    // spectrum multiplicities via projector traces
    CHECK(lp.P00.trace() == QScalar(1));
    CHECK(lp.P10.trace() == QScalar(3));
    CHECK(lp.P01.trace() == QScalar(3));
    CHECK(lp.P11.trace() == QScalar(9));
    // scalar first leg gives the identity
    CHECK(lorentz_r_image(WhichR::I, LorentzRep{hi(0), hi(0)}, rep_vector4()) ==
          QMatrix::identity(4));
    CHECK(lorentz_r_image(WhichR::II, LorentzRep{hi(0), hi(0)}, rep_half_zero()) ==
          QMatrix::identity(2));
}

TEST_CASE("R intertwines coproduct and opposite coproduct") {
    for (auto [j1, j2] : {std::pair{half, half}, {half, hi(1)}, {hi(1), half}, {hi(1), hi(1)}}) {
        QMatrix R = r_image(j1, j2);
        for (Gen g : {Gen::E, Gen::F, Gen::K}) {
            QMatrix cop = coproduct_on(Spin{j1}, Spin{j2}, g);
            QMatrix cop_op = apply_swap(coproduct_on(Spin{j2}, Spin{j1}, g), j2.twice() + 1,
                                        j1.twice() + 1);
            CHECK(R * cop == cop_op * R);
        }
    }
}

TEST_CASE("Lambda-form L-matrix") {
    auto L = l_lambda_plus();
    const BoostMatrix& B = boosts();
    CHECK(L[0][0] == LorentzElem(1));
    CHECK(L[0][1].is_zero());
    CHECK(L[1][0].is_zero());
    CHECK(L[3][3] == LorentzElem(1) + qint(hi(2)) * (B.b * B.c));
    // metric contraction: L^mu_nu L^sigma_tau eta^{tau nu} = eta^{sigma mu}
    QMatrix eta = minkowski_metric_up();
    for (int mu = 0; mu < 4; ++mu)
        for (int sigma = 0; sigma < 4; ++sigma) {
            LorentzElem acc;
            for (int nu = 0; nu < 4; ++nu)
                for (int tau = 0; tau < 4; ++tau) {
                    if (eta.at(tau, nu).is_zero()) continue;
                    acc += eta.at(tau, nu) * (L[mu][nu] * L[sigma][tau]);
                }
            CHECK(acc == LorentzElem(eta.at(sigma, mu)));
        }
    // representing the algebra leg of the L-matrix recovers the full R image:
    // RI[(i,mu),(j,nu)] = Lambda(L^mu_nu)^i_j
    QMatrix Lrep(16, 16);
    const VectorBasis& vb = vector_basis();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            QMatrix m = lambda_rep_elem(L[mu][nu]);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) Lrep.at(i * 4 + mu, j * 4 + nu) = m.at(i, j);
        }
    QMatrix TT = kron(vb.T, vb.T), TTi = kron(vb.Tinv, vb.Tinv);
    QMatrix RI = TTi * lorentz_r_image(WhichR::I, rep_vector4(), rep_vector4()) * TT;
    CHECK(Lrep == RI);
}
