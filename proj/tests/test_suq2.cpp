#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlorentz/clebsch.hpp"
#include "qlorentz/suq2.hpp"

using namespace qlorentz;

static QScalar q(int n) { return qpow(hi(n)); }

TEST_CASE("explicit low-spin matrices") {
    EFKRep r = rep_efk(Spin{half});
    QMatrix E(2, 2), K(2, 2);
    E.at(1, 0) = qpow(half);
    K.at(0, 0) = q(-1);
    K.at(1, 1) = q(1);
    CHECK(r.E == E);
    CHECK(r.K == K);

    EFKRep r0 = rep_efk(Spin{hi(0)});
    CHECK(r0.E.is_zero());
    CHECK(r0.F.is_zero());
    CHECK(r0.K == QMatrix::identity(1));

    EFKRep r1 = rep_efk(Spin{hi(1)});
    QMatrix K1(3, 3);
    K1.at(0, 0) = q(-2);
    K1.at(1, 1) = QScalar(1);
    K1.at(2, 2) = q(2);
    CHECK(r1.K == K1);
    // E and F at j=1 are [2]^(1/2) times the displayed ladder patterns
    QScalar s2 = sqrt_qint(hi(2));
    QMatrix E1(3, 3), F1(3, 3);
    E1.at(1, 0) = s2;
    E1.at(2, 1) = q(1) * s2;
    F1.at(0, 1) = s2;
    F1.at(1, 2) = q(-1) * s2;
    CHECK(r1.E == E1);
    CHECK(r1.F == F1);
}

TEST_CASE("defining relations hold for all j <= 4") {
    QScalar laminv = lambda_().inverse();
    for (int jt = 0; jt <= 8; ++jt) {
        EFKRep r = rep_efk(Spin{hi2(jt)});
        CHECK(r.K * r.E == q(2) * (r.E * r.K));
        CHECK(r.K * r.F == q(-2) * (r.F * r.K));
        CHECK(r.E * r.F - r.F * r.E == laminv * (r.K - r.Kinv));
        QMatrix kh = rep_gen(Spin{hi2(jt)}, Gen::Khalf);
        CHECK(kh * kh == r.K);
    }
}

TEST_CASE("vectorial form") {
    // rho^1(J_A)^B_C = eps_A{}^B{}_C entrywise
    const Tensor3& t = tensors3();
    for (int A = -1; A <= 1; ++A) {
        QMatrix JA = rep_J(Spin{hi(1)}, A);
        for (int B = 0; B < 3; ++B)
            for (int C = 0; C < 3; ++C) CHECK(JA.at(B, C) == t.dud[vidx(A)][B][C]);
    }
    // rho^j(W) = [2]^-1 (q^(2j+1) + q^-(2j+1)) for a range of spins
    for (int jt = 0; jt <= 8; ++jt) {
        Spin sp{hi2(jt)};
        VectorialRep v = rep_vectorial(sp);
        CHECK(v.W == w_eigenvalue(sp.j) * QMatrix::identity(sp.dim()));
    }
    // [2] rho^(1/2)(J_3) = sigma_3 = diag(-q, q^-1)
    QMatrix j3 = rep_J(Spin{half}, 0);
    QMatrix sigma3(2, 2);
    sigma3.at(0, 0) = -q(1);
    sigma3.at(1, 1) = q(-1);
    CHECK(qint(hi(2)) * j3 == sigma3);
}

TEST_CASE("J's satisfy the vectorial relations for j <= 4") {
    const Tensor3& t = tensors3();
    for (int jt = 1; jt <= 8; ++jt) {
        Spin sp{hi2(jt)};
        VectorialRep v = rep_vectorial(sp);
        QMatrix J[3] = {v.Jm, v.J3, v.Jp};
        // J_A J_B eps^{AB}_C = W J_C ; J_A W = W J_A
        for (int C = 0; C < 3; ++C) {
            QMatrix lhs(sp.dim(), sp.dim());
            for (int A = 0; A < 3; ++A)
                for (int B = 0; B < 3; ++B)
                    if (!t.uud[A][B][C].is_zero()) lhs += t.uud[A][B][C] * (J[A] * J[B]);
            CHECK(lhs == v.W * J[C]);
            CHECK(J[C] * v.W == v.W * J[C]);
        }
        // W^2 - lambda^2 J.J = 1
        QMatrix jj(sp.dim(), sp.dim());
        for (int A = 0; A < 3; ++A)
            for (int B = 0; B < 3; ++B)
                if (!t.g_up[A][B].is_zero()) jj += t.g_up[A][B] * (J[A] * J[B]);
        CHECK(v.W * v.W - lambda_() * lambda_() * jj == QMatrix::identity(sp.dim()));
        // Casimir: [2]^-2 [2j+2][2j] = J.J
        QScalar cas = qint(hi(2)).inverse().pow(2) * qint(2 * sp.j + hi(2)) * qint(2 * sp.j);
        CHECK(jj == cas * QMatrix::identity(sp.dim()));
        // hermiticity: J3 self-adjoint, J+^dagger = -q J-
        CHECK(v.J3.dagger() == v.J3);
        CHECK(v.Jp.dagger() == -q(1) * v.Jm);
    }
}

TEST_CASE("coproduct matrices") {
    // Delta(K) on (1/2,1/2) is diag(q^-2, 1, 1, q^2)
    QMatrix dk = coproduct_on(Spin{half}, Spin{half}, Gen::K);
    QMatrix want(4, 4);
    want.at(0, 0) = q(-2);
    want.at(1, 1) = QScalar(1);
    want.at(2, 2) = QScalar(1);
    want.at(3, 3) = q(2);
    CHECK(dk == want);
    // counit leg: coproduct against the scalar representation reproduces rho
    for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        CHECK(coproduct_on(Spin{hi(0)}, Spin{hi(1)}, g) == rep_gen(Spin{hi(1)}, g));
        CHECK(coproduct_on(Spin{hi(1)}, Spin{hi(0)}, g) == rep_gen(Spin{hi(1)}, g));
    }
    // coproduct matrices satisfy the algebra relations on the tensor space
    Spin a{half}, b{hi(1)};
    QMatrix E = coproduct_on(a, b, Gen::E), F = coproduct_on(a, b, Gen::F),
            K = coproduct_on(a, b, Gen::K), Ki = coproduct_on(a, b, Gen::Kinv);
    CHECK(K * E == q(2) * (E * K));
    CHECK(K * F == q(-2) * (F * K));
    CHECK(E * F - F * E == lambda_().inverse() * (K - Ki));
}

TEST_CASE("antipode and star") {
    for (int jt = 1; jt <= 4; ++jt) {
        Spin sp{hi2(jt)};
        EFKRep r = rep_efk(sp);
        CHECK(antipode_on(sp, Gen::E) == -(r.E * r.Kinv));
        CHECK(star_check(sp).all_pass());
        // rho(E*) = rho(FK) = rho(E)^dagger
        CHECK(r.E.dagger() == r.F * r.K);
    }
}

TEST_CASE("tensor operator conditions") {
    // the J family is a vector operator in any representation
    for (int jt = 1; jt <= 4; ++jt) {
        Spin sp{hi2(jt)};
        EFKRep r = rep_efk(sp);
        VectorialRep v = rep_vectorial(sp);
        auto rep = tensor_op_conditions(Spin{hi(1)}, r.E, r.F, r.K, {v.Jm, v.J3, v.Jp}, "J");
        CHECK(rep.all_pass());
    }
    // the identity family is a scalar operator
    EFKRep r = rep_efk(Spin{hi(1)});
    auto rep = tensor_op_conditions(Spin{hi(0)}, r.E, r.F, r.K, {QMatrix::identity(3)}, "id");
    CHECK(rep.all_pass());
}
