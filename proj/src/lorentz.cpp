#include "qlorentz/lorentz.hpp"

namespace qlorentz {

namespace {
QScalar lam() { return lambda_(); }
QScalar c2() { return qint(hi(2)); }
QScalar c2inv_sqrt() { return sqrt_qint(hi(2)).inverse(); }
} // namespace

const BoostMatrix& boosts() {
    static BoostMatrix B = [] {
        BoostMatrix B;
        B.a = LorentzElem::tensor(AlgElem::monomial(0, 1, 0), AlgElem::monomial(0, -1, 0));
        B.b = qpow(-half) * lam() *
              LorentzElem::tensor(AlgElem::monomial(0, 1, 0), AlgElem::monomial(0, -1, 1));
        B.c = -qpow(half) * lam() *
              LorentzElem::tensor(AlgElem::monomial(1, 1, 0), AlgElem::monomial(0, -1, 0));
        B.d = LorentzElem::tensor(AlgElem::monomial(0, -1, 0), AlgElem::monomial(0, 1, 0)) -
              lam() * lam() *
                  LorentzElem::tensor(AlgElem::monomial(1, 1, 0), AlgElem::monomial(0, -1, 1));
        return B;
    }();
    return B;
}

LorentzElem rotations_embedded(Gen g) { return coproduct(AlgElem::gen(g)); }
LorentzElem rotations_embedded(const AlgElem& x) { return coproduct(x); }
LorentzElem embedded_J(int A) { return coproduct(AlgElem::J(A)); }
LorentzElem embedded_W() { return coproduct(AlgElem::W()); }

const RSGenerators& rs_generators() {
    static RSGenerators rs = [] {
        RSGenerators rs;
        for (int A = -1; A <= 1; ++A) rs.S[A + 1] = LorentzElem::left(AlgElem::J(A));
        rs.V = LorentzElem::left(AlgElem::W());
        rs.U = LorentzElem::right(AlgElem::W());
        AlgElem K = AlgElem::gen(Gen::K), Kinv = AlgElem::gen(Gen::Kinv);
        AlgElem E = AlgElem::gen(Gen::E), F = AlgElem::gen(Gen::F);
        AlgElem j3raw = qpow(hi(-1)) * (E * F) - qpow(hi(1)) * (F * E);  // [2] J_3
        // R_- = q [2]^(-1/2) K^-1 (x) KF + lambda [2]^(-1/2) F (x) (q^-1 EF - q FE)
        //       - q^2 lambda^2 [2]^(-1/2) K F^2 (x) E
        rs.R[0] = qpow(hi(1)) * c2inv_sqrt() * LorentzElem::tensor(Kinv, K * F) +
                  lam() * c2inv_sqrt() * LorentzElem::tensor(F, j3raw) -
                  qpow(hi(2)) * lam() * lam() * c2inv_sqrt() *
                      LorentzElem::tensor(K * F * F, E);
        // R_3 = 1 (x) [2]^-1 (q^-1 EF - q FE) - q lambda KF (x) E
        rs.R[1] = c2().inverse() * LorentzElem::right(j3raw) -
                  qpow(hi(1)) * lam() * LorentzElem::tensor(K * F, E);
        // R_+ = -[2]^(-1/2) K (x) E
        rs.R[2] = -c2inv_sqrt() * LorentzElem::tensor(K, E);
        return rs;
    }();
    return rs;
}

VerificationReport verify_su2op() {
    Suite s("lorentz.boostalg");
    const BoostMatrix& B = boosts();
    QScalar q1 = qpow(hi(1));
    s.check_equal("ba", "boost exchange b against a", B.b * B.a, q1 * (B.a * B.b));
    s.check_equal("ca", "boost exchange c against a", B.c * B.a, q1 * (B.a * B.c));
    s.check_equal("db", "boost exchange d against b", B.d * B.b, q1 * (B.b * B.d));
    s.check_equal("dc", "boost exchange d against c", B.d * B.c, q1 * (B.c * B.d));
    s.check_equal("bc", "off-diagonal boosts commute", B.b * B.c, B.c * B.b);
    s.check_equal("det-comm", "da - ad = lambda bc", B.d * B.a - B.a * B.d,
                  lam() * (B.b * B.c));
    s.check_equal("det", "quantum determinant da - qbc = 1", B.d * B.a - q1 * (B.b * B.c),
                  LorentzElem(1));
    s.check_zero("counit", "counit of d - a vanishes", counit(B.d - B.a));
    return s.take();
}

VerificationReport verify_rs_relations() {
    Suite s("lorentz.rs");
    const RSGenerators& rs = rs_generators();
    const Tensor3& t = tensors3();
    QScalar l2 = lam() * lam();

    auto vector_triple = [&](const LorentzElem* X, const LorentzElem& scal, const char* id,
                             const char* anchor) {
        bool ok = true;
        for (int C = 0; C < 3; ++C) {
            LorentzElem lhs;
            for (int A = 0; A < 3; ++A)
                for (int B = 0; B < 3; ++B) {
                    if (t.uud[A][B][C].is_zero()) continue;
                    lhs += t.uud[A][B][C] * (X[A] * X[B]);
                }
            ok = ok && lhs == scal * X[C];
        }
        s.check(id, anchor, ok);
    };
    vector_triple(rs.R, rs.U, "epsilon-R", "R epsilon-square closes on U R");
    vector_triple(rs.S, rs.V, "epsilon-S", "S epsilon-square closes on V S");

    bool comm = true;
    for (int A = 0; A < 3; ++A) {
        comm = comm && rs.R[A] * rs.U == rs.U * rs.R[A];
        comm = comm && rs.S[A] * rs.V == rs.V * rs.S[A];
    }
    s.check("centrality", "U central among R, V central among S", comm);

    auto casimir = [&](const LorentzElem* X, const LorentzElem& scal) {
        LorentzElem acc = scal * scal;
        for (int A = 0; A < 3; ++A)
            for (int B = 0; B < 3; ++B) {
                if (t.g_up[A][B].is_zero()) continue;
                acc -= l2 * t.g_up[A][B] * (X[A] * X[B]);
            }
        return acc;
    };
    s.check_equal("unit-R", "U^2 - lambda^2 R.R = 1", casimir(rs.R, rs.U), LorentzElem(1));
    s.check_equal("unit-S", "V^2 - lambda^2 S.S = 1", casimir(rs.S, rs.V), LorentzElem(1));

    // R_C S_D = q^2 S_C R_D - q^-1 lambda g_CD (g^AB S_A R_B)
    //           - eps_C{}^X{}_D eps^{AB}{}_X S_A R_B
    // (the epsilon term carries a minus sign, as expanding the exchange
    //  through the vector R-matrix shows)
    LorentzElem sdotr;
    for (int A = 0; A < 3; ++A)
        for (int B = 0; B < 3; ++B) {
            if (t.g_up[A][B].is_zero()) continue;
            sdotr += t.g_up[A][B] * (rs.S[A] * rs.R[B]);
        }
    bool mixed = true;
    for (int C = 0; C < 3; ++C)
        for (int D = 0; D < 3; ++D) {
            LorentzElem rhs = qpow(hi(2)) * (rs.S[C] * rs.R[D]);
            if (!t.g_dn[C][D].is_zero()) rhs -= qpow(hi(-1)) * lam() * t.g_dn[C][D] * sdotr;
            for (int X = 0; X < 3; ++X) {
                if (t.dud[C][X][D].is_zero()) continue;
                for (int A = 0; A < 3; ++A)
                    for (int B = 0; B < 3; ++B) {
                        QScalar c = t.dud[C][X][D] * t.uud[A][B][X];
                        if (c.is_zero()) continue;
                        rhs -= c * (rs.S[A] * rs.R[B]);
                    }
            }
            mixed = mixed && rs.R[C] * rs.S[D] == rhs;
        }
    s.check("mixed", "exchange of R against S through the braiding", mixed);

    // the same exchange in R-matrix form: R_A S_B = q^2 S_B' R_A' Rso3^{A'B'}_{AB}
    {
        QMatrix Rso3 = qpow(hi(-2)) * r_image(hi(1), hi(1));
        bool ok = true;
        for (int A = 0; A < 3; ++A)
            for (int B = 0; B < 3; ++B) {
                LorentzElem rhs;
                for (int Ap = 0; Ap < 3; ++Ap)
                    for (int Bp = 0; Bp < 3; ++Bp) {
                        const QScalar& c = Rso3.at(Ap * 3 + Bp, A * 3 + B);
                        if (c.is_zero()) continue;
                        rhs += (qpow(hi(2)) * c) * (rs.S[Bp] * rs.R[Ap]);
                    }
                ok = ok && rs.R[A] * rs.S[B] == rhs;
            }
        s.check("mixed-rmatrix", "exchange written through the vector R-matrix", ok);
    }

    bool scal_ok = rs.U * rs.V == rs.V * rs.U;
    for (int A = 0; A < 3; ++A) {
        LorentzElem Rup, Sup;
        for (int B = 0; B < 3; ++B) {
            if (!t.g_up[A][B].is_zero()) {
                Rup += t.g_up[A][B] * rs.R[B];
                Sup += t.g_up[A][B] * rs.S[B];
            }
        }
        scal_ok = scal_ok && Rup * rs.V == rs.V * Rup;
        scal_ok = scal_ok && Sup * rs.U == rs.U * Sup;
    }
    s.check("cross-central", "U and V commute with the opposite chirality", scal_ok);
    return s.take();
}

VerificationReport conversion_suite() {
    Suite s("lorentz.convert");
    const BoostMatrix& B = boosts();
    const RSGenerators& rs = rs_generators();
    const Tensor3& t = tensors3();
    LorentzElem iE = rotations_embedded(Gen::E), iF = rotations_embedded(Gen::F);
    LorentzElem iK = rotations_embedded(Gen::K), iKi = rotations_embedded(Gen::Kinv);
    LorentzElem iKh = rotations_embedded(Gen::Khalf), iKhi = rotations_embedded(Gen::Khalfinv);
    QScalar q1 = qpow(hi(1)), qm1 = qpow(hi(-1));
    QScalar s2 = sqrt_qint(hi(2));
    QScalar lami = lam().inverse();

    // embedding sanity
    {
        bool ok = iE * iF - iF * iE == lami * (iK - iKi);
        ok = ok && iK * iE == qpow(hi(2)) * (iE * iK);
        s.check("embedding", "coproduct embedding preserves the defining relations", ok);
    }

    // J_C = V R_C + U S_C + q lambda R_A S_B eps^{AB}_C
    {
        bool ok = true;
        for (int C = 0; C < 3; ++C) {
            LorentzElem rhs = rs.V * rs.R[C] + rs.U * rs.S[C];
            for (int A = 0; A < 3; ++A)
                for (int B = 0; B < 3; ++B) {
                    QScalar c = q1 * lam() * t.uud[A][B][C];
                    if (!c.is_zero()) rhs += c * (rs.R[A] * rs.S[B]);
                }
            ok = ok && embedded_J(C - 1) == rhs;
        }
        s.check("rot-J", "rotations recovered from the RS generators", ok);
    }
    // W = U V + q^2 lambda^2 g^{AB} R_A S_B
    {
        LorentzElem rhs = rs.U * rs.V;
        for (int A = 0; A < 3; ++A)
            for (int B = 0; B < 3; ++B) {
                QScalar c = qpow(hi(2)) * lam() * lam() * t.g_up[A][B];
                if (!c.is_zero()) rhs += c * (rs.R[A] * rs.S[B]);
            }
        s.check_equal("rot-W", "the scalar element from the RS generators", embedded_W(), rhs);
    }
    // boosts inside the RS-form (with K^(-1/2) adjoined)
    s.check_equal("boost-a", "a = K^(-1/2)(V + lambda S_3)", B.a,
                  iKhi * (rs.V + lam() * rs.S[1]));
    s.check_equal("boost-b", "b = -q^(-1/2) lambda [2]^(1/2) K^(-1/2) R_+", B.b,
                  (-qpow(-half) * lam() * s2) * (iKhi * rs.R[2]));
    s.check_equal("boost-c", "c = -q^(1/2) lambda [2]^(1/2) K^(-1/2) S_-", B.c,
                  (-qpow(half) * lam() * s2) * (iKhi * rs.S[0]));
    s.check_equal("boost-d", "d = K^(-1/2)(U + lambda R_3)", B.d,
                  iKhi * (rs.U + lam() * rs.R[1]));

    // RS generators inside the quantum double
    s.check_equal("S-minus", "S_- from the lower-left boost", rs.S[0],
                  (-qpow(-half) * lami * s2.inverse()) * (iKh * B.c));
    s.check_equal("S-3-comm", "S_3 from the commutator form", rs.S[1],
                  (qpow(hi2(-3)) * lami * c2().inverse()) *
                      (iKhi * (q1 * (B.c * iE) - iE * B.c)));
    s.check_equal("S-3-lin", "S_3 from the linear form", rs.S[1],
                  (lami * c2().inverse()) *
                      (iKhi * (qpow(-half) * lam() * (iE * B.c) + q1 * (iK * B.a) - q1 * B.d)));
    s.check_equal("S-plus", "S_+ from b and E a", rs.S[2],
                  (q1 * s2.inverse()) * (iKhi * (qpow(hi2(3)) * lami * B.b - iE * B.a)));
    s.check_equal("V-double", "V inside the double", rs.V,
                  c2().inverse() * (iKhi * (qm1 * (iK * B.a) - qpow(-half) * lam() * (iE * B.c) +
                                            q1 * B.d)));
    // here the K^(1/2) prefactor goes with the F d piece and K^(-1/2) with c
    s.check_equal("R-minus", "R_- from F d and c", rs.R[0],
                  s2.inverse() * (iKh * (iF * B.d)) +
                      (qpow(hi2(-5)) * lami * s2.inverse()) * (iKhi * B.c));
    s.check_equal("R-3-comm", "R_3 from the commutator form", rs.R[1],
                  (qpow(-half) * lami * c2().inverse()) *
                      (iKh * (B.b * iF - qpow(hi(3)) * (iF * B.b))));
    s.check_equal("R-3-lin", "R_3 from the linear form", rs.R[1],
                  (lami * c2().inverse()) *
                      (iKh * (-qpow(hi2(3)) * lam() * (iF * B.b) - qm1 * (iKi * B.a) +
                              qm1 * B.d)));
    s.check_equal("R-plus", "R_+ from the upper-right boost", rs.R[2],
                  (-qpow(half) * lami * s2.inverse()) * (iKh * B.b));
    s.check_equal("U-double", "U inside the double", rs.U,
                  c2().inverse() * (iKh * (qpow(hi2(3)) * lam() * (iF * B.b) +
                                           qm1 * (iKi * B.a) + q1 * B.d)));

    // inverse embedding identities that avoid a^-1
    s.check_equal("left-E", "left tensor leg of E from the double", LorentzElem::left(AlgElem::gen(Gen::E)),
                  q1 * (iKhi * (iE * B.a - qpow(hi2(3)) * lami * B.b)));
    s.check_equal("right-F", "right tensor leg of F from the double",
                  LorentzElem::right(AlgElem::gen(Gen::F)),
                  q1 * (iKh * (iF * B.a + qpow(-half) * lami * B.c)));
    s.check_equal("left-K", "left tensor leg of K from the double",
                  LorentzElem::left(AlgElem::gen(Gen::K)), iKh * B.a);

    // counit projection of each conversion is the trivial identity
    {
        bool ok = counit(rs.U).is_one() && counit(rs.V).is_one();
        for (int A = 0; A < 3; ++A)
            ok = ok && counit(rs.R[A]).is_zero() && counit(rs.S[A]).is_zero();
        s.check("counit", "counit image of the conversions", ok);
    }
    return s.take();
}

VerificationReport rotation_boost_commutation_suite() {
    Suite s("lorentz.cross");
    const BoostMatrix& B = boosts();
    LorentzElem iE = rotations_embedded(Gen::E), iF = rotations_embedded(Gen::F);
    LorentzElem iK = rotations_embedded(Gen::K), iKi = rotations_embedded(Gen::Kinv);
    QScalar q1 = qpow(hi(1)), qm1 = qpow(hi(-1));

    bool okE = B.a * iE == q1 * (iE * B.a) - qpow(hi2(3)) * B.b;
    okE = okE && B.b * iE == qm1 * (iE * B.b);
    okE = okE && B.c * iE == q1 * (iE * B.c) + qpow(hi2(3)) * (iK * B.a) - qpow(hi2(3)) * B.d;
    okE = okE && B.d * iE == qm1 * (iE * B.d) + qpow(-half) * (iK * B.b);
    s.check("E", "boost matrix against the raising generator", okE);

    bool okF = B.a * iF == q1 * (iF * B.a) + qpow(-half) * B.c;
    okF = okF && B.b * iF == q1 * (iF * B.b) - qpow(-half) * (iKi * B.a) + qpow(-half) * B.d;
    okF = okF && B.c * iF == qm1 * (iF * B.c);
    okF = okF && B.d * iF == qm1 * (iF * B.d) - qpow(hi2(-5)) * (iKi * B.c);
    s.check("F", "boost matrix against the lowering generator", okF);

    bool okK = B.a * iK == iK * B.a && B.b * iK == qpow(hi(-2)) * (iK * B.b) &&
               B.c * iK == qpow(hi(2)) * (iK * B.c) && B.d * iK == iK * B.d;
    s.check("K", "boost matrix against K", okK);

    bool okKi = B.a * iKi == iKi * B.a && B.b * iKi == qpow(hi(2)) * (iKi * B.b) &&
                B.c * iKi == qpow(hi(-2)) * (iKi * B.c) && B.d * iKi == iKi * B.d;
    s.check("Kinv", "boost matrix against K^-1", okKi);

    {
        bool ok = counit(B.a * iE - (q1 * (iE * B.a) - qpow(hi2(3)) * B.b)).is_zero();
        s.check("counit", "counit image of the cross relations", ok);
    }
    return s.take();
}

VerificationReport lorentz_representation_suite() {
    Suite s("lorentz.reps");
    const BoostMatrix& B = boosts();
    const RSGenerators& rs = rs_generators();

    // chiral boosts are the spinor L-matrices
    for (HalfInt j : {half, hi(1)}) {
        Spin sp{j};
        Spin s0{hi(0)};
        LMatrix Lm = l_matrix(-1, half), Lp = l_matrix(+1, half);
        const LorentzElem* bb[4] = {&B.a, &B.b, &B.c, &B.d};
        bool left_ok = true, right_ok = true;
        int pos[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (int i = 0; i < 4; ++i) {
            left_ok = left_ok && rep_lorentz(sp, s0, *bb[i]) ==
                                     rep_alg(sp, Lm.a[pos[i][0]][pos[i][1]]);
            right_ok = right_ok && rep_lorentz(s0, sp, *bb[i]) ==
                                       rep_alg(sp, Lp.a[pos[i][0]][pos[i][1]]);
        }
        s.check("chiral-left.j" + j.str(), "left chiral boosts are the minus L-matrix", left_ok);
        s.check("chiral-right.j" + j.str(), "right chiral boosts are the plus L-matrix",
                right_ok);
    }

    // inverse embedding pieces needing a^-1 hold in representations
    {
        std::vector<std::pair<Spin, Spin>> reps = {{Spin{half}, Spin{hi(0)}},
                                                   {Spin{hi(0)}, Spin{half}},
                                                   {Spin{half}, Spin{half}}};
        bool ok = true;
        for (auto& [s1, s2] : reps) {
            QMatrix ra = rep_lorentz(s1, s2, B.a);
            QMatrix rainv = ra.inverse_diagonal();
            QMatrix rb = rep_lorentz(s1, s2, B.b);
            QMatrix rc = rep_lorentz(s1, s2, B.c);
            QMatrix rkh = rep_lorentz(s1, s2, rotations_embedded(Gen::Khalf));
            QScalar lami = lambda_().inverse();
            ok = ok && rep_lorentz(s1, s2, LorentzElem::right(AlgElem::gen(Gen::E))) ==
                           (qpow(half) * lami) * (rainv * rb);
            ok = ok && rep_lorentz(s1, s2, LorentzElem::left(AlgElem::gen(Gen::F))) ==
                           (-qpow(-half) * lami) * (rc * rainv);
            ok = ok && rep_lorentz(s1, s2, LorentzElem::right(AlgElem::gen(Gen::K))) ==
                           rkh * rainv;
        }
        s.check("inverse-embedding", "pieces with a^-1 hold once represented", ok);
    }

    // star structure in the 4-vector representation: the twisted star acts as
    // conjugation with SWAP * R after the dagger
    {
        QMatrix R = r_image(half, half);
        QMatrix SW(4, 4);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) SW.at(b * 2 + a, a * 2 + b) = QScalar(1);
        QMatrix W = SW * R;
        QMatrix Winv = r_image_inv(half, half) * SW;
        auto twisted_star = [&](const LorentzElem& x) {
            Spin sp{half};
            return W * rep_lorentz(sp, sp, x).dagger() * Winv;
        };
        const Tensor3& t = tensors3();
        std::vector<NumericContext> ctxs = {NumericContext(1.1, 40, 1e-20),
                                            NumericContext(1.5, 40, 1e-20),
                                            NumericContext(2.0, 40, 1e-20)};
        for (int A = 0; A < 3; ++A) {
            QMatrix want(4, 4);
            for (int Bi = 0; Bi < 3; ++Bi) {
                if (t.g_up[A][Bi].is_zero()) continue;
                want += t.g_up[A][Bi] * rep_lorentz(Spin{half}, Spin{half}, rs.S[Bi]);
            }
            s.check_zero_fallback("star-R" + std::to_string(A - 1),
                                  "conjugate of R_A is the raised S", twisted_star(rs.R[A]) - want,
                                  ctxs, 1e-18);
        }
        s.check_zero_fallback("star-U", "conjugate of U is V",
                              twisted_star(rs.U) - rep_lorentz(Spin{half}, Spin{half}, rs.V),
                              ctxs, 1e-18);
        Spin sp{half};
        s.check_zero_fallback("star-boost-a", "boost unitarity for a",
                              twisted_star(B.a) - rep_lorentz(sp, sp, B.d), ctxs, 1e-18);
        s.check_zero_fallback(
            "star-boost-b", "boost unitarity for b",
            twisted_star(B.b) + qpow(hi(-1)) * rep_lorentz(sp, sp, B.c), ctxs, 1e-18);
        s.check_zero_fallback(
            "star-boost-c", "boost unitarity for c",
            twisted_star(B.c) + qpow(hi(1)) * rep_lorentz(sp, sp, B.b), ctxs, 1e-18);
        s.check_zero_fallback("star-boost-d", "boost unitarity for d",
                              twisted_star(B.d) - rep_lorentz(sp, sp, B.a), ctxs, 1e-18);
    }
    return s.take();
}

} // namespace qlorentz
