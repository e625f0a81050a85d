#include "qlorentz/rmat.hpp"

#include "qlorentz/lorentz.hpp"

namespace qlorentz {

QMatrix r_image(HalfInt j1, HalfInt j2) {
    Spin s1{j1}, s2{j2};
    int d1 = s1.dim(), d2 = s2.dim();
    // diagonal factor q^(H (x) H / 2) acts as q^(2 m1 m2)
    QMatrix diag(d1 * d2, d1 * d2);
    for (int i1 = 0; i1 < d1; ++i1)
        for (int i2 = 0; i2 < d2; ++i2)
            diag.at(i1 * d2 + i2, i1 * d2 + i2) = qpow(mul2(s1.weight(i1), s2.weight(i2)));
    QMatrix e = rep_gen(s1, Gen::E), f = rep_gen(s2, Gen::F);
    QMatrix sum = QMatrix::identity(d1 * d2);
    QMatrix epow = QMatrix::identity(d1), fpow = QMatrix::identity(d2);
    int nmax = std::min(j1.twice(), j2.twice());
    for (int n = 1; n <= nmax; ++n) {
        epow = epow * e;
        fpow = fpow * f;
        QScalar rn = qpow(hi(n * (n - 1) / 2)) * lambda_().pow(n) * qfac(n).inverse();
        sum += rn * kron(epow, fpow);
    }
    return diag * sum;
}

std::vector<int> r_image_grading(HalfInt j1, HalfInt j2) {
    int d1 = j1.twice() + 1, d2 = j2.twice() + 1;
    std::vector<int> g(d1 * d2);
    for (int i1 = 0; i1 < d1; ++i1)
        for (int i2 = 0; i2 < d2; ++i2) g[i1 * d2 + i2] = i1;
    return g;
}

QMatrix r_image_inv(HalfInt j1, HalfInt j2) {
    return r_image(j1, j2).inverse_graded(r_image_grading(j1, j2));
}

VerificationReport yang_baxter_check(HalfInt j1, HalfInt j2, HalfInt j3) {
    Suite s("rmat.yangbaxter.j" + j1.str() + "." + j2.str() + "." + j3.str());
    std::vector<int> dims = {j1.twice() + 1, j2.twice() + 1, j3.twice() + 1};
    QMatrix r12 = embed_two_leg(r_image(j1, j2), 0, 1, dims);
    QMatrix r13 = embed_two_leg(r_image(j1, j3), 0, 2, dims);
    QMatrix r23 = embed_two_leg(r_image(j2, j3), 1, 2, dims);
    s.check_equal("braid", "quantum Yang-Baxter equation on the triple product",
                  r12 * (r13 * r23), r23 * (r13 * r12));
    return s.take();
}

LMatrix l_matrix(int sign, HalfInt j) {
    QScalar lam = lambda_();
    QScalar s2 = sqrt_qint(hi(2));
    if (j == half) {
        LMatrix L{sign, j, {}};
        L.a.assign(2, std::vector<AlgElem>(2));
        if (sign > 0) {
            L.a[0][0] = AlgElem::monomial(0, -1, 0);
            L.a[0][1] = AlgElem::monomial(0, -1, 1, qpow(-half) * lam);
            L.a[1][1] = AlgElem::monomial(0, 1, 0);
        } else {
            L.a[0][0] = AlgElem::monomial(0, 1, 0);
            L.a[1][0] = AlgElem::monomial(1, 1, 0, -qpow(half) * lam);
            L.a[1][1] = AlgElem::monomial(0, -1, 0);
        }
        return L;
    }
    if (j == hi(1)) {
        LMatrix L{sign, j, {}};
        L.a.assign(3, std::vector<AlgElem>(3));
        if (sign > 0) {
            L.a[0][0] = AlgElem::monomial(0, -2, 0);
            L.a[0][1] = AlgElem::monomial(0, -2, 1, lam * s2);
            L.a[0][2] = AlgElem::monomial(0, -2, 2, lam * lam);
            L.a[1][1] = AlgElem(1);
            L.a[1][2] = AlgElem::monomial(0, 0, 1, qpow(hi(-1)) * lam * s2);
            L.a[2][2] = AlgElem::monomial(0, 2, 0);
        } else {
            L.a[0][0] = AlgElem::monomial(0, 2, 0);
            L.a[1][0] = AlgElem::monomial(1, 2, 0, -lam * s2);
            L.a[1][1] = AlgElem(1);
            L.a[2][0] = AlgElem::monomial(2, 2, 0, lam * lam);
            L.a[2][1] = AlgElem::monomial(1, 0, 0, -qpow(hi(1)) * lam * s2);
            L.a[2][2] = AlgElem::monomial(0, -2, 0);
        }
        return L;
    }
    throw std::domain_error("l_matrix supports j = 1/2 and j = 1");
}

namespace {

bool frt_holds(const LMatrix& L1, const LMatrix& L2, const QMatrix& R) {
    // L1^a_{c'} L2^b_{d'} R^{c'd'}_{cd} = R^{ab}_{a'b'} L2^{b'}_d L1^{a'}_c
    int d = L1.dim();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int dd = 0; dd < d; ++dd) {
                    AlgElem lhs, rhs;
                    for (int cp = 0; cp < d; ++cp)
                        for (int dp = 0; dp < d; ++dp) {
                            const QScalar& rc = R.at(cp * d + dp, c * d + dd);
                            if (rc.is_zero()) continue;
                            lhs += rc * (L1.a[a][cp] * L2.a[b][dp]);
                        }
                    for (int ap = 0; ap < d; ++ap)
                        for (int bp = 0; bp < d; ++bp) {
                            const QScalar& rc = R.at(a * d + b, ap * d + bp);
                            if (rc.is_zero()) continue;
                            rhs += rc * (L2.a[bp][dd] * L1.a[ap][c]);
                        }
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

} // namespace

VerificationReport l_matrix_suite() {
    Suite s("rmat.lmatrix");
    for (HalfInt j : {half, hi(1)}) {
        QMatrix R = r_image(j, j);
        LMatrix Lp = l_matrix(+1, j), Lm = l_matrix(-1, j);
        std::string tag = ".j" + j.str();
        s.check("frt-pp" + tag, "exchange relation between two plus L-matrices",
                frt_holds(Lp, Lp, R));
        s.check("frt-mm" + tag, "exchange relation between two minus L-matrices",
                frt_holds(Lm, Lm, R));
        s.check("frt-mp" + tag, "mixed exchange relation between minus and plus",
                frt_holds(Lm, Lp, R));
        // coproduct and counit are matrix comultiplication and identity
        for (const LMatrix& L : {Lp, Lm}) {
            bool cop_ok = true, eps_ok = true;
            for (int a = 0; a < L.dim(); ++a)
                for (int c = 0; c < L.dim(); ++c) {
                    LorentzElem want;
                    for (int b = 0; b < L.dim(); ++b)
                        want += LorentzElem::tensor(L.a[a][b], L.a[b][c]);
                    cop_ok = cop_ok && coproduct(L.a[a][c]) == want;
                    eps_ok = eps_ok && counit(L.a[a][c]) == (a == c ? QScalar(1) : QScalar());
                }
            std::string sg = L.sign > 0 ? "plus" : "minus";
            s.check("coproduct-" + sg + tag, "entries comultiply matrix-fashion", cop_ok);
            s.check("counit-" + sg + tag, "counit row gives the identity matrix", eps_ok);
        }
    }
    // mixed relation under conjugation by the spinor R-matrix image:
    // R^-1 (L+)^b_c (x) (L-)^a_b R = (L+)^a_b (x) (L-)^b_c at j = 1/2
    {
        Spin sp{half};
        QMatrix R = r_image(half, half), Rinv = r_image_inv(half, half);
        LMatrix Lp = l_matrix(+1, half), Lm = l_matrix(-1, half);
        bool ok = true;
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c) {
                QMatrix lhs(4, 4), rhs(4, 4);
                for (int b = 0; b < 2; ++b) {
                    lhs += kron(rep_alg(sp, Lp.a[b][c]), rep_alg(sp, Lm.a[a][b]));
                    rhs += kron(rep_alg(sp, Lp.a[a][b]), rep_alg(sp, Lm.a[b][c]));
                }
                ok = ok && Rinv * lhs * R == rhs;
            }
        s.check("mixed-conjugation", "plus and minus legs swap under the R-image", ok);
    }
    return s.take();
}

QMatrix lorentz_r_image(WhichR which, LorentzRep r1, LorentzRep r2) {
    std::vector<int> dims = {r1.j1.twice() + 1, r1.j2.twice() + 1, r2.j1.twice() + 1,
                             r2.j2.twice() + 1};
    QMatrix r41 = embed_two_leg(r_image_inv(r2.j2, r1.j1), 3, 0, dims);
    QMatrix r24 = embed_two_leg(r_image(r1.j2, r2.j2), 1, 3, dims);
    QMatrix r23 = embed_two_leg(r_image(r1.j2, r2.j1), 1, 2, dims);
    QMatrix mid = which == WhichR::I
                      ? embed_two_leg(r_image_inv(r2.j1, r1.j1), 2, 0, dims)
                      : embed_two_leg(r_image(r1.j1, r2.j1), 0, 2, dims);
    return r41 * (mid * (r24 * r23));
}

const VectorBasis& vector_basis() {
    static VectorBasis vb = [] {
        VectorBasis vb{QMatrix(4, 4), QMatrix(4, 4)};
        QScalar c2i = qint(hi(2)).inverse(), c2s = sqrt_qint(hi(2)).inverse();
        // spin-basis slots 0..3 = --, -+, +-, ++ (A, B, C, D); columns 0..3 = E_0, E_-, E_+, E_3
        vb.T.at(1, 0) = -qpow(hi2(-3)) * c2i;     // -q^(-3/2)/[2]
        vb.T.at(2, 0) = qpow(-half) * c2i;
        vb.T.at(0, 1) = c2s;
        vb.T.at(3, 2) = c2s;
        vb.T.at(1, 3) = qpow(half) * c2i;
        vb.T.at(2, 3) = qpow(-half) * c2i;
        // back transform: A = [2]^(1/2) E_-, B = q^(1/2)(E_3 - E_0),
        // C = q^(-1/2) E_3 + q^(3/2) E_0, D = [2]^(1/2) E_+
        vb.Tinv.at(1, 0) = sqrt_qint(hi(2));
        vb.Tinv.at(0, 1) = -qpow(half);
        vb.Tinv.at(3, 1) = qpow(half);
        vb.Tinv.at(0, 2) = qpow(hi2(3));
        vb.Tinv.at(3, 2) = qpow(-half);
        vb.Tinv.at(2, 3) = sqrt_qint(hi(2));
        if (!(vb.Tinv * vb.T == QMatrix::identity(4)))
            throw std::logic_error("vector basis transform is not invertible");
        return vb;
    }();
    return vb;
}

QMatrix lambda_rep_elem(const LorentzElem& x) {
    const VectorBasis& vb = vector_basis();
    return vb.Tinv * rep_lorentz(Spin{half}, Spin{half}, x) * vb.T;
}

std::vector<std::vector<LorentzElem>> l_lambda_plus() {
    const BoostMatrix& B = boosts();
    QScalar f = qpow(half) * sqrt_qint(hi(2));  // q^(1/2) [2]^(1/2)
    std::vector<std::vector<LorentzElem>> L(4, std::vector<LorentzElem>(4));
    L[0][0] = LorentzElem(1);
    // order {0,-,+,3}
    L[1][1] = B.a * B.a;
    L[1][2] = B.b * B.b;
    L[1][3] = f * (B.a * B.b);
    L[2][1] = B.c * B.c;
    L[2][2] = B.d * B.d;
    L[2][3] = f * (B.c * B.d);
    L[3][1] = f * (B.a * B.c);
    L[3][2] = f * (B.b * B.d);
    L[3][3] = LorentzElem(1) + qint(hi(2)) * (B.b * B.c);
    return L;
}

} // namespace qlorentz
