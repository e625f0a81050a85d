#include "qlorentz/clebsch.hpp"

#include <map>
#include <mutex>

#include "qlorentz/rmat.hpp"

namespace qlorentz {

namespace {

// Coupled basis of D^{j1} (x) D^{j2}: for each j, the components of |j,m> on
// the product basis, keyed by twice(m1).
struct CGTable {
    // [j twice] -> per m (ascending index) -> map twice(m1) -> coefficient
    std::map<int, std::vector<std::map<int, QScalar>>> by_j;
};

bool weight_ok(HalfInt j, HalfInt m) {
    return (j.twice() + m.twice()) % 2 == 0 && m.twice() >= -j.twice() && m.twice() <= j.twice();
}

CGTable build_cg_table(HalfInt j1, HalfInt j2) {
    CGTable table;
    for (int jt = (j1 - j2).twice() >= 0 ? (j1 - j2).twice() : (j2 - j1).twice();
         jt <= (j1 + j2).twice(); jt += 2) {
        HalfInt j = hi2(jt);
        // highest-weight components over m1 in [lo, hi], m2 = j - m1
        HalfInt lo = hi2(std::max((-j1).twice(), (j - j2).twice()));
        HalfInt hi_ = hi2(std::min(j1.twice(), (j + j2).twice()));
        std::map<int, QScalar> hw;
        hw[lo.twice()] = QScalar(1);
        for (HalfInt t1 = lo + hi(1); t1 <= hi_; t1 += hi(1)) {
            // kernel constraint at raised target (t1, j+1-t1):
            //   a * c_{t1-1} + b * c_{t1} = 0
            HalfInt t2 = j + hi(1) - t1;
            QScalar a = qpow(t1) * sqrt(qint(j1 + t1) * qint(j1 - t1 + hi(1))) * qpow(2 * t2);
            QScalar b = qpow(t2) * sqrt(qint(j2 + t2) * qint(j2 - t2 + hi(1)));
            hw[t1.twice()] = -(a * b.inverse()) * hw[(t1 - hi(1)).twice()];
        }
        // normalize and fix the phase of the m1 = j1 component positive
        QScalar norm2;
        for (auto& [m1t, c] : hw) norm2 += c * c;
        QScalar scale = sqrt(norm2).inverse();
        if (hw.rbegin()->second.evald(1.5).real() * scale.evald(1.5).real() < 0) scale = -scale;
        for (auto& [m1t, c] : hw) c *= scale;

        // rows indexed by mi = m + j, so mi runs 0 .. 2j
        std::vector<std::map<int, QScalar>> rows(j.twice() + 1);
        rows[j.twice()] = std::move(hw);
        // lower successively: |j,m-1> = Delta(F)|j,m> / (q^-m sqrt([j+m][j-m+1]))
        for (int mi = j.twice(); mi > 0; --mi) {
            HalfInt mval = hi2(2 * mi - j.twice());
            const auto& src = rows[mi];
            std::map<int, QScalar> dst;
            QScalar denom = (qpow(-mval) * sqrt(qint(j + mval) * qint(j - mval + hi(1)))).inverse();
            for (auto& [m1t, c] : src) {
                HalfInt m1 = hi2(m1t), m2 = mval - m1;
                // F (x) 1
                if ((m1 - hi(1)).twice() >= -j1.twice()) {
                    QScalar f1 = qpow(-m1) * sqrt(qint(j1 + m1) * qint(j1 - m1 + hi(1)));
                    auto& slot = dst[(m1 - hi(1)).twice()];
                    slot += denom * f1 * c;
                    if (slot.is_zero()) dst.erase((m1 - hi(1)).twice());
                }
                // K^-1 (x) F
                if ((m2 - hi(1)).twice() >= -j2.twice()) {
                    QScalar f2 = qpow(-2 * m1) * qpow(-m2) * sqrt(qint(j2 + m2) * qint(j2 - m2 + hi(1)));
                    auto& slot = dst[m1t];
                    slot += denom * f2 * c;
                    if (slot.is_zero()) dst.erase(m1t);
                }
            }
            rows[mi - 1] = std::move(dst);
        }
        table.by_j[jt] = std::move(rows);
    }
    return table;
}

const CGTable& cg_table(HalfInt j1, HalfInt j2) {
    static std::map<std::pair<int, int>, CGTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(j1.twice(), j2.twice());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_cg_table(j1, j2)).first;
    return it->second;
}

} // namespace

QScalar cgc(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
    if (j1.twice() < 0 || j2.twice() < 0 || j.twice() < 0) return QScalar();
    if ((m1 + m2) != m) return QScalar();
    if (!weight_ok(j1, m1) || !weight_ok(j2, m2) || !weight_ok(j, m)) return QScalar();
    if (j.twice() < std::abs(j1.twice() - j2.twice()) || j.twice() > (j1 + j2).twice())
        return QScalar();
    if ((j1 + j2 + j).twice() % 2 != 0) return QScalar();
    const CGTable& t = cg_table(j1, j2);
    auto jt = t.by_j.find(j.twice());
    if (jt == t.by_j.end()) return QScalar();
    int mi = (m + j).twice() / 2;
    const auto& row = jt->second.at(mi);
    auto it = row.find(m1.twice());
    return it == row.end() ? QScalar() : it->second;
}

QScalar racah(HalfInt a, HalfInt b, HalfInt j, HalfInt c, HalfInt jp, HalfInt jpp) {
    // find an admissible (gamma, m) with <c j; gamma m | j'' m''> nonzero
    for (int gt = -c.twice(); gt <= c.twice(); gt += 2) {
        for (int mt = -j.twice(); mt <= j.twice(); mt += 2) {
            HalfInt gamma = hi2(gt), m = hi2(mt), mpp = gamma + m;
            QScalar denom = cgc(c, j, jpp, gamma, m, mpp);
            if (denom.is_zero()) continue;
            QScalar sum;
            for (int at = -a.twice(); at <= a.twice(); at += 2) {
                HalfInt alpha = hi2(at), beta = gamma - alpha, mp = mpp - alpha;
                QScalar c1 = cgc(a, b, c, alpha, beta, gamma);
                if (c1.is_zero()) continue;
                QScalar c2 = cgc(a, jp, jpp, alpha, mp, mpp);
                if (c2.is_zero()) continue;
                QScalar c3 = cgc(b, j, jp, beta, m, mp);
                if (c3.is_zero()) continue;
                sum += c1 * c2 * c3;
            }
            return denom.inverse() * sum;
        }
    }
    return QScalar();  // undefined reduced element, set to zero by convention
}

VerificationReport cgc_symmetry_check(HalfInt n, HalfInt j, HalfInt jp) {
    Suite s("clebsch.symmetry.n" + n.str() + ".j" + j.str() + ".jp" + jp.str());
    bool ok = true;
    QScalar ratio = sqrt((qint(2 * jp + hi(1)) * qint(2 * j + hi(1)).inverse()));
    for (int nut = -n.twice(); nut <= n.twice(); nut += 2) {
        HalfInt nu = hi2(nut);
        if (!nu.is_integer()) continue;
        for (int mt = -j.twice(); mt <= j.twice(); mt += 2) {
            HalfInt m = hi2(mt), mp = nu + m;
            QScalar lhs = cgc(n, j, jp, nu, m, mp);
            QScalar sign = (parity_sign(jp - j) == 1 ? QScalar(1) : QScalar(-1));
            QScalar qfact = qpow(nu);
            if (nu.is_integer() && nu.as_int() % 2 != 0) qfact = -qfact;  // (-q)^nu
            QScalar rhs = sign * qfact * ratio * cgc(n, jp, j, -nu, mp, m);
            ok = ok && lhs == rhs;
        }
    }
    s.check("relation", "q-CG symmetry exchanging target and source spins", ok);
    return s.take();
}

VerificationReport racah_table_check(int jmax_twice) {
    Suite s("clebsch.racah");
    QScalar m_sqrt3 = -sqrt_qint(hi(3));
    QScalar m_sqrt42 = -sqrt(qint(hi(4)) * qint(hi(2)).inverse());
    bool scalar_ok = true, vector_ok = true;
    for (int jt = 2; jt <= jmax_twice; jt += 1) {
        HalfInt j = hi2(jt);
        // -sqrt[3] R_q(1,1,j;0,j',j) = (-1)^(j'-j) sqrt([2j'+1]/[2j+1]);
        // the sign exponent j'-j (not j'+j) is what the coupling tables give
        // once half-integer j is allowed, matching the conjugation law
        for (int d = -2; d <= 2; d += 2) {
            HalfInt jp = hi2(jt + d);
            if (jp.twice() < 0) continue;
            QScalar lhs = m_sqrt3 * racah(hi(1), hi(1), j, hi(0), jp, j);
            QScalar rhs = sqrt(qint(2 * jp + hi(1)) * qint(2 * j + hi(1)).inverse());
            if (parity_sign(jp - j) < 0) rhs = -rhs;
            scalar_ok = scalar_ok && lhs == rhs;
        }
        // table of -sqrt([4]/[2]) R_q(1,1,j;1,j',j'')
        auto tab = [&](int dp, int dpp) -> QScalar {
            HalfInt jp = j + hi2(2 * dp), jpp = j + hi2(2 * dpp);
            if (jp.twice() < 0 || jpp.twice() < 0) return QScalar();
            return m_sqrt42 * racah(hi(1), hi(1), j, hi(1), jp, jpp);
        };
        QScalar r2j = qint(2 * j), r2jp2 = qint(2 * j + hi(2));
        if ((2 * j - hi(2)).twice() > 0) {
            vector_ok = vector_ok && tab(-1, -1) == sqrt(qint(2 * j - hi(2)) * r2j.inverse());
            vector_ok = vector_ok &&
                        tab(-1, 0) == sqrt(r2jp2 * qint(2 * j - hi(1)) *
                                           (qint(2 * j + hi(1)) * r2j).inverse());
        }
        vector_ok = vector_ok && tab(-1, 1).is_zero();
        vector_ok = vector_ok && tab(0, -1) == -sqrt(r2jp2 * r2j.inverse());
        vector_ok = vector_ok && tab(0, 0) == (r2j - r2jp2) * sqrt(r2jp2 * r2j).inverse();
        vector_ok = vector_ok && tab(0, 1) == sqrt(r2j * r2jp2.inverse());
        vector_ok = vector_ok && tab(1, -1).is_zero();
        vector_ok = vector_ok &&
                    tab(1, 0) == -sqrt(qint(2 * j + hi(3)) * r2j *
                                       (r2jp2 * qint(2 * j + hi(1))).inverse());
        vector_ok = vector_ok && tab(1, 1) == -sqrt(qint(2 * j + hi(4)) * r2jp2.inverse());
    }
    s.check("scalar-family", "Racah coefficients coupling through the scalar channel", scalar_ok);
    s.check("vector-family", "Racah coefficients coupling through the vector channel", vector_ok);
    return s.take();
}

const Tensor3& tensors3() {
    static Tensor3 t = [] {
        Tensor3 t;
        QScalar m_sqrt3 = -sqrt_qint(hi(3));
        QScalar m_sqrt42 = -sqrt(qint(hi(4)) * qint(hi(2)).inverse());
        for (int A = -1; A <= 1; ++A)
            for (int B = -1; B <= 1; ++B) {
                t.g_up[vidx(A)][vidx(B)] = m_sqrt3 * cgc(hi(1), hi(1), hi(0), hi(A), hi(B), hi(0));
                for (int C = -1; C <= 1; ++C)
                    t.uud[vidx(A)][vidx(B)][vidx(C)] =
                        m_sqrt42 * cgc(hi(1), hi(1), hi(1), hi(A), hi(B), hi(C));
            }
        // g_dn is the inverse of g_up (numerically equal to it)
        QMatrix gm(3, 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) gm.at(a, b) = t.g_up[a][b];
        QMatrix gi = gm * gm;  // g_up squared is the identity; check and reuse
        if (!(gi == QMatrix::identity(3))) throw std::logic_error("3-metric is not involutive");
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) t.g_dn[a][b] = t.g_up[a][b];
        // index placements; the metric is not symmetric, so the slot of the
        // summed index is part of the convention
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    QScalar uuu, dud, udd;
                    for (int x = 0; x < 3; ++x) {
                        uuu += t.uud[c][a][x] * t.g_up[x][b];   // eps^{AB}_{X} g^{XC} = eps^{BCA}
                        dud += t.g_dn[a][x] * t.uud[x][b][c];   // eps_A{}^B{}_C = g_{AX} eps^{XB}_C
                        udd += t.g_dn[b][x] * t.uud[a][x][c];   // eps^A{}_{BC} = g_{BX} eps^{AX}_C
                    }
                    t.uuu[a][b][c] = uuu;
                    t.dud[a][b][c] = dud;
                    t.udd[a][b][c] = udd;
                }
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    QScalar ddd;
                    for (int x = 0; x < 3; ++x) ddd += t.g_dn[a][x] * t.udd[x][b][c];
                    t.ddd[a][b][c] = ddd;
                }
        return t;
    }();
    return t;
}

SpinorMetric spinor_metric() {
    SpinorMetric m{QMatrix(2, 2), QMatrix(2, 2)};
    m.lower.at(0, 1) = qpow(-half);
    m.lower.at(1, 0) = -qpow(half);
    m.upper = -m.lower;
    return m;
}

QMatrix minkowski_metric_up() {
    QMatrix eta(4, 4);
    eta.at(0, 0) = QScalar(1);
    const Tensor3& t = tensors3();
    for (int A = 0; A < 3; ++A)
        for (int B = 0; B < 3; ++B) eta.at(spat4(A), spat4(B)) = -t.g_up[A][B];
    return eta;
}

QMatrix minkowski_metric_dn() {
    // numerically the same entries; eta_dn * eta_up = 1
    return minkowski_metric_up();
}

Proj3 projectors3() {
    const Tensor3& t = tensors3();
    QScalar c0 = qint(hi(3)).inverse();
    QScalar c1 = qint(hi(2)) * qint(hi(4)).inverse();
    Proj3 p{QMatrix(9, 9), QMatrix(9, 9), QMatrix(9, 9)};
    auto idx = [](int a, int b) { return a * 3 + b; };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    p.P0.at(idx(a, b), idx(c, d)) = c0 * t.g_up[a][b] * t.g_dn[c][d];
                    QScalar e1;
                    for (int x = 0; x < 3; ++x) e1 += t.uuu[a][b][x] * t.ddd[d][c][x];
                    p.P1.at(idx(a, b), idx(c, d)) = c1 * e1;
                }
    p.P3 = QMatrix::identity(9) - p.P0 - p.P1;
    return p;
}

const LorentzProj& lorentz_projectors() {
    static LorentzProj lp = [] {
        LorentzProj lp;
        const Tensor3& t = tensors3();
        QMatrix eta = minkowski_metric_up();
        QScalar c = qint(hi(2)).inverse() * qint(hi(2)).inverse();
        auto idx = [](int mu, int nu) { return mu * 4 + nu; };
        lp.P00 = QMatrix(16, 16);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int cc = 0; cc < 4; ++cc)
                    for (int d = 0; d < 4; ++d)
                        lp.P00.at(idx(a, b), idx(cc, d)) = c * eta.at(a, b) * eta.at(cc, d);
        // chiral projectors from the displayed block tables; spatial indices
        // A,B,C,D map to 4-vector slots 1..3
        auto fill_chiral = [&](bool left) {
            QMatrix P(16, 16);
            // the right chiral table carries q -> q^-1 and flipped epsilon signs
            QScalar qq = left ? qpow(hi(1)) : -qpow(hi(-1));
            QScalar qq2 = qpow(hi(left ? 2 : -2));
            for (int A = 0; A < 3; ++A)
                for (int C = 0; C < 3; ++C) {
                    if (A == C) {
                        P.at(idx(spat4(A), 0), idx(spat4(C), 0)) = c;   // delta^A_C
                        P.at(idx(0, spat4(A)), idx(0, spat4(C))) = c;   // delta^B_D
                        P.at(idx(spat4(A), 0), idx(0, spat4(C))) = -c * qq2.inverse();
                        P.at(idx(0, spat4(A)), idx(spat4(C), 0)) = -c * qq2;
                    }
                }
            for (int A = 0; A < 3; ++A)
                for (int C = 0; C < 3; ++C)
                    for (int D = 0; D < 3; ++D) {
                        P.at(idx(spat4(A), 0), idx(spat4(C), spat4(D))) =
                            -c * qq.inverse() * t.dud[C][A][D];
                        P.at(idx(0, spat4(A)), idx(spat4(C), spat4(D))) = c * qq * t.dud[C][A][D];
                        P.at(idx(spat4(A), spat4(C)), idx(spat4(D), 0)) =
                            -c * qq * t.uud[A][C][D];
                        P.at(idx(spat4(A), spat4(C)), idx(0, spat4(D))) =
                            c * qq.inverse() * t.uud[A][C][D];
                    }
            for (int A = 0; A < 3; ++A)
                for (int B = 0; B < 3; ++B)
                    for (int C = 0; C < 3; ++C)
                        for (int D = 0; D < 3; ++D) {
                            QScalar e;
                            for (int x = 0; x < 3; ++x) e += t.uud[A][B][x] * t.dud[C][x][D];
                            P.at(idx(spat4(A), spat4(B)), idx(spat4(C), spat4(D))) = c * e;
                        }
            return P;
        };
        lp.P10 = fill_chiral(true);
        lp.P01 = fill_chiral(false);
        lp.P11 = QMatrix::identity(16) - lp.P00 - lp.P10 - lp.P01;
        lp.PS = lp.P00 + lp.P11;
        lp.PA = lp.P10 + lp.P01;
        return lp;
    }();
    return lp;
}

VerificationReport eps_identities_suite() {
    Suite s("clebsch.eps");
    const Tensor3& t = tensors3();
    auto& g = t.g_dn;
    auto& G = t.g_up;
    bool ok;

    ok = true;  // eps^{AB'}{}^{C} g_{B'B} = eps^{CA}{}_B
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                QScalar l;
                for (int x = 0; x < 3; ++x) l += t.uuu[a][x][c] * g[x][b];
                ok = ok && l == t.uud[c][a][b];
            }
    s.check("raise-lower-1", "metric contraction on the middle index", ok);

    ok = true;  // eps^{AB}{}_{C'} g^{C'C} = eps^{BCA}
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                QScalar l;
                for (int x = 0; x < 3; ++x) l += t.uud[a][b][x] * G[x][c];
                ok = ok && l == t.uuu[b][c][a];
            }
    s.check("raise-third", "raising the third index permutes the slots", ok);

    ok = true;  // eps^{A'B'C} g_{A'A} g_{B'B} = eps_B{}^C{}_A
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                QScalar l;
                for (int x = 0; x < 3; ++x)
                    for (int y = 0; y < 3; ++y) l += t.uuu[x][y][c] * g[x][a] * g[y][b];
                ok = ok && l == t.dud[b][c][a];
            }
    s.check("raise-lower-2", "double metric contraction", ok);

    ok = true;  // eps_{A'BC'} g^{A'A} g^{C'C} = eps^{CA}{}_B
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                QScalar l;
                for (int x = 0; x < 3; ++x)
                    for (int y = 0; y < 3; ++y) l += t.ddd[x][b][y] * G[x][a] * G[y][c];
                ok = ok && l == t.uud[c][a][b];
            }
    s.check("raise-lower-3", "double metric contraction, lowered tensor", ok);

    ok = true;  // all four metric traces of eps vanish
    for (int c = 0; c < 3; ++c) {
        QScalar l1, l3, l4;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                l1 += g[a][b] * t.uuu[a][b][c];
                l3 += t.ddd[a][b][c] * G[b][a];
                l4 += t.ddd[a][c][b] * G[a][b];
            }
        ok = ok && l1.is_zero() && l3.is_zero() && l4.is_zero();
    }
    for (int b = 0; b < 3; ++b) {
        QScalar l2;
        for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c) l2 += g[c][a] * t.uuu[a][b][c];
        ok = ok && l2.is_zero();
    }
    s.check("traceless", "epsilon is traceless against the metric", ok);

    ok = true;  // eps^{AXB} eps_{CXD} = eps^{BA}{}_X eps_C{}^X{}_D = eps^{BAX} eps_{DCX}
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    QScalar t1, t2, t3;
                    for (int x = 0; x < 3; ++x) {
                        t1 += t.uuu[a][x][b] * t.ddd[c][x][d];
                        t2 += t.uud[b][a][x] * t.dud[c][x][d];
                        t3 += t.uuu[b][a][x] * t.ddd[d][c][x];
                    }
                    ok = ok && t1 == t2 && t2 == t3;
                }
    s.check("double-contraction", "three equivalent double contractions", ok);

    QScalar c42 = qint(hi(4)) * qint(hi(2)).inverse();
    ok = true;  // eps_A{}^B{}_C eps^{AC}{}_D = [4]/[2] delta^B_D
    for (int b = 0; b < 3; ++b)
        for (int d = 0; d < 3; ++d) {
            QScalar l;
            for (int a = 0; a < 3; ++a)
                for (int c = 0; c < 3; ++c) l += t.dud[a][b][c] * t.uud[a][c][d];
            ok = ok && l == (b == d ? c42 : QScalar());
        }
    s.check("contraction-norm-1", "epsilon squared traces to [4]/[2]", ok);

    ok = true;  // eps_{ABC} eps^{BAD} = eps_{BCA} eps^{ADB} = [4]/[2] delta^D_C
    for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
            QScalar l1, l2;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    l1 += t.ddd[a][b][c] * t.uuu[b][a][d];
                    l2 += t.ddd[b][c][a] * t.uuu[a][d][b];
                }
            QScalar want = (c == d ? c42 : QScalar());
            ok = ok && l1 == want && l2 == want;
        }
    s.check("contraction-norm-2", "lowered contraction normalization", ok);

    ok = true;  // eps^{AB}{}_X eps^{XC}{}_D + g^{AB} delta^C_D
                //   = eps^{AX}{}_D eps^{BC}{}_X + delta^A_D g^{BC}
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    QScalar l, r;
                    for (int x = 0; x < 3; ++x) {
                        l += t.uud[a][b][x] * t.uud[x][c][d];
                        r += t.uud[a][x][d] * t.uud[b][c][x];
                    }
                    if (c == d) l += G[a][b];
                    if (a == d) r += G[b][c];
                    ok = ok && l == r;
                }
    s.check("braid", "quadratic epsilon exchange identity", ok);

    ok = true;  // same-index relations between placements; the last one needs
                // the (down,up,up) placement eps_A{}^{CB} = g^{BX} eps_A{}^C{}_X
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                ok = ok && t.ddd[a][b][c] == t.uuu[a][c][b];
                ok = ok && t.dud[a][b][c] == t.uud[a][c][b];
                QScalar duu;
                for (int x = 0; x < 3; ++x) duu += t.g_up[b][x] * t.dud[a][c][x];
                ok = ok && t.udd[a][b][c] == duu;
            }
    s.check("placement", "index swaps relate the placements", ok);

    // classical limit: the structure constants i*eps^{AB}{}_C transform to the
    // Cartesian cross product at q -> 1
    {
        NumericContext ctx(1.0 + 1e-6, 30, 1e-4);
        std::complex<double> M[3][3] = {
            {{0, 1 / std::sqrt(2.0)}, {0, 0}, {0, 1 / std::sqrt(2.0)}},
            {{-1 / std::sqrt(2.0), 0}, {0, 0}, {1 / std::sqrt(2.0), 0}},
            {{0, 0}, {1, 0}, {0, 0}},
        };
        std::complex<double> Minv[3][3];
        {
            // invert the 3x3 basis change numerically
            std::complex<double> a = M[0][0], bq = M[0][2], cq = M[1][0], d = M[1][2];
            std::complex<double> det = a * d - bq * cq;
            Minv[0][0] = d / det;
            Minv[0][1] = -bq / det;
            Minv[2][0] = -cq / det;
            Minv[2][1] = a / det;
            Minv[1][2] = 1.0;
            Minv[0][2] = Minv[1][0] = Minv[1][1] = Minv[2][2] = 0.0;
        }
        double worst = 0;
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    std::complex<double> acc = 0;
                    for (int C = 0; C < 3; ++C)
                        for (int A = 0; A < 3; ++A)
                            for (int B = 0; B < 3; ++B) {
                                if (t.uud[A][B][C].is_zero()) continue;
                                std::complex<double> cs =
                                    std::complex<double>(0, 1) *
                                    t.uud[A][B][C].eval(ctx).to_double();
                                acc += M[k][C] * cs * Minv[A][i] * Minv[B][j];
                            }
                    double classical = 0;
                    if (i != j && i != k && j != k)
                        classical = ((k == 0 && i == 1 && j == 2) || (k == 1 && i == 2 && j == 0) ||
                                     (k == 2 && i == 0 && j == 1))
                                        ? 1.0
                                        : -1.0;
                    worst = std::max(worst, std::abs(acc - classical));
                }
        s.check_residual("classical-limit", "cross product reduces to the Cartesian one", worst,
                         1e-4);
    }
    return s.take();
}

std::vector<QMatrix> lorentz_cgc_basis(HalfInt j1, HalfInt j2, HalfInt j1p, HalfInt j2p,
                                       HalfInt k1, HalfInt k2) {
    auto admissible = [](HalfInt a, HalfInt b, HalfInt k) {
        return k.twice() >= std::abs(a.twice() - b.twice()) && k.twice() <= (a + b).twice() &&
               (a + b + k).twice() % 2 == 0;
    };
    if (!admissible(j1, j1p, k1) || !admissible(j2, j2p, k2))
        throw std::domain_error("inadmissible (k1,k2) in the Lorentz series");

    int d1 = j1.twice() + 1, d2 = j2.twice() + 1, d1p = j1p.twice() + 1, d2p = j2p.twice() + 1;
    Spin s2{j2}, s1p{j1p};
    QMatrix Rinv = r_image(j2, j1p).inverse_graded(r_image_grading(j2, j1p));

    std::vector<QMatrix> out;
    for (int n1t = -k1.twice(); n1t <= k1.twice(); n1t += 2)
        for (int n2t = -k2.twice(); n2t <= k2.twice(); n2t += 2) {
            HalfInt n1 = hi2(n1t), n2 = hi2(n2t);
            QMatrix v(d1 * d2 * d1p * d2p, 1);
            for (int i1 = 0; i1 < d1; ++i1)
                for (int i2 = 0; i2 < d2; ++i2)
                    for (int i1p = 0; i1p < d1p; ++i1p)
                        for (int i2p = 0; i2p < d2p; ++i2p) {
                            HalfInt m1 = Spin{j1}.weight(i1), m2 = s2.weight(i2);
                            HalfInt m1p = s1p.weight(i1p), m2p = Spin{j2p}.weight(i2p);
                            QScalar sum;
                            for (int ia = 0; ia < d2; ++ia)
                                for (int ib = 0; ib < d1p; ++ib) {
                                    const QScalar& r =
                                        Rinv.at(i2 * d1p + i1p, ia * d1p + ib);
                                    if (r.is_zero()) continue;
                                    HalfInt a = s2.weight(ia), b = s1p.weight(ib);
                                    QScalar c1 = cgc(j1, j1p, k1, m1, b, n1);
                                    if (c1.is_zero()) continue;
                                    QScalar c2 = cgc(j2, j2p, k2, a, m2p, n2);
                                    if (c2.is_zero()) continue;
                                    sum += c1 * c2 * r;
                                }
                            v.at(((i1 * d2 + i2) * d1p + i1p) * d2p + i2p, 0) = sum;
                        }
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace qlorentz
