#include "qlorentz/suq2.hpp"

namespace qlorentz {

namespace {
QScalar qhalf_inv() { return sqrt_qint(hi(2)).inverse(); }  // [2]^(-1/2)
} // namespace

EFKRep rep_efk(Spin sp) {
    const HalfInt j = sp.j;
    const int d = sp.dim();
    EFKRep r{sp, QMatrix(d, d), QMatrix(d, d), QMatrix(d, d), QMatrix(d, d)};
    for (int i = 0; i < d; ++i) {
        HalfInt m = sp.weight(i);
        r.K.at(i, i) = qpow(2 * m);
        r.Kinv.at(i, i) = qpow(-2 * m);
        if (i + 1 < d)  // E|j,m> = q^(m+1) sqrt([j+m+1][j-m]) |j,m+1>
            r.E.at(i + 1, i) = qpow(m + hi(1)) * sqrt(qint(j + m + hi(1)) * qint(j - m));
        if (i > 0)      // F|j,m> = q^(-m) sqrt([j+m][j-m+1]) |j,m-1>
            r.F.at(i - 1, i) = qpow(-m) * sqrt(qint(j + m) * qint(j - m + hi(1)));
    }
    return r;
}

QMatrix rep_gen(Spin sp, Gen g) {
    const int d = sp.dim();
    switch (g) {
        case Gen::E: return rep_efk(sp).E;
        case Gen::F: return rep_efk(sp).F;
        case Gen::K: return rep_efk(sp).K;
        case Gen::Kinv: return rep_efk(sp).Kinv;
        case Gen::Khalf:
        case Gen::Khalfinv: {
            QMatrix m(d, d);
            for (int i = 0; i < d; ++i) {
                HalfInt w = sp.weight(i);
                m.at(i, i) = qpow(g == Gen::Khalf ? w : -w);
            }
            return m;
        }
    }
    throw std::logic_error("rep_gen");
}

VectorialRep rep_vectorial(Spin sp) {
    EFKRep r = rep_efk(sp);
    QScalar c2inv = qint(hi(2)).inverse();
    VectorialRep v{sp, {}, {}, {}, {}};
    v.Jm = (qpow(hi(1)) * qhalf_inv()) * (r.K * r.F);
    v.J3 = c2inv * (qpow(hi(-1)) * (r.E * r.F) - qpow(hi(1)) * (r.F * r.E));
    v.Jp = -qhalf_inv() * r.E;
    v.W = r.K - lambda_() * v.J3;
    return v;
}

QMatrix rep_J(Spin sp, int A) {
    VectorialRep v = rep_vectorial(sp);
    switch (A) {
        case -1: return v.Jm;
        case 0: return v.J3;
        case 1: return v.Jp;
    }
    throw std::domain_error("rep_J index");
}

QScalar w_eigenvalue(HalfInt j) {
    return qint(hi(2)).inverse() * (qpow(2 * j + hi(1)) + qpow(-(2 * j + hi(1))));
}

QMatrix antipode_on(Spin sp, Gen g) {
    EFKRep r = rep_efk(sp);
    switch (g) {
        case Gen::E: return -(r.E * r.Kinv);
        case Gen::F: return -(r.K * r.F);
        case Gen::K: return r.Kinv;
        case Gen::Kinv: return r.K;
        case Gen::Khalf: return rep_gen(sp, Gen::Khalfinv);
        case Gen::Khalfinv: return rep_gen(sp, Gen::Khalf);
    }
    throw std::logic_error("antipode_on");
}

QMatrix coproduct_on(Spin j1, Spin j2, Gen g) {
    QMatrix i1 = QMatrix::identity(j1.dim()), i2 = QMatrix::identity(j2.dim());
    switch (g) {
        case Gen::E:  // E (x) K + 1 (x) E
            return kron(rep_gen(j1, Gen::E), rep_gen(j2, Gen::K)) + kron(i1, rep_gen(j2, Gen::E));
        case Gen::F:  // F (x) 1 + K^-1 (x) F
            return kron(rep_gen(j1, Gen::F), i2) + kron(rep_gen(j1, Gen::Kinv), rep_gen(j2, Gen::F));
        case Gen::K:
        case Gen::Kinv:
        case Gen::Khalf:
        case Gen::Khalfinv:  // group-like
            return kron(rep_gen(j1, g), rep_gen(j2, g));
    }
    throw std::logic_error("coproduct_on");
}

QScalar counit(Gen g) {
    switch (g) {
        case Gen::E:
        case Gen::F: return QScalar();
        default: return QScalar(1);
    }
}

VerificationReport star_check(Spin sp) {
    Suite s("suq2.star.j" + sp.j.str());
    EFKRep r = rep_efk(sp);
    s.check_equal("E", "compact real form, E* = FK", r.E.dagger(), r.F * r.K);
    s.check_equal("F", "compact real form, F* = K^-1 E", r.F.dagger(), r.Kinv * r.E);
    s.check_equal("K", "compact real form, K* = K", r.K.dagger(), r.K);
    return s.take();
}

VerificationReport tensor_op_conditions(Spin sp, const QMatrix& E, const QMatrix& F,
                                        const QMatrix& K, const std::vector<QMatrix>& family,
                                        const std::string& tag) {
    Suite s("suq2.tensorop." + tag);
    const HalfInt j = sp.j;
    if (static_cast<int>(family.size()) != sp.dim())
        throw std::domain_error("tensor operator family has wrong size");
    auto A = [&](int idx) -> const QMatrix& { return family[idx]; };
    bool e_ok = true, f_ok = true, k_ok = true;
    for (int i = 0; i < sp.dim(); ++i) {
        HalfInt mu = sp.weight(i);
        // E A_mu - A_mu E = q^(mu+1) sqrt([j+mu+1][j-mu]) A_{mu+1} K
        QMatrix lhs = E * A(i) - A(i) * E;
        QMatrix rhs(lhs.rows(), lhs.cols());
        if (i + 1 < sp.dim())
            rhs = (qpow(mu + hi(1)) * sqrt(qint(j + mu + hi(1)) * qint(j - mu))) * (A(i + 1) * K);
        e_ok = e_ok && lhs == rhs;
        // F A_mu - q^(-2mu) A_mu F = q^(-mu) sqrt([j+mu][j-mu+1]) A_{mu-1}
        lhs = F * A(i) - qpow(-2 * mu) * (A(i) * F);
        rhs = QMatrix(lhs.rows(), lhs.cols());
        if (i > 0) rhs = (qpow(-mu) * sqrt(qint(j + mu) * qint(j - mu + hi(1)))) * A(i - 1);
        f_ok = f_ok && lhs == rhs;
        // K A_mu = q^(2mu) A_mu K
        k_ok = k_ok && K * A(i) == qpow(2 * mu) * (A(i) * K);
    }
    s.check("raise", "ladder condition against E", e_ok);
    s.check("lower", "ladder condition against F", f_ok);
    s.check("weight", "weight condition against K", k_ok);
    return s.take();
}

} // namespace qlorentz
