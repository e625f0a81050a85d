#include "qlorentz/algebra.hpp"

#include <sstream>

namespace qlorentz {

AlgElem AlgElem::monomial(int f, int h, int e, QScalar c) {
    AlgElem r;
    if (!c.is_zero()) r.t_[PBWKey{f, h, e}] = std::move(c);
    return r;
}

AlgElem AlgElem::gen(Gen g) {
    switch (g) {
        case Gen::E: return monomial(0, 0, 1);
        case Gen::F: return monomial(1, 0, 0);
        case Gen::K: return monomial(0, 2, 0);
        case Gen::Kinv: return monomial(0, -2, 0);
        case Gen::Khalf: return monomial(0, 1, 0);
        case Gen::Khalfinv: return monomial(0, -1, 0);
    }
    throw std::logic_error("AlgElem::gen");
}

AlgElem AlgElem::J(int A) {
    QScalar c2inv_sqrt = sqrt_qint(hi(2)).inverse();
    switch (A) {
        case -1:  // q [2]^(-1/2) K F = q^-1 [2]^(-1/2) F K in normal order
            return monomial(1, 2, 0, qpow(hi(-1)) * c2inv_sqrt);
        case 1:  // -[2]^(-1/2) E
            return monomial(0, 0, 1, -c2inv_sqrt);
        case 0: {  // [2]^(-1) (q^-1 EF - q FE)
            AlgElem ef = gen(Gen::E) * gen(Gen::F);
            AlgElem fe = gen(Gen::F) * gen(Gen::E);
            return qint(hi(2)).inverse() * (qpow(hi(-1)) * ef - qpow(hi(1)) * fe);
        }
    }
    throw std::domain_error("AlgElem::J index");
}

AlgElem AlgElem::W() { return gen(Gen::K) - lambda_() * J(0); }

void AlgElem::add(const PBWKey& k, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    AlgElem r = a;
    for (auto& [k, c] : b.t_) r.add(k, c);
    return r;
}
AlgElem operator-(const AlgElem& a, const AlgElem& b) {
    AlgElem r = a;
    for (auto& [k, c] : b.t_) r.add(k, -c);
    return r;
}
AlgElem operator-(const AlgElem& a) {
    AlgElem r;
    for (auto& [k, c] : a.t_) r.t_.emplace(k, -c);
    return r;
}
AlgElem operator*(const QScalar& c, const AlgElem& a) {
    AlgElem r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : a.t_) r.add(k, c * v);
    return r;
}

namespace {

// E * (F^f K^(h/2) E^e) in normal form, using
// [E, F^f] = [f] F^(f-1) (q^(1-f) K - q^(f-1) K^-1) / lambda.
AlgElem left_mul_E(const AlgElem& x) {
    AlgElem r;
    for (auto& [k, c] : x.terms()) {
        r.add(PBWKey{k.f, k.h, k.e + 1}, qpow(hi2(-2 * k.h)) * c);
        if (k.f > 0) {
            QScalar fac = qint(hi(k.f)) * lambda_().inverse() * c;
            r.add(PBWKey{k.f - 1, k.h + 2, k.e}, qpow(hi(1 - k.f)) * fac);
            r.add(PBWKey{k.f - 1, k.h - 2, k.e}, -qpow(hi(k.f - 1)) * fac);
        }
    }
    return r;
}

} // namespace

AlgElem normal_mul(const AlgElem& a, const AlgElem& b) {
    AlgElem r;
    for (auto& [ka, ca] : a.terms()) {
        // build (K^(ha/2) E^ea) * b first, then attach F^fa
        AlgElem cur = b;
        for (int i = 0; i < ka.e; ++i) cur = left_mul_E(cur);
        for (auto& [kb, cb] : cur.terms()) {
            // K^(ha/2) F^fb = q^(-fb ha) F^fb K^(ha/2)
            QScalar c = ca * cb * qpow(hi2(-2 * kb.f * ka.h));
            r.add(PBWKey{ka.f + kb.f, ka.h + kb.h, kb.e}, c);
        }
    }
    return r;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) { return normal_mul(a, b); }

std::string AlgElem::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.f) os << " F^" << k.f;
        if (k.h) os << " K^(" << k.h << "/2)";
        if (k.e) os << " E^" << k.e;
    }
    return os.str();
}

// ---- LorentzElem ----

LorentzElem LorentzElem::tensor(const AlgElem& x, const AlgElem& y) {
    LorentzElem r;
    for (auto& [kx, cx] : x.terms())
        for (auto& [ky, cy] : y.terms()) r.add({kx, ky}, cx * cy);
    return r;
}

void LorentzElem::add(const Key& k, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

LorentzElem operator+(const LorentzElem& a, const LorentzElem& b) {
    LorentzElem r = a;
    for (auto& [k, c] : b.t_) r.add(k, c);
    return r;
}
LorentzElem operator-(const LorentzElem& a, const LorentzElem& b) {
    LorentzElem r = a;
    for (auto& [k, c] : b.t_) r.add(k, -c);
    return r;
}
LorentzElem operator-(const LorentzElem& a) {
    LorentzElem r;
    for (auto& [k, c] : a.t_) r.t_.emplace(k, -c);
    return r;
}
LorentzElem operator*(const QScalar& c, const LorentzElem& a) {
    LorentzElem r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : a.t_) r.add(k, c * v);
    return r;
}

LorentzElem operator*(const LorentzElem& a, const LorentzElem& b) {
    // the tensor square multiplies componentwise
    LorentzElem r;
    for (auto& [ka, ca] : a.t_)
        for (auto& [kb, cb] : b.t_) {
            AlgElem x = normal_mul(AlgElem::monomial(ka.first.f, ka.first.h, ka.first.e),
                                   AlgElem::monomial(kb.first.f, kb.first.h, kb.first.e));
            AlgElem y = normal_mul(AlgElem::monomial(ka.second.f, ka.second.h, ka.second.e),
                                   AlgElem::monomial(kb.second.f, kb.second.h, kb.second.e));
            QScalar c = ca * cb;
            for (auto& [kx, cx] : x.terms())
                for (auto& [ky, cy] : y.terms()) r.add({kx, ky}, c * cx * cy);
        }
    return r;
}

std::string LorentzElem::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        auto mono = [&](const PBWKey& p) {
            std::string s;
            if (p.f) s += " F^" + std::to_string(p.f);
            if (p.h) s += " K^(" + std::to_string(p.h) + "/2)";
            if (p.e) s += " E^" + std::to_string(p.e);
            return s.empty() ? std::string(" 1") : s;
        };
        os << "(" << c.str() << ")[" << mono(k.first) << " (x)" << mono(k.second) << " ]";
    }
    return os.str();
}

// ---- Hopf operations ----

LorentzElem coproduct(const AlgElem& x) {
    LorentzElem dE = LorentzElem::tensor(AlgElem::gen(Gen::E), AlgElem::gen(Gen::K)) +
                     LorentzElem::right(AlgElem::gen(Gen::E));
    LorentzElem dF = LorentzElem::left(AlgElem::gen(Gen::F)) +
                     LorentzElem::tensor(AlgElem::gen(Gen::Kinv), AlgElem::gen(Gen::F));
    LorentzElem r;
    for (auto& [k, c] : x.terms()) {
        LorentzElem m(c);
        for (int i = 0; i < k.f; ++i) m *= dF;
        if (k.h != 0)
            m *= LorentzElem::tensor(AlgElem::monomial(0, k.h, 0), AlgElem::monomial(0, k.h, 0));
        for (int i = 0; i < k.e; ++i) m *= dE;
        r += m;
    }
    return r;
}

AlgElem antipode(const AlgElem& x) {
    // S(F^f K^(h/2) E^e) = S(E)^e S(K^(h/2)) S(F)^f with
    // S(E) = -q^2 K^-1 E, S(F) = -q^-2 F K (normal-ordered forms)
    AlgElem sE = AlgElem::monomial(0, -2, 1, -qpow(hi(2)));
    AlgElem sF = AlgElem::monomial(1, 2, 0, -qpow(hi(-2)));
    AlgElem r;
    for (auto& [k, c] : x.terms()) {
        AlgElem m(c);
        for (int i = 0; i < k.e; ++i) m *= sE;
        m *= AlgElem::monomial(0, -k.h, 0);
        for (int i = 0; i < k.f; ++i) m *= sF;
        r += m;
    }
    return r;
}

AlgElem antipode_inv(const AlgElem& x) {
    // S^-1(E) = -K^-1 E, S^-1(F) = -F K, S^-1(K^(1/2)) = K^(-1/2)
    AlgElem sE = AlgElem::monomial(0, -2, 1, -QScalar(1));
    AlgElem sF = AlgElem::monomial(1, 2, 0, -QScalar(1));
    AlgElem r;
    for (auto& [k, c] : x.terms()) {
        AlgElem m(c);
        for (int i = 0; i < k.e; ++i) m *= sE;
        m *= AlgElem::monomial(0, -k.h, 0);
        for (int i = 0; i < k.f; ++i) m *= sF;
        r += m;
    }
    return r;
}

QScalar counit(const AlgElem& x) {
    QScalar r;
    for (auto& [k, c] : x.terms())
        if (k.f == 0 && k.e == 0) r += c;
    return r;
}

QScalar counit(const LorentzElem& x) {
    QScalar r;
    for (auto& [k, c] : x.terms())
        if (k.first.f == 0 && k.first.e == 0 && k.second.f == 0 && k.second.e == 0) r += c;
    return r;
}

AlgElem star(const AlgElem& x) {
    // (F^f K^(h/2) E^e)* = (E*)^e (K^(h/2))* (F*)^f = (FK)^e K^(h/2) (K^-1 E)^f
    AlgElem fk = AlgElem::monomial(1, 2, 0);
    AlgElem kinve = AlgElem::monomial(0, -2, 1);
    AlgElem r;
    for (auto& [k, c] : x.terms()) {
        AlgElem m(c.conj());
        for (int i = 0; i < k.e; ++i) m *= fk;
        m *= AlgElem::monomial(0, k.h, 0);
        for (int i = 0; i < k.f; ++i) m *= kinve;
        r += m;
    }
    return r;
}

AlgElem adjoint_left(const AlgElem& g, const AlgElem& h) {
    LorentzElem cop = coproduct(g);
    AlgElem r;
    for (auto& [k, c] : cop.terms()) {
        AlgElem g1 = AlgElem::monomial(k.first.f, k.first.h, k.first.e, c);
        AlgElem g2 = AlgElem::monomial(k.second.f, k.second.h, k.second.e);
        r += g1 * h * antipode(g2);
    }
    return r;
}

AlgElem adjoint_right(const AlgElem& h, const AlgElem& g) {
    LorentzElem cop = coproduct(g);
    AlgElem r;
    for (auto& [k, c] : cop.terms()) {
        AlgElem g1 = AlgElem::monomial(k.first.f, k.first.h, k.first.e, c);
        AlgElem g2 = AlgElem::monomial(k.second.f, k.second.h, k.second.e);
        r += antipode(g1) * h * g2;
    }
    return r;
}

QMatrix rep_alg(Spin j, const AlgElem& x) {
    EFKRep efk = rep_efk(j);
    QMatrix kh = rep_gen(j, Gen::Khalf);
    QMatrix khinv = rep_gen(j, Gen::Khalfinv);
    QMatrix r(j.dim(), j.dim());
    for (auto& [k, c] : x.terms()) {
        QMatrix m = QMatrix::identity(j.dim());
        for (int i = 0; i < k.f; ++i) m = m * efk.F;
        for (int i = 0; i < std::abs(k.h); ++i) m = m * (k.h > 0 ? kh : khinv);
        for (int i = 0; i < k.e; ++i) m = m * efk.E;
        r += c * m;
    }
    return r;
}

QMatrix rep_lorentz(Spin j1, Spin j2, const LorentzElem& x) {
    QMatrix r(j1.dim() * j2.dim(), j1.dim() * j2.dim());
    for (auto& [k, c] : x.terms()) {
        QMatrix m1 = rep_alg(j1, AlgElem::monomial(k.first.f, k.first.h, k.first.e));
        QMatrix m2 = rep_alg(j2, AlgElem::monomial(k.second.f, k.second.h, k.second.e));
        r += c * kron(m1, m2);
    }
    return r;
}

QScalar dual_pairing(const AlgElem& x, const std::vector<std::pair<int, int>>& word) {
    // <x, M^{a1}_{b1}...M^{an}_{bn}> is the matrix element of x acting on the
    // n-fold tensor power of the fundamental via the iterated coproduct.
    int n = static_cast<int>(word.size());
    if (n == 0) return counit(x);
    Spin sp{half};
    std::vector<int> dims(n, 2);
    int total = 1 << n;
    auto tensor_rep = [&](Gen g) {
        QMatrix r(total, total);
        if (g == Gen::E) {
            // sum_i 1^(i-1) (x) E (x) K^(n-i)
            for (int i = 0; i < n; ++i) {
                QMatrix m = QMatrix::identity(1);
                for (int l = 0; l < n; ++l) {
                    QMatrix fac = l < i   ? QMatrix::identity(2)
                                  : l == i ? rep_gen(sp, Gen::E)
                                           : rep_gen(sp, Gen::K);
                    m = kron(m, fac);
                }
                r += m;
            }
        } else if (g == Gen::F) {
            for (int i = 0; i < n; ++i) {
                QMatrix m = QMatrix::identity(1);
                for (int l = 0; l < n; ++l) {
                    QMatrix fac = l < i   ? rep_gen(sp, Gen::Kinv)
                                  : l == i ? rep_gen(sp, Gen::F)
                                           : QMatrix::identity(2);
                    m = kron(m, fac);
                }
                r += m;
            }
        } else {
            QMatrix m = QMatrix::identity(1);
            for (int l = 0; l < n; ++l) m = kron(m, rep_gen(sp, g));
            r = m;
        }
        return r;
    };
    QMatrix mE = tensor_rep(Gen::E), mF = tensor_rep(Gen::F);
    QMatrix mKh = tensor_rep(Gen::Khalf), mKhi = tensor_rep(Gen::Khalfinv);
    int row = 0, col = 0;
    for (auto& [a, b] : word) {
        row = row * 2 + a;
        col = col * 2 + b;
    }
    QScalar out;
    for (auto& [k, c] : x.terms()) {
        QMatrix m = QMatrix::identity(total);
        for (int i = 0; i < k.f; ++i) m = m * mF;
        for (int i = 0; i < std::abs(k.h); ++i) m = m * (k.h > 0 ? mKh : mKhi);
        for (int i = 0; i < k.e; ++i) m = m * mE;
        out += c * m.at(row, col);
    }
    return out;
}

} // namespace qlorentz
