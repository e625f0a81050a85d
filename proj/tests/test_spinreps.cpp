#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlorentz/spinreps.hpp"

using namespace qlorentz;

static QScalar q(int n) { return qpow(hi(n)); }

// signed square root used by the reduced-element formulas
static QScalar sqrt_any_test(const QScalar& x) {
    if (x.is_zero()) return x;
    REQUIRE(x.is_rational_function());
    const RatFn& c = x.terms()[0].coeff;
    return QScalar::surd(RatFn(LaurentPoly(1), c.den()), c.num() * c.den());
}

TEST_CASE("xi eigenvalue shape") {
    CHECK(xi(hi(0)).is_one());
    CHECK(xi(half) == qint(hi(2)).inverse() * (q(2) + q(-2)));
    CHECK(std::abs(xi(hi2(3)).evald(1.0 + 1e-9).real() - 1.0) < 1e-8);
}

TEST_CASE("uv case list") {
    HalfInt n = hi(1), k = half;
    auto w1 = uv(n - half, k - half, n, k);
    CHECK(w1.u == -(n + k + hi(1)));
    CHECK(w1.v == -n + k);
    auto w2 = uv(n - half, k + half, n, k);
    CHECK(w2.u == -n + k);
    CHECK(w2.v == -(n + k + hi(1)));
    auto w3 = uv(n + half, k - half, n, k);
    CHECK(w3.u == n - k);
    CHECK(w3.v == n + k + hi(1));
    auto w4 = uv(n + half, k + half, n, k);
    CHECK(w4.u == n + k + hi(1));
    CHECK(w4.v == n - k);
    auto w5 = uv(k + half, k + half, k, k);
    CHECK(w5.v == hi(0));
}

TEST_CASE("reduced matrix elements: printed forms") {
    QScalar m(1);
    for (int jt = 1; jt <= 4; ++jt) {
        HalfInt j = hi2(jt);
        CHECK(reduced(RedOp::J, j, hi(1), hi(1), j, hi(1), hi(1), hi(1), m) ==
              -qint(hi(2)).inverse() * sqrt(qint(hi2(jt + 2)) * qint(hi2(jt))));
    }
    HalfInt j = hi(1), n = hi(1), k = hi(1);
    QScalar want = m * lambda_() *
                   (qint(k + n + j + hi(2)) * qint(j - k + n) - qint(k + n - j) * qint(j + k - n)) *
                   (qint(hi(2)) * sqrt(qint(2 * j + hi(2)) * qint(2 * j))).inverse();
    CHECK(reduced(RedOp::P, j, n, k, j, n, k, hi(0), m) == want);
    CHECK(reduced(RedOp::U, hi(1), n + half, k, hi(1), n, k, hi(1), m).is_zero());
    CHECK(reduced(RedOp::P, hi(1), n + half, k + half, hi(1), n, k, hi(1), m).is_zero());
    CHECK(reduced(RedOp::R, hi(3), n + half, k + half, hi(1), n, k, hi(1), m).is_zero());
    // s = 0: only the u in {0,-1} transitions survive
    for (int dn = -1; dn <= 1; dn += 2)
        for (int dk = -1; dk <= 1; dk += 2) {
            HalfInt np = hi(1) + hi2(dn), kp = hi(1) + hi2(dk);
            UV w = uv(np, kp, hi(1), hi(1));
            QScalar el = reduced(RedOp::U, hi(1), np, kp, hi(1), hi(1), hi(1), hi(0), m);
            bool u_ok = w.u.twice() == 0 || w.u.twice() == -2;
            CHECK(el.is_zero() == !u_ok);
        }
}

TEST_CASE("B coefficients") {
    QScalar lam = lambda_();
    HalfInt j = hi(2), n = hi(1), k = hi(1);
    for (int dn = -1; dn <= 1; dn += 2)
        for (int dk = -1; dk <= 1; dk += 2) {
            HalfInt np = n + hi2(dn), kp = k + hi2(dk);
            UV w = uv(np, kp, n, k);
            CHECK(b_coefficient(0, j, np, kp, j, n, k) * b_coefficient(0, j, np, kp, j, n, k) ==
                  qint(j + w.u + hi(1)) * qint(j - w.u));
            CHECK(b_coefficient(0, j + hi(1), np, kp, j, n, k).is_zero());
            QScalar b1 = b_coefficient(1, j + hi(1), np, kp, j, n, k);
            QScalar want = -qpow(j + hi(1)) *
                           sqrt_any_test(qint(hi(2)) * qint(j + w.v + hi(1)) *
                                         qint(j - w.v + hi(1)) * qint(j + w.u + hi(2)) *
                                         qint(j + w.u + hi(1))) *
                           (lam * sqrt(qint(2 * j + hi(3)) * qint(2 * j + hi(2)))).inverse();
            CHECK(b1 == want);
            CHECK(b_coefficient(1, j + hi(2), np, kp, j, n, k).is_zero());
        }
    // the ratio identity between neighbouring spins
    for (int dn = -1; dn <= 1; dn += 2)
        for (int dk = -1; dk <= 1; dk += 2) {
            HalfInt np = n + hi2(dn), kp = k + hi2(dk);
            UV w = uv(np, kp, n, k);
            QScalar b0j = b_coefficient(0, j, np, kp, j, n, k);
            QScalar b0j1 = b_coefficient(0, j + hi(1), np, kp, j + hi(1), n, k);
            CHECK(b0j1 * b0j1 * (qint(j + w.u + hi(1)) * qint(j - w.u)) ==
                  b0j * b0j * (qint(j + w.u + hi(2)) * qint(j - w.u + hi(1))));
        }
}

TEST_CASE("compact and case-list B-coefficients differ by exactly q^v") {
    // the compact display carries an extra q^v against the case list; pin the
    // exact relationship
    HalfInt j = hi(2), n = hi(1), k = half;
    for (int dj = -2; dj <= 2; dj += 2)
        for (int dn = -1; dn <= 1; dn += 2)
            for (int dk = -1; dk <= 1; dk += 2) {
                HalfInt jp = j + hi2(dj), np = n + hi2(dn), kp = k + hi2(dk);
                if (kp.twice() < 0) continue;
                UV w = uv(np, kp, n, k);
                QScalar caselist = b_coefficient(1, jp, np, kp, j, n, k);
                QScalar cg = cgc(hi(1), jp, j, hi(0), w.v, w.v);
                QScalar tail;
                if (dj == -2)
                    tail = qpow(-j) * sqrt_any_test(qint(jp - w.u + hi(1)) * qint(jp - w.u));
                else if (dj == 0)
                    tail = sqrt_any_test(qint(jp + w.u + hi(1)) * qint(jp - w.u));
                else
                    tail = -qpow(j + hi(1)) *
                           sqrt_any_test(qint(jp + w.u + hi(1)) * qint(jp + w.u));
                QScalar compact = -lambda_().inverse() * cg * tail;
                CHECK(compact == qpow(w.v) * caselist);
            }
}

TEST_CASE("rho and omega closed forms") {
    for (int st = 0; st <= 4; ++st) CHECK(rho_omega_check(hi2(st), 12).all_pass());
}

TEST_CASE("transition determinants") {
    for (int nt = 0; nt <= 6; ++nt)
        for (int npt = 0; npt <= 6; ++npt) {
            auto [dn, dk] = transition_determinants(hi2(nt), hi2(npt), hi2(nt), hi2(npt));
            CHECK(dn == dk);
            bool halfstep = std::abs(nt - npt) == 1;
            CHECK(dn.is_zero() == halfstep);
            HalfInt n = hi2(nt), np = hi2(npt);
            QScalar want = lambda_().pow(4) * qint(n + half - np) * qint(n - half - np) *
                           qint(n + np + half) * qint(n + np + hi2(3));
            CHECK(dn == want);
        }
    auto [d0, d0k] = transition_determinants(hi(0), hi(0), hi(0), hi(0));
    CHECK(!d0.is_zero());
    CHECK(std::abs(d0.evald(1.5).real()) > 1e-6);
}

TEST_CASE("window construction basics") {
    QScalar m(1);
    SpinRepWindow w0 = build_window(hi(0), m, hi(2));
    for (auto& st : w0.basis) CHECK(st.n == st.k);
    CHECK(w0.dim() == 14);
    for (int i = 0; i < w0.dim(); ++i) {
        CHECK(w0.op(WOp::K).e.at({i, i}) == qpow(2 * w0.basis[i].m));
        CHECK(w0.op(WOp::P0).e.at({i, i}) == m * xi(w0.basis[i].n));
        CHECK(w0.op(WOp::Z).e.at({i, i}) == m * xi(w0.basis[i].k));
        CHECK(w0.op(WOp::W).e.at({i, i}) == xi(w0.basis[i].j));
    }
    SpinRepWindow wm0 = build_window(half, QScalar(), hi(2));
    CHECK(wm0.op(WOp::P0).e.empty());
    CHECK(wm0.op(WOp::Pm).e.empty());
    CHECK(wm0.op(WOp::Pp).e.empty());
    CHECK(wm0.op(WOp::P3).e.empty());
    CHECK_THROWS(build_window(hi(1), m, hi(1)));
}

TEST_CASE("symbolic windows at small cutoff") {
    QScalar m = QScalar::rational(mpq_class(3, 2));
    for (int st : {0, 1}) {
        SpinRepWindow w = build_window(hi2(st), m, hi(2));
        WindowCheckOptions opt;
        opt.symbolic = true;
        auto rep = verify_window(w, opt);
        for (auto& e : rep.entries) {
            INFO(e.id);
            CHECK(e.status != CheckEntry::Status::fail);
        }
        opt.flip_phase = true;
        auto rep2 = verify_window(w, opt);
        REQUIRE(rep2.entries.size() == rep.entries.size());
        for (size_t i = 0; i < rep.entries.size(); ++i)
            CHECK((rep.entries[i].status == CheckEntry::Status::pass) ==
                  (rep2.entries[i].status == CheckEntry::Status::pass));
    }
}

TEST_CASE("numeric window at q = 1.5") {
    QScalar m(1);
    SpinRepWindow w = build_window(half, m, hi2(6));
    WindowCheckOptions opt;
    opt.ctx = NumericContext(1.5, 50, 1e-10);
    auto rep = verify_window(w, opt);
    for (auto& e : rep.entries) {
        INFO(e.id, " residual ", e.residual);
        CHECK(e.status != CheckEntry::Status::fail);
    }
}
