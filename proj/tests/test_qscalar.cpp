#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "qlorentz/qscalar.hpp"

using namespace qlorentz;

static QScalar q() { return qpow(hi(1)); }

TEST_CASE("q-integers") {
    // [2] = q + q^-1
    CHECK(qint(hi(2)) == q() + qpow(hi(-1)));
    CHECK(qint(hi(0)).is_zero());
    // [3] by expanding the defining ratio with polynomial division
    RatFn ratio(LaurentPoly::monomial(6) - LaurentPoly::monomial(-6),
                LaurentPoly::monomial(2) - LaurentPoly::monomial(-2));
    CHECK(qint(hi(3)) == QScalar(ratio));
    CHECK(qint(hi(3)) == qpow(hi(2)) + qs(1) + qpow(hi(-2)));
    // antisymmetry
    for (int t = 1; t < 8; ++t) CHECK(qint(hi2(t)) == -qint(hi2(-t)));
    // half-integer arguments are rational functions
    CHECK(qint(half) * (qpow(half) + qpow(-half)) == qs(1));
}

TEST_CASE("q-integer product identity [n][m+1] - [n+1][m] = [n-m]") {
    for (int n = 0; n <= 20; ++n)
        for (int m = 0; m <= 20; ++m) {
            QScalar lhs = qint(hi(n)) * qint(hi(m + 1)) - qint(hi(n + 1)) * qint(hi(m));
            CHECK(lhs == qint(hi(n - m)));
        }
}

TEST_CASE("lambda") {
    CHECK(std::abs(lambda_().evald(2.0).real() - 1.5) < 1e-14);
    CHECK(std::abs(lambda_().evald(1.0 + 1e-9).real()) < 1e-8);
    CHECK(std::abs(lambda_().evald(1.5).real() - (1.5 - 2.0 / 3.0)) < 1e-14);
    // lambda*[2] = q^2 - q^-2 symbolically
    CHECK(lambda_() * qint(hi(2)) == qpow(hi(2)) - qpow(hi(-2)));
}

TEST_CASE("sqrt and canonical surds") {
    QScalar two = qint(hi(2));
    CHECK(sqrt(two * two) == two);
    QScalar r = sqrt(q() * two);
    CHECK(r * r == q() * two);
    // conj fixes q and flips i
    QScalar il = QScalar::imaginary_unit() * lambda_();
    CHECK(il.conj() == -il);
    // surds over distinct radicands stay separate, equal radicands merge
    QScalar a = sqrt(qint(hi(2))) + sqrt(qint(hi(3)));
    CHECK(a.terms().size() == 2);
    CHECK(sqrt(qs(8)) == qs(2) * sqrt(qs(2)));
    // numeric probes
    CHECK(std::abs(sqrt(qs(2)).evald(1.7).real() - std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(qpow(half).evald(4.0).real() - 2.0) < 1e-14);
}

TEST_CASE("sqrt error cases") {
    CHECK_THROWS(sqrt(sqrt(qint(hi(2)))));            // nested radical
    CHECK_THROWS(sqrt(qs(1) + sqrt(qs(2))));          // multi-term
    CHECK_THROWS(sqrt(-qint(hi(2))));                 // negative
    CHECK_THROWS(sqrt(QScalar::imaginary_unit()));    // complex
}

TEST_CASE("inverses") {
    QScalar x = qint(hi(3)) * sqrt(qint(hi(2)));
    CHECK(x * x.inverse() == qs(1));
    QScalar y = qs(1) + sqrt(qs(2));
    CHECK(y * y.inverse() == qs(1));
    QScalar z = sqrt(qint(hi(2))) + sqrt(qint(hi(3))) + qint(hi(2));
    CHECK(z * z.inverse() == qs(1));
    CHECK_FALSE(QScalar().try_inverse().has_value());
}

TEST_CASE("eval at [2] with q=2") {
    CHECK(std::abs(qint(hi(2)).evald(2.0).real() - 2.5) < 1e-14);
}

namespace {

// random surd expressions for the canonicalization / ring-homomorphism checks
QScalar random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 2);
    switch (pick(rng)) {
        case 0: return qint(hi(std::uniform_int_distribution<int>(-4, 6)(rng)));
        case 1: return qpow(hi2(std::uniform_int_distribution<int>(-3, 3)(rng)));
        case 2: {
            int n = std::uniform_int_distribution<int>(1, 5)(rng);
            return sqrt_qint(hi(n));
        }
        case 3: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
        case 4: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
        default: return -random_expr(rng, depth - 1);
    }
}

} // namespace

TEST_CASE("canonical form is stable under rebuilding") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 10000; ++i) {
        QScalar x = random_expr(rng, 3);
        // re-canonicalize every term from its raw parts
        QScalar rebuilt;
        for (auto& t : x.terms()) rebuilt += QScalar::surd(t.coeff, t.rad);
        CHECK(rebuilt == x);
    }
}

TEST_CASE("eval is a ring homomorphism") {
    std::mt19937 rng(99);
    for (double qv : {1.1, 1.5, 2.0}) {
        NumericContext ctx(qv, 40, 1e-12);
        for (int i = 0; i < 60; ++i) {
            QScalar x = random_expr(rng, 4);
            QScalar y = random_expr(rng, 4);
            auto ex = x.eval(ctx).to_double(), ey = y.eval(ctx).to_double();
            auto exy = (x * y).eval(ctx).to_double();
            auto exp_sum = (x + y).eval(ctx).to_double();
            double scale = std::max(1.0, std::abs(ex) * std::abs(ey));
            CHECK(std::abs(exy - ex * ey) / scale < 1e-12);
            CHECK(std::abs(exp_sum - (ex + ey)) / std::max(1.0, std::abs(ex + ey)) < 1e-12);
        }
    }
}

TEST_CASE("text form") {
    CHECK(qint(hi(2)).str() == "(1*s^-2 + 1*s^2)");
    CHECK(QScalar().str() == "0");
}
