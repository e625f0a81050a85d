#pragma once

#include <map>
#include <vector>

#include "qlorentz/minkowski.hpp"

namespace qlorentz {

/// xi(j) = [2]^-1 (q^(2j+1) + q^-(2j+1)); the common eigenvalue shape.
QScalar xi(HalfInt j);

/// u and v of a (n,k) -> (n',k') transition with half-unit steps.
struct UV {
    HalfInt u, v;
};
UV uv(HalfInt np, HalfInt kp, HalfInt n, HalfInt k);

enum class WOp {
    E, F, K, Kinv, Khalf, Khalfinv, W,
    Jm, J3, Jp,
    P0, Pm, Pp, P3, Z,
    U, V, Rm, R3, Rp, Sm, S3, Sp,
};

enum class RedOp { J, P, U, V, R, S };

/// Reduced matrix element <j',n',k' || op || j,n,k> for spin s and the given
/// mass; zero outside the selection rules.
QScalar reduced(RedOp op, HalfInt jp, HalfInt np, HalfInt kp, HalfInt j, HalfInt n, HalfInt k,
                HalfInt s, const QScalar& mass);

/// Reduction coefficients absorbing the j-dependence (alpha = 0 or 1).
QScalar b_coefficient(int alpha, HalfInt jp, HalfInt np, HalfInt kp, HalfInt j, HalfInt n,
                      HalfInt k);

/// rho / omega closed forms and their double-reduced building blocks.
QScalar rho_closed(HalfInt s, HalfInt nu);
QScalar omega_closed(HalfInt s, HalfInt mu);
QScalar double_reduced_u(HalfInt np, HalfInt kp, HalfInt n, HalfInt k, HalfInt s);
VerificationReport rho_omega_check(HalfInt s, int nu_max_twice);

/// The two transition determinants in (n,n') and (k,k').
std::pair<QScalar, QScalar> transition_determinants(HalfInt n, HalfInt np, HalfInt k, HalfInt kp);

struct StateLabel {
    HalfInt j, m, n, k;
    friend auto operator<=>(const StateLabel&, const StateLabel&) = default;
    std::string str() const;
};

struct SparseQ {
    int dim = 0;
    std::map<std::pair<int, int>, QScalar> e;
    void add(int r, int c, const QScalar& v);
    friend SparseQ operator*(const SparseQ& a, const SparseQ& b);
    friend SparseQ operator+(const SparseQ& a, const SparseQ& b);
    friend SparseQ operator-(const SparseQ& a, const SparseQ& b);
    friend SparseQ operator*(const QScalar& c, const SparseQ& a);
    static SparseQ identity(int n);
};

struct SpinRepWindow {
    HalfInt s;
    QScalar mass;
    int numax_twice = 0;
    std::vector<StateLabel> basis;
    std::map<StateLabel, int> index;
    std::map<WOp, SparseQ> ops;

    int dim() const { return static_cast<int>(basis.size()); }
    /// true when every chain of `depth` generator applications stays inside
    bool interior(int state, int depth) const {
        return basis[state].n.twice() + basis[state].k.twice() <= numax_twice - 2 * depth;
    }
    const SparseQ& op(WOp o) const { return ops.at(o); }
};

/// Assemble the truncated spin-s window with n+k <= numax.
SpinRepWindow build_window(HalfInt s, const QScalar& mass, HalfInt numax);

struct WindowCheckOptions {
    bool symbolic = false;         // exact equality instead of residuals
    NumericContext ctx{1.5, 50, 1e-10};
    // alternative phase for the boost-family elements (must not change outcomes)
    bool flip_phase = false;
};

VerificationReport verify_window(const SpinRepWindow& w, const WindowCheckOptions& opt);

} // namespace qlorentz
