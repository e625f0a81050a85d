#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlorentz/qscalar.hpp"

namespace qlorentz {

/// Dense matrix over QScalar.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : r_(rows), c_(cols), e_(rows * cols) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = QScalar(1);
        return m;
    }
    static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }

    int rows() const { return r_; }
    int cols() const { return c_; }
    QScalar& at(int i, int j) { return e_[i * c_ + j]; }
    const QScalar& at(int i, int j) const { return e_[i * c_ + j]; }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QScalar& s, const QMatrix& a);
    QMatrix& operator+=(const QMatrix& b) { *this = *this + b; return *this; }
    QMatrix& operator-=(const QMatrix& b) { *this = *this - b; return *this; }

    friend bool operator==(const QMatrix& a, const QMatrix& b);
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    bool is_zero() const;
    QMatrix transpose() const;
    /// Conjugate transpose (entrywise conj, then transpose).
    QMatrix dagger() const;
    QScalar trace() const;
    friend QMatrix kron(const QMatrix& a, const QMatrix& b);

    /// Inverse for matrices that split as invertible-diagonal plus a part that
    /// strictly raises a grading (so the off-diagonal part is nilpotent).
    /// grade[i] gives the grading of basis vector i.
    QMatrix inverse_graded(const std::vector<int>& grade) const;
    /// Inverse of a diagonal matrix.
    QMatrix inverse_diagonal() const;

    /// Largest |entry| after numeric evaluation.
    double max_abs(const NumericContext& ctx) const;

    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<QScalar> e_;
};

QMatrix apply_swap(const QMatrix& m, int dim1, int dim2);  // swap tensor legs
/// R-hat variant: permute the row index pair only, Rhat[(a,b),..] = R[(b,a),..].
QMatrix swap_row_pair(const QMatrix& m, int dim1, int dim2);
/// Embed a two-leg operator acting on legs (i, j) of a tensor product with the
/// given leg dimensions; i != j, legs in the order the operator expects.
QMatrix embed_two_leg(const QMatrix& op, int leg_i, int leg_j, const std::vector<int>& dims);

} // namespace qlorentz
