#include "qlorentz/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qlorentz {

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::domain_error("matrix shape mismatch");
    QMatrix r(a.r_, a.c_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::domain_error("matrix shape mismatch");
    QMatrix r(a.r_, a.c_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

QMatrix operator-(const QMatrix& a) {
    QMatrix r(a.r_, a.c_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = -a.e_[i];
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.c_ != b.r_) throw std::domain_error("matrix shape mismatch");
    QMatrix r(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const QScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.c_; ++j) {
                const QScalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

QMatrix operator*(const QScalar& s, const QMatrix& a) {
    QMatrix r(a.r_, a.c_);
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (!a.e_[i].is_zero()) r.e_[i] = s * a.e_[i];
    return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
}

bool QMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const QScalar& s) { return s.is_zero(); });
}

QMatrix QMatrix::transpose() const {
    QMatrix r(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMatrix QMatrix::dagger() const {
    QMatrix r(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

QScalar QMatrix::trace() const {
    QScalar t;
    for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
    return t;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return r;
}

QMatrix QMatrix::inverse_diagonal() const {
    QMatrix r(r_, c_);
    for (int i = 0; i < r_; ++i) r.at(i, i) = at(i, i).inverse();
    return r;
}

QMatrix QMatrix::inverse_graded(const std::vector<int>& grade) const {
    if (r_ != c_) throw std::domain_error("inverse of non-square matrix");
    QMatrix d(r_, c_), n(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            if (i == j) d.at(i, i) = at(i, i);
            else if (!at(i, j).is_zero()) {
                if (grade[i] == grade[j])
                    throw std::domain_error("inverse_graded: off-diagonal entry within a grade");
                n.at(i, j) = at(i, j);
            }
        }
    QMatrix dinv = d.inverse_diagonal();
    QMatrix x = dinv * n;  // nilpotent
    QMatrix acc = identity(r_), pw = identity(r_);
    for (int k = 1; k <= r_; ++k) {
        pw = pw * x;
        if (pw.is_zero()) break;
        if (k % 2 == 1) acc -= pw;
        else acc += pw;
    }
    return acc * dinv;
}

double QMatrix::max_abs(const NumericContext& ctx) const {
    double m = 0;
    for (auto& s : e_) {
        if (s.is_zero()) continue;
        m = std::max(m, s.eval(ctx).abs());
    }
    return m;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << "[ ";
        for (int j = 0; j < c_; ++j) os << at(i, j).str() << (j + 1 < c_ ? " , " : " ");
        os << "]\n";
    }
    return os.str();
}

QMatrix apply_swap(const QMatrix& m, int dim1, int dim2) {
    int n = dim1 * dim2;
    if (m.rows() != n || m.cols() != n) throw std::domain_error("apply_swap shape mismatch");
    auto sw = [&](int idx) {
        int a = idx / dim2, b = idx % dim2;
        return b * dim1 + a;
    };
    QMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(sw(i), sw(j)) = m.at(i, j);
    return r;
}

QMatrix swap_row_pair(const QMatrix& m, int dim1, int dim2) {
    int n = dim1 * dim2;
    if (m.rows() != n) throw std::domain_error("swap_row_pair shape mismatch");
    QMatrix r(m.rows(), m.cols());
    for (int a = 0; a < dim1; ++a)
        for (int b = 0; b < dim2; ++b)
            for (int j = 0; j < m.cols(); ++j) r.at(b * dim1 + a, j) = m.at(a * dim2 + b, j);
    return r;
}

QMatrix embed_two_leg(const QMatrix& op, int leg_i, int leg_j, const std::vector<int>& dims) {
    int nlegs = static_cast<int>(dims.size());
    int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
    std::vector<int> stride(nlegs, 1);
    for (int l = nlegs - 2; l >= 0; --l) stride[l] = stride[l + 1] * dims[l + 1];
    QMatrix r(total, total);
    int di = dims[leg_i], dj = dims[leg_j];
    // iterate over spectator configurations
    std::vector<int> idx(nlegs, 0);
    int spect = total / (di * dj);
    for (int sconf = 0; sconf < spect; ++sconf) {
        int rem = sconf;
        int base = 0;
        for (int l = 0; l < nlegs; ++l) {
            if (l == leg_i || l == leg_j) continue;
            int v = rem % dims[l];
            rem /= dims[l];
            base += v * stride[l];
        }
        for (int a = 0; a < di; ++a)
            for (int b = 0; b < dj; ++b) {
                int row_in_op = a * dj + b;
                for (int c = 0; c < di; ++c)
                    for (int d = 0; d < dj; ++d) {
                        const QScalar& v = op.at(row_in_op, c * dj + d);
                        if (v.is_zero()) continue;
                        int rr = base + a * stride[leg_i] + b * stride[leg_j];
                        int cc = base + c * stride[leg_i] + d * stride[leg_j];
                        r.at(rr, cc) += v;
                    }
            }
    }
    return r;
}

} // namespace qlorentz
