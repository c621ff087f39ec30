#include "ffp/matrix.hpp"

#include <stdexcept>

namespace ffp {

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : RationalMatrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n_)
            throw std::invalid_argument("matrix rows must form a square array");
        for (int j = 0; j < n_; ++j) (*this)(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix out(n);
    for (int i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& diag) {
    RationalMatrix out(static_cast<int>(diag.size()));
    for (int i = 0; i < out.size(); ++i) out(i, i) = diag[static_cast<std::size_t>(i)];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("matrix product of different sizes");
    RationalMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int m = 0; m < n_; ++m) {
            const Rational& a = (*this)(i, m);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += a * other(m, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("matrix difference of different sizes");
    RationalMatrix out(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Rational RationalMatrix::determinant() const {
    RationalMatrix a = *this;
    Rational det = 1;
    for (int col = 0; col < n_; ++col) {
        int pivot = col;
        while (pivot < n_ && a(pivot, col) == 0) ++pivot;
        if (pivot == n_) return 0;
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n_; ++r) {
            if (a(r, col) == 0) continue;
            const Rational factor = a(r, col) / a(col, col);
            for (int j = col; j < n_; ++j) a(r, j) -= factor * a(col, j);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const {
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = col;
        while (pivot < n_ && a(pivot, col) == 0) ++pivot;
        if (pivot == n_) throw std::domain_error("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Rational scale = Rational(1) / a(col, col);
        for (int j = 0; j < n_; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational factor = a(r, col);
            for (int j = 0; j < n_; ++j) {
                a(r, j) -= factor * a(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

RationalMatrix RationalMatrix::principal_submatrix(const std::vector<int>& indices) const {
    RationalMatrix out(static_cast<int>(indices.size()));
    for (int i = 0; i < out.size(); ++i)
        for (int j = 0; j < out.size(); ++j)
            out(i, j) = (*this)(indices[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(j)]);
    return out;
}

std::vector<std::vector<Rational>> RationalMatrix::rows() const {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    return out;
}

}  // namespace ffp
