#pragma once

#include "ffp/rational.hpp"

#include <vector>

namespace ffp {

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
    /// Throws std::invalid_argument unless rows form a square matrix.
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

    static RationalMatrix identity(int n);
    static RationalMatrix diagonal(const std::vector<Rational>& diag);

    int size() const { return n_; }
    Rational& operator()(int i, int j) { return entries_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }

    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator-(const RationalMatrix& other) const;
    Rational trace() const;
    /// Gaussian elimination over the rationals.
    Rational determinant() const;
    /// Throws std::domain_error when singular.
    RationalMatrix inverse() const;
    /// Rows and columns restricted to the given 0-based indices.
    RationalMatrix principal_submatrix(const std::vector<int>& indices) const;

    std::vector<std::vector<Rational>> rows() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<Rational> entries_;
};

/// Newton's identities: e_0..e_n from power sums p_1..p_n (p[0] is ignored).
template <class Scalar>
std::vector<Scalar> elementary_from_power_sums(const std::vector<Scalar>& power_sums, int n) {
    std::vector<Scalar> e(static_cast<std::size_t>(n) + 1, Scalar(0));
    e[0] = Scalar(1);
    for (int m = 1; m <= n; ++m) {
        Scalar acc(0);
        for (int i = 1; i <= m; ++i) {
            const Scalar term = e[static_cast<std::size_t>(m - i)] * power_sums[static_cast<std::size_t>(i)];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        e[static_cast<std::size_t>(m)] = acc / Scalar(m);
    }
    return e;
}

}  // namespace ffp
