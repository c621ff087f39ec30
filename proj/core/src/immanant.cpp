#include "ffp/immanant.hpp"

#include "ffp/symfunc.hpp"
#include "ffp/symgroup.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace ffp {

RationalMatrix delta(const Spectrum& x, DeltaSign sign) {
    RationalMatrix out(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) out(i, j) = sign == DeltaSign::plus ? x[i] + x[j] : x[i] - x[j];
    return out;
}

std::map<Partition, Rational> immanants_direct_all(const RationalMatrix& y, int cap) {
    const int n = y.size();
    if (n > cap) throw CapExceeded("immanant: n = " + std::to_string(n) + " exceeds cap");

    // Sum of prod_i y_{i,sigma(i)} over each conjugacy class.
    std::map<Partition, Rational> class_sums;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<void(int, const Rational&)> rec = [&](int row, const Rational& product) {
        if (row == n) {
            class_sums[Permutation(images).cycle_type()] += product;
            return;
        }
        for (int col = 0; col < n; ++col) {
            if (used[static_cast<std::size_t>(col)] || y(row, col) == 0) continue;
            used[static_cast<std::size_t>(col)] = true;
            images[static_cast<std::size_t>(row)] = col;
            rec(row + 1, product * y(row, col));
            used[static_cast<std::size_t>(col)] = false;
        }
    };
    rec(0, Rational(1));

    std::map<Partition, Rational> out;
    for (const auto& lambda : partitions_of(n, kCharacterCap)) {
        Rational value = 0;
        for (const auto& [rho, sum] : class_sums) value += Rational(character(lambda, rho)) * sum;
        out.emplace(lambda, std::move(value));
    }
    return out;
}

Rational immanant_direct(const Partition& lambda, const RationalMatrix& y, int cap) {
    if (lambda.size() != y.size()) throw std::invalid_argument("immanant: |lambda| must equal the matrix size");
    return immanants_direct_all(y, cap).at(lambda);
}

Rational permanent_delta_minus(const Spectrum& x) {
    const int k = x.dim();
    const auto e = elementary_all(x);
    Rational total = 0;
    for (int l = 0; l <= k; ++l) {
        Rational term = Rational(factorial(k - l) * factorial(l)) * e[static_cast<std::size_t>(k - l)] *
                        e[static_cast<std::size_t>(l)];
        total += (l % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

Rational imm_delta_minus(const Partition& lambda, const Spectrum& x) {
    if (lambda.size() != x.dim()) throw std::invalid_argument("imm_delta_minus: |lambda| must equal dim X");
    if (lambda.length() > 2) return 0;
    const Rational perm = permanent_delta_minus(x);
    return lambda.part(1) % 2 == 0 ? perm : Rational(-perm);
}

MonicPoly charpoly_by_minors(const RationalMatrix& m) {
    const int n = m.size();
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
    a[0] = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> indices;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) indices.push_back(i);
        a[indices.size()] += m.principal_submatrix(indices).determinant();
    }
    return MonicPoly(std::move(a));
}

namespace {

void check_z_delta_args(const Spectrum& x, const Spectrum& z) {
    if (x.dim() != z.dim()) throw std::invalid_argument("charpoly_z_delta: X and Z differ in size");
    if (x.dim() < 2) throw std::invalid_argument("charpoly_z_delta requires k >= 2");
}

}  // namespace

MonicPoly charpoly_z_delta(const Spectrum& x, const Spectrum& z) {
    check_z_delta_args(x, z);
    const int k = x.dim();
    Rational s = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Rational diff = x[i] - x[j];
            s += z[i] * z[j] * diff * diff;
        }
    std::vector<Rational> a(static_cast<std::size_t>(k) + 1, Rational(0));
    a[0] = 1;
    a[2] = s;  // signed coefficient of t^{k-2} is (+1) a_2
    return MonicPoly(std::move(a));
}

MonicPoly charpoly_z_delta_direct(const Spectrum& x, const Spectrum& z) {
    check_z_delta_args(x, z);
    return charpoly_by_minors(RationalMatrix::diagonal(z.values()) * delta(x, DeltaSign::minus));
}

Rational schur_of_eigenvalues(const Partition& lambda, const RationalMatrix& m) {
    const int n = m.size();
    std::vector<Rational> power_sums(static_cast<std::size_t>(n) + 1, Rational(0));
    RationalMatrix power = RationalMatrix::identity(n);
    for (int j = 1; j <= n; ++j) {
        power = power * m;
        power_sums[static_cast<std::size_t>(j)] = power.trace();
    }
    const auto e = elementary_from_power_sums(power_sums, n);
    auto e_at = [&](int idx) { return (idx < 0 || idx > n) ? Rational(0) : e[static_cast<std::size_t>(idx)]; };
    const Partition conj = lambda.transpose();
    const int size = conj.length();
    RationalMatrix jt(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) jt(i, j) = e_at(conj.part(i) - i + j);
    return size == 0 ? Rational(1) : jt.determinant();
}

Rational immanant_gj(const Partition& lambda, const RationalMatrix& y, int cap) {
    const int n = y.size();
    if (lambda.size() != n) throw std::invalid_argument("immanant_gj: |lambda| must equal the matrix size");
    if (n > cap) throw CapExceeded("immanant_gj: n = " + std::to_string(n) + " exceeds cap");
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        RationalMatrix zy(n);
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = 0; j < n; ++j) zy(i, j) = y(i, j);
        }
        const Rational value = schur_of_eigenvalues(lambda, zy);
        const int missing = n - std::popcount(mask);
        total += missing % 2 == 0 ? value : Rational(-value);
    }
    return total;
}

}  // namespace ffp
