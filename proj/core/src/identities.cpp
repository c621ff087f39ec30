#include "ffp/identities.hpp"

#include "ffp/symgroup.hpp"

#include <functional>
#include <stdexcept>

namespace ffp {

namespace {

Rational fact(int n) { return Rational(factorial(n)); }
Rational binom(int n, int k) { return Rational(binomial(n, k)); }

// sum_{i+j=k} (-1)^i w(i, j) e_i e_j
Rational signed_pair_sum(const std::vector<Rational>& e, int k, const std::function<Rational(int, int)>& w) {
    Rational total = 0;
    for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        total += sign_power(i) * w(i, j) * e[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j)];
    }
    return total;
}

void check_range(const Spectrum& x, int k, int cap, const char* what) {
    if (x.dim() > cap) throw CapExceeded(std::string(what) + ": d exceeds cap");
    if (k < 0 || k > x.dim()) throw std::invalid_argument(std::string(what) + " requires 0 <= k <= d");
}

Partition two_row(int k, int r) { return Partition::from_unsorted({k - r, r}); }

}  // namespace

DualValue identity_leftdep(const Spectrum& A, int k, int cap) {
    check_range(A, k, cap, "identity_leftdep");
    const int d = A.dim();

    Rational raw = 0;
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(subset.size()) == k) {
            const auto e = elementary_all(A.restrict_to(subset));
            for (int l = 0; l <= k; ++l)
                raw += sign_power(l) * e[static_cast<std::size_t>(k - l)] * e[static_cast<std::size_t>(l)] /
                       binom(k, l);
            return;
        }
        for (int v = next; v < d; ++v) {
            subset.push_back(v);
            rec(v + 1);
            subset.pop_back();
        }
    };
    if (k == 0)
        raw = 1;
    else
        rec(0);

    Rational closed = 0;
    if (k % 2 == 0) {
        const auto e = elementary_all(A);
        const Rational scale = fact(k / 2) / fact(k) / (fact(d - k) * fact(d - k / 2));
        closed = scale * signed_pair_sum(e, k, [&](int i, int j) { return fact(d - i) * fact(d - j); });
    }
    return {raw, closed};
}

DualValue identity_rightdep(const Spectrum& B, int k, int cap) {
    check_range(B, k, cap, "identity_rightdep");
    if (k % 2 != 0) throw std::invalid_argument("identity_rightdep requires even k");
    const int d = B.dim();

    Rational raw = 0;
    for (int p = 0; p <= k / 2; ++p) {
        const Partition lambda = Partition::two_column(k, p);
        Rational inner = 0;
        for (int q = 0; q <= p; ++q) {
            const Partition mu = Partition::two_column(k, q);
            inner += c_constant_two_column(k, p, q) * fact(q) * fact(k - 2 * q) * eval_monomial(mu, B);
        }
        const Rational dim = Rational(dim_irrep(lambda));
        raw += sign_power(p) * dim * dim / schur_principal(lambda, d) * inner;
    }
    raw /= fact(k);

    const auto e = elementary_all(B);
    const Rational scale = fact(k) * Rational(d + 1 - k / 2) / (fact(d + 1) * fact(d));
    const Rational closed = scale * signed_pair_sum(e, k, [&](int i, int j) { return fact(d - i) * fact(d - j); });
    return {raw, closed};
}

DualValue gould_binomial_identity(int n, int y) {
    if (n < 0 || y < 0) throw std::invalid_argument("gould_binomial_identity requires n, y >= 0");
    Rational raw = 0;
    for (int s = 0; s <= 2 * n; ++s) raw += sign_power(s) * binom(2 * n, s) / binom(2 * n + 2 * y, s + y);
    const Rational closed = binom(2 * n, n) / (binom(y + n, n) * binom(2 * y + 2 * n, y + n));
    return {raw, closed};
}

DualValue rothe_hagen_identity(int n, int y) {
    if (n < 1 || y < n) throw std::invalid_argument("rothe_hagen_identity requires 1 <= n <= y");
    Rational raw = 0;
    for (int s = 0; s <= n; ++s) raw += Rational(n, n + s) * binom(n + s, s) * binom(y - s, n - s);
    return {raw, binom(n + y, n)};
}

DualValue telescoping_identity(int k, int q, int p) {
    if (q < 0 || q > p || 2 * p > k) throw std::invalid_argument("telescoping_identity requires 0 <= q <= p <= k/2");
    Rational raw = 0;
    for (int r = q; r <= p; ++r)
        raw += fact(k - 2 * q) * Rational(k - 2 * r + 1) / (fact(r - q) * fact(k - r - q + 1));
    return {raw, binom(k - 2 * q, p - q)};
}

SymExpansion em_two_row(int k, int p) {
    if (p < 0 || 2 * p > k) throw std::invalid_argument("em_two_row requires 0 <= p <= k/2");
    SymExpansion out(Basis::monomial, k);
    for (int q = 0; q <= p; ++q) out.add(Partition::two_column(k, q), binom(k - 2 * q, p - q));
    return out;
}

SymExpansion me_two_column(int k, int q) {
    if (q < 0 || 2 * q > k) throw std::invalid_argument("me_two_column requires 0 <= q <= k/2");
    SymExpansion out(Basis::elementary, k);
    if (2 * q < k) {
        for (int r = 0; r <= q; ++r) {
            const Rational c = binom(k - q - r, k - 2 * q) + binom(k - q - r - 1, k - 2 * q);
            out.add(two_row(k, r), sign_power(q + r) * c);
        }
    } else {
        out.add(two_row(k, k / 2), 1);
        for (int r = 0; r < k / 2; ++r) out.add(two_row(k, r), 2 * sign_power(k / 2 + r));
    }
    return out;
}

SymExpansion me_two_column_symmetric(int k) {
    if (k % 2 != 0) throw std::invalid_argument("me_two_column_symmetric requires even k");
    SymExpansion out(Basis::elementary, k);
    for (int i = 0; i <= k; ++i) out.add(two_row(k, k - i), sign_power(k / 2 + i));
    return out;
}

DualValue padding_identity(int k, int q, const Spectrum& x) {
    if (q < 0 || 2 * q > k) throw std::invalid_argument("padding_identity requires 0 <= q <= k/2");
    const int d = x.dim();
    std::vector<int> base(static_cast<std::size_t>(q), 2);
    base.insert(base.end(), static_cast<std::size_t>(k - 2 * q), 1);
    base.insert(base.end(), static_cast<std::size_t>(q), 0);

    Rational raw = 0;
    if (k <= d)
        for (const auto& index : orbit(WeakComposition(base))) raw += eval_quasisym(index, x);

    Rational closed = 0;
    if (d - (k - q) >= 0) closed = binom(d - (k - q), q) * eval_monomial(Partition::two_column(k, q), x);
    return {raw, closed};
}

}  // namespace ffp
