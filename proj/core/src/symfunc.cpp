#include "ffp/symfunc.hpp"

#include "ffp/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ffp {

const char* basis_name(Basis b) { return b == Basis::monomial ? "monomial" : "elementary"; }

Basis parse_basis(const std::string& name) {
    if (name == "monomial") return Basis::monomial;
    if (name == "elementary") return Basis::elementary;
    throw std::invalid_argument("unknown basis '" + name + "'");
}

Rational SymExpansion::coefficient(const Partition& lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymExpansion::add(const Partition& lambda, const Rational& c) {
    if (lambda.size() != degree_)
        throw std::invalid_argument("SymExpansion: " + lambda.to_string() + " has the wrong degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SymExpansion::evaluate(const Spectrum& x) const {
    Rational total = 0;
    for (const auto& [lambda, c] : terms_)
        total += c * (basis_ == Basis::monomial ? eval_monomial(lambda, x) : eval_elementary(lambda, x));
    return total;
}

std::vector<Rational> elementary_all(const Spectrum& x) {
    std::vector<Rational> e(static_cast<std::size_t>(x.dim()) + 1, Rational(0));
    e[0] = 1;
    for (int i = 0; i < x.dim(); ++i)
        for (int j = i + 1; j >= 1; --j) e[static_cast<std::size_t>(j)] += x[i] * e[static_cast<std::size_t>(j - 1)];
    return e;
}

Rational elementary(int j, const Spectrum& x) {
    if (j < 0 || j > x.dim()) return 0;
    return elementary_all(x)[static_cast<std::size_t>(j)];
}

Rational eval_monomial(const Partition& lambda, const Spectrum& x) {
    if (lambda.length() > x.dim()) return 0;
    std::vector<int> exponents(static_cast<std::size_t>(x.dim()), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exponents.begin());
    std::sort(exponents.begin(), exponents.end());
    Rational total = 0;
    do {
        Rational term = 1;
        for (int i = 0; i < x.dim(); ++i) term *= pow(x[i], exponents[static_cast<std::size_t>(i)]);
        total += term;
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    return total;
}

Rational eval_elementary(const Partition& lambda, const Spectrum& x) {
    const auto e = elementary_all(x);
    Rational out = 1;
    for (int part : lambda.parts()) {
        if (part > x.dim()) return 0;
        out *= e[static_cast<std::size_t>(part)];
    }
    return out;
}

SymExpansion e_to_m(const Partition& lambda, int cap) {
    const int k = lambda.size();
    if (k > cap) throw CapExceeded("e_to_m: degree exceeds cap");
    const auto parts = partitions_of(k, cap);
    const auto& K = kostka_matrix(k);
    auto index = [&](const Partition& p) {
        return static_cast<std::size_t>(std::find(parts.begin(), parts.end(), p) - parts.begin());
    };
    const std::size_t li = index(lambda);
    SymExpansion out(Basis::monomial, k);
    for (std::size_t mi = 0; mi < parts.size(); ++mi) {
        Integer c = 0;
        for (std::size_t ni = 0; ni < parts.size(); ++ni) c += K[ni][li] * K[index(parts[ni].transpose())][mi];
        out.add(parts[mi], Rational(c));
    }
    return out;
}

SymExpansion m_to_e(const Partition& lambda, int cap) {
    const int k = lambda.size();
    if (k > cap) throw CapExceeded("m_to_e: degree exceeds cap");
    const auto parts = partitions_of(k, cap);
    const auto& Kinv = inverse_kostka_matrix(k);
    auto index = [&](const Partition& p) {
        return static_cast<std::size_t>(std::find(parts.begin(), parts.end(), p) - parts.begin());
    };
    const std::size_t li = index(lambda);
    SymExpansion out(Basis::elementary, k);
    for (std::size_t mi = 0; mi < parts.size(); ++mi) {
        Integer c = 0;
        for (std::size_t ni = 0; ni < parts.size(); ++ni) c += Kinv[li][index(parts[ni].transpose())] * Kinv[mi][ni];
        out.add(parts[mi], Rational(c));
    }
    return out;
}

Rational eval_quasisym(const WeakComposition& index, const Spectrum& x) {
    const int len = index.length();
    const int d = x.dim();
    if (len > d) throw std::invalid_argument("eval_quasisym: composition longer than the spectrum");
    // prefix[s] = sum over s_1 < ... < s_j <= s of the first j factors
    std::vector<Rational> prefix(static_cast<std::size_t>(d) + 1, Rational(1));
    for (int j = 0; j < len; ++j) {
        std::vector<Rational> next(static_cast<std::size_t>(d) + 1, Rational(0));
        for (int s = 1; s <= d; ++s)
            next[static_cast<std::size_t>(s)] =
                next[static_cast<std::size_t>(s - 1)] + prefix[static_cast<std::size_t>(s - 1)] * pow(x[s - 1], index[j]);
        prefix = std::move(next);
    }
    return prefix[static_cast<std::size_t>(d)];
}

Rational schur_principal(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("schur_principal requires d >= 1");
    Rational out(dim_irrep(lambda), factorial(lambda.size()));
    for (int c : hooks_and_contents(lambda).contents) out *= d + c;
    return out;
}

Rational schur_principal_two_column(int k, int p, int d) {
    if (p < 0 || 2 * p > k) throw std::invalid_argument("schur_principal_two_column requires 0 <= p <= k/2");
    return Rational(Integer(k - 2 * p + 1) * falling_factorial(d + 1, p) * falling_factorial(d, k - p),
                    factorial(p) * factorial(k - p + 1));
}

Rational schur_by_tableaux(const Partition& lambda, const Spectrum& x) {
    Rational total = 0;
    for_each_ssyt(lambda, x.dim(), WeakComposition(), [&](const Tableau& t) {
        Rational term = 1;
        for (const auto& row : t.rows)
            for (int e : row) term *= x[e - 1];
        total += term;
    });
    return total;
}

Rational schur_rank_two(const Partition& lambda, const Rational& alpha, const Rational& beta) {
    if (lambda.length() > 2) return 0;
    const int k = lambda.size();
    const int l1 = lambda.part(0);
    const int l2 = lambda.part(1);
    Rational total = 0;
    for (int t = 0; t <= l1 - l2; ++t) total += pow(alpha, k - l2 - t) * pow(beta, l2 + t);
    return total;
}

Rational kernel_sum(const SetPartition& pi, const Spectrum& b, int cap) {
    if (pi.size() > cap) throw CapExceeded("kernel_sum: k exceeds cap");
    const int m = pi.block_count();
    const int d = b.dim();
    std::vector<int> assignment(static_cast<std::size_t>(m));
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    Rational total = 0;
    std::function<void(int)> rec = [&](int block) {
        if (block == m) {
            Rational term = 1;
            for (int i = 1; i <= pi.size(); ++i) term *= b[assignment[static_cast<std::size_t>(pi.block_of(i))]];
            total += term;
            return;
        }
        for (int v = 0; v < d; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            assignment[static_cast<std::size_t>(block)] = v;
            rec(block + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(0);
    return total;
}

Rational kernel_sum_closed(const Partition& mu, const Spectrum& b) {
    const Integer multiplier = factorial(mu.length()) / orbit_size(WeakComposition(mu.parts()));
    return Rational(multiplier) * eval_monomial(mu, b);
}

}  // namespace ffp
