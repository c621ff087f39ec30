#include "ffp/oracle.hpp"

#include "ffp/matrix.hpp"
#include "ffp/symgroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace ffp {

// ---------------------------------------------------------------------------
// Exact oracles

ClassFunction weingarten_gram_oracle(int k, int d, int cap) {
    if (k > cap) throw CapExceeded("weingarten_gram_oracle: k exceeds cap");
    if (k < 1 || d < k) throw std::invalid_argument("weingarten_gram_oracle requires 1 <= k <= d");
    const auto perms = all_permutations(k);
    const int n = static_cast<int>(perms.size());
    RationalMatrix gram(n);
    for (int a = 0; a < n; ++a) {
        const Permutation inv = perms[static_cast<std::size_t>(a)].inverse();
        for (int b = 0; b < n; ++b)
            gram(a, b) = pow(Rational(d), (inv * perms[static_cast<std::size_t>(b)]).cycle_count());
    }
    const RationalMatrix wg = gram.inverse();
    // all_permutations starts with the identity
    ClassFunction out(k);
    for (int b = 0; b < n; ++b) out.set(perms[static_cast<std::size_t>(b)].cycle_type(), wg(0, b));
    return out;
}

namespace {

void subsets_of_size(int d, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == k) {
            visit(subset);
            return;
        }
        for (int v = lo; v <= d - (k - pos); ++v) {
            subset[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

Rational brute_force_expected_ek(const Spectrum& A, const Spectrum& B, int k, const WeingartenSource& source,
                                 int cap) {
    if (A.dim() != B.dim()) throw std::invalid_argument("brute_force_expected_ek: spectra of different sizes");
    const int d = A.dim();
    if (d > cap) throw CapExceeded("brute_force_expected_ek: d = " + std::to_string(d) + " exceeds cap");
    if (k < 0 || k > d) throw std::invalid_argument("brute_force_expected_ek requires 0 <= k <= d");
    if (k == 0) return 1;

    const auto perms = all_permutations(k);
    const ClassFunction wg = source(k, d);
    // Wg(sigma tau) for every ordered pair, looked up once.
    std::vector<std::vector<Rational>> wg_product(perms.size());
    for (std::size_t s = 0; s < perms.size(); ++s)
        for (const auto& tau : perms) wg_product[s].push_back(wg(perms[s] * tau));

    Rational total = 0;
    subsets_of_size(d, k, [&](const std::vector<int>& subset) {
        // weight(sigma) = sgn(sigma) prod_{i in S} (a_i - a_{sigma(i)})
        std::vector<Rational> weight(perms.size());
        for (std::size_t s = 0; s < perms.size(); ++s) {
            Rational w = perms[s].sign();
            for (int i = 0; i < k && w != 0; ++i)
                w *= A[subset[static_cast<std::size_t>(i)]] - A[subset[static_cast<std::size_t>(perms[s](i))]];
            weight[s] = std::move(w);
        }
        // inner(tau) = sum_sigma weight(sigma) Wg(sigma tau)
        std::vector<Rational> inner(perms.size(), Rational(0));
        for (std::size_t s = 0; s < perms.size(); ++s) {
            if (weight[s] == 0) continue;
            for (std::size_t t = 0; t < perms.size(); ++t) inner[t] += weight[s] * wg_product[s][t];
        }
        // sum over p : S -> [d]
        std::vector<int> p(static_cast<std::size_t>(k), 0);
        while (true) {
            Rational b_product = 1;
            for (int i = 0; i < k; ++i) b_product *= B[p[static_cast<std::size_t>(i)]];
            if (b_product != 0) {
                Rational stabilizer_sum = 0;
                for (std::size_t t = 0; t < perms.size(); ++t) {
                    bool fixes = true;
                    for (int i = 0; i < k && fixes; ++i)
                        fixes = p[static_cast<std::size_t>(perms[t](i))] == p[static_cast<std::size_t>(i)];
                    if (fixes) stabilizer_sum += inner[t];
                }
                total += b_product * stabilizer_sum;
            }
            int pos = 0;
            while (pos < k && ++p[static_cast<std::size_t>(pos)] == d) p[static_cast<std::size_t>(pos++)] = 0;
            if (pos == k) break;
        }
    });
    return total;
}

// ---------------------------------------------------------------------------
// Monte Carlo

namespace {

struct RunningStats {
    long count = 0;
    std::vector<double> mean;
    std::vector<double> m2;
    double max_residual = 0.0;

    explicit RunningStats(std::size_t n = 0) : mean(n, 0.0), m2(n, 0.0) {}

    void push(std::span<const double> x) {
        ++count;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double delta = x[i] - mean[i];
            mean[i] += delta / static_cast<double>(count);
            m2[i] += delta * (x[i] - mean[i]);
        }
    }

    void merge(const RunningStats& other) {
        if (other.count == 0) return;
        const double n_a = static_cast<double>(count);
        const double n_b = static_cast<double>(other.count);
        const double n = n_a + n_b;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double delta = other.mean[i] - mean[i];
            mean[i] += delta * n_b / n;
            m2[i] += other.m2[i] + delta * delta * n_a * n_b / n;
        }
        count += other.count;
        max_residual = std::max(max_residual, other.max_residual);
    }
};

std::vector<double> to_doubles(const Spectrum& s) {
    std::vector<double> out;
    for (const auto& v : s.values()) out.push_back(to_double(v));
    return out;
}

// Real parts of e_0..e_d of m, through power sums.
void elementary_real_parts(const ComplexMatrix& m, std::span<double> out) {
    const int d = static_cast<int>(m.rows());
    std::vector<std::complex<double>> power_sums(static_cast<std::size_t>(d) + 1);
    ComplexMatrix power = ComplexMatrix::Identity(d, d);
    for (int j = 1; j <= d; ++j) {
        power = power * m;
        power_sums[static_cast<std::size_t>(j)] = power.trace();
    }
    const auto e = elementary_from_power_sums(power_sums, d);
    for (int k = 0; k <= d; ++k) out[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)].real();
}

std::vector<std::string> coefficient_labels(int d) {
    std::vector<std::string> labels;
    for (int k = 0; k <= d; ++k) labels.push_back("e" + std::to_string(k));
    return labels;
}

void check_pair(const Spectrum& A, const Spectrum& B) {
    if (A.dim() != B.dim()) throw std::invalid_argument("Monte Carlo: spectra of different sizes");
}

}  // namespace

McReport monte_carlo(int d, const McConfig& config, const std::vector<std::string>& labels,
                     const Observable& observable) {
    if (config.samples < 1) throw std::invalid_argument("Monte Carlo needs at least one sample");
    if (config.chunk_size < 1) throw std::invalid_argument("Monte Carlo chunk size must be positive");
    const long chunks = (config.samples + config.chunk_size - 1) / config.chunk_size;
    std::vector<RunningStats> per_chunk(static_cast<std::size_t>(chunks), RunningStats(labels.size()));

    auto run_chunk = [&](long c) {
        RandomStream stream(config.seed, static_cast<std::uint64_t>(c));
        const long begin = c * config.chunk_size;
        const long end = std::min(config.samples, begin + config.chunk_size);
        auto& stats = per_chunk[static_cast<std::size_t>(c)];
        std::vector<double> values(labels.size());
        for (long s = begin; s < end; ++s) {
            const ComplexMatrix u = haar_sample(d, stream);
            stats.max_residual = std::max(stats.max_residual, unitarity_residual(u));
            observable(u, values);
            stats.push(values);
        }
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<long>(threads, chunks));
    if (threads <= 1) {
        for (long c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (long c = t; c < chunks; c += threads) run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }

    RunningStats total(labels.size());
    for (const auto& stats : per_chunk) total.merge(stats);

    McReport report;
    report.labels = labels;
    report.mean = total.mean;
    report.samples = total.count;
    report.seed = config.seed;
    report.chunk_size = config.chunk_size;
    report.max_unitarity_residual = total.max_residual;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double variance = total.count > 1 ? total.m2[i] / static_cast<double>(total.count - 1) : 0.0;
        report.std_error.push_back(std::sqrt(variance / static_cast<double>(total.count)));
    }
    return report;
}

McReport mc_commutator_charpoly(const Spectrum& A, const Spectrum& B, const McConfig& config) {
    check_pair(A, B);
    const int d = A.dim();
    const auto a = to_doubles(A);
    const auto b = to_doubles(B);
    return monte_carlo(d, config, coefficient_labels(d), [&](const ComplexMatrix& u, std::span<double> out) {
        // W = U B U*;  M = A W - W A, with (A W)_ij = a_i W_ij and (W A)_ij = W_ij a_j.
        ComplexMatrix ub = u;
        for (int j = 0; j < d; ++j) ub.col(j) *= b[static_cast<std::size_t>(j)];
        const ComplexMatrix w = ub * u.adjoint();
        ComplexMatrix m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m(i, j) = a[static_cast<std::size_t>(i)] * w(i, j) - w(i, j) * a[static_cast<std::size_t>(j)];
        elementary_real_parts(m, out);
    });
}

McReport mc_sum_charpoly(const Spectrum& A, const Spectrum& B, const McConfig& config) {
    check_pair(A, B);
    const int d = A.dim();
    const auto a = to_doubles(A);
    const auto b = to_doubles(B);
    return monte_carlo(d, config, coefficient_labels(d), [&](const ComplexMatrix& u, std::span<double> out) {
        ComplexMatrix ub = u;
        for (int j = 0; j < d; ++j) ub.col(j) *= b[static_cast<std::size_t>(j)];
        ComplexMatrix m = ub * u.adjoint();
        for (int i = 0; i < d; ++i) m(i, i) += a[static_cast<std::size_t>(i)];
        elementary_real_parts(m, out);
    });
}

McReport mc_product_charpoly(const Spectrum& A, const Spectrum& B, const McConfig& config) {
    check_pair(A, B);
    const int d = A.dim();
    const auto a = to_doubles(A);
    const auto b = to_doubles(B);
    return monte_carlo(d, config, coefficient_labels(d), [&](const ComplexMatrix& u, std::span<double> out) {
        ComplexMatrix ub = u;
        for (int j = 0; j < d; ++j) ub.col(j) *= b[static_cast<std::size_t>(j)];
        ComplexMatrix m = ub * u.adjoint();
        for (int i = 0; i < d; ++i) m.row(i) *= a[static_cast<std::size_t>(i)];
        elementary_real_parts(m, out);
    });
}

McReport mc_u11_moments(int d, const McConfig& config) {
    return monte_carlo(d, config, {"|u11|^2", "|u11|^4"}, [](const ComplexMatrix& u, std::span<double> out) {
        const double sq = std::norm(u(0, 0));
        out[0] = sq;
        out[1] = sq * sq;
    });
}

McReport mc_conjugation_mean(const Spectrum& x, const McConfig& config) {
    const int d = x.dim();
    const auto diag = to_doubles(x);
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto idx = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            labels.push_back("re" + idx);
            labels.push_back("im" + idx);
        }
    return monte_carlo(d, config, labels, [&](const ComplexMatrix& u, std::span<double> out) {
        ComplexMatrix ux = u;
        for (int j = 0; j < d; ++j) ux.col(j) *= diag[static_cast<std::size_t>(j)];
        const ComplexMatrix m = ux * u.adjoint();
        std::size_t n = 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                out[n++] = m(i, j).real();
                out[n++] = m(i, j).imag();
            }
    });
}

double z_score(double mean, double std_error, double exact) {
    const double diff = std::abs(mean - exact);
    if (diff <= kMcRoundingFloor * (1.0 + std::abs(exact))) return 0.0;
    if (std_error == 0.0) return std::numeric_limits<double>::infinity();
    return diff / std_error;
}

bool within_band(double mean, double std_error, double exact, double n_sigma) {
    return std::abs(mean - exact) <= n_sigma * std_error + kMcRoundingFloor * (1.0 + std::abs(exact));
}

}  // namespace ffp
