#pragma once

// Independent verifiers for the commutator theorem: an exact Weingarten-sum
// brute force, and Monte Carlo estimates over Haar-random unitaries.

#include "ffp/haar.hpp"
#include "ffp/rational.hpp"
#include "ffp/spectrum.hpp"
#include "ffp/weingarten.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ffp {

inline constexpr int kBruteForceDimCap = 4;
inline constexpr int kGramOracleCap = 4;

/// Wg_{k,d} as the identity row of the inverse of the Gram matrix
/// G(pi, tau) = d^{cycles(pi^{-1} tau)} over S_k. Requires 1 <= k <= d.
ClassFunction weingarten_gram_oracle(int k, int d, int cap = kGramOracleCap);

/// E_U e_k(A U B U* - U B U* A) for diagonal A, B, evaluated as
///   sum_{|S|=k} sum_{p:S->[d]} prod b_{p(i)} sum_{sigma in Sym(S)} sgn(sigma) prod (a_i - a_sigma(i))
///       sum_{tau in Sym(S), p o tau = p} Wg(sigma tau).
Rational brute_force_expected_ek(const Spectrum& A, const Spectrum& B, int k,
                                 const WeingartenSource& source = default_weingarten_source(),
                                 int cap = kBruteForceDimCap);

struct McConfig {
    std::uint64_t seed = 1;
    long samples = 100000;
    long chunk_size = 10000;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Per-observable sample means and standard errors (sample stddev / sqrt(n)).
struct McReport {
    std::vector<std::string> labels;
    std::vector<double> mean;
    std::vector<double> std_error;
    long samples = 0;
    std::uint64_t seed = 0;
    long chunk_size = 0;
    double max_unitarity_residual = 0.0;
};

/// Fills `out` with the observables of one Haar sample.
using Observable = std::function<void(const ComplexMatrix& u, std::span<double> out)>;

/// Runs config.samples Haar draws of dimension d split into chunks. Chunk c
/// draws from the stream (seed, c), and chunk statistics are merged in chunk
/// order, so the report does not depend on the thread count.
McReport monte_carlo(int d, const McConfig& config, const std::vector<std::string>& labels,
                     const Observable& observable);

/// Real parts of e_0..e_d of A U B U* - U B U* A, computed from Tr(M^j) by
/// Newton's identities.
McReport mc_commutator_charpoly(const Spectrum& A, const Spectrum& B, const McConfig& config);
/// e_0..e_d of A + U B U*.
McReport mc_sum_charpoly(const Spectrum& A, const Spectrum& B, const McConfig& config);
/// e_0..e_d of A U B U*.
McReport mc_product_charpoly(const Spectrum& A, const Spectrum& B, const McConfig& config);
/// |u_11|^2 and |u_11|^4.
McReport mc_u11_moments(int d, const McConfig& config);
/// Real and imaginary parts of every entry of U X U*, row-major: labels "re(i,j)", "im(i,j)".
McReport mc_conjugation_mean(const Spectrum& x, const McConfig& config);

/// Absolute slack added to every statistical band to absorb rounding when an
/// observable is identically zero per sample.
inline constexpr double kMcRoundingFloor = 1e-9;

/// |mean - exact| / se, reported as 0 when the difference is within the
/// rounding floor.
double z_score(double mean, double std_error, double exact);
/// |mean - exact| <= n_sigma * se + kMcRoundingFloor * (1 + |exact|).
bool within_band(double mean, double std_error, double exact, double n_sigma = 4.0);

}  // namespace ffp
