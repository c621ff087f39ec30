#pragma once

// Named invariant checks, grouped into suites for the command-line verifier
// and the acceptance tests.

#include "ffp/oracle.hpp"
#include "ffp/weingarten.hpp"

#include <string>
#include <vector>

namespace ffp {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyOptions {
    /// Seed, sample count and chunking for every Monte Carlo check. The
    /// flagship commutator check draws twice config.samples.
    McConfig mc;
    bool run_monte_carlo = true;
    /// Weingarten tables used by the moment and brute-force checks.
    WeingartenSource wg_source = default_weingarten_source();
};

// weingarten suite
CheckResult check_wg_two_point(const VerifyOptions& opt);
CheckResult check_wg_gram_oracle(const VerifyOptions& opt);
CheckResult check_wg_small_cases(const VerifyOptions& opt);
CheckResult check_moments_exact(const VerifyOptions& opt);
CheckResult check_moments_mc(const VerifyOptions& opt);
CheckResult check_haar_unitarity(const VerifyOptions& opt);
CheckResult check_haar_conjugation(const VerifyOptions& opt);

// immanant suite
CheckResult check_imm_delta_minus(const VerifyOptions& opt);
CheckResult check_immanant_gj(const VerifyOptions& opt);
CheckResult check_charpoly_z_delta(const VerifyOptions& opt);
CheckResult check_immanant_column_sum(const VerifyOptions& opt);

// identities suite
CheckResult check_basis_transitions(const VerifyOptions& opt);
CheckResult check_padding(const VerifyOptions& opt);
CheckResult check_split_chains(const VerifyOptions& opt);
CheckResult check_telescoping(const VerifyOptions& opt);
CheckResult check_gould(const VerifyOptions& opt);
CheckResult check_rothe_hagen(const VerifyOptions& opt);
CheckResult check_left_right_factors(const VerifyOptions& opt);
CheckResult check_c_constants(const VerifyOptions& opt);
CheckResult check_kostka_families(const VerifyOptions& opt);
CheckResult check_kernel_sums(const VerifyOptions& opt);

// commutator suite
CheckResult check_triple_route(const VerifyOptions& opt);
CheckResult check_flagship(const VerifyOptions& opt);
CheckResult check_commutator_mc(const VerifyOptions& opt);
CheckResult check_convolution_mc(const VerifyOptions& opt);

/// "weingarten", "immanant", "identities", "commutator".
std::vector<std::string> suite_names();
/// Runs one suite, or every suite for "all". Throws std::invalid_argument on
/// an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace ffp
