// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "ffp/finfree.hpp"
#include "ffp/oracle.hpp"
#include "ffp/verify.hpp"

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace ffp;

namespace {

struct Criterion {
    int number;
    std::string title;
    double time_limit_seconds;  // 0 means no limit
    std::function<std::vector<CheckResult>(const VerifyOptions&)> run;
};

std::vector<Spectrum> grid(int d) {
    std::vector<Spectrum> out;
    std::vector<long> v(static_cast<std::size_t>(d), -2);
    while (true) {
        out.push_back(Spectrum::from_ints(v));
        int pos = 0;
        while (pos < d && ++v[static_cast<std::size_t>(pos)] > 2) v[static_cast<std::size_t>(pos++)] = -2;
        if (pos == d) break;
    }
    return out;
}

// Odd coefficients on every exact route: brute force, coefficient formula and
// convolution on the full d=2,3 grid and 50 sampled d=4 pairs; formula and
// convolution also on random pairs up to d=6.
CheckResult odd_coefficients(const VerifyOptions& opt) {
    CheckResult r{"odd coefficients vanish on every exact route", true, {}};
    long checked = 0;
    auto check_pair = [&](const Spectrum& a, const Spectrum& b, bool brute) {
        const MonicPoly poly = commutator_poly(MonicPoly::from_spectrum(a), MonicPoly::from_spectrum(b));
        for (int k = 1; k <= a.dim(); k += 2) {
            ++checked;
            bool ok = poly.a(k) == 0 && commutator_coefficient(k, a, b) == 0;
            if (brute) ok = ok && brute_force_expected_ek(a, b, k, opt.wg_source) == 0;
            if (!ok && r.passed) {
                r.passed = false;
                r.detail = "nonzero odd coefficient at d=" + std::to_string(a.dim()) + " k=" + std::to_string(k);
            }
        }
    };
    for (int d = 2; d <= 3; ++d) {
        const auto spectra = grid(d);
        for (const auto& a : spectra)
            for (const auto& b : spectra) check_pair(a, b, true);
    }
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<long> entry(-2, 2);
    auto random_spectrum = [&](int d) {
        std::vector<long> v;
        for (int i = 0; i < d; ++i) v.push_back(entry(rng));
        return Spectrum::from_ints(v);
    };
    for (int rep = 0; rep < 50; ++rep) {
        const Spectrum a = random_spectrum(4), b = random_spectrum(4);
        check_pair(a, b, true);
    }
    for (int d = 5; d <= 6; ++d)
        for (int rep = 0; rep < 200; ++rep) {
            const Spectrum a = random_spectrum(d), b = random_spectrum(d);
            check_pair(a, b, false);
        }
    if (r.passed) r.detail = std::to_string(checked) + " odd coefficients";
    return r;
}

// Wg_{2,d}(e) = E|u11 u22|^2 and Wg_{2,d}(t) = E u11 u22 conj(u12 u21).
CheckResult wg_two_point_mc(const VerifyOptions& opt) {
    CheckResult r{"Monte Carlo Wg_{2,d} two-point values, d=2..6", true, {}};
    double worst = 0.0;
    for (int d = 2; d <= 6; ++d) {
        const McReport rep = monte_carlo(d, opt.mc, {"Wg(e)", "Wg(t)"}, [](const ComplexMatrix& u, std::span<double> out) {
            out[0] = std::norm(u(0, 0) * u(1, 1));
            out[1] = (u(0, 0) * u(1, 1) * std::conj(u(0, 1) * u(1, 0))).real();
        });
        const double dd = d;
        const double exact[2] = {1.0 / (dd * dd - 1.0), -1.0 / (dd * (dd * dd - 1.0))};
        for (std::size_t i = 0; i < 2; ++i) {
            worst = std::max(worst, z_score(rep.mean[i], rep.std_error[i], exact[i]));
            if (!within_band(rep.mean[i], rep.std_error[i], exact[i]) && r.passed) {
                r.passed = false;
                r.detail = "d=" + std::to_string(d) + " " + rep.labels[i] + " outside 4 SE";
            }
        }
    }
    if (r.passed) r.detail = "max z " + std::to_string(worst);
    return r;
}

std::vector<CheckResult> one(CheckResult r) { return {std::move(r)}; }

}  // namespace

int main() {
    VerifyOptions opt;
    opt.mc.samples = 100000;

    const std::vector<Criterion> criteria{
        {1, "triple-route commutator equality", 120.0, [](const VerifyOptions& o) { return one(check_triple_route(o)); }},
        {2, "flagship value x^2 + 8/3 with Monte Carlo at n = 2e5", 30.0,
         [](const VerifyOptions& o) { return one(check_flagship(o)); }},
        {3, "odd-coefficient vanishing", 0.0, [](const VerifyOptions& o) { return one(odd_coefficients(o)); }},
        {4, "Weingarten correctness", 0.0,
         [](const VerifyOptions& o) {
             return std::vector<CheckResult>{check_wg_two_point(o), check_moments_exact(o), check_wg_gram_oracle(o),
                                             check_moments_mc(o), wg_two_point_mc(o)};
         }},
        {5, "immanant closed form and Goulden-Jackson extraction", 120.0,
         [](const VerifyOptions& o) { return std::vector<CheckResult>{check_imm_delta_minus(o), check_immanant_gj(o)}; }},
        {6, "C constants", 0.0, [](const VerifyOptions& o) { return one(check_c_constants(o)); }},
        {7, "identity suite", 0.0,
         [](const VerifyOptions& o) {
             return std::vector<CheckResult>{check_basis_transitions(o), check_padding(o),   check_split_chains(o),
                                             check_telescoping(o),       check_gould(o),     check_rothe_hagen(o),
                                             check_left_right_factors(o)};
         }},
        {8, "Haar sampler quality", 0.0,
         [](const VerifyOptions& o) { return std::vector<CheckResult>{check_haar_unitarity(o), check_haar_conjugation(o)}; }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        try {
            results = c.run(opt);
        } catch (const std::exception& e) {
            results.push_back({"(threw)", false, e.what()});
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool passed = true;
        for (const auto& r : results) {
            std::printf("    [%s] %s: %s\n", r.passed ? "ok" : "FAIL", r.name.c_str(), r.detail.c_str());
            passed = passed && r.passed;
        }
        if (c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
            std::printf("    [FAIL] runtime %.1f s exceeds %.0f s\n", seconds, c.time_limit_seconds);
            passed = false;
        }
        std::printf("%s criterion %d: %s (%.1f s)\n", passed ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds);
        std::fflush(stdout);
        failures += passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
