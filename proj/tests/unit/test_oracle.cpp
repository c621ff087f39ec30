#include "ffp/oracle.hpp"

#include "ffp/finfree.hpp"

#include <doctest.h>

#include <cmath>

using namespace ffp;

TEST_CASE("brute-force expected e_k") {
    CHECK(brute_force_expected_ek(Spectrum{1, -1}, Spectrum{1, -1}, 2) == Rational(8, 3));
    CHECK(brute_force_expected_ek(Spectrum{1, -1}, Spectrum{1, -1}, 1) == 0);
    CHECK(brute_force_expected_ek(Spectrum{1, -1}, Spectrum{1, -1}, 0) == 1);
    for (int k = 1; k <= 3; ++k) CHECK(brute_force_expected_ek(Spectrum{4, 4, 4}, Spectrum{1, 2, 3}, k) == 0);
    const Spectrum a{2, 1, -1, 0}, b{0, 1, 2, -2};
    for (int k = 0; k <= 4; ++k) CHECK(brute_force_expected_ek(a, b, k) == commutator_coefficient(k, a, b));
    CHECK_THROWS_AS(brute_force_expected_ek(Spectrum{1, 2, 3, 4, 5}, Spectrum{1, 2, 3, 4, 5}, 2), CapExceeded);
}

TEST_CASE("a wrong Weingarten table changes the brute force") {
    const WeingartenSource wrong = [](int k, int d) {
        ClassFunction f = weingarten(k, d);
        if (k == 2) f.set(Partition{1, 1}, Rational(1, 2));
        return f;
    };
    CHECK(brute_force_expected_ek(Spectrum{1, -1}, Spectrum{1, -1}, 2, wrong) != Rational(8, 3));
}

TEST_CASE("Haar samples") {
    RandomStream s1(5, 0), s2(5, 0), s3(5, 1);
    const ComplexMatrix u1 = haar_sample(4, s1), u2 = haar_sample(4, s2), u3 = haar_sample(4, s3);
    CHECK(u1 == u2);
    CHECK(u1 != u3);
    CHECK(haar_sample(3, 9) == haar_sample(3, 9));
    CHECK(std::abs(std::abs(haar_sample(1, 3)(0, 0)) - 1.0) < 1e-12);
    for (int d : {1, 2, 5, 20, 50}) CHECK(unitarity_residual(haar_sample(d, 11)) < 1e-10);
}

TEST_CASE("statistics helpers") {
    CHECK(z_score(1.0, 0.5, 2.0) == doctest::Approx(2.0));
    CHECK(z_score(1.0, 0.0, 1.0) == 0.0);
    CHECK(std::isinf(z_score(1.0, 0.0, 2.0)));
    CHECK(within_band(1.0, 0.25, 2.0));
    CHECK_FALSE(within_band(1.0, 0.2, 2.0));
    CHECK(within_band(1e-12, 0.0, 0.0));
}

TEST_CASE("Monte Carlo reports are deterministic across thread counts") {
    McConfig cfg;
    cfg.seed = 3;
    cfg.samples = 4000;
    cfg.chunk_size = 700;
    cfg.threads = 1;
    const McReport serial = mc_commutator_charpoly(Spectrum{1, -1, 2}, Spectrum{0, 1, 3}, cfg);
    cfg.threads = 4;
    const McReport parallel = mc_commutator_charpoly(Spectrum{1, -1, 2}, Spectrum{0, 1, 3}, cfg);
    CHECK(serial.mean == parallel.mean);
    CHECK(serial.std_error == parallel.std_error);
    CHECK(serial.samples == 4000);
    CHECK(serial.seed == 3);
    CHECK(serial.chunk_size == 700);
    CHECK(serial.labels.size() == 4);
    cfg.seed = 4;
    CHECK(mc_commutator_charpoly(Spectrum{1, -1, 2}, Spectrum{0, 1, 3}, cfg).mean != serial.mean);
}

TEST_CASE("standard error is the sample stddev over sqrt(n)") {
    McConfig cfg;
    cfg.samples = 1000;
    cfg.chunk_size = 128;
    const McReport r = monte_carlo(1, cfg, {"x"}, [](const ComplexMatrix& u, std::span<double> out) { out[0] = u(0, 0).real(); });
    // re(u) for a uniform phase has variance 1/2
    CHECK(r.std_error[0] == doctest::Approx(std::sqrt(0.5 / 1000)).epsilon(0.1));
    CHECK(std::abs(r.mean[0]) < 4 * r.std_error[0]);
    CHECK(r.max_unitarity_residual < 1e-12);
}

TEST_CASE("Monte Carlo agrees with the exact commutator polynomial") {
    McConfig cfg;
    cfg.samples = 20000;
    cfg.seed = 8;
    const Spectrum a{1, -1}, b{1, -1};
    const McReport r = mc_commutator_charpoly(a, b, cfg);
    const MonicPoly exact = commutator_poly(MonicPoly::from_spectrum(a), MonicPoly::from_spectrum(b));
    for (int k = 0; k <= 2; ++k) CHECK(within_band(r.mean[static_cast<std::size_t>(k)], r.std_error[static_cast<std::size_t>(k)], exact.a(k).convert_to<double>()));
    // the trace of a commutator vanishes on every sample
    CHECK(r.std_error[1] < 1e-9);

    const McReport scalar = mc_commutator_charpoly(Spectrum{2, 2, 2}, Spectrum{1, 0, 5}, cfg);
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(scalar.mean[static_cast<std::size_t>(k)]) < 1e-9);
}

TEST_CASE("Monte Carlo moments and conjugation") {
    McConfig cfg;
    cfg.samples = 20000;
    for (int d : {2, 3}) {
        const McReport m = mc_u11_moments(d, cfg);
        CHECK(within_band(m.mean[0], m.std_error[0], 1.0 / d));
        CHECK(within_band(m.mean[1], m.std_error[1], 2.0 / (d * (d + 1))));
    }
    const Spectrum x{1, 2, 6};
    const McReport c = mc_conjugation_mean(x, cfg);
    CHECK(c.labels.size() == 18);
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
        const bool diag_re = c.labels[i] == "re(1,1)" || c.labels[i] == "re(2,2)" || c.labels[i] == "re(3,3)";
        CHECK(within_band(c.mean[i], c.std_error[i], diag_re ? 3.0 : 0.0));
    }
}
