#include "ffp/identities.hpp"

#include <doctest.h>

#include <random>

using namespace ffp;

namespace {

Spectrum random_spectrum(std::mt19937_64& rng, int d) {
    std::vector<long> v;
    std::uniform_int_distribution<long> dist(-3, 3);
    for (int i = 0; i < d; ++i) v.push_back(dist(rng));
    return Spectrum::from_ints(v);
}

}  // namespace

TEST_CASE("left and right factors") {
    const DualValue left = identity_leftdep(Spectrum{1, -1}, 2);
    CHECK(left.agree());
    CHECK(left.closed == -2);
    const DualValue right = identity_rightdep(Spectrum{1, -1}, 2);
    CHECK(right.agree());
    CHECK(left.closed * right.closed == Rational(8, 3));
    CHECK(identity_leftdep(Spectrum{1, 2, 3}, 0).raw == 1);
    CHECK(identity_rightdep(Spectrum{1, 2, 3}, 0).agree());
    CHECK_THROWS(identity_rightdep(Spectrum{1, 2, 3}, 1));
    CHECK_THROWS_AS(identity_leftdep(Spectrum::from_ints(std::vector<long>(9, 1)), 2), CapExceeded);

    std::mt19937_64 rng(53);
    for (int k = 0; k <= 6; ++k)
        for (int d = std::max(k, 1); d <= 8; ++d)
            for (int trial = 0; trial < 2; ++trial) {
                const Spectrum s = random_spectrum(rng, d);
                const DualValue l = identity_leftdep(s, k);
                CHECK(l.agree());
                if (k % 2 == 1) CHECK(l.raw == 0);
                if (k % 2 == 0) CHECK(identity_rightdep(s, k).agree());
            }
    for (int d = 2; d <= 6; ++d) {
        const Spectrum c = Spectrum::from_ints(std::vector<long>(static_cast<std::size_t>(d), 3));
        CHECK(identity_leftdep(c, 2).agree());
        CHECK(identity_rightdep(c, 2).agree());
    }
}

TEST_CASE("cited binomial identities") {
    for (int n = 0; n <= 8; ++n)
        for (int y = 1; y <= 12; ++y) CHECK(gould_binomial_identity(n, y).agree());
    for (int n = 1; n <= 8; ++n)
        for (int y = n; y <= n + 12; ++y) CHECK(rothe_hagen_identity(n, y).agree());
    CHECK(rothe_hagen_identity(2, 3).closed == 10);
    CHECK_THROWS(rothe_hagen_identity(3, 2));
}

TEST_CASE("telescoping identity") {
    CHECK(telescoping_identity(4, 0, 2).closed == 6);
    for (int k = 0; k <= 10; ++k)
        for (int q = 0; 2 * q <= k; ++q)
            for (int p = q; 2 * p <= k; ++p) CHECK(telescoping_identity(k, q, p).agree());
}

TEST_CASE("two-row and two-column transitions") {
    for (int k = 1; k <= 8; ++k) {
        for (int p = 0; 2 * p <= k; ++p) CHECK(em_two_row(k, p) == e_to_m(Partition::from_unsorted({k - p, p})));
        for (int q = 0; 2 * q <= k; ++q) CHECK(me_two_column(k, q) == m_to_e(Partition::two_column(k, q)));
        if (k % 2 == 0) CHECK(me_two_column_symmetric(k) == me_two_column(k, k / 2));
    }
}

TEST_CASE("padding identity") {
    CHECK(padding_identity(3, 1, Spectrum{1, 2}).raw == 0);
    CHECK(padding_identity(3, 1, Spectrum{1, 2}).agree());
    std::mt19937_64 rng(59);
    for (int k = 1; k <= 6; ++k)
        for (int q = 0; 2 * q <= k; ++q)
            for (int d = 1; d <= 8; ++d) CHECK(padding_identity(k, q, random_spectrum(rng, d)).agree());
}
