#include "ffp/immanant.hpp"

#include "ffp/symgroup.hpp"

#include <doctest.h>

#include <random>

using namespace ffp;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, int n) {
    RationalMatrix m(n);
    std::uniform_int_distribution<long> dist(-3, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

Spectrum random_spectrum(std::mt19937_64& rng, int d) {
    std::vector<long> v;
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int i = 0; i < d; ++i) v.push_back(dist(rng));
    return Spectrum::from_ints(v);
}

Rational permanent(const RationalMatrix& y) {
    Rational total = 0;
    for (const auto& sigma : all_permutations(y.size())) {
        Rational prod = 1;
        for (int i = 0; i < y.size(); ++i) prod *= y(i, sigma(i));
        total += prod;
    }
    return total;
}

}  // namespace

TEST_CASE("delta matrices") {
    const RationalMatrix minus = delta(Spectrum{3, 1}, DeltaSign::minus);
    CHECK(minus == RationalMatrix({{0, 2}, {-2, 0}}));
    CHECK(delta(Spectrum{1, 2}, DeltaSign::plus) == RationalMatrix({{2, 3}, {3, 4}}));
    CHECK(delta(Spectrum{5, 5, 5}, DeltaSign::minus) == RationalMatrix(3));
}

TEST_CASE("immanants specialize to determinant and permanent") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            const RationalMatrix y = random_matrix(rng, n);
            CHECK(immanant_direct(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), y) == y.determinant());
            CHECK(immanant_direct(Partition{n}, y) == permanent(y));
            const auto all = immanants_direct_all(y);
            for (const auto& lambda : partitions_of(n)) CHECK(all.at(lambda) == immanant_direct(lambda, y));
        }
    CHECK(immanant_direct(Partition{2}, delta(Spectrum{3, 1}, DeltaSign::minus)) == -4);
    CHECK_THROWS_AS(immanant_direct(Partition{10}, RationalMatrix(10)), CapExceeded);
    CHECK_THROWS(immanant_direct(Partition{2, 1}, RationalMatrix(2)));
}

TEST_CASE("immanants of delta_minus in closed form") {
    CHECK(imm_delta_minus(Partition{2}, Spectrum{3, 1}) == -4);
    CHECK(imm_delta_minus(Partition{1, 1}, Spectrum{3, 1}) == 4);
    CHECK(imm_delta_minus(Partition{1, 1, 1}, Spectrum{1, 2, 4}) == 0);
    std::mt19937_64 rng(19);
    for (int k = 1; k <= 6; ++k)
        for (int trial = 0; trial < 3; ++trial) {
            const Spectrum x = random_spectrum(rng, k);
            const RationalMatrix y = delta(x, DeltaSign::minus);
            CHECK(permanent_delta_minus(x) == permanent(y));
            const auto all = immanants_direct_all(y);
            for (const auto& lambda : partitions_of(k)) {
                CHECK(imm_delta_minus(lambda, x) == all.at(lambda));
                if (lambda.length() >= 3) CHECK(all.at(lambda) == 0);
            }
        }
}

TEST_CASE("characteristic polynomial of Z delta_minus(X)") {
    CHECK(charpoly_z_delta(Spectrum{3, 1}, Spectrum{1, 1}).to_string() == "x^2 + 4");
    CHECK(charpoly_z_delta(Spectrum{1, 2, 4}, Spectrum{1, 1, 1}).to_string() == "x^3 + 14x");
    CHECK(charpoly_z_delta(Spectrum{5, 5, 5}, Spectrum{1, 2, 3}) == MonicPoly::monomial(3));
    CHECK_THROWS(charpoly_z_delta(Spectrum{1}, Spectrum{1}));
    std::mt19937_64 rng(23);
    for (int k = 2; k <= 6; ++k)
        for (int trial = 0; trial < 4; ++trial) {
            const Spectrum x = random_spectrum(rng, k);
            const Spectrum z = random_spectrum(rng, k);
            CHECK(charpoly_z_delta(x, z) == charpoly_z_delta_direct(x, z));
            const RationalMatrix zd = RationalMatrix::diagonal(z.values()) * delta(x, DeltaSign::minus);
            CHECK(charpoly_by_minors(zd) == charpoly_z_delta(x, z));
        }
}

TEST_CASE("Schur functions of eigenvalues") {
    const RationalMatrix d = RationalMatrix::diagonal({2, 3, 5});
    CHECK(schur_of_eigenvalues(Partition{1, 1}, d) == 6 + 10 + 15);
    CHECK(schur_of_eigenvalues(Partition{2}, d) == 4 + 9 + 25 + 6 + 10 + 15);
    CHECK(schur_of_eigenvalues(Partition{1, 1, 1, 1}, d) == 0);
}

TEST_CASE("Goulden-Jackson extraction equals the direct immanant") {
    CHECK(immanant_gj(Partition{1}, RationalMatrix(std::vector<std::vector<Rational>>{{7}})) == 7);
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            const RationalMatrix y = random_matrix(rng, n);
            for (const auto& lambda : partitions_of(n)) CHECK(immanant_gj(lambda, y) == immanant_direct(lambda, y));
        }
    CHECK_THROWS_AS(immanant_gj(Partition{6}, RationalMatrix(6)), CapExceeded);
}

TEST_CASE("sum over the dimension-weighted immanants") {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 5; ++n) {
        const RationalMatrix y = random_matrix(rng, n);
        Rational sum = 0;
        for (const auto& lambda : partitions_of(n)) sum += Rational(dim_irrep(lambda)) * immanant_direct(lambda, y);
        Rational diag = Rational(factorial(n));
        for (int i = 0; i < n; ++i) diag *= y(i, i);
        CHECK(sum == diag);
    }
}
