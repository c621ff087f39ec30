#include "ffp/weingarten.hpp"

#include "ffp/oracle.hpp"

#include <doctest.h>

using namespace ffp;

namespace {

IndexMap ones(int k) { return IndexMap(std::vector<int>(static_cast<std::size_t>(k), 1)); }

}  // namespace

TEST_CASE("Wg for k = 1 and k = 2") {
    for (int d = 1; d <= 8; ++d) CHECK(weingarten(1, d)(Partition{1}) == Rational(1, d));
    for (int d = 2; d <= 8; ++d) {
        const Rational dd(d);
        CHECK(weingarten(2, d)(Partition{1, 1}) == 1 / (dd * dd - 1));
        CHECK(weingarten(2, d)(Partition{2}) == -1 / (dd * (dd * dd - 1)));
    }
    CHECK(weingarten(2, 1)(Partition{1, 1}) == Rational(1, 4));
    CHECK(weingarten(2, 1)(Partition{2}) == Rational(1, 4));
}

TEST_CASE("Wg for k = 3 matches the known closed forms") {
    for (int d = 3; d <= 8; ++d) {
        const Rational dd(d);
        const Rational denom = dd * (dd * dd - 1) * (dd * dd - 4);
        const ClassFunction& wg = weingarten(3, d);
        CHECK(wg(Partition{1, 1, 1}) == (dd * dd - 2) / denom);
        CHECK(wg(Partition{2, 1}) == -1 / ((dd * dd - 1) * (dd * dd - 4)));
        CHECK(wg(Partition{3}) == 2 / denom);
    }
}

TEST_CASE("Schur expansion agrees with the Gram-matrix inverse") {
    for (int k = 1; k <= 4; ++k)
        for (int d = k; d <= 7; ++d) CHECK(weingarten_gram_oracle(k, d) == weingarten(k, d));
    CHECK_THROWS_AS(weingarten_gram_oracle(5, 5), CapExceeded);
    CHECK_THROWS_AS(weingarten_gram_oracle(3, 2), std::invalid_argument);
}

TEST_CASE("Wg as a class function") {
    const ClassFunction& wg = weingarten(3, 4);
    CHECK(wg.k() == 3);
    CHECK(wg.values().size() == 3);
    CHECK(wg(Permutation::from_one_based({2, 3, 1})) == wg(Partition{3}));
    CHECK_THROWS(wg(Partition{2, 2}));
    ClassFunction f(2);
    CHECK(f(Partition{2}) == 0);
    f.set(Partition{2}, Rational(3));
    CHECK(f(Partition{2}) == 3);
    CHECK_THROWS(f.set(Partition{3}, Rational(1)));
}

TEST_CASE("Haar moments from Weingarten sums") {
    for (int d = 1; d <= 6; ++d) {
        CHECK(integrate_moment(ones(1), ones(1), ones(1), ones(1), d) == Rational(1, d));
        CHECK(integrate_moment(ones(2), ones(2), ones(2), ones(2), d) == Rational(2, d * (d + 1)));
        CHECK(integrate_moment(ones(3), ones(3), ones(3), ones(3), d) == Rational(6, d * (d + 1) * (d + 2)));
        CHECK(integrate_moment(ones(2), ones(2), ones(1), ones(1), d) == 0);
    }
    for (int d = 2; d <= 6; ++d) {
        // E u_11 u_22 conj(u_12 u_21) = Wg(transposition)
        CHECK(integrate_moment(IndexMap{1, 2}, IndexMap{1, 2}, IndexMap{1, 2}, IndexMap{2, 1}, d) == weingarten(2, d)(Partition{2}));
        // E |u_11|^2 |u_22|^2 = Wg(e)
        CHECK(integrate_moment(IndexMap{1, 2}, IndexMap{1, 2}, IndexMap{1, 2}, IndexMap{1, 2}, d) == weingarten(2, d)(Partition{1, 1}));
        // rows are unit vectors: sum_j E|u_1j|^2 |u_11|^2 ... reduces to E|u_11|^2 = 1/d
        Rational row = 0;
        for (int j = 1; j <= d; ++j) row += integrate_moment(IndexMap{1, 1}, IndexMap{1, j}, IndexMap{1, 1}, IndexMap{1, j}, d);
        CHECK(row == Rational(1, d));
    }
    CHECK_THROWS_AS(integrate_moment(ones(7), ones(7), ones(7), ones(7), 7), CapExceeded);
}

TEST_CASE("an injected Weingarten source is used") {
    const WeingartenSource half = [](int k, int) {
        ClassFunction f(k);
        for (const auto& rho : partitions_of(k)) f.set(rho, Rational(1, 2));
        return f;
    };
    CHECK(integrate_moment(ones(1), ones(1), ones(1), ones(1), 3, half) == Rational(1, 2));
}
