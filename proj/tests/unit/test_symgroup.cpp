#include "ffp/symgroup.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <set>

using namespace ffp;

namespace {

// Rows of a tabloid of shape mu: the label of each point.
std::vector<std::vector<int>> tabloids(const Partition& mu) {
    std::vector<std::vector<int>> out;
    const int k = mu.size();
    std::vector<int> labels(static_cast<std::size_t>(k));
    std::vector<int> room(mu.parts());
    std::function<void(int)> rec = [&](int point) {
        if (point == k) {
            out.push_back(labels);
            return;
        }
        for (std::size_t row = 0; row < room.size(); ++row) {
            if (room[row] == 0) continue;
            --room[row];
            labels[static_cast<std::size_t>(point)] = static_cast<int>(row);
            rec(point + 1);
            ++room[row];
        }
    };
    rec(0);
    return out;
}

// Trace of sigma acting on tabloids of shape mu, by brute force.
long tabloid_trace(const Partition& mu, const Permutation& sigma) {
    long fixed = 0;
    for (const auto& t : tabloids(mu)) {
        bool same = true;
        for (int i = 0; i < sigma.size() && same; ++i) same = t[static_cast<std::size_t>(sigma(i))] == t[static_cast<std::size_t>(i)];
        fixed += same;
    }
    return fixed;
}

// Characters recovered from tabloid traces: trace_mu = sum_lambda K(lambda,mu) chi^lambda,
// solved from the most dominant lambda downwards.
std::map<std::pair<Partition, Partition>, long> characters_from_tabloids(int k) {
    const auto parts = partitions_of(k);
    std::map<std::pair<Partition, Partition>, long> chi;
    for (const auto& rho : parts) {
        const Permutation sigma = Permutation::of_cycle_type(rho);
        for (const auto& mu : parts) {
            long value = tabloid_trace(mu, sigma);
            for (const auto& lambda : parts) {
                if (lambda == mu) break;
                value -= kostka(lambda, mu).convert_to<long>() * chi.at({lambda, rho});
            }
            chi[{mu, rho}] = value;
        }
    }
    return chi;
}

}  // namespace

TEST_CASE("permutations") {
    const Permutation a = Permutation::from_one_based({2, 3, 1});
    const Permutation b = Permutation::from_one_based({2, 1, 3});
    CHECK((a * b)(0) == a(b(0)));
    CHECK((a * a.inverse()) == Permutation::identity(3));
    CHECK(a.cycle_type() == Partition{3});
    CHECK(b.cycle_type() == Partition{2, 1});
    CHECK(Permutation::identity(4).cycle_type() == Partition{1, 1, 1, 1});
    CHECK(a.sign() == 1);
    CHECK(b.sign() == -1);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    for (int k = 1; k <= 6; ++k) {
        const auto perms = all_permutations(k);
        CHECK(Integer(perms.size()) == factorial(k));
        CHECK(perms.front() == Permutation::identity(k));
        std::map<Partition, Integer> counts;
        for (const auto& p : perms) {
            counts[p.cycle_type()] += 1;
            CHECK(p.sign() == sign_power(k - p.cycle_count()));
        }
        for (const auto& rho : partitions_of(k)) {
            CHECK(counts[rho] == class_size(rho));
            CHECK(Permutation::of_cycle_type(rho).cycle_type() == rho);
        }
    }
}

TEST_CASE("characters: trivial, sign and the standard representation") {
    for (int k = 1; k <= 8; ++k)
        for (const auto& rho : partitions_of(k)) {
            CHECK(character(Partition{k}, rho) == 1);
            const Partition column(std::vector<int>(static_cast<std::size_t>(k), 1));
            CHECK(character(column, rho) == Permutation::of_cycle_type(rho).sign());
        }
    CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(character(Partition{2, 1}, Partition{3}) == -1);
    // the standard representation is the permutation representation minus the trivial one
    for (const auto& sigma : all_permutations(3)) {
        long fixed = 0;
        for (int i = 0; i < 3; ++i) fixed += sigma(i) == i;
        CHECK(character(Partition{2, 1}, sigma.cycle_type()) == fixed - 1);
    }
    CHECK_THROWS_AS(character(Partition{2, 1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("Murnaghan-Nakayama agrees with tabloid traces, k<=5") {
    for (int k = 1; k <= 5; ++k) {
        const auto oracle = characters_from_tabloids(k);
        for (const auto& [key, value] : oracle) CHECK(character(key.first, key.second) == value);
    }
}

TEST_CASE("character table invariants") {
    for (int k = 1; k <= 8; ++k) {
        const auto parts = partitions_of(k);
        for (const auto& lambda : parts)
            for (const auto& rho : parts) {
                CHECK(character(lambda.transpose(), rho) == Permutation::of_cycle_type(rho).sign() * character(lambda, rho));
                CHECK(character_uncached(lambda, rho) == character(lambda, rho));
            }
        for (const auto& lambda : parts) CHECK(character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(k), 1))) == dim_irrep(lambda));
        if (k > 7) continue;
        for (const auto& l1 : parts)
            for (const auto& l2 : parts) {
                Integer sum = 0;
                for (const auto& rho : parts) sum += class_size(rho) * character(l1, rho) * character(l2, rho);
                CHECK(sum == (l1 == l2 ? factorial(k) : Integer(0)));
            }
    }
    const CharacterTable t = character_table(4);
    CHECK(t.irreps.size() == 5);
    CHECK(t.at(Partition{3, 1}, Partition{2, 1, 1}) == 1);
}

TEST_CASE("irrep dimensions") {
    CHECK(dim_irrep(Partition{2, 1, 1}) == 3);
    CHECK(dim_irrep(Partition{5}) == 1);
    CHECK(dim_irrep(Partition{}) == 1);
    for (int k = 0; k <= 10; ++k)
        for (int p = 0; 2 * p <= k; ++p) CHECK(dim_two_column(k, p) == dim_irrep(Partition::two_column(k, p)));
    for (int k = 1; k <= 8; ++k) {
        Integer sum = 0;
        for (const auto& lambda : partitions_of(k)) sum += dim_irrep(lambda) * dim_irrep(lambda);
        CHECK(sum == factorial(k));
    }
}

TEST_CASE("inverse Kostka numbers") {
    for (int k = 1; k <= 8; ++k) {
        const auto parts = partitions_of(k);
        for (const auto& lambda : parts) {
            CHECK(inverse_kostka(lambda, lambda) == 1);
            for (const auto& mu : parts) {
                Integer sum = 0;
                for (const auto& nu : parts) sum += inverse_kostka(lambda, nu) * kostka(nu, mu);
                CHECK(sum == (lambda == mu ? 1 : 0));
            }
        }
    }
    for (int k = 0; k <= 10; ++k)
        for (int q = 0; 2 * q <= k; ++q)
            for (int s = 0; s <= q; ++s)
                CHECK(inverse_kostka(Partition::two_column(k, q), Partition::two_column(k, s)) ==
                      sign_power(q - s) * binomial(k - q - s, k - 2 * q));
    for (int k = 1; k <= 10; ++k)
        for (int r = 0; 2 * r <= k; ++r)
            for (int s = 0; 2 * s <= k; ++s) {
                const int want = s == r ? 1 : (s == r + 1 ? -1 : 0);
                CHECK(inverse_kostka(Partition::from_unsorted({k - r, r}), Partition::from_unsorted({k - s, s})) == want);
            }
}

TEST_CASE("Young's rule") {
    CHECK(young_rule_multiplicity(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(young_rule_multiplicity(Partition{2, 2}, Partition{3, 1}) == 0);
    for (int k = 1; k <= 6; ++k)
        for (const auto& lambda : partitions_of(k))
            for (const auto& mu : partitions_of(k)) {
                if (lambda == Partition{k}) CHECK(young_rule_multiplicity(lambda, mu) == 1);
                CHECK(young_rule_multiplicity(lambda, mu) == kostka(lambda, mu));
            }
    for (const auto& sigma : all_permutations(4))
        CHECK(permutation_character(Partition{2, 2}, sigma.cycle_type()) == tabloid_trace(Partition{2, 2}, sigma));
}

TEST_CASE("Young subgroups") {
    const YoungSubgroup s(SetPartition({{1, 3}, {2, 4, 5}}));
    CHECK(s.order() == 12);
    const auto members = s.members();
    CHECK(members.size() == 12);
    CHECK(std::set<Permutation>(members.begin(), members.end()).size() == 12);
    long contained = 0;
    for (const auto& sigma : all_permutations(5)) {
        bool fixes_blocks = true;
        for (const auto& block : s.blocks().blocks())
            for (int e : block)
                fixes_blocks = fixes_blocks && s.blocks().block_of(sigma(e - 1) + 1) == s.blocks().block_of(e);
        CHECK(s.contains(sigma) == fixes_blocks);
        contained += fixes_blocks;
    }
    CHECK(contained == 12);
}

TEST_CASE("C constants") {
    for (int k = 1; k <= 5; ++k)
        for (const auto& lambda : partitions_of(k))
            CHECK(c_constant(lambda, Partition(std::vector<int>(static_cast<std::size_t>(k), 1))) == 1);
    CHECK(c_constant(Partition{2}, Partition{2}) == 2);
    CHECK(c_constant(Partition{1, 1}, Partition{2}) == 0);
    CHECK(c_constant(Partition{2, 2}, Partition{2, 1, 1}) == 6);
    CHECK(c_constant_two_column(4, 2, 1) == 6);
    CHECK(c_constant_two_column(4, 1, 2) == 0);

    CHECK(c_constant_bruteforce(Partition{2}, Partition{2}, Permutation::identity(2)).ratio == Rational(2));
    for (const auto& sigma : all_permutations(2)) CHECK(c_constant_bruteforce(Partition{1, 1}, Partition{2}, sigma).raw_sum == 0);
    for (const auto& rho : partitions_of(4)) {
        const auto bf = c_constant_bruteforce(Partition{2, 2}, Partition{2, 1, 1}, Permutation::of_cycle_type(rho));
        if (bf.ratio) CHECK(*bf.ratio == 6);
        else CHECK(bf.raw_sum == 0);
    }
    CHECK_THROWS_AS(c_constant_bruteforce(Partition{7}, Partition{7}, Permutation::identity(7)), CapExceeded);
}

TEST_CASE("C constant ratio does not depend on sigma, k<=6") {
    for (int k = 1; k <= 6; ++k) {
        const auto parts = partitions_of(k);
        for (const auto& lambda : parts)
            for (const auto& mu : parts) {
                const Rational c = c_constant(lambda, mu);
                CHECK((c != 0) == dominance_leq(mu, lambda));
                if (lambda.is_two_column() && mu.is_two_column())
                    CHECK(c_constant_two_column(k, lambda.two_count(), mu.two_count()) == c);
                for (const auto& rho : parts) {
                    const auto bf = c_constant_bruteforce(lambda, mu, Permutation::of_cycle_type(rho));
                    if (bf.ratio)
                        CHECK(*bf.ratio == c);
                    else
                        CHECK(bf.raw_sum == 0);
                }
            }
    }
}
