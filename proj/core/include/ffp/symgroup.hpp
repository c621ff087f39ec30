#pragma once

#include "ffp/combinatorics.hpp"
#include "ffp/rational.hpp"

#include <optional>
#include <vector>

namespace ffp {

inline constexpr int kCharacterCap = 10;
inline constexpr int kBruteForceConstantCap = 6;

/// A bijection of {1..k}. Stored 0-based; image(i) is 0-based as well.
class Permutation {
public:
    Permutation() = default;
    /// images[i] is the 0-based image of i. Throws unless a bijection.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int k);
    /// From 1-based images, e.g. {2,1,3}.
    static Permutation from_one_based(const std::vector<int>& images);
    /// A fixed representative of the conjugacy class with cycle type rho:
    /// consecutive runs (1..rho_1)(rho_1+1..) each mapped to a cycle.
    static Permutation of_cycle_type(const Partition& rho);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    /// (this * other)(i) = this(other(i)).
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    Partition cycle_type() const;
    int cycle_count() const;
    int sign() const { return sign_power(size() - cycle_count()); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
    std::vector<int> images_;
};

/// All k! permutations in lexicographic order of their image sequences.
std::vector<Permutation> all_permutations(int k);

/// k! / z_rho.
Integer class_size(const Partition& rho);

/// chi^lambda(rho) by the Murnaghan-Nakayama rule. Memoized; results are
/// identical to character_uncached.
Integer character(const Partition& lambda, const Partition& rho);
Integer character_uncached(const Partition& lambda, const Partition& rho);

struct CharacterTable {
    int k = 0;
    std::vector<Partition> irreps;   // rows, partitions_of(k) order
    std::vector<Partition> classes;  // columns, partitions_of(k) order
    std::vector<std::vector<Integer>> values;

    const Integer& at(const Partition& lambda, const Partition& rho) const;
};

CharacterTable character_table(int k);

/// k! / prod of hook lengths.
Integer dim_irrep(const Partition& lambda);
/// k!(k-2p+1) / (p!(k-p+1)!), the closed form for 2_k^p.
Integer dim_two_column(int k, int p);

/// (lambda, mu) entry of the inverse of the Kostka matrix, obtained by
/// unitriangular back substitution. Cached per k.
Integer inverse_kostka(const Partition& lambda, const Partition& mu);
const std::vector<std::vector<Integer>>& inverse_kostka_matrix(int k);

/// Character of the permutation module M^mu = Ind_{S_mu}^{S_k}(triv) on the
/// class rho: the number of row-tabloids of shape mu fixed by a permutation
/// of cycle type rho.
Integer permutation_character(const Partition& mu, const Partition& rho);

/// Multiplicity of V^lambda in M^mu, computed as the character inner product
/// <chi^lambda, permutation_character(mu, .)>. Equals K(lambda, mu).
Integer young_rule_multiplicity(const Partition& lambda, const Partition& mu);

/// S_pi: the permutations leaving every block of pi invariant.
class YoungSubgroup {
public:
    explicit YoungSubgroup(SetPartition blocks);
    const SetPartition& blocks() const { return blocks_; }
    Integer order() const;
    bool contains(const Permutation& sigma) const;
    /// All members, each exactly once.
    std::vector<Permutation> members() const;

private:
    SetPartition blocks_;
};

/// C_{lambda,mu} = p_mu |S_mu| K(lambda,mu) / dim(lambda).
Rational c_constant(const Partition& lambda, const Partition& mu);
/// p!/(p-q)! binom(k-p+1, q) for lambda = 2_k^p, mu = 2_k^q; zero when q > p.
Rational c_constant_two_column(int k, int p, int q);

struct BruteForceConstant {
    /// sum over pi with t(pi)=mu, tau in S_pi, of chi^lambda(sigma tau)
    Rational raw_sum;
    /// raw_sum / chi^lambda(sigma), present only when chi^lambda(sigma) != 0
    std::optional<Rational> ratio;
};

BruteForceConstant c_constant_bruteforce(const Partition& lambda, const Partition& mu, const Permutation& sigma,
                                         int cap = kBruteForceConstantCap);

}  // namespace ffp
