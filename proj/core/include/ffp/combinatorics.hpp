#pragma once

// Integer partitions, weak compositions, set partitions, semistandard
// tableaux and the counting functions built on them.

#include "ffp/rational.hpp"

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ffp {

inline constexpr int kDefaultPartitionCap = 10;
inline constexpr int kDefaultSetPartitionCap = 8;

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (2,...,2,1,...,1) with p twos; requires 0 <= p <= k/2.
    static Partition two_column(int k, int p);
    /// Sorts descending and drops zeros. Negative entries are rejected.
    static Partition from_unsorted(std::vector<int> entries);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// i-th part, 0-indexed; zero past the end.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;
    /// Multiplicity of each part value, indexed by value (index 0 unused).
    std::vector<int> multiplicities() const;
    /// True iff this is 2_k^p for some p.
    bool is_two_column() const;
    /// Number of twos; requires is_two_column().
    int two_count() const;

    /// "(2,2,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Parses "2,2,1" (also accepts surrounding parentheses or brackets).
Partition parse_partition(const std::string& text);

/// All partitions of k in reverse-lexicographic order: (k) first, (1^k) last.
/// This order is a linear extension of dominance (mu <| lambda puts lambda first).
std::vector<Partition> partitions_of(int k, int cap = kDefaultPartitionCap);

/// mu <| lambda: every partial sum of mu is at most the matching partial sum of lambda.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// A finite sequence of non-negative integers.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> entries);
    WeakComposition(std::initializer_list<int> entries) : WeakComposition(std::vector<int>(entries)) {}

    int size() const;
    int length() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    Partition to_partition() const { return Partition::from_unsorted(entries_); }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend auto operator<=>(const WeakComposition& a, const WeakComposition& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// All distinct rearrangements of a sequence, in lexicographic order.
std::vector<WeakComposition> orbit(const WeakComposition& base);
/// Number of distinct rearrangements: length! / prod(multiplicity!).
Integer orbit_size(const WeakComposition& base);

/// A partition of {1..k} into blocks. Blocks are sorted internally and
/// ordered by their minima.
class SetPartition {
public:
    SetPartition() = default;
    /// Throws std::invalid_argument unless the blocks are non-empty, disjoint
    /// and cover {1..k} for k = total number of elements.
    explicit SetPartition(std::vector<std::vector<int>> blocks);

    /// From a restricted growth string: labels[i] is the block index of i+1.
    static SetPartition from_labels(const std::vector<int>& labels);

    int size() const { return size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// Block index (0-based) of element e (1-based).
    int block_of(int element) const { return labels_[static_cast<std::size_t>(element - 1)]; }
    /// t(pi): block sizes in non-increasing order.
    Partition type() const;
    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> labels_;
    int size_ = 0;
};

/// All set partitions of {1..k}, ordered lexicographically by restricted growth string.
std::vector<SetPartition> set_partitions(int k, int cap = kDefaultSetPartitionCap);
/// Set partitions with t(pi) = mu, in the same order as set_partitions.
std::vector<SetPartition> set_partitions_of_type(const Partition& mu, int cap = kDefaultSetPartitionCap);
/// p_mu = k! / (prod mu_i! * prod_j m_j!), without enumeration.
Integer set_partition_count(const Partition& mu);

/// A filling of a Young diagram; rows[i][j] is the entry in row i, column j.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool is_semistandard() const;
    /// omega(T): number of occurrences of each value 1..max_entry.
    WeakComposition weight(int max_entry) const;
};

/// Calls visit for each SSYT of the given shape with entries in 1..max_entry.
/// If weight is non-empty, only tableaux of that weight are visited (and
/// max_entry is taken to be weight.length()).
void for_each_ssyt(const Partition& shape, int max_entry, const WeakComposition& weight,
                   const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const WeakComposition& weight,
                                           int cap = kDefaultPartitionCap);

/// K(lambda, mu): number of SSYT of shape lambda and weight mu, counted by
/// successive horizontal strips.
Integer kostka(const Partition& lambda, const Partition& mu, int cap = kDefaultPartitionCap);

/// Kostka matrix for all partitions of k in the order of partitions_of(k).
/// It is upper unitriangular in that order. Cached per k.
const std::vector<std::vector<Integer>>& kostka_matrix(int k);

struct HooksAndContents {
    std::vector<int> hooks;     // row-major over cells
    std::vector<int> contents;  // j - i, 0-indexed cells
};

HooksAndContents hooks_and_contents(const Partition& lambda);

/// C_m(k,l): maps i:[k]->[m] strictly increasing on the first k-l slots and
/// on the last l slots. Values are 1-based.
std::vector<std::vector<int>> split_chains(int k, int l, int m, int cap = kDefaultPartitionCap);

/// I(i) = (|i^{-1}(1)|, ..., |i^{-1}(m)|).
WeakComposition split_chain_weight(const std::vector<int>& chain, int m);

/// Number of i in C_k(k,l) with I(i) a rearrangement of (2^q,1^{k-2q},0^q), by enumeration.
Integer split_chain_count(int k, int l, int q);
/// binom(k,l) binom(k-l,q) binom(l,q) when q <= l <= k-q, else 0.
Integer split_chain_count_formula(int k, int l, int q);

}  // namespace ffp
