#include "ffp/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ffp {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation images must form a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
    std::vector<int> zero_based;
    zero_based.reserve(images.size());
    for (int v : images) zero_based.push_back(v - 1);
    return Permutation(std::move(zero_based));
}

Permutation Permutation::of_cycle_type(const Partition& rho) {
    std::vector<int> images(static_cast<std::size_t>(rho.size()));
    int start = 0;
    for (int len : rho.parts()) {
        for (int i = 0; i < len; ++i) images[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[static_cast<std::size_t>(other.images_[i])];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(out));
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

int Permutation::cycle_count() const { return cycle_type().length(); }

std::vector<Permutation> all_permutations(int k) {
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

Integer class_size(const Partition& rho) {
    Integer z = 1;
    const auto mult = rho.multiplicities();
    for (std::size_t v = 1; v < mult.size(); ++v) {
        for (int i = 0; i < mult[v]; ++i) z *= static_cast<long>(v);
        z *= factorial(mult[v]);
    }
    return factorial(rho.size()) / z;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

struct RimHookRemoval {
    Partition remainder;
    int sign;
};

// Rim hooks of length r correspond to moves beta -> beta - r on the beta-set
// {lambda_i + (n-1-i)}; the sign is (-1)^(number of beads jumped over).
std::vector<RimHookRemoval> remove_rim_hooks(const Partition& lambda, int r) {
    const int n = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (n - 1 - i);
    std::vector<RimHookRemoval> out;
    for (int i = 0; i < n; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - r;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        const auto jumped = std::count_if(beta.begin(), beta.end(), [&](int b) { return b > to && b < from; });
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts;
        for (int j = 0; j < n; ++j) {
            const int part = moved[static_cast<std::size_t>(j)] - (n - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        out.push_back({Partition(std::move(parts)), sign_power(static_cast<int>(jumped))});
    }
    return out;
}

Partition drop_first_part(const Partition& rho) {
    return Partition(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
}

void check_character_args(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("character: partitions of different sizes");
    if (lambda.size() > kCharacterCap)
        throw CapExceeded("character: k = " + std::to_string(lambda.size()) + " exceeds cap");
}

}  // namespace

Integer character_uncached(const Partition& lambda, const Partition& rho) {
    check_character_args(lambda, rho);
    if (rho.empty()) return 1;
    const Partition rest = drop_first_part(rho);
    Integer total = 0;
    for (const auto& removal : remove_rim_hooks(lambda, rho.part(0)))
        total += removal.sign * character_uncached(removal.remainder, rest);
    return total;
}

Integer character(const Partition& lambda, const Partition& rho) {
    check_character_args(lambda, rho);
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, Integer> memo;
    auto key = std::make_pair(lambda, rho);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    Integer total = 0;
    if (rho.empty()) {
        total = 1;
    } else {
        const Partition rest = drop_first_part(rho);
        for (const auto& removal : remove_rim_hooks(lambda, rho.part(0)))
            total += removal.sign * character(removal.remainder, rest);
    }
    std::lock_guard lock(mutex);
    memo.emplace(std::move(key), total);
    return total;
}

const Integer& CharacterTable::at(const Partition& lambda, const Partition& rho) const {
    const auto row = std::find(irreps.begin(), irreps.end(), lambda);
    const auto col = std::find(classes.begin(), classes.end(), rho);
    if (row == irreps.end() || col == classes.end())
        throw std::invalid_argument("character table lookup outside S_" + std::to_string(k));
    return values[static_cast<std::size_t>(row - irreps.begin())][static_cast<std::size_t>(col - classes.begin())];
}

CharacterTable character_table(int k) {
    CharacterTable table;
    table.k = k;
    table.irreps = partitions_of(k, kCharacterCap);
    table.classes = table.irreps;
    for (const auto& lambda : table.irreps) {
        std::vector<Integer> row;
        for (const auto& rho : table.classes) row.push_back(character(lambda, rho));
        table.values.push_back(std::move(row));
    }
    return table;
}

Integer dim_irrep(const Partition& lambda) {
    Integer product = 1;
    for (int h : hooks_and_contents(lambda).hooks) product *= h;
    return factorial(lambda.size()) / product;
}

Integer dim_two_column(int k, int p) {
    if (p < 0 || 2 * p > k) throw std::invalid_argument("dim_two_column requires 0 <= p <= k/2");
    return factorial(k) * (k - 2 * p + 1) / (factorial(p) * factorial(k - p + 1));
}

// ---------------------------------------------------------------------------
// Inverse Kostka, Young's rule

namespace {

std::size_t index_in(const std::vector<Partition>& list, const Partition& p) {
    const auto it = std::find(list.begin(), list.end(), p);
    if (it == list.end()) throw std::invalid_argument("partition " + p.to_string() + " not found");
    return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

const std::vector<std::vector<Integer>>& inverse_kostka_matrix(int k) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<Integer>>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    const auto& K = kostka_matrix(k);
    const std::size_t n = K.size();
    std::vector<std::vector<Integer>> inv(n, std::vector<Integer>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        inv[j][j] = 1;
        for (std::size_t i = j; i-- > 0;) {
            Integer acc = 0;
            for (std::size_t m = i + 1; m <= j; ++m) acc += K[i][m] * inv[m][j];
            inv[i][j] = -acc;
        }
    }
    std::lock_guard lock(mutex);
    return cache.emplace(k, std::move(inv)).first->second;
}

Integer inverse_kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("inverse_kostka: partitions of different sizes");
    const auto parts = partitions_of(lambda.size());
    return inverse_kostka_matrix(lambda.size())[index_in(parts, lambda)][index_in(parts, mu)];
}

Integer permutation_character(const Partition& mu, const Partition& rho) {
    if (mu.size() != rho.size()) throw std::invalid_argument("permutation_character: partitions of different sizes");
    // Each cycle must lie inside a single row of the tabloid.
    std::vector<int> capacity = mu.parts();
    std::function<Integer(int)> count = [&](int cycle) -> Integer {
        if (cycle == rho.length()) return 1;
        Integer total = 0;
        const int len = rho.part(cycle);
        for (auto& cap : capacity) {
            if (cap < len) continue;
            cap -= len;
            total += count(cycle + 1);
            cap += len;
        }
        return total;
    };
    return count(0);
}

Integer young_rule_multiplicity(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("young_rule_multiplicity: partitions of different sizes");
    Integer total = 0;
    for (const auto& rho : partitions_of(lambda.size(), kCharacterCap))
        total += class_size(rho) * character(lambda, rho) * permutation_character(mu, rho);
    const Integer order = factorial(lambda.size());
    if (total % order != 0) throw std::logic_error("young_rule_multiplicity: non-integral inner product");
    return total / order;
}

// ---------------------------------------------------------------------------
// Young subgroups and the constants C_{lambda,mu}

YoungSubgroup::YoungSubgroup(SetPartition blocks) : blocks_(std::move(blocks)) {}

Integer YoungSubgroup::order() const {
    Integer out = 1;
    for (const auto& b : blocks_.blocks()) out *= factorial(static_cast<int>(b.size()));
    return out;
}

bool YoungSubgroup::contains(const Permutation& sigma) const {
    if (sigma.size() != blocks_.size()) return false;
    for (int i = 0; i < sigma.size(); ++i)
        if (blocks_.block_of(i + 1) != blocks_.block_of(sigma(i) + 1)) return false;
    return true;
}

std::vector<Permutation> YoungSubgroup::members() const {
    const auto& blocks = blocks_.blocks();
    std::vector<int> images(static_cast<std::size_t>(blocks_.size()));
    std::vector<Permutation> out;
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == blocks.size()) {
            out.emplace_back(images);
            return;
        }
        std::vector<int> targets = blocks[bi];
        do {
            for (std::size_t j = 0; j < targets.size(); ++j)
                images[static_cast<std::size_t>(blocks[bi][j] - 1)] = targets[j] - 1;
            rec(bi + 1);
        } while (std::next_permutation(targets.begin(), targets.end()));
    };
    rec(0);
    return out;
}

Rational c_constant(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("c_constant: partitions of different sizes");
    Integer young_order = 1;
    for (int part : mu.parts()) young_order *= factorial(part);
    return Rational(set_partition_count(mu) * young_order * kostka(lambda, mu), dim_irrep(lambda));
}

Rational c_constant_two_column(int k, int p, int q) {
    if (p < 0 || q < 0 || 2 * p > k || 2 * q > k)
        throw std::invalid_argument("c_constant_two_column requires 0 <= p,q <= k/2");
    if (q > p) return 0;
    return Rational(factorial(p) / factorial(p - q) * binomial(k - p + 1, q));
}

BruteForceConstant c_constant_bruteforce(const Partition& lambda, const Partition& mu, const Permutation& sigma,
                                         int cap) {
    if (lambda.size() != mu.size() || sigma.size() != lambda.size())
        throw std::invalid_argument("c_constant_bruteforce: mismatched sizes");
    if (lambda.size() > cap) throw CapExceeded("c_constant_bruteforce: k exceeds cap");
    Integer raw = 0;
    for (const auto& pi : set_partitions_of_type(mu))
        for (const auto& tau : YoungSubgroup(pi).members()) raw += character(lambda, (sigma * tau).cycle_type());
    BruteForceConstant out{Rational(raw), std::nullopt};
    const Integer at_sigma = character(lambda, sigma.cycle_type());
    if (at_sigma != 0) out.ratio = Rational(raw, at_sigma);
    return out;
}

}  // namespace ffp
