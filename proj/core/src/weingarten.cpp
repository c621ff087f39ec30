#include "ffp/weingarten.hpp"

#include "ffp/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ffp {

ClassFunction::ClassFunction(int k) : k_(k) {
    for (const auto& rho : partitions_of(k, kCharacterCap)) values_.emplace(rho, Rational(0));
}

const Rational& ClassFunction::operator()(const Partition& cycle_type) const {
    const auto it = values_.find(cycle_type);
    if (it == values_.end())
        throw std::invalid_argument("class function on S_" + std::to_string(k_) + " has no class " +
                                    cycle_type.to_string());
    return it->second;
}

void ClassFunction::set(const Partition& cycle_type, Rational value) {
    auto it = values_.find(cycle_type);
    if (it == values_.end())
        throw std::invalid_argument("class function on S_" + std::to_string(k_) + " has no class " +
                                    cycle_type.to_string());
    it->second = std::move(value);
}

const ClassFunction& weingarten(int k, int d) {
    if (k < 1 || d < 1) throw std::invalid_argument("weingarten requires k >= 1 and d >= 1");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, ClassFunction> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({k, d}); it != cache.end()) return it->second;
    }
    ClassFunction wg(k);
    const Integer k_fact = factorial(k);
    const Rational norm(Integer(1), k_fact * k_fact);
    for (const auto& lambda : partitions_of(k, kCharacterCap)) {
        if (lambda.length() > d) continue;
        const Integer dim = dim_irrep(lambda);
        const Rational weight = norm * Rational(dim * dim) / schur_principal(lambda, d);
        for (const auto& [rho, value] : wg.values()) wg.set(rho, value + weight * Rational(character(lambda, rho)));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(k, d), std::move(wg)).first->second;
}

WeingartenSource default_weingarten_source() {
    return [](int k, int d) { return weingarten(k, d); };
}

IndexMap::IndexMap(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 1) throw std::invalid_argument("index map values are 1-based");
}

int IndexMap::max_value() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

Rational integrate_moment(const IndexMap& i, const IndexMap& j, const IndexMap& i_conj, const IndexMap& j_conj,
                          int d, const WeingartenSource& source, int cap) {
    if (i.size() != j.size() || i_conj.size() != j_conj.size())
        throw std::invalid_argument("integrate_moment: row and column index maps differ in length");
    for (const auto* m : {&i, &j, &i_conj, &j_conj})
        if (m->max_value() > d) throw std::invalid_argument("integrate_moment: index exceeds d");
    const int k = i.size();
    if (k != i_conj.size()) return 0;
    if (k == 0) return 1;
    if (k > cap) throw CapExceeded("integrate_moment: k exceeds cap");

    auto matching = [k](const IndexMap& target, const IndexMap& source_map) {
        std::vector<Permutation> out;
        for (auto& perm : all_permutations(k)) {
            bool ok = true;
            for (int x = 0; x < k && ok; ++x) ok = target[x] == source_map[perm(x)];
            if (ok) out.push_back(std::move(perm));
        }
        return out;
    };
    const auto row_perms = matching(i, i_conj);
    const auto col_perms = matching(j, j_conj);
    if (row_perms.empty() || col_perms.empty()) return 0;

    const ClassFunction wg = source(k, d);
    Rational total = 0;
    for (const auto& pi : row_perms) {
        const Permutation pi_inv = pi.inverse();
        for (const auto& sigma : col_perms) total += wg(pi_inv * sigma);
    }
    return total;
}

}  // namespace ffp
