#pragma once

#include "ffp/combinatorics.hpp"
#include "ffp/rational.hpp"
#include "ffp/symgroup.hpp"

#include <functional>
#include <map>
#include <vector>

namespace ffp {

inline constexpr int kMomentCap = 6;

/// A function on S_k that is constant on conjugacy classes, stored by cycle type.
class ClassFunction {
public:
    ClassFunction() = default;
    /// Zero on every class of S_k.
    explicit ClassFunction(int k);

    int k() const { return k_; }
    const std::map<Partition, Rational>& values() const& { return values_; }
    std::map<Partition, Rational> values() && { return std::move(values_); }

    const Rational& operator()(const Partition& cycle_type) const;
    const Rational& operator()(const Permutation& sigma) const { return (*this)(sigma.cycle_type()); }
    void set(const Partition& cycle_type, Rational value);

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int k_ = 0;
    std::map<Partition, Rational> values_;
};

/// Wg_{k,d}(rho) = 1/(k!)^2 sum_{lambda |- k, l(lambda) <= d} dim(lambda)^2 / s_lambda(1^d) chi^lambda(rho).
/// Cached per (k, d).
const ClassFunction& weingarten(int k, int d);

/// Where consumers of Wg obtain their tables. The default is weingarten();
/// verification code can substitute an externally supplied table.
using WeingartenSource = std::function<ClassFunction(int k, int d)>;
WeingartenSource default_weingarten_source();

/// A map [k] -> [d] with 1-based values.
class IndexMap {
public:
    IndexMap() = default;
    explicit IndexMap(std::vector<int> entries);
    IndexMap(std::initializer_list<int> entries) : IndexMap(std::vector<int>(entries)) {}

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }
    int max_value() const;

private:
    std::vector<int> entries_;
};

/// The Haar integral of u_{i(1)j(1)} ... u_{i(k)j(k)} conj(u_{i'(1)j'(1)}) ... conj(u_{i'(k')j'(k')}),
/// summing Wg(pi^{-1} sigma) over pi, sigma in S_k with i = i' o pi and j = j' o sigma.
/// Zero when k != k'.
Rational integrate_moment(const IndexMap& i, const IndexMap& j, const IndexMap& i_conj, const IndexMap& j_conj,
                          int d, const WeingartenSource& source = default_weingarten_source(),
                          int cap = kMomentCap);

}  // namespace ffp
