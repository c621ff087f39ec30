#pragma once

#include "ffp/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ffp {

/// Eigenvalues of a d x d normal matrix with rational real spectrum; d >= 1.
class Spectrum {
public:
    explicit Spectrum(std::vector<Rational> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("a spectrum needs at least one value");
    }
    Spectrum(std::initializer_list<Rational> values) : Spectrum(std::vector<Rational>(values)) {}
    static Spectrum from_ints(const std::vector<long>& values) {
        std::vector<Rational> out;
        out.reserve(values.size());
        for (long v : values) out.emplace_back(v);
        return Spectrum(std::move(out));
    }

    int dim() const { return static_cast<int>(values_.size()); }
    const Rational& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& values() const { return values_; }

    /// The sub-spectrum indexed by a subset (0-based indices).
    Spectrum restrict_to(const std::vector<int>& indices) const {
        std::vector<Rational> out;
        out.reserve(indices.size());
        for (int i : indices) out.push_back(values_.at(static_cast<std::size_t>(i)));
        return Spectrum(std::move(out));
    }

    Spectrum negated() const {
        std::vector<Rational> out;
        out.reserve(values_.size());
        for (const auto& v : values_) out.push_back(-v);
        return Spectrum(std::move(out));
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<Rational> values_;
};

}  // namespace ffp
