#pragma once

// Finite free convolutions of monic polynomials and the expected
// characteristic polynomial of the commutator A U B U* - U B U* A.

#include "ffp/rational.hpp"
#include "ffp/spectrum.hpp"

#include <string>
#include <vector>

namespace ffp {

/// Degree-d monic polynomial sum_k x^{d-k} (-1)^k a_k with a_0 = 1. The
/// unsigned a_k are stored; the sign is applied only when displaying.
class MonicPoly {
public:
    /// Throws std::invalid_argument unless a is non-empty with a[0] == 1.
    explicit MonicPoly(std::vector<Rational> a);
    /// x^d.
    static MonicPoly monomial(int d);
    /// a_k = e_k(spectrum), i.e. prod (x - s_i).
    static MonicPoly from_spectrum(const Spectrum& spectrum);

    int degree() const { return static_cast<int>(a_.size()) - 1; }
    const Rational& a(int k) const { return a_[static_cast<std::size_t>(k)]; }
    const std::vector<Rational>& a() const { return a_; }
    /// Coefficient of x^{d-k}: (-1)^k a_k.
    Rational signed_coefficient(int k) const;

    /// e.g. "x^3 - 6x^2 + 11x - 6", "x^2 + 8/3".
    std::string to_string() const;

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

private:
    std::vector<Rational> a_;
};

/// Expected characteristic polynomial of A + U B U*.
MonicPoly boxplus(const MonicPoly& p, const MonicPoly& q);
/// Expected characteristic polynomial of A U B U*.
MonicPoly boxtimes(const MonicPoly& p, const MonicPoly& q);
/// Expected characteristic polynomial of A - U B U*.
MonicPoly boxminus(const MonicPoly& p, const MonicPoly& q);
/// The polynomial with every root negated: a_j -> (-1)^j a_j.
MonicPoly reflect(const MonicPoly& p);

/// sum_k x^{d-2k} binom(d,2k) (d)_k k!/(2k)! (d+1-k)/(d+1).
MonicPoly z_poly(int d);

/// (p boxminus p) boxtimes (q boxminus q) boxtimes z_d.
MonicPoly commutator_poly(const MonicPoly& p, const MonicPoly& q);

/// E e_k(A U B U* - U B U* A) by the closed coefficient formula: zero for odd
/// k, and for even k the product of the two signed sums over e_i e_j with
/// (d-k)!/(d-k/2)! (k/2)! (d+1-k/2)/(d+1).
Rational commutator_coefficient(int k, const Spectrum& A, const Spectrum& B);

}  // namespace ffp
