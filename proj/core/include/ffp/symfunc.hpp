#pragma once

// Monomial, elementary, quasisymmetric and Schur evaluations, and the
// elementary <-> monomial basis transitions through Kostka numbers.

#include "ffp/combinatorics.hpp"
#include "ffp/rational.hpp"
#include "ffp/spectrum.hpp"

#include <map>

namespace ffp {

enum class Basis { monomial, elementary };

const char* basis_name(Basis b);
Basis parse_basis(const std::string& name);

/// A degree-k symmetric function written in one basis. Zero coefficients are
/// never stored.
class SymExpansion {
public:
    SymExpansion(Basis basis, int degree) : basis_(basis), degree_(degree) {}

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<Partition, Rational>& terms() const& { return terms_; }
    std::map<Partition, Rational> terms() && { return std::move(terms_); }

    /// Coefficient of the basis element indexed by lambda (zero if absent).
    Rational coefficient(const Partition& lambda) const;
    /// Adds to a coefficient; throws if |lambda| != degree.
    void add(const Partition& lambda, const Rational& c);

    Rational evaluate(const Spectrum& x) const;

    friend bool operator==(const SymExpansion&, const SymExpansion&) = default;

private:
    Basis basis_;
    int degree_;
    std::map<Partition, Rational> terms_;
};

/// e_0..e_d of the spectrum.
std::vector<Rational> elementary_all(const Spectrum& x);
/// e_j(x); zero for j > d or j < 0.
Rational elementary(int j, const Spectrum& x);

/// m_lambda(x): sum over distinct rearrangements of lambda padded with zeros.
Rational eval_monomial(const Partition& lambda, const Spectrum& x);
/// e_lambda(x) = prod_i e_{lambda_i}(x).
Rational eval_elementary(const Partition& lambda, const Spectrum& x);

/// e_lambda in the monomial basis: coefficient of m_mu is sum_nu K(nu,lambda) K(nu^T,mu).
SymExpansion e_to_m(const Partition& lambda, int cap = kDefaultPartitionCap);
/// m_lambda in the elementary basis: coefficient of e_mu is sum_nu K^{-1}(lambda,nu^T) K^{-1}(mu,nu).
SymExpansion m_to_e(const Partition& lambda, int cap = kDefaultPartitionCap);

/// M_I(x) = sum_{s_1<...<s_l} prod_j x_{s_j}^{I_j}; zero exponents allowed.
/// Throws std::invalid_argument when l(I) > d.
Rational eval_quasisym(const WeakComposition& index, const Spectrum& x);

/// s_lambda(1^d) = dim(lambda)/k! * prod (d + content).
Rational schur_principal(const Partition& lambda, int d);
/// (k-2p+1)/(p!(k-p+1)!) (d+1)_p (d)_{k-p} for 2_k^p, falling factorials.
Rational schur_principal_two_column(int k, int p, int d);

/// s_lambda(x) by summing over SSYT of shape lambda with entries <= d.
Rational schur_by_tableaux(const Partition& lambda, const Spectrum& x);

/// s_lambda(alpha, beta, 0, ..., 0) in summation form (safe when beta == alpha).
Rational schur_rank_two(const Partition& lambda, const Rational& alpha, const Rational& beta);

/// sum over p:[k]->[d] with ker(p) = pi of prod_i b_{p(i)}, by enumeration
/// of injective maps from the blocks into [d].
Rational kernel_sum(const SetPartition& pi, const Spectrum& b, int cap = kDefaultSetPartitionCap);
/// l(mu)!/|Orb(mu)| * m_mu(b).
Rational kernel_sum_closed(const Partition& mu, const Spectrum& b);

}  // namespace ffp
