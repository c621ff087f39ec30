#pragma once

// Two-sided evaluations of the symmetric-function and binomial identities
// that feed the commutator formula. Each returns both sides so callers can
// assert exact equality.

#include "ffp/combinatorics.hpp"
#include "ffp/rational.hpp"
#include "ffp/spectrum.hpp"
#include "ffp/symfunc.hpp"

namespace ffp {

inline constexpr int kIdentityDimCap = 8;

struct DualValue {
    Rational raw;
    Rational closed;
    bool agree() const { return raw == closed; }
};

/// raw: sum_l (-1)^l / binom(k,l) sum_{|S|=k} e_{k-l}(A_S) e_l(A_S), by subset enumeration.
/// closed: (k/2)!/k! sum_{i+j=k} (-1)^i (d-i)!(d-j)! / ((d-k)!(d-k/2)!) e_i(A) e_j(A) for even k, 0 for odd k.
DualValue identity_leftdep(const Spectrum& A, int k, int cap = kIdentityDimCap);

/// raw: (1/k!) sum_p (-1)^p dim(2_k^p)^2 / s_{2_k^p}(1^d) sum_q C_{2_k^p,2_k^q} q!(k-2q)! m_{2_k^q}(B).
/// closed: k!(d+1-k/2)/((d+1)! d!) sum_{i+j=k} (-1)^i (d-i)!(d-j)! e_i(B) e_j(B).
/// Requires even k.
DualValue identity_rightdep(const Spectrum& B, int k, int cap = kIdentityDimCap);

/// sum_{s=0}^{2n} (-1)^s binom(2n,s)/binom(2n+2y,s+y)
///   vs binom(2n,n) / (binom(y+n,n) binom(2y+2n,y+n)).
DualValue gould_binomial_identity(int n, int y);

/// sum_{s=0}^{n} n/(n+s) binom(n+s,s) binom(y-s,n-s) vs binom(n+y,n). Requires n >= 1, y >= n.
DualValue rothe_hagen_identity(int n, int y);

/// sum_{q<=r<=p} (k-2q)!(k-2r+1)/((r-q)!(k-r-q+1)!) vs binom(k-2q, p-q).
DualValue telescoping_identity(int k, int q, int p);

/// e_{(k-p,p)} = sum_q binom(k-2q, p-q) m_{2_k^q}, as a monomial expansion.
SymExpansion em_two_row(int k, int p);

/// m_{2_k^q} in the elementary basis from the two-binomial formula (q < k/2),
/// or from e_{(k/2,k/2)} + 2(-1)^{k/2} sum_{r<k/2} (-1)^r e_{(k-r,r)} (q = k/2).
SymExpansion me_two_column(int k, int q);

/// The q = k/2 case written as (-1)^{k/2} sum_{i+j=k} (-1)^i e_i e_j.
SymExpansion me_two_column_symmetric(int k);

/// raw: sum over I in Orb(2^q, 1^{k-2q}, 0^q) of M_I(x).
/// closed: binom(d-(k-q), q) m_{2_k^q}(x).
DualValue padding_identity(int k, int q, const Spectrum& x);

}  // namespace ffp
