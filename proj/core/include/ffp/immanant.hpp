#pragma once

#include "ffp/combinatorics.hpp"
#include "ffp/finfree.hpp"
#include "ffp/matrix.hpp"
#include "ffp/spectrum.hpp"

#include <map>

namespace ffp {

inline constexpr int kImmanantCap = 9;
inline constexpr int kGouldenJacksonCap = 5;

enum class DeltaSign { plus, minus };

/// (x_i + x_j) or (x_i - x_j).
RationalMatrix delta(const Spectrum& x, DeltaSign sign);

/// Imm^lambda(Y) = sum_sigma chi^lambda(sigma) prod_i y_{i,sigma(i)}.
Rational immanant_direct(const Partition& lambda, const RationalMatrix& y, int cap = kImmanantCap);

/// Every immanant of Y at once: the products are summed per conjugacy class
/// first, then paired with each character row.
std::map<Partition, Rational> immanants_direct_all(const RationalMatrix& y, int cap = kImmanantCap);

/// sum_{l=0}^{k} (-1)^l (k-l)! l! e_{k-l}(x) e_l(x), the permanent of delta_-(X).
Rational permanent_delta_minus(const Spectrum& x);

/// Imm^lambda(delta_-(X)) in closed form: (-1)^{lambda_2} times the
/// permanent when l(lambda) <= 2, zero otherwise.
Rational imm_delta_minus(const Partition& lambda, const Spectrum& x);

/// Characteristic polynomial det(tI - M) from sums of principal minors.
MonicPoly charpoly_by_minors(const RationalMatrix& m);

/// det(tI - Z delta_-(X)) = t^k + (sum_{i<j} z_i z_j (x_i - x_j)^2) t^{k-2}. Requires k >= 2.
MonicPoly charpoly_z_delta(const Spectrum& x, const Spectrum& z);
/// The same polynomial expanded directly from the matrix Z delta_-(X).
MonicPoly charpoly_z_delta_direct(const Spectrum& x, const Spectrum& z);

/// s_lambda evaluated at the eigenvalues of M, computed from the power sums
/// Tr(M^j) through Newton's identities and the dual Jacobi-Trudi determinant.
Rational schur_of_eigenvalues(const Partition& lambda, const RationalMatrix& m);

/// Imm^lambda(Y) as the coefficient of z_1...z_n in s_lambda(eig(ZY)),
/// extracted by inclusion-exclusion over z in {0,1}^n.
Rational immanant_gj(const Partition& lambda, const RationalMatrix& y, int cap = kGouldenJacksonCap);

}  // namespace ffp
