#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace ffp {

using ComplexMatrix = Eigen::MatrixXcd;

/// Deterministic random stream identified by (seed, stream index). Distinct
/// stream indices give independent-looking mt19937_64 states.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream);
    std::mt19937_64& engine() { return engine_; }
    /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
    std::complex<double> complex_gaussian();

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 0.7071067811865476};
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the columns
/// of Q rescaled by the phases of diag(R).
ComplexMatrix haar_sample(int d, RandomStream& stream);
ComplexMatrix haar_sample(int d, std::uint64_t seed);

/// max |(U*U - I)_{ij}|.
double unitarity_residual(const ComplexMatrix& u);

}  // namespace ffp
