#include "ffp/haar.hpp"

#include <stdexcept>

namespace ffp {

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

std::complex<double> RandomStream::complex_gaussian() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {re, im};
}

ComplexMatrix haar_sample(int d, RandomStream& stream) {
    if (d < 1) throw std::invalid_argument("haar_sample requires d >= 1");
    ComplexMatrix g(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) g(i, j) = stream.complex_gaussian();
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    const ComplexMatrix& r = qr.matrixQR();
    for (int j = 0; j < d; ++j) {
        const std::complex<double> rjj = r(j, j);
        const double modulus = std::abs(rjj);
        const std::complex<double> phase = modulus > 0.0 ? rjj / modulus : std::complex<double>(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

ComplexMatrix haar_sample(int d, std::uint64_t seed) {
    RandomStream stream(seed, 0);
    return haar_sample(d, stream);
}

double unitarity_residual(const ComplexMatrix& u) {
    const ComplexMatrix defect = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return defect.cwiseAbs().maxCoeff();
}

}  // namespace ffp
