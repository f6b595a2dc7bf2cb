#include "rotlab/rng.hpp"

#include <cmath>

namespace rotlab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
    return Rng(splitmix64(splitmix64(seed) ^ (trial + 0x51ed2701a3c5e2dfULL)));
}

double Rng::uniform() {
    // 53-bit mantissa from the top bits
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0;
    do {
        u1 = uniform();
    } while (u1 <= 0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Matrix haar_unitary(Eigen::Index n, Rng& rng) {
    Matrix z(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            z(i, j) = cdouble(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        cdouble d = r(j, j);
        double a = std::abs(d);
        q.col(j) *= (a > 0) ? d / a : cdouble(1, 0);
    }
    return q;
}

Matrix random_skew_hermitian(Eigen::Index n, double norm, Rng& rng) {
    Matrix z(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            z(i, j) = cdouble(rng.gaussian(), rng.gaussian());
    Matrix x = (z - z.adjoint()) / 2.0;
    double nx = op_norm(x);
    if (nx == 0 || norm == 0) return Matrix::Zero(n, n);
    return x * (norm / nx);
}

} // namespace rotlab
