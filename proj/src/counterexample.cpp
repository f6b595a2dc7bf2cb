#include "rotlab/counterexample.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace rotlab {

std::array<Matrix, 3> voiculescu_triple(int n) {
    if (n < 2) throw ParamViolation("voiculescu_triple: n must be >= 2");
    const double s = (n - 1) / 2.0;
    // basis |s, m> with m = s, s-1, ..., -s
    Matrix sp = Matrix::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        double m = s - i;
        sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
    Matrix sx = (sp + sp.adjoint()) / 2.0;
    Matrix sy = (sp - sp.adjoint()) / cdouble(0, 2);
    Matrix sz = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) sz(i, i) = s - i;
    return {sx / s, sy / s, sz / s};
}

UnitaryTuple unitaries_from_selfadjoint(const std::array<Matrix, 3>& h,
                                        const ToleranceConfig& tol) {
    UnitaryTuple out;
    for (const auto& m : h) {
        if (m.rows() != m.cols()) throw NotSquare("unitaries_from_selfadjoint: not square");
        if (op_norm(m) > 1.0 + 1e-9)
            throw NormTooLarge("unitaries_from_selfadjoint: ||H|| exceeds 1");
        out.push_back(func_calc(
            m, MatrixKind::Hermitian,
            [](cdouble lam) { return std::exp(cdouble(0, M_PI * lam.real() / 2.0)); }, tol));
    }
    return out;
}

TripleCertificate bott_index_triple(const std::array<Matrix, 3>& h, const ToleranceConfig& tol) {
    const Eigen::Index n = h[0].rows();
    for (const auto& m : h)
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("bott_index_triple: dimensions must agree");

    Matrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1 << 0, 1, 1, 0;
    s2 << 0, cdouble(0, -1), cdouble(0, 1), 0;
    s3 << 1, 0, 0, -1;
    Matrix b = kron(h[0], s1) + kron(h[1], s2) + kron(h[2], s3);
    b = (b + b.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Matrix> es(b);
    if (es.info() != Eigen::Success)
        throw NoConvergence("bott_index_triple: eigensolver failed");

    TripleCertificate cert;
    cert.spectral_gap = std::numeric_limits<double>::infinity();
    int negative = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        cert.spectral_gap = std::min(cert.spectral_gap, std::abs(lam));
        if (lam < 0) ++negative;
    }
    if (cert.spectral_gap < tol.gap_tol)
        throw NoSpectralGap("bott_index_triple: eigenvalue within gap_tol of 0");
    cert.bott_index_triple = static_cast<int>(n) - negative;

    int slot = 0;
    for (int a = 0; a < 3; ++a)
        for (int c = a + 1; c < 3; ++c)
            cert.commutator_norms[slot++] = op_norm(Matrix(h[a] * h[c] - h[c] * h[a]));

    UnitaryTuple u = unitaries_from_selfadjoint(h, tol);
    slot = 0;
    for (int a = 0; a < 3; ++a)
        for (int c = a + 1; c < 3; ++c)
            cert.pairwise_exel[slot++] = exel_rhs(u[c], u[a], BranchAngle(0.0), tol);
    return cert;
}

} // namespace rotlab
