#include "rotlab/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace rotlab {

double op_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    if (!a.allFinite()) throw Error("op_norm: non-finite entries");
    if (std::max(a.rows(), a.cols()) <= 32) {
        Eigen::JacobiSVD<Matrix> svd(a);
        return svd.singularValues()(0);
    }
    Eigen::BDCSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

cdouble normalized_trace(const Matrix& a) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw NotSquare("normalized_trace: matrix must be square");
    return a.trace() / static_cast<double>(a.rows());
}

bool is_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return op_norm(d) <= tol;
}

bool is_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return op_norm(Matrix(a - a.adjoint())) <= tol;
}

namespace {

double reconstruction_residual(const Matrix& a, const Vector& lam, const Matrix& v) {
    Matrix rec = v * lam.asDiagonal() * v.adjoint();
    double na = op_norm(a);
    if (na == 0) na = 1.0;
    return op_norm(Matrix(rec - a)) / na;
}

void sort_by_key(Vector& lam, Matrix& v, const std::vector<double>& key) {
    const Eigen::Index n = lam.size();
    std::vector<Eigen::Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return key[i] < key[j]; });
    Vector lam2(n);
    Matrix v2(v.rows(), n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lam2(i) = lam(perm[i]);
        v2.col(i) = v.col(perm[i]);
    }
    lam = std::move(lam2);
    v = std::move(v2);
}

// Joint diagonalization of the commuting pair H=(A+A*)/2, K=(A-A*)/(2i):
// eigendecompose H, then rediagonalize K inside each near-degenerate H cluster.
// cluster_gap is the chaining threshold on consecutive H eigenvalues.
SpectralDecomposition eig_unitary_once(const Matrix& a, double cluster_gap) {
    const Eigen::Index n = a.rows();
    Matrix h = (a + a.adjoint()) / 2.0;
    Matrix k = (a - a.adjoint()) / cdouble(0, 2);

    Eigen::SelfAdjointEigenSolver<Matrix> hs(h);
    if (hs.info() != Eigen::Success)
        throw NoConvergence("eig_normal: Hermitian-part eigensolver failed");
    Eigen::VectorXd hval = hs.eigenvalues();
    Matrix v = hs.eigenvectors();

    Eigen::Index lo = 0;
    while (lo < n) {
        Eigen::Index hi = lo + 1;
        while (hi < n && hval(hi) - hval(hi - 1) < cluster_gap) ++hi;
        if (hi - lo > 1) {
            Matrix block = v.middleCols(lo, hi - lo);
            Matrix kc = block.adjoint() * k * block;
            kc = (kc + kc.adjoint()) / 2.0;
            Eigen::SelfAdjointEigenSolver<Matrix> ks(kc);
            if (ks.info() != Eigen::Success)
                throw NoConvergence("eig_normal: cluster eigensolver failed");
            v.middleCols(lo, hi - lo) = block * ks.eigenvectors();
        }
        lo = hi;
    }

    SpectralDecomposition dec;
    dec.eigenvectors = v;
    dec.eigenvalues = (v.adjoint() * a * v).diagonal();
    return dec;
}

} // namespace

SpectralDecomposition eig_normal(const Matrix& a, MatrixKind kind, const ToleranceConfig& tol) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw NotSquare("eig_normal: matrix must be square");
    if (!a.allFinite()) throw Error("eig_normal: non-finite entries");

    double na = op_norm(a);
    double scale = (na == 0) ? 1.0 : na;

    if (kind == MatrixKind::Hermitian) {
        if (op_norm(Matrix(a - a.adjoint())) > tol.normality_tol * scale)
            throw NotNormal("eig_normal: input is not Hermitian within tolerance");
        Eigen::SelfAdjointEigenSolver<Matrix> es((a + a.adjoint()) / 2.0);
        if (es.info() != Eigen::Success)
            throw NoConvergence("eig_normal: eigensolver did not converge");
        SpectralDecomposition dec;
        dec.eigenvalues = es.eigenvalues().cast<cdouble>();
        dec.eigenvectors = es.eigenvectors();
        dec.residual = reconstruction_residual(a, dec.eigenvalues, dec.eigenvectors);
        if (dec.residual > tol.eig_tol)
            throw NoConvergence("eig_normal: reconstruction residual " +
                                std::to_string(dec.residual) + " exceeds tolerance");
        return dec;
    }

    if (op_norm(Matrix(a.adjoint() * a - Matrix::Identity(a.rows(), a.cols()))) >
        tol.normality_tol * std::max(1.0, scale * scale))
        throw NotNormal("eig_normal: input is not unitary within tolerance");

    // Near-degenerate H eigenvalues need wider clusters; try a ladder and
    // keep the first decomposition meeting the residual contract.
    SpectralDecomposition best;
    best.residual = std::numeric_limits<double>::infinity();
    for (double gap : {1e-12, 1e-10, 1e-8, 1e-6}) {
        SpectralDecomposition dec = eig_unitary_once(a, gap * scale);
        dec.residual = reconstruction_residual(a, dec.eigenvalues, dec.eigenvectors);
        if (dec.residual < best.residual) best = std::move(dec);
        if (best.residual <= tol.eig_tol) break;
    }
    if (best.residual > tol.eig_tol)
        throw NoConvergence("eig_normal: reconstruction residual " +
                            std::to_string(best.residual) + " exceeds tolerance");

    std::vector<double> args(best.eigenvalues.size());
    for (Eigen::Index i = 0; i < best.eigenvalues.size(); ++i) {
        double t = std::arg(best.eigenvalues(i));
        if (t <= -M_PI) t += 2 * M_PI; // principal argument in (-pi, pi]
        args[i] = t;
    }
    sort_by_key(best.eigenvalues, best.eigenvectors, args);
    return best;
}

Matrix func_calc(const Matrix& a, MatrixKind kind, const std::function<cdouble(cdouble)>& f,
                 const ToleranceConfig& tol, const std::function<bool(cdouble)>& domain) {
    SpectralDecomposition dec = eig_normal(a, kind, tol);
    Vector fv(dec.eigenvalues.size());
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
        cdouble lam = dec.eigenvalues(i);
        if (kind == MatrixKind::Hermitian) lam = cdouble(lam.real(), 0.0);
        if (domain && !domain(lam))
            throw DomainViolation("func_calc: eigenvalue outside the function domain");
        fv(i) = f(lam);
    }
    return dec.eigenvectors * fv.asDiagonal() * dec.eigenvectors.adjoint();
}

Matrix exp_skew_hermitian(const Matrix& x) {
    if (x.rows() != x.cols()) throw NotSquare("exp_skew_hermitian: matrix must be square");
    // X = iH with H Hermitian; exp(X) = V diag(exp(i h)) V*
    Matrix h = x / cdouble(0, 1);
    Eigen::SelfAdjointEigenSolver<Matrix> es((h + h.adjoint()) / 2.0);
    if (es.info() != Eigen::Success)
        throw NoConvergence("exp_skew_hermitian: eigensolver failed");
    Vector ev(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        ev(i) = std::exp(cdouble(0, es.eigenvalues()(i)));
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

cdouble trace_of_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw DimensionMismatch("trace_of_product: incompatible shapes");
    return (a.array() * b.transpose().array()).sum();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace rotlab
