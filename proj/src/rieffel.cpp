#include "rotlab/rieffel.hpp"

#include <algorithm>
#include <cmath>

namespace rotlab {

namespace {

double mod1(double x) {
    double r = std::fmod(x, 1.0);
    if (r < 0) r += 1.0;
    return r;
}

// circular distance between angles, in radians, result in [0, pi]
double angle_dist(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
    return std::min(d, 2.0 * M_PI - d);
}

} // namespace

BranchAngle::BranchAngle(double t) : theta(mod1(t)) {}

RieffelParams::RieffelParams(double theta_, double epsilon_) : theta(theta_), epsilon(epsilon_) {
    if (!(theta > 0.0 && theta < 1.0))
        throw ParamViolation("RieffelParams: theta must lie in (0,1)");
    if (!(epsilon > 0.0 && epsilon <= theta && theta + epsilon <= 1.0))
        throw ParamViolation("RieffelParams: need 0 < eps <= theta and theta + eps <= 1");
}

RieffelParams RieffelParams::with_default_epsilon(double theta) {
    return RieffelParams(theta, std::min({theta, 1.0 - theta, 0.25}));
}

double RieffelFunctions::f(double t) const {
    t = mod1(t);
    const double th = params.theta, ep = params.epsilon;
    if (t <= ep) return t / ep;
    if (t <= th) return 1.0;
    if (t <= th + ep) return (th + ep - t) / ep;
    return 0.0;
}

double RieffelFunctions::g(double t) const {
    t = mod1(t);
    if (t > params.epsilon) return 0.0;
    double v = f(t);
    return std::sqrt(std::max(v * (1.0 - v), 0.0));
}

double RieffelFunctions::f_circle(cdouble z) const { return f(std::arg(z) / (2.0 * M_PI)); }
double RieffelFunctions::g_circle(cdouble z) const { return g(std::arg(z) / (2.0 * M_PI)); }

RieffelFunctions rieffel_functions(const RieffelParams& params) { return RieffelFunctions{params}; }

Matrix log_branch(const Matrix& u, const BranchAngle& branch, const ToleranceConfig& tol) {
    SpectralDecomposition dec = eig_normal(u, MatrixKind::Unitary, tol);
    const double cut = branch.cut_angle();
    const Eigen::Index n = dec.eigenvalues.size();
    Vector logs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double phi = std::arg(dec.eigenvalues(i));
        if (angle_dist(phi, cut) < tol.gap_tol)
            throw GapViolation("log_branch: eigenvalue within gap_tol of the cut at theta = " +
                               std::to_string(branch.theta));
        // representative of phi in (2 pi theta - pi, 2 pi theta + pi)
        double t = phi + 2.0 * M_PI * std::round(branch.theta - phi / (2.0 * M_PI));
        logs(i) = cdouble(0.0, t);
    }
    return dec.eigenvectors * logs.asDiagonal() * dec.eigenvectors.adjoint();
}

Matrix rieffel_element(const Matrix& u, const Matrix& v, const RieffelParams& params,
                       const ToleranceConfig& tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
        throw DimensionMismatch("rieffel_element: u, v must be square of equal dimension");
    RieffelFunctions fg = rieffel_functions(params);
    SpectralDecomposition dec = eig_normal(u, MatrixKind::Unitary, tol);
    Vector fv(dec.eigenvalues.size()), gv(dec.eigenvalues.size());
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
        fv(i) = fg.f_circle(dec.eigenvalues(i));
        gv(i) = fg.g_circle(dec.eigenvalues(i));
    }
    Matrix fu = dec.eigenvectors * fv.asDiagonal() * dec.eigenvectors.adjoint();
    Matrix gu = dec.eigenvectors * gv.asDiagonal() * dec.eigenvectors.adjoint();
    Matrix e = gu * v.adjoint() + fu + v * gu;
    return (e + e.adjoint()) / 2.0;
}

RieffelProjection rieffel_projection(const Matrix& u, const Matrix& v,
                                     const RieffelParams& params, const ToleranceConfig& tol) {
    Matrix e = rieffel_element(u, v, params, tol);
    SpectralDecomposition dec = eig_normal(e, MatrixKind::Hermitian, tol);

    RieffelProjection out;
    out.almost_idem = 0;
    out.gap_margin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
        double lam = dec.eigenvalues(i).real();
        out.almost_idem = std::max(out.almost_idem, std::abs(lam * lam - lam));
        out.gap_margin = std::min(out.gap_margin, std::abs(lam - 0.5));
    }
    if (out.almost_idem >= 0.25)
        throw GapAtHalfViolation("rieffel_projection: ||e^2 - e|| = " +
                                 std::to_string(out.almost_idem) + " >= 1/4");
    if (out.gap_margin < tol.gap_tol)
        throw GapAtHalfViolation("rieffel_projection: eigenvalue within gap_tol of 1/2");

    Vector chi(dec.eigenvalues.size());
    int rank = 0;
    for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
        bool above = dec.eigenvalues(i).real() > 0.5;
        chi(i) = above ? 1.0 : 0.0;
        rank += above ? 1 : 0;
    }
    out.projection = dec.eigenvectors * chi.asDiagonal() * dec.eigenvectors.adjoint();
    out.rank = rank;
    return out;
}

double exel_rhs(const Matrix& u, const Matrix& v, const BranchAngle& branch,
                const ToleranceConfig& tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw DimensionMismatch("exel_rhs: u, v must have equal dimension");
    Matrix w = u * v * u.adjoint() * v.adjoint();
    Matrix lg = log_branch(w, branch, tol);
    cdouble val = normalized_trace(lg) / cdouble(0.0, 2.0 * M_PI);
    if (std::abs(val.imag()) > 1e-12)
        throw Error("exel_rhs: trace has imaginary residue " + std::to_string(val.imag()) +
                    "; upstream numerical failure");
    return val.real();
}

double exel_lhs(const Matrix& u, const Matrix& v, const RieffelParams& params,
                const ToleranceConfig& tol) {
    RieffelProjection proj = rieffel_projection(u, v, params, tol);
    return static_cast<double>(proj.rank) / static_cast<double>(u.rows());
}

BottElement bott_element_theta0(const Matrix& u, const Matrix& v, const ToleranceConfig& tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
        throw DimensionMismatch("bott_element_theta0: u, v must be square of equal dimension");
    const Eigen::Index n = u.rows();

    // tent at angle 0 with the two square-root bumps; the split below makes
    // index(clock, shift) come out +1, matching exel_rhs at branch 0.
    auto tent = [](double t) { return 1.0 - 2.0 * std::abs(t); }; // t in (-1/2, 1/2]
    auto bump = [&](double t) { return std::sqrt(std::max(tent(t) * (1.0 - tent(t)), 0.0)); };

    SpectralDecomposition dec = eig_normal(u, MatrixKind::Unitary, tol);
    Vector fv(n), gv(n), hv(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double t = std::arg(dec.eigenvalues(i)) / (2.0 * M_PI); // in (-1/2, 1/2]
        fv(i) = tent(t);
        gv(i) = (t <= 0.0) ? bump(t) : 0.0;
        hv(i) = (t > 0.0) ? bump(t) : 0.0;
    }
    Matrix fu = dec.eigenvectors * fv.asDiagonal() * dec.eigenvectors.adjoint();
    Matrix gu = dec.eigenvectors * gv.asDiagonal() * dec.eigenvectors.adjoint();
    Matrix hu = dec.eigenvectors * hv.asDiagonal() * dec.eigenvectors.adjoint();

    Matrix b(2 * n, 2 * n);
    Matrix off = gu + hu * v;
    b.topLeftCorner(n, n) = fu;
    b.topRightCorner(n, n) = off;
    b.bottomLeftCorner(n, n) = off.adjoint();
    b.bottomRightCorner(n, n) = Matrix::Identity(n, n) - fu;
    b = (b + b.adjoint()) / 2.0;

    SpectralDecomposition bd = eig_normal(b, MatrixKind::Hermitian, tol);
    BottElement out;
    out.element = std::move(b);
    out.gap_margin = std::numeric_limits<double>::infinity();
    int rank = 0;
    for (Eigen::Index i = 0; i < bd.eigenvalues.size(); ++i) {
        double lam = bd.eigenvalues(i).real();
        out.gap_margin = std::min(out.gap_margin, std::abs(lam - 0.5));
        if (lam > 0.5) ++rank;
    }
    if (out.gap_margin < tol.gap_tol)
        throw GapAtHalfViolation("bott_element_theta0: no spectral gap at 1/2");
    out.index = rank - static_cast<int>(n);
    return out;
}

CommonGap common_gap_theta(const PhaseMatrix& phases, double delta) {
    if (delta < 0) throw ParamViolation("common_gap_theta: delta must be nonnegative");
    // The spectrum of v_k v_j v_k* v_j* lies within chord distance delta of
    // e^{2 pi i theta_jk}: an arc of angular half-width 2 asin(delta/2).
    double half = 2.0 * std::asin(std::min(delta, 2.0) / 2.0);

    std::vector<std::pair<double, double>> arcs; // [start, end] angles, may wrap
    for (int j = 0; j < phases.n; ++j) {
        for (int k = j + 1; k < phases.n; ++k) {
            double center = 2.0 * M_PI * phases.theta(j, k);
            arcs.emplace_back(center - half, center + half);
        }
    }
    if (half >= M_PI) throw NoGap("common_gap_theta: arcs cover the circle");

    // merge on the circle: sort by start mod 2pi, sweep
    std::vector<std::pair<double, double>> norm;
    for (auto& [s, e] : arcs) {
        double s0 = std::fmod(s, 2.0 * M_PI);
        if (s0 < 0) s0 += 2.0 * M_PI;
        norm.emplace_back(s0, s0 + (e - s));
    }
    std::sort(norm.begin(), norm.end());
    // unroll wrap-around by duplicating arcs shifted by 2pi
    std::vector<std::pair<double, double>> all = norm;
    for (auto& [s, e] : norm) all.emplace_back(s + 2.0 * M_PI, e + 2.0 * M_PI);
    std::sort(all.begin(), all.end());

    // find the largest gap between merged arcs within one full turn
    double best_gap = -1, best_mid = 0;
    double cover_end = all[0].second;
    double start0 = all[0].first;
    for (size_t i = 1; i < all.size() && all[i].first < start0 + 2.0 * M_PI; ++i) {
        if (all[i].first > cover_end) {
            double gap = all[i].first - cover_end;
            if (gap > best_gap) {
                best_gap = gap;
                best_mid = (cover_end + all[i].first) / 2.0;
            }
        }
        cover_end = std::max(cover_end, all[i].second);
    }
    // gap closing the circle back to the first arc
    double wrap_gap = (start0 + 2.0 * M_PI) - cover_end;
    if (wrap_gap > best_gap) {
        best_gap = wrap_gap;
        best_mid = (cover_end + start0 + 2.0 * M_PI) / 2.0;
    }
    if (best_gap <= 0) throw NoGap("common_gap_theta: arcs cover the circle");

    CommonGap out{BranchAngle((best_mid - M_PI) / (2.0 * M_PI)), best_gap / 2.0};
    return out;
}

} // namespace rotlab
