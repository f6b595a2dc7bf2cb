#pragma once

#include <functional>
#include <optional>

#include "rotlab/linalg.hpp"
#include "rotlab/phase.hpp"

namespace rotlab {

/// Branch parameter of log_theta: cut at angle 2 pi theta + pi, values in
/// i (2 pi theta - pi, 2 pi theta + pi), normalized so
/// log_theta(e^{2 pi i theta}) = 2 pi i theta.
struct BranchAngle {
    double theta = 0.0;
    explicit BranchAngle(double t = 0.0);
    double cut_angle() const { return 2.0 * M_PI * theta + M_PI; }
};

struct RieffelParams {
    double theta;   // in (0,1)
    double epsilon; // 0 < epsilon <= theta, theta + epsilon <= 1

    RieffelParams(double theta, double epsilon);
    /// epsilon = min(theta, 1-theta, 1/4)
    static RieffelParams with_default_epsilon(double theta);
};

/// The bump pair behind the Rieffel projection. f is the trapezoid
/// (ramp up on [0,eps], 1 on [eps,theta], ramp down on [theta,theta+eps]);
/// g = sqrt(f(1-f)) on the up-ramp [0,eps] and zero elsewhere, which is the
/// support placement that makes the three circle identities
///   g(t) g(t-theta) = 0,
///   g(t) [f(t) + f(t+theta)] = g(t),
///   f(t) = f(t)^2 + g(t)^2 + g(t-theta)^2
/// hold for every admissible (theta, eps).
struct RieffelFunctions {
    RieffelParams params;

    double f(double t) const;                 // t-parameterized, t mod 1
    double g(double t) const;
    double f_circle(cdouble z) const;         // z on the unit circle
    double g_circle(cdouble z) const;
};

RieffelFunctions rieffel_functions(const RieffelParams& params);

/// Skew-Hermitian branch logarithm of a unitary. Every eigenvalue must stay
/// at angular distance >= gap_tol from the cut, else GapViolation.
Matrix log_branch(const Matrix& u, const BranchAngle& branch,
                  const ToleranceConfig& tol = {});

/// e^theta(u, v) = g(u) v* + f(u) + v g(u); always Hermitian. A projection
/// exactly when u v = e^{2 pi i theta} v u.
Matrix rieffel_element(const Matrix& u, const Matrix& v, const RieffelParams& params,
                       const ToleranceConfig& tol = {});

struct RieffelProjection {
    Matrix projection;
    int rank = 0;
    double gap_margin = 0;    // min_j |lambda_j - 1/2|
    double almost_idem = 0;   // ||e^2 - e||
};

/// chi_{(1/2,inf)}(e^theta(u,v)). Requires ||e^2-e|| < 1/4 and all
/// eigenvalues clear of 1/2 by gap_tol, else GapAtHalfViolation.
RieffelProjection rieffel_projection(const Matrix& u, const Matrix& v,
                                     const RieffelParams& params,
                                     const ToleranceConfig& tol = {});

/// Right side of the trace formula: (1/2 pi i) tr_N log_theta(u v u* v*).
double exel_rhs(const Matrix& u, const Matrix& v, const BranchAngle& branch,
                const ToleranceConfig& tol = {});

/// Left side: tr_N R^theta(u, v) = rank / N.
double exel_lhs(const Matrix& u, const Matrix& v, const RieffelParams& params,
                const ToleranceConfig& tol = {});

struct BottElement {
    Matrix element;  // 2N x 2N Hermitian almost-projection
    int index = 0;   // rank of chi_{>1/2} minus N
    double gap_margin = 0;
};

/// theta = 0 obstruction class of an almost-commuting pair, normalized so
/// that index(clock(q), shift(q)) = +1 = q * exel_rhs at branch 0.
BottElement bott_element_theta0(const Matrix& u, const Matrix& v,
                                const ToleranceConfig& tol = {});

struct CommonGap {
    BranchAngle branch;
    double clearance = 0; // angular distance from the cut to the nearest arc
};

/// Branch angle whose cut sits in the middle of the largest arc left free by
/// the union of arcs of chord radius delta around every e^{2 pi i theta_jk}.
CommonGap common_gap_theta(const PhaseMatrix& phases, double delta);

} // namespace rotlab
