#include "rotlab/obstruction.hpp"

#include <cmath>

namespace rotlab {

DefectReport defect(const PhaseMatrix& phases, const UnitaryTuple& tuple) {
    if (static_cast<int>(tuple.size()) != phases.n)
        throw DimensionMismatch("defect: tuple length must equal n");
    const Eigen::Index dim = tuple.empty() ? 0 : tuple[0].rows();
    for (const auto& v : tuple)
        if (v.rows() != dim || v.cols() != dim)
            throw DimensionMismatch("defect: all unitaries must share one dimension");

    DefectReport out;
    out.per_pair = Eigen::MatrixXd::Zero(phases.n, phases.n);
    for (int j = 0; j < phases.n; ++j) {
        for (int k = j + 1; k < phases.n; ++k) {
            cdouble w = std::polar(1.0, 2.0 * M_PI * phases.theta(j, k));
            double d = op_norm(Matrix(tuple[k] * tuple[j] - w * tuple[j] * tuple[k]));
            out.per_pair(j, k) = d;
            out.max = std::max(out.max, d);
        }
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Obstructed: return "obstructed";
        case Verdict::Unobstructed: return "unobstructed";
        default: return "indeterminate";
    }
}

namespace {

// representative of x congruent mod 1 lying in (center - 1/2, center + 1/2]
double wrap_near(double x, double center) {
    return x + std::round(center - x);
}

} // namespace

ObstructionReport obstruction_report(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                                     int n_monomial, double delta_cert,
                                     const ToleranceConfig& tol) {
    DefectReport def = defect(phases, tuple);
    const Eigen::Index dim = tuple[0].rows();

    ObstructionReport rep;
    rep.defect_max = def.max;
    rep.n_monomial = n_monomial;
    rep.delta_cert = delta_cert;

    std::optional<CommonGap> common;
    try {
        common = common_gap_theta(phases, def.max);
        rep.common_branch_theta = common->branch.theta;
    } catch (const NoGap&) {
        // per-pair branches may still apply
    }

    bool any_gap_failure = false;

    for (int j = 0; j < phases.n; ++j) {
        for (int k = j + 1; k < phases.n; ++k) {
            PairObstruction pair;
            pair.j = j;
            pair.k = k;
            pair.defect = def.per_pair(j, k);
            double theta_jk = phases.theta(j, k);

            // the pair's own branch works whenever its spectral arc stays
            // clear of the antipodal cut by the gap tolerance
            double arc_half = 2.0 * std::asin(std::min(pair.defect, 2.0) / 2.0);
            bool per_pair_ok = arc_half + tol.gap_tol < M_PI;
            BranchAngle branch(theta_jk);
            if (!per_pair_ok && common) {
                branch = common->branch;
                pair.used_common_branch = true;
            }
            pair.branch_theta = branch.theta;

            try {
                double rhs = exel_rhs(tuple[k], tuple[j], branch, tol);
                pair.exel_rhs = rhs;
                pair.trace_condition_residual = std::abs(rhs - wrap_near(theta_jk, branch.theta));
            } catch (const Error& err) {
                pair.flag = err.what();
                any_gap_failure = true;
            }

            try {
                if (theta_jk > 0.0) {
                    RieffelProjection proj = rieffel_projection(
                        tuple[k], tuple[j], RieffelParams::with_default_epsilon(theta_jk), tol);
                    pair.rieffel_rank = proj.rank;
                    pair.exel_lhs = static_cast<double>(proj.rank) / static_cast<double>(dim);
                } else {
                    BottElement bott = bott_element_theta0(tuple[k], tuple[j], tol);
                    pair.rieffel_rank = bott.index + static_cast<int>(dim);
                    pair.exel_lhs = static_cast<double>(bott.index) / static_cast<double>(dim);
                }
            } catch (const Error& err) {
                if (pair.flag.empty()) pair.flag = err.what();
            }

            rep.per_pair.push_back(std::move(pair));
        }
    }

    // condition (3): monomial traces against the canonical trace
    const int n = phases.n;
    std::vector<long long> exps(n, -n_monomial);
    double worst = 0;
    if (n_monomial > 0) {
        // precompute generator powers
        std::vector<std::vector<Matrix>> powers(n);
        for (int g = 0; g < n; ++g) {
            powers[g].resize(2 * n_monomial + 1);
            powers[g][n_monomial] = Matrix::Identity(dim, dim);
            for (int e = 1; e <= n_monomial; ++e) {
                powers[g][n_monomial + e] = powers[g][n_monomial + e - 1] * tuple[g];
                powers[g][n_monomial - e] = powers[g][n_monomial - e + 1] * tuple[g].adjoint();
            }
        }
        bool done = false;
        while (!done) {
            Matrix acc = powers[0][exps[0] + n_monomial];
            for (int g = 1; g + 1 < n; ++g) acc = acc * powers[g][exps[g] + n_monomial];
            cdouble tr = (n > 1)
                             ? trace_of_product(acc, powers[n - 1][exps[n - 1] + n_monomial])
                             : acc.trace();
            tr /= static_cast<double>(dim);
            worst = std::max(worst, std::abs(tr - canonical_trace(phases, exps)));
            // odometer over [-N, N]^n
            int g = 0;
            for (; g < n; ++g) {
                if (exps[g] < n_monomial) {
                    ++exps[g];
                    break;
                }
                exps[g] = -n_monomial;
            }
            done = (g == n);
        }
    }
    rep.monomial_deviation = worst;

    bool any_over = false, all_under = true;
    for (const auto& pair : rep.per_pair) {
        if (!pair.trace_condition_residual) {
            all_under = false;
        } else if (*pair.trace_condition_residual > delta_cert) {
            any_over = true;
            all_under = false;
        }
    }
    if (any_over && !any_gap_failure)
        rep.verdict = Verdict::Obstructed;
    else if (all_under && !any_gap_failure && rep.monomial_deviation <= delta_cert)
        rep.verdict = Verdict::Unobstructed;
    else
        rep.verdict = Verdict::Indeterminate;
    return rep;
}

} // namespace rotlab
