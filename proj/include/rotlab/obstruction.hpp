#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotlab/reps.hpp"
#include "rotlab/rieffel.hpp"

namespace rotlab {

struct DefectReport {
    double max = 0;
    Eigen::MatrixXd per_pair; // upper triangle holds ||v_k v_j - e^{2 pi i theta_jk} v_j v_k||
};

/// Quantitative failure of the rotation relations, pairwise and max.
DefectReport defect(const PhaseMatrix& phases, const UnitaryTuple& tuple);

enum class Verdict { Obstructed, Unobstructed, Indeterminate };
std::string to_string(Verdict v);

struct PairObstruction {
    int j = 0, k = 0;
    double defect = 0;
    double branch_theta = 0;       // branch actually used for the log
    bool used_common_branch = false;
    std::optional<double> exel_rhs;
    std::optional<double> trace_condition_residual;
    std::optional<int> rieffel_rank;   // absent for theta_jk = 0 or gap failure
    std::optional<double> exel_lhs;    // rank/N, or bott index/N at theta_jk = 0
    std::string flag;                  // nonempty when a gap hypothesis failed
};

struct ObstructionReport {
    double defect_max = 0;
    std::vector<PairObstruction> per_pair;
    std::optional<double> common_branch_theta; // absent if the arcs cover the circle
    double monomial_deviation = 0;
    int n_monomial = 0;
    double delta_cert = 0;
    Verdict verdict = Verdict::Indeterminate;
};

/// Full per-pair check of the three stability-theorem conditions:
/// defect (1), logarithmic trace condition (2), monomial traces (3).
ObstructionReport obstruction_report(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                                     int n_monomial = 3, double delta_cert = 1e-6,
                                     const ToleranceConfig& tol = {});

} // namespace rotlab
