#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotlab/obstruction.hpp"
#include "rotlab/rng.hpp"

namespace rotlab {

struct SearchConfig {
    double mu = 1.0;             // distance-penalty weight
    int max_iters = 20000;
    double step_init = 1.0;
    double armijo_c = 1e-4;
    double defect_target = 1e-10;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SearchResult {
    UnitaryTuple repaired;
    double final_defect = 0;
    double distance_moved = 0;   // max_j ||v~_j - v_j||
    int iterations = 0;
    bool converged = false;
    std::vector<double> objective_trace;
    std::string status;          // "converged" or a failure certificate
};

/// Penalized objective
///   J(V) = sum_{j<k} ||V_k V_j - e^{2 pi i theta_jk} V_j V_k||_F^2
///        + mu sum_j ||V_j - anchor_j||_F^2.
double relation_objective(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                          const UnitaryTuple& anchor, double mu);

/// Gradient of J projected onto the tangent spaces of U(N): one matrix
/// V_j skew(V_j* G_j) per generator.
UnitaryTuple riemannian_gradient(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                                 const UnitaryTuple& anchor, double mu);

/// Riemannian descent toward an exactly rotation-commuting tuple near the
/// input. Monotone Armijo line search with Barzilai-Borwein trial steps and
/// Cayley retraction; the penalty weight decays geometrically once progress
/// stalls so the relation residual can be driven to the target.
SearchResult repair(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                    const SearchConfig& cfg, const ToleranceConfig& tol = {});

struct PlantedInstance {
    UnitaryTuple tuple;
    UnitaryTuple ground_truth;
    double defect = 0;
};

/// Exact representation conjugated by a Haar unitary, then each generator
/// multiplied by e^{X_j} with X_j random skew-Hermitian of the given norm.
PlantedInstance plant_instance(const PhaseMatrix& phases, long long multiplicity,
                               double noise, std::uint64_t seed);

} // namespace rotlab
