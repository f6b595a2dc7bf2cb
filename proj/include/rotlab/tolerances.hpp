#pragma once

#include <string>

namespace rotlab {

// All numerical knobs live here so experiments can pin them in one place.
struct ToleranceConfig {
    double unitarity_tol = 1e-10; // allowed ||U*U - I||
    double eig_tol = 1e-9;        // eigendecomposition reconstruction residual, relative
    double gap_tol = 1e-6;        // minimal angular distance to a branch cut / gap at 1/2
    double normality_tol = 1e-8;  // how non-normal an input may be, relative
};

ToleranceConfig load_tolerances(const std::string& path);

} // namespace rotlab
