#pragma once

#include <array>

#include "rotlab/rieffel.hpp"
#include "rotlab/reps.hpp"

namespace rotlab {

/// Normalized spin operators (S_x, S_y, S_z)/s in the spin-(n-1)/2
/// representation: norm one, pairwise commutator norms 2/(n-1).
std::array<Matrix, 3> voiculescu_triple(int n);

/// U_j = exp(pi i H_j / 2); requires each ||H_j|| <= 1.
UnitaryTuple unitaries_from_selfadjoint(const std::array<Matrix, 3>& h,
                                        const ToleranceConfig& tol = {});

struct TripleCertificate {
    int bott_index_triple = 0;
    std::array<double, 3> pairwise_exel{};      // branch-0 values for (1,2),(1,3),(2,3)
    std::array<double, 3> commutator_norms{};
    double spectral_gap = 0;                    // min |eigenvalue| of the Dirac-type matrix
};

/// Half-signature defect of B = H1 (x) s1 + H2 (x) s2 + H3 (x) s3 with Pauli
/// s_k: index = n - #negative eigenvalues. Nonzero index certifies that no
/// nearby commuting Hermitian triple exists while the gap persists.
TripleCertificate bott_index_triple(const std::array<Matrix, 3>& h,
                                    const ToleranceConfig& tol = {});

} // namespace rotlab
