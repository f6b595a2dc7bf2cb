#pragma once

#include <vector>

#include "rotlab/linalg.hpp"
#include "rotlab/phase.hpp"

namespace rotlab {

using UnitaryTuple = std::vector<Matrix>;

/// diag(w^0, w^p, w^2p, ...) with w = e^{2 pi i / q}.
Matrix clock_matrix(long long q, long long p = 1);

/// Cyclic permutation: S e_j = e_{j+1 mod q}.
Matrix shift_matrix(long long q);

/// Exact pair (u1, u2) = (S_q (x) I_m, Z_q^p (x) I_m) with
/// u2 u1 = e^{2 pi i p/q} u1 u2.
UnitaryTuple rational_pair_rep(const RationalPhase& theta, long long multiplicity = 1);

/// Exact triple for rational Theta. With a=q12, b=q13, c=q23:
///   v1 = S_a (x) S_b (x) I_c,
///   v2 = Z_a^{p12} (x) I_b (x) S_c,
///   v3 = I_a (x) Z_b^{p13} (x) Z_c^{p23},
/// each tensored with I_multiplicity; v_k v_j = e^{2 pi i theta_jk} v_j v_k.
UnitaryTuple rational_torus3_rep(const PhaseMatrix& phases, long long multiplicity = 1);

/// Canonical trace of the monomial u_1^{l_1} ... u_n^{l_n}: 1 if l = 0, else 0.
cdouble canonical_trace(const PhaseMatrix& phases, const std::vector<long long>& exponents);

/// Trace of v_1^{l_1} ... v_n^{l_n} for a concrete tuple (normalized).
cdouble monomial_trace(const UnitaryTuple& tuple, const std::vector<long long>& exponents);

} // namespace rotlab
