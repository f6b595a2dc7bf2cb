#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotlab/errors.hpp"

namespace rotlab {

/// Reduced fraction p/q with 0 <= p < q, gcd(p, q) = 1.
struct RationalPhase {
    long long p = 0;
    long long q = 1;

    RationalPhase() = default;
    RationalPhase(long long num, long long den); // normalizes, throws ParamViolation
    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

/// Best rational reconstruction of x in [0,1) by continued fractions.
/// Throws NotRational if no denominator <= max_den matches within tol.
RationalPhase to_rational(double x, long long max_den = 1000000, double tol = 1e-9);

struct RationalCoeff {
    long long num = 0;
    long long den = 1;
};

/// Exact values of the three independent phases over a declared basis of
/// reals assumed Q-linearly independent. Basis element 0 is the constant 1.
struct ExactPhaseData {
    std::vector<std::string> basis;           // labels: "1", "sqrt2", "pi", ...
    std::vector<double> basis_values;         // numeric values, same length
    // coeffs[e] is the coefficient vector of entry e over the basis,
    // entries ordered (1,2), (1,3), (2,3) for n = 3 (upper triangle, row-major).
    std::vector<std::vector<RationalCoeff>> coeffs;
};

/// Numeric value of a basis label ("1", "sqrtN", "pi", "e").
double parse_basis_label(const std::string& label);

/// Skew phase data Theta: theta(j,k) in [0,1) with
/// theta(k,j) = (1 - theta(j,k)) mod 1 and zero diagonal.
struct PhaseMatrix {
    int n = 0;
    Eigen::MatrixXd theta;
    std::optional<ExactPhaseData> exact;

    PhaseMatrix() = default;
    /// Builds from the upper triangle ((1,2),(1,3),...,(n-1,n)) and fills the
    /// conjugate lower triangle.
    static PhaseMatrix from_upper(int n, const std::vector<double>& upper);
    static PhaseMatrix from_rationals(const std::vector<RationalPhase>& upper, int n = 3);

    void validate() const; // throws ParamViolation on invariant failure

    /// Exact rational value of entry (j,k) if available (from the exact data
    /// or by continued-fraction reconstruction). Throws NotRational otherwise.
    RationalPhase rational_entry(int j, int k) const;

    int upper_index(int j, int k) const; // position of (j,k), j<k, in the triangle list
};

struct NondegeneracyResult {
    bool nondegenerate = false;
    int rank = 0; // dim_Q span_Q(1, theta_12, theta_13, theta_23)
};

/// Exact-rank test of the span of {1, theta_12, theta_13, theta_23} over Q,
/// by fraction-arithmetic elimination on the declared basis coefficients.
/// Requires exact data; nondegenerate iff rank >= 3 (n = 3 only).
NondegeneracyResult nondegeneracy_check(const PhaseMatrix& phases);

} // namespace rotlab
