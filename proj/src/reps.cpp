#include "rotlab/reps.hpp"

#include <cmath>

namespace rotlab {

Matrix clock_matrix(long long q, long long p) {
    if (q < 1) throw ParamViolation("clock_matrix: q must be >= 1");
    Matrix z = Matrix::Zero(q, q);
    for (long long j = 0; j < q; ++j) {
        // reduce the exponent first so large j*p stays exact
        long long e = ((j * (p % q)) % q + q) % q;
        double ang = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(q);
        z(j, j) = std::polar(1.0, ang);
    }
    return z;
}

Matrix shift_matrix(long long q) {
    if (q < 1) throw ParamViolation("shift_matrix: q must be >= 1");
    Matrix s = Matrix::Zero(q, q);
    for (long long j = 0; j < q; ++j) s((j + 1) % q, j) = 1.0;
    return s;
}

UnitaryTuple rational_pair_rep(const RationalPhase& theta, long long multiplicity) {
    if (multiplicity < 1) throw ParamViolation("rational_pair_rep: multiplicity must be >= 1");
    Matrix id = Matrix::Identity(multiplicity, multiplicity);
    return {kron(shift_matrix(theta.q), id), kron(clock_matrix(theta.q, theta.p), id)};
}

UnitaryTuple rational_torus3_rep(const PhaseMatrix& phases, long long multiplicity) {
    if (phases.n != 3) throw ParamViolation("rational_torus3_rep: n must be 3");
    if (multiplicity < 1) throw ParamViolation("rational_torus3_rep: multiplicity must be >= 1");
    RationalPhase t12 = phases.rational_entry(0, 1);
    RationalPhase t13 = phases.rational_entry(0, 2);
    RationalPhase t23 = phases.rational_entry(1, 2);
    const long long a = t12.q, b = t13.q, c = t23.q;

    Matrix ia = Matrix::Identity(a, a);
    Matrix ib = Matrix::Identity(b, b);
    Matrix ic = Matrix::Identity(c, c);

    Matrix v1 = kron(kron(shift_matrix(a), shift_matrix(b)), ic);
    Matrix v2 = kron(kron(clock_matrix(a, t12.p), ib), shift_matrix(c));
    Matrix v3 = kron(kron(ia, clock_matrix(b, t13.p)), clock_matrix(c, t23.p));

    Matrix im = Matrix::Identity(multiplicity, multiplicity);
    if (multiplicity > 1) {
        v1 = kron(v1, im);
        v2 = kron(v2, im);
        v3 = kron(v3, im);
    }
    return {std::move(v1), std::move(v2), std::move(v3)};
}

cdouble canonical_trace(const PhaseMatrix& phases, const std::vector<long long>& exponents) {
    if (static_cast<int>(exponents.size()) != phases.n)
        throw LengthMismatch("canonical_trace: exponent vector length must equal n");
    for (long long l : exponents)
        if (l != 0) return 0.0;
    return 1.0;
}

cdouble monomial_trace(const UnitaryTuple& tuple, const std::vector<long long>& exponents) {
    if (exponents.size() != tuple.size())
        throw LengthMismatch("monomial_trace: exponent vector length must equal tuple size");
    if (tuple.empty()) throw ParamViolation("monomial_trace: empty tuple");
    const Eigen::Index dim = tuple[0].rows();
    Matrix acc = Matrix::Identity(dim, dim);
    for (size_t j = 0; j < tuple.size(); ++j) {
        long long l = exponents[j];
        if (l == 0) continue;
        Matrix base = (l > 0) ? tuple[j] : Matrix(tuple[j].adjoint());
        for (long long i = 0; i < std::llabs(l); ++i) acc = acc * base;
    }
    return normalized_trace(acc);
}

} // namespace rotlab
