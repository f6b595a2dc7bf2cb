#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "rotlab/errors.hpp"
#include "rotlab/tolerances.hpp"

namespace rotlab {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;

enum class MatrixKind { Hermitian, Unitary };

/// Eigenvalues and an orthonormal eigenbasis of a normal matrix.
/// Hermitian input: real eigenvalues, ascending.
/// Unitary input: unimodular eigenvalues, ascending principal argument in (-pi, pi].
struct SpectralDecomposition {
    Vector eigenvalues;
    Matrix eigenvectors; // columns, orthonormal
    double residual = 0; // ||V diag(lambda) V* - A|| / ||A||
};

double op_norm(const Matrix& a);
cdouble normalized_trace(const Matrix& a);

bool is_unitary(const Matrix& u, double tol = 1e-10);
bool is_hermitian(const Matrix& a, double tol = 1e-10);

SpectralDecomposition eig_normal(const Matrix& a, MatrixKind kind,
                                 const ToleranceConfig& tol = {});

/// V diag(f(lambda)) V*. The optional domain predicate rejects eigenvalues
/// outside f's domain (branch cuts) with DomainViolation.
Matrix func_calc(const Matrix& a, MatrixKind kind,
                 const std::function<cdouble(cdouble)>& f,
                 const ToleranceConfig& tol = {},
                 const std::function<bool(cdouble)>& domain = nullptr);

/// exp(X) for skew-Hermitian X, exactly unitary up to eigensolver accuracy.
Matrix exp_skew_hermitian(const Matrix& x);

/// tr(A B) without forming the product.
cdouble trace_of_product(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

} // namespace rotlab
