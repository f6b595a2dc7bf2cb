#include "doctest.h"

#include "rotlab/counterexample.hpp"
#include "rotlab/rng.hpp"

using namespace rotlab;

TEST_SUITE("counterexample") {

TEST_CASE("spin triple basics") {
    auto h = voiculescu_triple(10);
    double s = (10 - 1) / 2.0;
    for (const auto& m : h) {
        CHECK(op_norm(m) <= 1.0 + 1e-12);
        CHECK(is_hermitian(m, 1e-12));
    }
    // commutator norms = 1/s
    CHECK(op_norm(Matrix(h[0] * h[1] - h[1] * h[0])) == doctest::Approx(1 / s).epsilon(1e-10));

    // H3 diagonal with equally spaced entries 1, (n-3)/(n-1), ..., -1
    CHECK(h[2](0, 0).real() == doctest::Approx(1.0));
    CHECK(h[2](1, 1).real() == doctest::Approx(7.0 / 9.0));
    CHECK(h[2](9, 9).real() == doctest::Approx(-1.0));
}

TEST_CASE("pauli case n = 2") {
    auto h = voiculescu_triple(2);
    // commutator norm 2, reported as-is
    CHECK(op_norm(Matrix(h[0] * h[1] - h[1] * h[0])) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("unitaries from selfadjoint") {
    Matrix zero = Matrix::Zero(3, 3);
    UnitaryTuple u = unitaries_from_selfadjoint({zero, zero, zero});
    for (const auto& m : u) CHECK(op_norm(Matrix(m - Matrix::Identity(3, 3))) <= 1e-14);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -1;
    UnitaryTuple v = unitaries_from_selfadjoint({d, zero.topLeftCorner(2, 2), d});
    CHECK(std::abs(v[0](0, 0) - cdouble(0, 1)) <= 1e-14);
    CHECK(std::abs(v[0](1, 1) - cdouble(0, -1)) <= 1e-14);

    Matrix big = 2.0 * Matrix::Identity(2, 2);
    CHECK_THROWS_AS(unitaries_from_selfadjoint({big, big, big}), NormTooLarge);
}

TEST_CASE("spin triple unitaries: spectra in the right half circle, exel vanishes") {
    auto h = voiculescu_triple(20);
    UnitaryTuple u = unitaries_from_selfadjoint(h);
    for (const auto& m : u) {
        SpectralDecomposition dec = eig_normal(m, MatrixKind::Unitary);
        for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
            double t = std::arg(dec.eigenvalues(i)) / M_PI;
            CHECK(t >= -0.5 - 1e-9);
            CHECK(t <= 0.5 + 1e-9);
        }
    }
    TripleCertificate cert = bott_index_triple(h);
    for (double e : cert.pairwise_exel) CHECK(std::abs(e) <= 1e-8);
}

TEST_CASE("bott index of the spin triple is 1 with unit gap") {
    for (int n : {2, 3, 7, 25, 50}) {
        TripleCertificate cert = bott_index_triple(voiculescu_triple(n));
        CHECK(cert.bott_index_triple == 1);
        CHECK(cert.spectral_gap == doctest::Approx(1.0).epsilon(1e-9));
        double bound = 2.0 / (n - 1);
        for (double c : cert.commutator_norms) CHECK(c <= bound + 1e-10);
    }
}

TEST_CASE("commuting triple has index 0") {
    Rng rng(55);
    Eigen::Index n = 6;
    Matrix d1 = Matrix::Zero(n, n), d2 = Matrix::Zero(n, n), d3 = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        d1(i, i) = rng.uniform() - 0.5;
        d2(i, i) = rng.uniform() - 0.5;
        d3(i, i) = rng.uniform() + 0.1; // keeps B gapped
    }
    TripleCertificate cert = bott_index_triple({d1, d2, d3});
    CHECK(cert.bott_index_triple == 0);
}

TEST_CASE("index is invariant under conjugation and scaling") {
    auto h = voiculescu_triple(12);
    Rng rng(56);
    Matrix w = haar_unitary(12, rng);
    std::array<Matrix, 3> hc;
    for (int i = 0; i < 3; ++i) hc[i] = w * h[i] * w.adjoint();
    CHECK(bott_index_triple(hc).bott_index_triple == 1);

    std::array<Matrix, 3> hs;
    for (int i = 0; i < 3; ++i) hs[i] = 0.5 * h[i];
    CHECK(bott_index_triple(hs).bott_index_triple == 1);
}

TEST_CASE("zero triple has no spectral gap") {
    Matrix z = Matrix::Zero(3, 3);
    CHECK_THROWS_AS(bott_index_triple({z, z, z}), NoSpectralGap);
}

} // TEST_SUITE
