#include "doctest.h"

#include "rotlab/reps.hpp"
#include "rotlab/rieffel.hpp"
#include "rotlab/rng.hpp"

using namespace rotlab;

namespace {

double mod1(double x) {
    double r = std::fmod(x, 1.0);
    return r < 0 ? r + 1 : r;
}

// max violation of the three circle identities on a grid
double identity_violation(const RieffelFunctions& fg, int grid) {
    double worst = 0;
    const double th = fg.params.theta;
    for (int i = 0; i < grid; ++i) {
        double t = static_cast<double>(i) / grid;
        double e1 = std::abs(fg.g(t) * fg.g(t - th));
        double e2 = std::abs(fg.g(t) * (fg.f(t) + fg.f(t + th)) - fg.g(t));
        double e3 = std::abs(fg.f(t) - (fg.f(t) * fg.f(t) + fg.g(t) * fg.g(t) +
                                        fg.g(t - th) * fg.g(t - th)));
        worst = std::max({worst, e1, e2, e3});
    }
    return worst;
}

UnitaryTuple perturbed_pair(long long p, long long q, long long mult, double noise,
                            std::uint64_t seed) {
    UnitaryTuple pair = rational_pair_rep(RationalPhase(p, q), mult);
    Rng rng(seed);
    const Eigen::Index n = pair[0].rows();
    Matrix w = haar_unitary(n, rng);
    for (auto& m : pair) m = w * m * w.adjoint();
    if (noise > 0)
        for (auto& m : pair) m = exp_skew_hermitian(random_skew_hermitian(n, noise, rng)) * m;
    return pair;
}

} // namespace

TEST_SUITE("rieffel") {

TEST_CASE("params validation") {
    CHECK_THROWS_AS(RieffelParams(0.0, 0.1), ParamViolation);
    CHECK_THROWS_AS(RieffelParams(0.5, 0.6), ParamViolation);
    CHECK_THROWS_AS(RieffelParams(0.9, 0.2), ParamViolation);
    RieffelParams ok = RieffelParams::with_default_epsilon(0.9);
    CHECK(ok.epsilon == doctest::Approx(0.1));
}

TEST_CASE("function identities hold for 50 random parameter pairs") {
    Rng rng(21);
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
        double theta = 0.02 + 0.96 * rng.uniform();
        double epsmax = std::min(theta, 1 - theta);
        double eps = epsmax * (0.05 + 0.95 * rng.uniform());
        RieffelFunctions fg = rieffel_functions(RieffelParams(theta, eps));
        worst = std::max(worst, identity_violation(fg, 10000));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("f and g pointwise values") {
    RieffelFunctions fg = rieffel_functions(RieffelParams(0.5, 0.5));
    CHECK(fg.f(0.25) == doctest::Approx(0.5)); // on the ramp: t/eps
    CHECK(fg.f(0.0) == doctest::Approx(0.0));
    RieffelFunctions fg2 = rieffel_functions(RieffelParams(0.3, 0.2));
    CHECK(fg2.f_circle(cdouble(1, 0)) == doctest::Approx(0.0));
    // g vanishes outside the up-ramp
    for (double t : {0.25, 0.3, 0.5, 0.9}) CHECK(fg2.g(t) == 0.0);
}

TEST_CASE("log_branch normalization") {
    // U = e^{2 pi i theta} I at branch theta -> 2 pi i theta I
    for (double theta : {0.0, 0.25, 0.6, 0.9}) {
        Matrix u = std::polar(1.0, 2 * M_PI * theta) * Matrix::Identity(3, 3);
        Matrix x = log_branch(u, BranchAngle(theta));
        Matrix expect = cdouble(0, 2 * M_PI * theta) * Matrix::Identity(3, 3);
        CHECK(op_norm(Matrix(x - expect)) <= 1e-12);
    }
}

TEST_CASE("log_branch principal branch and exp round trip") {
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = cdouble(0, 1);
    u(1, 1) = cdouble(0, -1);
    Matrix x = log_branch(u, BranchAngle(0.0));
    CHECK(std::abs(x(0, 0) - cdouble(0, M_PI / 2)) <= 1e-12);
    CHECK(std::abs(x(1, 1) - cdouble(0, -M_PI / 2)) <= 1e-12);
    CHECK(op_norm(Matrix(x + x.adjoint())) <= 1e-10);
    CHECK(op_norm(Matrix(exp_skew_hermitian(x) - u)) <= 1e-8);

    CHECK(op_norm(log_branch(Matrix::Identity(4, 4), BranchAngle(0.0))) <= 1e-14);
}

TEST_CASE("log_branch rejects spectrum on the cut") {
    Matrix u = Matrix::Identity(2, 2);
    u(0, 0) = -1.0; // on the branch-0 cut
    CHECK_THROWS_AS(log_branch(u, BranchAngle(0.0)), GapViolation);
}

TEST_CASE("rieffel element is Hermitian and a projection on exact pairs") {
    for (auto [p, q] : {std::pair<long long, long long>{1, 3}, {2, 5}, {3, 7}, {1, 2}}) {
        UnitaryTuple pair = rational_pair_rep(RationalPhase(p, q));
        double theta = static_cast<double>(p) / q;
        RieffelParams params = RieffelParams::with_default_epsilon(theta);
        // paper orientation: u = clock part, v = shift part
        Matrix e = rieffel_element(pair[1], pair[0], params);
        CHECK(op_norm(Matrix(e - e.adjoint())) <= 1e-12);
        CHECK(op_norm(Matrix(e * e - e)) <= 1e-10);
    }
}

TEST_CASE("rieffel element vanishes on the trivial pair") {
    Matrix id = Matrix::Identity(3, 3);
    Matrix e = rieffel_element(id, id, RieffelParams(0.5, 0.5));
    CHECK(op_norm(e) <= 1e-14);
}

TEST_CASE("rieffel element under small noise is almost idempotent") {
    UnitaryTuple pair = perturbed_pair(1, 3, 3, 1e-4, 99);
    Matrix e = rieffel_element(pair[1], pair[0], RieffelParams::with_default_epsilon(1.0 / 3.0));
    CHECK(op_norm(Matrix(e * e - e)) <= 1e-2);
}

TEST_CASE("rieffel projection ranks on exact pairs") {
    {
        UnitaryTuple pair = rational_pair_rep(RationalPhase(1, 3));
        RieffelProjection proj = rieffel_projection(
            pair[1], pair[0], RieffelParams::with_default_epsilon(1.0 / 3.0));
        CHECK(proj.rank == 1);
        CHECK(normalized_trace(proj.projection).real() == doctest::Approx(1.0 / 3.0));
    }
    {
        UnitaryTuple pair = rational_pair_rep(RationalPhase(2, 5), 2);
        RieffelProjection proj =
            rieffel_projection(pair[1], pair[0], RieffelParams::with_default_epsilon(0.4));
        CHECK(proj.rank == 4);
        CHECK(op_norm(Matrix(proj.projection * proj.projection - proj.projection)) <= 1e-10);
        CHECK(op_norm(Matrix(proj.projection - proj.projection.adjoint())) <= 1e-10);
    }
    {
        Matrix id = Matrix::Identity(4, 4);
        RieffelProjection proj = rieffel_projection(id, id, RieffelParams(0.5, 0.5));
        CHECK(proj.rank == 0);
    }
}

TEST_CASE("rieffel projection refuses when the gap closes") {
    // u a scalar sitting mid-ramp, v = I: e = (f + 2g)(u) lands far from {0,1}
    Matrix id = Matrix::Identity(3, 3);
    Matrix u = std::polar(1.0, 2 * M_PI * 0.125) * id;
    CHECK_THROWS_AS(rieffel_projection(u, id, RieffelParams(0.5, 0.25)),
                    GapAtHalfViolation);
}

TEST_CASE("exel rhs on exact and trivial pairs") {
    UnitaryTuple pair = rational_pair_rep(RationalPhase(2, 7));
    double rhs = exel_rhs(pair[1], pair[0], BranchAngle(2.0 / 7.0));
    CHECK(rhs == doctest::Approx(2.0 / 7.0).epsilon(1e-12));

    Matrix id = Matrix::Identity(5, 5);
    CHECK(std::abs(exel_rhs(id, id, BranchAngle(0.0))) <= 1e-14);
}

TEST_CASE("exel lhs equals theta on exact pairs") {
    for (auto [p, q] : {std::pair<long long, long long>{1, 3}, {2, 5}}) {
        UnitaryTuple pair = rational_pair_rep(RationalPhase(p, q), 2);
        double lhs = exel_lhs(pair[1], pair[0],
                              RieffelParams::with_default_epsilon(double(p) / q));
        CHECK(lhs == doctest::Approx(double(p) / q).epsilon(1e-12));
    }
}

TEST_CASE("exel quantization on perturbed pairs") {
    Rng rng(31);
    int cases = 0;
    for (int trial = 0; trial < 40; ++trial) {
        long long q = 2 + static_cast<long long>(rng.next_u64() % 11);
        long long p = 1 + static_cast<long long>(rng.next_u64() % (q - 1));
        RationalPhase r(p, q);
        if (r.p == 0) continue;
        long long mult = 1 + static_cast<long long>(rng.next_u64() % 4);
        double noise = 1e-2 * rng.uniform();
        UnitaryTuple pair = perturbed_pair(r.p, r.q, mult, noise, 1000 + trial);
        double theta = r.value();
        const double n = static_cast<double>(pair[0].rows());
        double rhs, lhs;
        try {
            rhs = exel_rhs(pair[1], pair[0], BranchAngle(theta));
            lhs = exel_lhs(pair[1], pair[0], RieffelParams::with_default_epsilon(theta));
        } catch (const Error&) {
            continue; // gap precondition failed, excluded by the property statement
        }
        ++cases;
        CHECK(std::abs(lhs - rhs) <= 1e-6);
        CHECK(std::abs(n * rhs - std::round(n * rhs)) <= 1e-6);
    }
    CHECK(cases >= 30);
}

TEST_CASE("branch independence when both branches apply") {
    UnitaryTuple pair = perturbed_pair(1, 4, 2, 1e-3, 7);
    double a = exel_rhs(pair[1], pair[0], BranchAngle(0.25));
    CommonGap common = common_gap_theta(
        PhaseMatrix::from_rationals({RationalPhase(1, 4)}, 2), 5e-3);
    double b = exel_rhs(pair[1], pair[0], common.branch);
    CHECK(std::abs(a - b) <= 1e-10);
}

TEST_CASE("bott element: commuting pairs have index 0") {
    Matrix u = clock_matrix(4);
    Matrix v = clock_matrix(4) * clock_matrix(4);
    BottElement bott = bott_element_theta0(u, v);
    CHECK(bott.index == 0);

    Matrix id = Matrix::Identity(4, 4);
    CHECK(bott_element_theta0(id, id).index == 0);
}

TEST_CASE("bott element: clock/shift pair has index 1 matching exel rhs") {
    for (long long q : {4, 8, 12}) {
        Matrix u = clock_matrix(q);
        Matrix v = shift_matrix(q);
        BottElement bott = bott_element_theta0(u, v);
        double rhs = exel_rhs(u, v, BranchAngle(0.0));
        CHECK(bott.index == 1);
        CHECK(bott.index == doctest::Approx(q * rhs).epsilon(1e-9));
    }
}

TEST_CASE("bott element is an exact projection for commuting inputs") {
    Matrix u = clock_matrix(5);
    Matrix v = clock_matrix(5, 2);
    BottElement bott = bott_element_theta0(u, v);
    CHECK(op_norm(Matrix(bott.element * bott.element - bott.element)) <= 1e-12);
}

TEST_CASE("common gap theta") {
    // single theta12 = 0: cut at -1, returned theta = 0
    PhaseMatrix zero = PhaseMatrix::from_rationals({RationalPhase(0, 1)}, 2);
    CommonGap g0 = common_gap_theta(zero, 1e-3);
    CHECK(mod1(g0.branch.theta) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g0.clearance > 0);

    // thetas 0.1, 0.2, 0.3: complementary arc (0.3, 1.1), midpoint 0.7, theta = 0.2
    PhaseMatrix pm = PhaseMatrix::from_upper(3, {0.1, 0.2, 0.3});
    CommonGap g1 = common_gap_theta(pm, 1e-3);
    CHECK(g1.branch.theta == doctest::Approx(0.2).epsilon(1e-9));

    // arcs covering the circle: 3 arcs of half-width ~0.49 rad each... use
    // delta near 2 so each arc covers everything
    CHECK_THROWS_AS(common_gap_theta(pm, 1.9999), NoGap);
}

} // TEST_SUITE
