#include "doctest.h"

#include "rotlab/obstruction.hpp"
#include "rotlab/rng.hpp"
#include "rotlab/search.hpp"

using namespace rotlab;

TEST_SUITE("obstruction") {

TEST_CASE("defect examples") {
    PhaseMatrix pm = PhaseMatrix::from_rationals({RationalPhase(1, 3)}, 2);
    UnitaryTuple pair = rational_pair_rep(RationalPhase(1, 3));
    CHECK(defect(pm, pair).max <= 1e-14);

    PhaseMatrix half = PhaseMatrix::from_rationals({RationalPhase(1, 2)}, 2);
    UnitaryTuple ones{Matrix::Identity(3, 3), Matrix::Identity(3, 3)};
    CHECK(defect(half, ones).max == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(defect(half, UnitaryTuple{Matrix::Identity(2, 2)}), DimensionMismatch);
}

TEST_CASE("defect of a conjugation-perturbed triple stays near the perturbation size") {
    PhaseMatrix pm = PhaseMatrix::from_rationals(
        {RationalPhase(1, 2), RationalPhase(1, 3), RationalPhase(1, 5)});
    UnitaryTuple v = rational_torus3_rep(pm);
    Rng rng(5);
    Matrix x = random_skew_hermitian(v[0].rows(), 1e-3, rng);
    v[0] = exp_skew_hermitian(x) * v[0];
    double d = defect(pm, v).max;
    CHECK(d > 0);
    CHECK(d <= 4e-3);
}

TEST_CASE("report on the exact torus3 representation is unobstructed") {
    PhaseMatrix pm = PhaseMatrix::from_rationals(
        {RationalPhase(1, 2), RationalPhase(1, 3), RationalPhase(1, 5)});
    UnitaryTuple v = rational_torus3_rep(pm);
    ObstructionReport rep = obstruction_report(pm, v, 1, 1e-6);
    CHECK(rep.verdict == Verdict::Unobstructed);
    CHECK(rep.defect_max <= 1e-12);
    CHECK(rep.monomial_deviation <= 1e-12);
    for (const auto& pair : rep.per_pair) {
        REQUIRE(pair.trace_condition_residual.has_value());
        CHECK(*pair.trace_condition_residual <= 1e-10);
        REQUIRE(pair.exel_lhs.has_value());
        REQUIRE(pair.exel_rhs.has_value());
        CHECK(*pair.exel_lhs == doctest::Approx(*pair.exel_rhs).epsilon(1e-9));
    }
}

TEST_CASE("clock/shift pair against zero phases is obstructed with residual 1/q") {
    for (long long q : {4, 8}) {
        PhaseMatrix zero = PhaseMatrix::from_rationals({RationalPhase(0, 1)}, 2);
        UnitaryTuple pair = rational_pair_rep(RationalPhase(1, q));
        ObstructionReport rep = obstruction_report(zero, pair, 2, 1e-6);
        CHECK(rep.verdict == Verdict::Obstructed);
        REQUIRE(rep.per_pair[0].exel_rhs.has_value());
        CHECK(*rep.per_pair[0].exel_rhs ==
              doctest::Approx(1.0 / static_cast<double>(q)).epsilon(1e-10));
        CHECK(*rep.per_pair[0].trace_condition_residual ==
              doctest::Approx(1.0 / static_cast<double>(q)).epsilon(1e-10));
    }
}

TEST_CASE("identity tuple with zero phases is unobstructed") {
    PhaseMatrix zero = PhaseMatrix::from_rationals(
        {RationalPhase(0, 1), RationalPhase(0, 1), RationalPhase(0, 1)});
    UnitaryTuple ones(3, Matrix::Identity(4, 4));
    ObstructionReport rep = obstruction_report(zero, ones, 2, 1e-6);
    CHECK(rep.verdict == Verdict::Unobstructed);
    CHECK(rep.defect_max <= 1e-14);
    for (const auto& pair : rep.per_pair) {
        CHECK(*pair.exel_rhs == doctest::Approx(0.0));
        CHECK(*pair.exel_lhs == doctest::Approx(0.0));
    }
}

TEST_CASE("tuple with spectrum on the branch cut is flagged indeterminate") {
    PhaseMatrix zero = PhaseMatrix::from_rationals({RationalPhase(0, 1)}, 2);
    // commutator spectrum contains -1, exactly on the branch-0 cut
    UnitaryTuple pair = rational_pair_rep(RationalPhase(1, 2));
    ObstructionReport rep = obstruction_report(zero, pair, 1, 1e-6);
    CHECK(rep.verdict == Verdict::Indeterminate);
    CHECK_FALSE(rep.per_pair[0].flag.empty());
}

TEST_CASE("report is invariant under simultaneous unitary conjugation") {
    PhaseMatrix pm = PhaseMatrix::from_rationals(
        {RationalPhase(1, 2), RationalPhase(1, 3), RationalPhase(1, 5)});
    PlantedInstance inst = plant_instance(pm, 1, 1e-3, 77);
    ObstructionReport rep = obstruction_report(pm, inst.tuple, 2, 1e-6);

    Rng rng(78);
    Matrix w = haar_unitary(inst.tuple[0].rows(), rng);
    UnitaryTuple conj;
    for (const auto& m : inst.tuple) conj.push_back(w * m * w.adjoint());
    ObstructionReport rep2 = obstruction_report(pm, conj, 2, 1e-6);

    CHECK(rep.verdict == rep2.verdict);
    CHECK(rep.defect_max == doctest::Approx(rep2.defect_max).epsilon(1e-10));
    CHECK(rep.monomial_deviation == doctest::Approx(rep2.monomial_deviation).epsilon(1e-8));
    for (size_t i = 0; i < rep.per_pair.size(); ++i) {
        CHECK(rep.per_pair[i].defect ==
              doctest::Approx(rep2.per_pair[i].defect).epsilon(1e-8));
        CHECK(*rep.per_pair[i].exel_rhs ==
              doctest::Approx(*rep2.per_pair[i].exel_rhs).epsilon(1e-10));
        CHECK(*rep.per_pair[i].rieffel_rank == *rep2.per_pair[i].rieffel_rank);
    }
}

TEST_CASE("monomial deviation picks up a trace mismatch") {
    // clock/shift(3) against theta = 1/3 satisfies the relation, but the
    // tuple (I, I) against theta = 0 with one generator replaced by clock
    // has nonzero monomials
    PhaseMatrix zero = PhaseMatrix::from_rationals({RationalPhase(0, 1)}, 2);
    UnitaryTuple t{clock_matrix(2), Matrix::Identity(2, 2)};
    ObstructionReport rep = obstruction_report(zero, t, 2, 1e-6);
    // tr(clock(2)^2)/2 = 1 while the canonical trace of u^2 is 0
    CHECK(rep.monomial_deviation >= 1.0 - 1e-12);
    CHECK(rep.verdict == Verdict::Indeterminate);
}

} // TEST_SUITE
