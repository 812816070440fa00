#include <doctest.h>

#include <cmath>
#include <numeric>

#include "semitree/oracle.hpp"
#include "semitree/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace semitree;
using namespace semitree::testsupport;

namespace {

/// Closed-form tallies for a dense n-state run, derived by counting the
/// loop bodies: eliminating a state with m survivors costs m-1 adds for the
/// pivot sum plus m^2 adds and 2 m^2 muls for the update; the substitution
/// pays n-2 muls for the pivot product and then m adds and m+1 muls to
/// recover the component with m successors already known.
OpCounts expected_counts(int n) {
    OpCounts c;
    c.invs = static_cast<std::uint64_t>(n - 1);
    for (int m = 1; m <= n - 1; ++m) {
        c.adds += static_cast<std::uint64_t>(m - 1 + m * m);
        c.muls += static_cast<std::uint64_t>(2 * m * m);
    }
    c.muls += static_cast<std::uint64_t>(n - 2);
    for (int m = 1; m <= n - 1; ++m) {
        c.adds += static_cast<std::uint64_t>(m);
        c.muls += static_cast<std::uint64_t>(m + 1);
    }
    return c;
}

}  // namespace

TEST_CASE("worked classical example") {
    const SquareMatrix a = classical3();
    const Algebra& c = a.algebra();

    ReductionTrace trace{c, SquareMatrix(c, 1), {}, {}, {}};
    const RstVector w = state_reduction(a, &trace);
    CHECK(c.eq(w[0], 0.25));
    CHECK(c.eq(w[1], 0.375));
    CHECK(c.eq(w[2], 0.5));

    // Pivot sums 1 and 1/2, with their inverses cached.
    REQUIRE(trace.s.size() == 2);
    CHECK(c.eq(trace.s[0], 1.0));
    CHECK(c.eq(trace.s[1], 0.5));
    CHECK(c.eq(trace.s_inv[0], 1.0));
    CHECK(c.eq(trace.s_inv[1], 2.0));

    // Row and column 0 are frozen at their input values...
    for (int j = 0; j < 3; ++j) {
        CHECK(c.eq(trace.reduced(0, j), a(0, j)));
        CHECK(c.eq(trace.reduced(j, 0), a(j, 0)));
    }
    // ...the next-step block holds the one-step network [[1/2, 1/2], [3/8, 5/8]]
    // except for the last diagonal cell, which the second step pushes to 1.
    CHECK(c.eq(trace.reduced(1, 1), 0.5));
    CHECK(c.eq(trace.reduced(1, 2), 0.5));
    CHECK(c.eq(trace.reduced(2, 1), 0.375));
    CHECK(c.eq(trace.reduced(2, 2), 1.0));

    // The same run through the one-step helper.
    const SquareMatrix one_step = reduced_network(a, 1);
    REQUIRE(one_step.size() == 2);
    CHECK(c.eq(one_step(0, 0), 0.5));
    CHECK(c.eq(one_step(0, 1), 0.5));
    CHECK(c.eq(one_step(1, 0), 0.375));
    CHECK(c.eq(one_step(1, 1), 0.625));
}

TEST_CASE("worked max-times example") {
    const SquareMatrix a = maxtimes3();
    const Algebra& m = a.algebra();

    ReductionTrace trace{m, SquareMatrix(m, 1), {}, {}, {}};
    const RstVector w = state_reduction(a, &trace);
    CHECK(m.eq(w[0], 15.0));
    CHECK(m.eq(w[1], 10.0));
    CHECK(m.eq(w[2], 3.0));

    CHECK(m.eq(trace.s[0], 2.0));
    CHECK(m.eq(trace.s[1], 1.5));

    const SquareMatrix one_step = reduced_network(a, 1);
    CHECK(m.eq(one_step(0, 0), 3.0));
    CHECK(m.eq(one_step(0, 1), 1.5));
    CHECK(m.eq(one_step(1, 0), 5.0));
    CHECK(m.eq(one_step(1, 1), 0.0));
}

TEST_CASE("two-state chain") {
    const Algebra c = Algebra::classical();
    SquareMatrix a(c, 2);
    a(0, 0) = 0.7;
    a(0, 1) = 0.3;
    a(1, 0) = 0.6;
    a(1, 1) = 0.4;
    const RstVector w = state_reduction(a);
    CHECK(c.eq(w[0], 0.6));
    CHECK(c.eq(w[1], 0.3));
}

TEST_CASE("preconditions") {
    const Algebra c = Algebra::classical();

    SquareMatrix diag(c, 2);
    diag(0, 0) = 1.0;
    diag(1, 1) = 1.0;
    CHECK_THROWS_WITH_AS(state_reduction(diag),
                         doctest::Contains("row 1 has no nonzero off-diagonal entry"),
                         PreconditionViolated);

    SquareMatrix second_row(c, 3);
    second_row(0, 1) = 1.0;
    second_row(2, 0) = 1.0;
    CHECK_THROWS_WITH_AS(state_reduction(second_row), doctest::Contains("row 2"),
                         PreconditionViolated);

    // A single state has nothing to eliminate and no off-diagonal entries.
    SquareMatrix single(c, 1);
    single(0, 0) = 5.0;
    CHECK_THROWS_AS(state_reduction(single), PreconditionViolated);

    // Inverse-free algebras are rejected up front, before any precondition scan.
    CHECK_THROWS_AS(state_reduction(boolean_a2()), NotASemifield);
    CHECK_THROWS_AS(state_reduction(SquareMatrix(Algebra::max_min(), 2)), NotASemifield);
    CHECK_THROWS_AS(state_reduction(SquareMatrix(Algebra::interval(Algebra::max_plus()), 2)),
                    NotASemifield);
    CHECK_THROWS_AS(eliminate_states(boolean_a1()), NotASemifield);
    CHECK_THROWS_AS(reduced_network(boolean_a1(), 1), NotASemifield);
    CHECK_THROWS_AS(count_ops(boolean_a1()), NotASemifield);
}

TEST_CASE("agrees with the exhaustive oracle on random semifield matrices") {
    Rng rng(555);
    for (const Algebra& alg : semifield_algebras()) {
        for (int n = 2; n <= 6; ++n) {
            for (int trial = 0; trial < 8; ++trial) {
                const SquareMatrix a = random_matrix(alg, n, rng, 0.3, true);
                CHECK(eq(state_reduction(a), rst_vector_bruteforce(a)));
            }
        }
    }
}

TEST_CASE("reduced networks") {
    const SquareMatrix a = classical3();
    const Algebra& c = a.algebra();

    CHECK(eq(reduced_network(a, 0), a));

    const SquareMatrix last = reduced_network(a, 2);
    REQUIRE(last.size() == 1);
    CHECK(c.eq(last(0, 0), 1.0));  // 5/8 + (3/8)(1/2)(2)

    CHECK_THROWS_AS(reduced_network(a, 3), IndexOutOfRange);
    CHECK_THROWS_AS(reduced_network(a, -1), IndexOutOfRange);
}

TEST_CASE("elimination scaling law") {
    CHECK(check_elimination_scaling(classical3(), 1));
    CHECK(check_elimination_scaling(classical3(), 2));
    CHECK(check_elimination_scaling(maxtimes3(), 1));
    CHECK(check_elimination_scaling(maxtimes3(), 2));

    CHECK_THROWS_AS(check_elimination_scaling(classical3(), 0), IndexOutOfRange);
    CHECK_THROWS_AS(check_elimination_scaling(classical3(), 3), IndexOutOfRange);

    Rng rng(8899);
    for (const Algebra& alg : {Algebra::classical(), Algebra::max_times()}) {
        for (int n = 3; n <= 6; ++n) {
            for (int trial = 0; trial < 4; ++trial) {
                const SquareMatrix a = random_matrix(alg, n, rng, 0.3, true);
                for (int step = 1; step <= n - 1; ++step)
                    CHECK(check_elimination_scaling(a, step));
            }
        }
    }
}

TEST_CASE("operation counts match the closed form") {
    for (int n = 2; n <= 10; ++n) {
        const OpCounts got = count_ops(n);
        CHECK(got == expected_counts(n));
        CHECK(got.invs == static_cast<std::uint64_t>(n - 1));
    }

    // Smallest case, counted by hand: one pivot sum of one term (0 adds),
    // one inverse, a 1x1 update (1 add, 2 muls), no pivot product, and one
    // substitution step (1 add, 2 muls).
    CHECK(count_ops(2) == OpCounts{2, 4, 1});

    CHECK_THROWS_AS(count_ops(1), PreconditionViolated);
    CHECK_THROWS_AS(count_ops(0), PreconditionViolated);

    // The loops never branch on entry values, so any conforming input of the
    // same size produces identical tallies.
    Rng rng(31337);
    for (const Algebra& alg : semifield_algebras()) {
        const SquareMatrix a = random_matrix(alg, 5, rng, 0.3, true);
        CHECK(count_ops(a) == count_ops(5));
    }

    // The trace returned by the full run carries the same numbers.
    ReductionTrace trace{Algebra::classical(), SquareMatrix(Algebra::classical(), 1), {}, {}, {}};
    state_reduction(classical3(), &trace);
    CHECK(trace.counts == count_ops(3));

    // Cubic growth with the documented leading coefficients.
    const OpCounts big = count_ops(60);
    const double n3 = 60.0 * 60.0 * 60.0;
    CHECK(std::abs(static_cast<double>(big.adds) / n3 - 1.0 / 3.0) < 0.1);
    CHECK(std::abs(static_cast<double>(big.muls) / n3 - 2.0 / 3.0) < 0.1);
}

TEST_CASE("tree vectors scale covariantly") {
    // Multiplying every edge weight by t multiplies every spanning tree
    // weight by t^(n-1).
    Rng rng(246);
    for (const Algebra& alg : {Algebra::classical(), Algebra::max_times()}) {
        for (int n = 2; n <= 5; ++n) {
            const SquareMatrix a = random_matrix(alg, n, rng, 0.2, true);
            const Value t = 1.7;
            SquareMatrix scaled(alg, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) scaled(i, j) = alg.mul(t, a(i, j));

            Value factor = alg.one();
            for (int k = 0; k < n - 1; ++k) factor = alg.mul(factor, t);

            const RstVector w = state_reduction(a);
            const RstVector ws = state_reduction(scaled);
            for (int i = 0; i < n; ++i) CHECK(alg.eq(ws[i], alg.mul(factor, w[i])));
        }
    }
}

TEST_CASE("stochastic matrices have fixed-point tree vectors") {
    Rng rng(1618);
    for (const Algebra& alg : semifield_algebras()) {
        for (int n = 2; n <= 5; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                // Zero-free rows keep every pivot sum invertible.
                const SquareMatrix a = random_stochastic(alg, n, rng, 0.0);
                const RstVector w = state_reduction(a);
                CHECK(eq(transpose_apply(a, w), w));
            }
        }
    }
}

TEST_CASE("pivot collapse on sparse inputs") {
    const Algebra c = Algebra::classical();

    // States 1 and 2 point only at each other, so removing state 1 folds
    // state 2's entire off-diagonal weight onto its own diagonal. The input
    // passes the row scan, but the second pivot sum vanishes and the
    // reduction cannot continue. The exhaustive oracle still gets the
    // (partly nonzero) vector.
    SquareMatrix mutual(c, 3);
    mutual(0, 1) = 0.5;
    mutual(1, 0) = 0.3;
    mutual(2, 0) = 0.2;
    REQUIRE(has_offdiag_nonzero_rows(mutual));
    CHECK_THROWS_AS(state_reduction(mutual), InternalInvariantViolated);
    const RstVector w = rst_vector_bruteforce(mutual);
    CHECK(c.eq(w[0], 0.06));
    CHECK(c.eq(w[1], 0.1));
    CHECK(c.is_zero(w[2]));

    // If the collapsed row belongs to the never-eliminated last state the
    // run completes and stays correct.
    SquareMatrix last_row(c, 3);
    last_row(0, 2) = 0.5;
    last_row(1, 0) = 0.3;
    last_row(1, 2) = 0.4;
    last_row(2, 0) = 0.25;
    REQUIRE(has_offdiag_nonzero_rows(last_row));
    CHECK(eq(state_reduction(last_row), rst_vector_bruteforce(last_row)));
    const RstVector v = state_reduction(last_row);
    CHECK(c.eq(v[0], 0.25 * (0.3 + 0.4)));
    CHECK(c.is_zero(v[1]));
    CHECK(c.eq(v[2], 0.5 * (0.3 + 0.4)));
}

TEST_CASE("normalized tree vector is the stationary distribution") {
    Rng rng(2718);
    for (int trial = 0; trial < 3; ++trial) {
        const SquareMatrix a = random_irreducible_stochastic(8, rng);
        const std::vector<double> pi = stationary_by_linear_solve(a);

        const RstVector w = state_reduction(a);
        double total = 0;
        for (int i = 0; i < 8; ++i) total += std::get<double>(w[i]);
        REQUIRE(total > 0);
        for (int i = 0; i < 8; ++i)
            CHECK(std::abs(std::get<double>(w[i]) / total - pi[static_cast<std::size_t>(i)]) <
                  1e-10);
    }
}

TEST_CASE("back substitution validates its trace") {
    const Algebra c = Algebra::classical();
    ReductionTrace trace = eliminate_states(classical3());

    ReductionTrace truncated = trace;
    truncated.s.pop_back();
    CHECK_THROWS_AS(back_substitute(truncated), PreconditionViolated);

    ReductionTrace mismatched = trace;
    mismatched.algebra = Algebra::max_times();
    CHECK_THROWS_AS(back_substitute(mismatched), AlgebraMismatch);

    // A single-state trace is degenerate but well-defined: the empty pivot
    // product leaves w = (1).
    ReductionTrace single{c, SquareMatrix(c, 1), {}, {}, {}};
    const RstVector w = back_substitute(single);
    CHECK(c.eq(w[0], 1.0));
}
