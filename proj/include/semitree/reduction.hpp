#pragma once

#include <cstdint>
#include <vector>

#include "semitree/matrix.hpp"

namespace semitree {

/// Arithmetic-operation tallies for one run of the reduction.
struct OpCounts {
    std::uint64_t adds = 0;
    std::uint64_t muls = 0;
    std::uint64_t invs = 0;

    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Everything the elimination phase leaves behind. `reduced` holds, for each
/// eliminated state i, its final row/column values a^(i-1)(., i) and
/// a^(i-1)(i, .) frozen at the step that removed it, with the trailing block
/// fully reduced. s[i] and s_inv[i] are the pivot sums and their inverses
/// for i = 0 .. n-2 (state n-1 is never eliminated).
struct ReductionTrace {
    Algebra algebra;
    SquareMatrix reduced;
    std::vector<Value> s;
    std::vector<Value> s_inv;
    OpCounts counts;
};

/// Phase 1: Gaussian-style state elimination. Requires a semifield algebra
/// (NotASemifield otherwise) and every row to have a nonzero off-diagonal
/// entry (PreconditionViolated otherwise; this also rejects n == 1).
/// Anti-negativity guarantees the property is preserved as states are
/// eliminated, so every pivot sum is invertible; if a pivot still comes out
/// zero the input violated the contract and ZeroInverse propagates.
ReductionTrace eliminate_states(const SquareMatrix& a);

/// Phase 2: backward substitution through the trace. Returns the
/// rooted-spanning-tree vector w of the original matrix. Extends the trace's
/// operation counters; the matrix and pivot data are only read.
RstVector back_substitute(ReductionTrace& trace);

/// Both phases; the returned trace's counts cover the full run.
RstVector state_reduction(const SquareMatrix& a, ReductionTrace* trace_out = nullptr);

/// Runs only the first `steps` elimination steps (0 <= steps <= n-1) and
/// returns the n-steps sized trailing network A^(steps) on the surviving
/// states. steps == 0 copies the input.
SquareMatrix reduced_network(const SquareMatrix& a, int steps);

/// Checks the elimination-scaling law at one step: with w^(k) the tree
/// vector of A^(k) and s_k the pivot sum removed at that step,
///   s_k * w^(k)_j == w^(k-1)_j  for every surviving state j.
/// Uses brute-force tree vectors, so the matrix must be within the oracle
/// cap. `step` is 1-based (step k eliminates state k-1).
bool check_elimination_scaling(const SquareMatrix& a, int step);

/// Operation counts for a dense n-state reduction (n >= 2), measured by
/// running the algorithm on an all-nonzero instance. The loops are
/// data-independent, so this is the count for any conforming n-state input.
OpCounts count_ops(int n);

/// Runs the reduction on `a` and returns the measured tallies.
OpCounts count_ops(const SquareMatrix& a);

}  // namespace semitree
