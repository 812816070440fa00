#include "semitree/reduction.hpp"

#include <string>
#include <utility>

#include "semitree/oracle.hpp"

namespace semitree {
namespace {

/// Arithmetic wrapper that tallies every counted operation. Guards and
/// invariant checks around the algorithm call the algebra directly so only
/// the recurrence arithmetic shows up in the counts.
struct Ops {
    const Algebra& alg;
    OpCounts* counts;

    Value add(const Value& x, const Value& y) const {
        if (counts) ++counts->adds;
        return alg.add(x, y);
    }
    Value mul(const Value& x, const Value& y) const {
        if (counts) ++counts->muls;
        return alg.mul(x, y);
    }
    Value inv(const Value& x) const {
        if (counts) ++counts->invs;
        return alg.inv(x);
    }
};

void check_reduction_preconditions(const SquareMatrix& a) {
    if (!a.algebra().is_semifield())
        throw NotASemifield("state reduction needs multiplicative inverses; " +
                            a.algebra().display_name() + " is not a semifield");
    // Also rejects n == 1: a single state has no off-diagonal entries.
    const Algebra& alg = a.algebra();
    for (int i = 0; i < a.size(); ++i) {
        bool found = false;
        for (int j = 0; j < a.size() && !found; ++j)
            found = j != i && !alg.is_zero(a(i, j));
        if (!found)
            throw PreconditionViolated("row " + std::to_string(i + 1) +
                                       " has no nonzero off-diagonal entry");
    }
}

/// One elimination step on the trailing block, exactly as the pseudocode
/// writes it: two multiplications and one addition per updated cell, with
/// inv(s) computed once. Returns {s, inv(s)}.
std::pair<Value, Value> eliminate_one(SquareMatrix& m, int i, const Ops& ops) {
    const Algebra& alg = ops.alg;
    const int n = m.size();
    Value s = m(i, i + 1);
    for (int l = i + 2; l < n; ++l) s = ops.add(s, m(i, l));
    // Antinegativity keeps the sum nonzero as long as one term is, and
    // folding a removed state into the block preserves each surviving row's
    // off-diagonal support -- except when that support lands on the row's own
    // diagonal (a state whose weight points only back at its witness turns
    // that witness into diagonal weight). Such inputs pass the up-front row
    // scan yet cannot be reduced; the exhaustive routines still handle them.
    // The check also catches floating-point underflow in the classical kind.
    if (alg.is_zero(s))
        throw InternalInvariantViolated(
            "pivot sum for state " + std::to_string(i + 1) +
            " vanished: its off-diagonal weight collapsed onto eliminated states");
    Value s_inv = ops.inv(s);
    for (int k = i + 1; k < n; ++k) {
        for (int l = i + 1; l < n; ++l) {
            Value t = ops.mul(m(k, i), m(i, l));
            t = ops.mul(t, s_inv);
            m(k, l) = ops.add(m(k, l), t);
        }
    }
    return {std::move(s), std::move(s_inv)};
}

}  // namespace

ReductionTrace eliminate_states(const SquareMatrix& a) {
    check_reduction_preconditions(a);
    const Algebra& alg = a.algebra();
    const int n = a.size();
    ReductionTrace trace{alg, a, {}, {}, {}};
    trace.s.reserve(static_cast<std::size_t>(n - 1));
    trace.s_inv.reserve(static_cast<std::size_t>(n - 1));
    const Ops ops{alg, &trace.counts};
    for (int i = 0; i < n - 1; ++i) {
        auto [s, s_inv] = eliminate_one(trace.reduced, i, ops);
        trace.s.push_back(std::move(s));
        trace.s_inv.push_back(std::move(s_inv));
    }
    return trace;
}

RstVector back_substitute(ReductionTrace& trace) {
    const Algebra& alg = trace.algebra;
    const SquareMatrix& m = trace.reduced;
    const int n = m.size();
    if (!(alg == m.algebra()))
        throw AlgebraMismatch("trace algebra does not match its matrix");
    if (static_cast<int>(trace.s.size()) != n - 1 || trace.s_inv.size() != trace.s.size())
        throw PreconditionViolated("trace holds " + std::to_string(trace.s.size()) +
                                   " pivot sums; an n-state run leaves n-1");
    const Ops ops{alg, &trace.counts};

    std::vector<Value> w(static_cast<std::size_t>(n), alg.zero());
    Value last = alg.one();
    if (n >= 2) {
        last = trace.s[0];
        for (int i = 1; i < n - 1; ++i) last = ops.mul(last, trace.s[static_cast<std::size_t>(i)]);
    }
    w[static_cast<std::size_t>(n - 1)] = std::move(last);
    for (int i = n - 2; i >= 0; --i) {
        // Column i still holds the values frozen at the step that removed
        // state i. The cached inverse multiplies the finished sum once.
        Value sum = alg.zero();
        for (int k = i + 1; k < n; ++k)
            sum = ops.add(sum, ops.mul(w[static_cast<std::size_t>(k)], m(k, i)));
        w[static_cast<std::size_t>(i)] = ops.mul(sum, trace.s_inv[static_cast<std::size_t>(i)]);
    }
    return RstVector(alg, std::move(w));
}

RstVector state_reduction(const SquareMatrix& a, ReductionTrace* trace_out) {
    ReductionTrace trace = eliminate_states(a);
    RstVector w = back_substitute(trace);
    if (trace_out) *trace_out = std::move(trace);
    return w;
}

SquareMatrix reduced_network(const SquareMatrix& a, int steps) {
    const int n = a.size();
    if (steps < 0 || steps > n - 1)
        throw IndexOutOfRange("cannot run " + std::to_string(steps) +
                              " elimination steps on " + std::to_string(n) + " states");
    check_reduction_preconditions(a);
    SquareMatrix m = a;
    const Ops ops{a.algebra(), nullptr};
    for (int i = 0; i < steps; ++i) eliminate_one(m, i, ops);
    SquareMatrix out(a.algebra(), n - steps);
    for (int k = steps; k < n; ++k)
        for (int l = steps; l < n; ++l) out(k - steps, l - steps) = m(k, l);
    return out;
}

bool check_elimination_scaling(const SquareMatrix& a, int step) {
    const int n = a.size();
    if (step < 1 || step > n - 1)
        throw IndexOutOfRange("elimination step " + std::to_string(step) + " of an n=" +
                              std::to_string(n) + " reduction (valid: 1..n-1)");
    const SquareMatrix before = reduced_network(a, step - 1);
    const SquareMatrix after = reduced_network(a, step);
    const RstVector w_before = rst_vector_bruteforce(before);
    const RstVector w_after = rst_vector_bruteforce(after);
    // Row 0 of `before` is the state removed at this step; its off-diagonal
    // sum is the pivot s. The law: s * w_k(after) equals w_k(before) for
    // every surviving state k.
    const Value s = row_offdiag_sum(before, 0, OffDiagRange::all).value();
    const Algebra& alg = a.algebra();
    for (int k = 0; k < w_after.size(); ++k)
        if (!alg.eq(alg.mul(s, w_after[k]), w_before[k + 1])) return false;
    return true;
}

OpCounts count_ops(int n) {
    if (n < 2)
        throw PreconditionViolated("operation counting needs at least two states");
    const Algebra alg = Algebra::classical();
    SquareMatrix a(alg, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) a(i, j) = 1.0;
    return count_ops(a);
}

OpCounts count_ops(const SquareMatrix& a) {
    ReductionTrace trace = eliminate_states(a);
    back_substitute(trace);
    return trace.counts;
}

}  // namespace semitree
