#include "semitree/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace semitree {
namespace {

void check_cap(int n, const char* what) {
    if (n < 1) throw DimensionMismatch(std::string(what) + " needs at least one state");
    const int cap = oracle_cap();
    if (n > cap)
        throw CapExceeded(std::string(what) + " enumerates exhaustively and is capped at " +
                          std::to_string(cap) + " states; got " + std::to_string(n));
}

/// Walks the single outgoing edge from every unvisited vertex, marking the
/// one new cycle (if any) found per walk. Shared by the classifiers below.
struct CycleScan {
    int cycles = 0;
    int first_cycle_len = 0;
    std::vector<int> first_cycle;  // filled only for the first cycle found

    /// Returns false (early) as soon as a second cycle is found.
    bool run(const std::vector<int>& succ) {
        const int n = static_cast<int>(succ.size());
        state_.assign(static_cast<std::size_t>(n), 0);
        path_.clear();
        for (int v = 0; v < n; ++v) {
            if (state_[static_cast<std::size_t>(v)]) continue;
            path_.clear();
            int u = v;
            while (state_[static_cast<std::size_t>(u)] == 0) {
                state_[static_cast<std::size_t>(u)] = 1;
                path_.push_back(u);
                u = succ[static_cast<std::size_t>(u)];
            }
            if (state_[static_cast<std::size_t>(u)] == 1) {
                // u closes a cycle not seen before.
                if (++cycles > 1) return false;
                int w = u;
                do {
                    first_cycle.push_back(w);
                    w = succ[static_cast<std::size_t>(w)];
                } while (w != u);
                first_cycle_len = static_cast<int>(first_cycle.size());
            }
            for (int x : path_) state_[static_cast<std::size_t>(x)] = 2;
        }
        return true;
    }

private:
    std::vector<std::uint8_t> state_;
    std::vector<int> path_;
};

void check_succ_range(const std::vector<int>& succ, int skip) {
    const int n = static_cast<int>(succ.size());
    for (int v = 0; v < n; ++v) {
        if (v == skip) continue;
        const int s = succ[static_cast<std::size_t>(v)];
        if (s < 0 || s >= n)
            throw IndexOutOfRange("successor of vertex " + std::to_string(v) +
                                  " is out of range");
    }
}

}  // namespace

int oracle_cap() {
    const char* env = std::getenv("SEMITREE_ORACLE_CAP");
    if (!env || !*env) return kOracleCapLimit;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') return kOracleCapLimit;  // malformed: keep the default
    return static_cast<int>(std::clamp(v, 1L, static_cast<long>(kOracleCapLimit)));
}

bool is_rooted_tree(const RootedTree& t) {
    const int n = static_cast<int>(t.succ.size());
    if (n == 0 || t.root < 0 || t.root >= n) return false;
    if (t.succ[static_cast<std::size_t>(t.root)] != -1) return false;
    for (int v = 0; v < n; ++v) {
        if (v == t.root) continue;
        const int s = t.succ[static_cast<std::size_t>(v)];
        if (s < 0 || s >= n || s == v) return false;
    }
    // Toward-root orientation: every walk must end at the root, i.e. there is
    // no cycle among the non-root vertices.
    std::vector<std::uint8_t> state(static_cast<std::size_t>(n), 0);
    state[static_cast<std::size_t>(t.root)] = 2;
    std::vector<int> path;
    for (int v = 0; v < n; ++v) {
        if (state[static_cast<std::size_t>(v)]) continue;
        path.clear();
        int u = v;
        while (state[static_cast<std::size_t>(u)] == 0) {
            state[static_cast<std::size_t>(u)] = 1;
            path.push_back(u);
            u = t.succ[static_cast<std::size_t>(u)];
        }
        const bool closed_cycle = state[static_cast<std::size_t>(u)] == 1;
        for (int x : path) state[static_cast<std::size_t>(x)] = 2;
        if (closed_cycle) return false;
    }
    return true;
}

bool is_unicyclic_through(const FunctionalGraph& g, int i) {
    const int n = static_cast<int>(g.succ.size());
    if (i < 0 || i >= n)
        throw IndexOutOfRange("vertex " + std::to_string(i) + " of a " + std::to_string(n) +
                              "-vertex functional graph");
    check_succ_range(g.succ, -1);
    CycleScan scan;
    if (!scan.run(g.succ)) return false;  // more than one cycle
    if (scan.cycles != 1 || scan.first_cycle_len < 2) return false;
    return std::find(scan.first_cycle.begin(), scan.first_cycle.end(), i) !=
           scan.first_cycle.end();
}

std::vector<RootedTree> enumerate_rooted_trees(int n, int root) {
    check_cap(n, "rooted-tree enumeration");
    if (root < 0 || root >= n)
        throw IndexOutOfRange("root " + std::to_string(root) + " of " + std::to_string(n) +
                              " vertices");
    std::vector<RootedTree> out;
    visit_rooted_trees(n, root, [&](const RootedTree& t) { out.push_back(t); });
    return out;
}

Scalar tree_weight(const SquareMatrix& a, const RootedTree& t) {
    const int n = a.size();
    if (static_cast<int>(t.succ.size()) != n)
        throw DimensionMismatch("tree has " + std::to_string(t.succ.size()) +
                                " vertices but the matrix has " + std::to_string(n));
    if (t.root < 0 || t.root >= n)
        throw IndexOutOfRange("tree root " + std::to_string(t.root));
    check_succ_range(t.succ, t.root);
    const Algebra& alg = a.algebra();
    Value w = alg.one();
    for (int v = 0; v < n; ++v) {
        if (v == t.root) continue;
        w = alg.mul(w, a(v, t.succ[static_cast<std::size_t>(v)]));
    }
    return Scalar(alg, w);
}

RstVector rst_vector_bruteforce(const SquareMatrix& a) {
    const int n = a.size();
    check_cap(n, "rooted-spanning-tree brute force");
    const Algebra& alg = a.algebra();
    std::vector<Value> comps(static_cast<std::size_t>(n), alg.zero());
    for (int root = 0; root < n; ++root) {
        Value sum = alg.zero();
        visit_rooted_trees(n, root, [&](const RootedTree& t) {
            Value w = alg.one();
            for (int v = 0; v < n; ++v) {
                if (v == root) continue;
                w = alg.mul(w, a(v, t.succ[static_cast<std::size_t>(v)]));
            }
            sum = alg.add(sum, w);
        });
        comps[static_cast<std::size_t>(root)] = sum;
    }
    return RstVector(alg, std::move(comps));
}

Scalar unicyclic_total_weight(const SquareMatrix& a, int i) {
    const int n = a.size();
    check_cap(n, "unicyclic enumeration");
    if (i < 0 || i >= n)
        throw IndexOutOfRange("state " + std::to_string(i) + " of a " + std::to_string(n) +
                              "-state matrix");
    const Algebra& alg = a.algebra();
    Value total = alg.zero();
    visit_functional_graphs(n, [&](const FunctionalGraph& g) {
        if (!is_unicyclic_through(g, i)) return;
        Value w = alg.one();
        for (int v = 0; v < n; ++v) w = alg.mul(w, a(v, g.succ[static_cast<std::size_t>(v)]));
        total = alg.add(total, w);
    });
    return Scalar(alg, total);
}

std::vector<Value> unicyclic_totals(const SquareMatrix& a) {
    const int n = a.size();
    check_cap(n, "unicyclic enumeration");
    const Algebra& alg = a.algebra();
    std::vector<Value> totals(static_cast<std::size_t>(n), alg.zero());
    visit_functional_graphs(n, [&](const FunctionalGraph& g) {
        CycleScan scan;
        if (!scan.run(g.succ)) return;
        if (scan.cycles != 1 || scan.first_cycle_len < 2) return;
        Value w = alg.one();
        for (int v = 0; v < n; ++v) w = alg.mul(w, a(v, g.succ[static_cast<std::size_t>(v)]));
        // The graph is i-unicyclic for exactly the vertices i on its cycle.
        for (int i : scan.first_cycle)
            totals[static_cast<std::size_t>(i)] =
                alg.add(totals[static_cast<std::size_t>(i)], w);
    });
    return totals;
}

bool check_balance(const SquareMatrix& a) {
    const int n = a.size();
    const Algebra& alg = a.algebra();
    const RstVector w = rst_vector_bruteforce(a);
    const std::vector<Value> totals = unicyclic_totals(a);
    for (int i = 0; i < n; ++i) {
        const Value lhs = alg.mul(w[i], row_offdiag_sum(a, i, OffDiagRange::all).value());
        Value rhs = alg.zero();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            rhs = alg.add(rhs, alg.mul(w[j], a(j, i)));
        }
        const Value& expect = totals[static_cast<std::size_t>(i)];
        if (!alg.eq(lhs, rhs) || !alg.eq(lhs, expect) || !alg.eq(rhs, expect)) return false;
    }
    return true;
}

std::pair<Scalar, Scalar> cayley_check(const std::vector<Scalar>& xs, int distinguished) {
    const int n = static_cast<int>(xs.size());
    if (n < 2) throw PreconditionViolated("the tree-enumerator identity needs at least two scalars");
    check_cap(n, "tree-enumerator check");
    if (distinguished < 0 || distinguished >= n)
        throw IndexOutOfRange("distinguished index " + std::to_string(distinguished) + " of " +
                              std::to_string(n) + " scalars");
    const Algebra& alg = xs[0].algebra();
    for (const Scalar& x : xs)
        if (!(x.algebra() == alg))
            throw AlgebraMismatch("tree-enumerator scalars use different algebras");

    // Left side: (x_1 + ... + x_n)^(n-2) * x_d by repeated multiplication.
    Value sum = alg.zero();
    for (const Scalar& x : xs) sum = alg.add(sum, x.value());
    Value power = alg.one();
    for (int k = 0; k < n - 2; ++k) power = alg.mul(power, sum);
    const Value lhs = alg.mul(power, xs[static_cast<std::size_t>(distinguished)].value());

    // Right side: sum over trees rooted at d of prod_k x_k^(indeg k), which
    // is the product of x_{succ(v)} over the non-root vertices.
    Value rhs = alg.zero();
    visit_rooted_trees(n, distinguished, [&](const RootedTree& t) {
        Value term = alg.one();
        for (int v = 0; v < n; ++v) {
            if (v == distinguished) continue;
            term = alg.mul(term, xs[static_cast<std::size_t>(t.succ[static_cast<std::size_t>(v)])].value());
        }
        rhs = alg.add(rhs, term);
    });
    return {Scalar(alg, lhs), Scalar(alg, rhs)};
}

}  // namespace semitree
