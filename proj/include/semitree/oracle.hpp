#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "semitree/matrix.hpp"

namespace semitree {

/// Hard upper bound on the number of states any exhaustive enumeration will
/// accept. The environment variable SEMITREE_ORACLE_CAP may lower the
/// effective cap below this, never raise it.
inline constexpr int kOracleCapLimit = 9;

/// Effective enumeration cap (reads SEMITREE_ORACLE_CAP on each call).
int oracle_cap();

/// Spanning tree rooted at `root` with every edge directed toward the root:
/// succ[v] is the unique out-neighbour of each non-root vertex, succ[root]
/// is -1. A valid tree has no loops and every vertex reaches the root.
struct RootedTree {
    int root = 0;
    std::vector<int> succ;
};

/// Digraph in which every vertex has exactly one outgoing edge (loops
/// allowed). Its cycles are vertex-disjoint.
struct FunctionalGraph {
    std::vector<int> succ;
};

bool is_rooted_tree(const RootedTree& t);

/// True iff g has exactly one cycle, that cycle passes through vertex i, and
/// it is not a loop.
bool is_unicyclic_through(const FunctionalGraph& g, int i);

/// Calls visit(t) once for every spanning tree on n vertices rooted at
/// `root` and directed toward it. Candidates are all successor maps with
/// succ[v] != v, filtered for acyclicity; the visited RootedTree is reused
/// between calls, so copy it if you keep it.
template <class F>
void visit_rooted_trees(int n, int root, F&& visit) {
    RootedTree tree;
    tree.root = root;
    tree.succ.assign(static_cast<std::size_t>(n), -1);
    if (n == 1) {
        visit(static_cast<const RootedTree&>(tree));
        return;
    }

    std::vector<int> vertices;  // non-root vertices, odometer digits
    for (int v = 0; v < n; ++v)
        if (v != root) vertices.push_back(v);
    std::vector<int> choice(vertices.size(), 0);
    auto decode = [](int v, int c) { return c < v ? c : c + 1; };  // skip v itself
    for (std::size_t k = 0; k < vertices.size(); ++k)
        tree.succ[static_cast<std::size_t>(vertices[k])] = decode(vertices[k], 0);

    std::vector<std::uint8_t> state(static_cast<std::size_t>(n));
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(n));
    for (;;) {
        // Valid iff every vertex reaches the root (equivalently: no cycle).
        std::fill(state.begin(), state.end(), std::uint8_t{0});
        state[static_cast<std::size_t>(root)] = 2;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (state[static_cast<std::size_t>(v)] != 0) continue;
            path.clear();
            int u = v;
            while (state[static_cast<std::size_t>(u)] == 0) {
                state[static_cast<std::size_t>(u)] = 1;
                path.push_back(u);
                u = tree.succ[static_cast<std::size_t>(u)];
            }
            if (state[static_cast<std::size_t>(u)] == 1) ok = false;
            for (int x : path) state[static_cast<std::size_t>(x)] = 2;
        }
        if (ok) visit(static_cast<const RootedTree&>(tree));

        // Advance the odometer.
        std::size_t k = 0;
        while (k < vertices.size()) {
            if (++choice[k] < n - 1) break;
            choice[k] = 0;
            ++k;
        }
        if (k == vertices.size()) return;
        for (std::size_t j = 0; j <= k; ++j)
            tree.succ[static_cast<std::size_t>(vertices[j])] = decode(vertices[j], choice[j]);
    }
}

/// Calls visit(g) once for every successor map on n vertices (n^n maps,
/// loops included). The FunctionalGraph is reused between calls.
template <class F>
void visit_functional_graphs(int n, F&& visit) {
    FunctionalGraph g;
    g.succ.assign(static_cast<std::size_t>(n), 0);
    for (;;) {
        visit(static_cast<const FunctionalGraph&>(g));
        int k = 0;
        while (k < n) {
            if (++g.succ[static_cast<std::size_t>(k)] < n) break;
            g.succ[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == n) return;
    }
}

/// Materialized tree enumeration; throws CapExceeded for n above the cap.
std::vector<RootedTree> enumerate_rooted_trees(int n, int root);

/// Product of the edge weights of t in a's algebra (one() for the empty
/// tree on a single vertex).
Scalar tree_weight(const SquareMatrix& a, const RootedTree& t);

/// Brute-force rooted-spanning-tree vector: component i sums tree_weight
/// over every spanning tree rooted at i. Exhaustive; n is capped.
RstVector rst_vector_bruteforce(const SquareMatrix& a);

/// Total weight of all functional graphs whose unique cycle passes through i
/// and is not a loop. Both sides of the balance identity equal this.
Scalar unicyclic_total_weight(const SquareMatrix& a, int i);

/// unicyclic_total_weight for every i in one pass over the n^n maps.
std::vector<Value> unicyclic_totals(const SquareMatrix& a);

/// Verifies, for every state i, that
///   w_i * sum_{j != i} a_ij  ==  sum_{j != i} w_j * a_ji
/// with w the brute-force tree vector, and that both sides equal the
/// i-unicyclic total weight. Holds in every commutative semiring.
bool check_balance(const SquareMatrix& a);

/// Tree-enumerator identity (Cayley's formula in semiring form): returns
///   LHS = (x_1 + ... + x_n)^(n-2) * x_d
///   RHS = sum over trees rooted at d of prod_k x_k^(indeg k)
/// computed by independent routes; callers assert eq(LHS, RHS).
/// `distinguished` is the 0-based index d. 2 <= n <= cap.
std::pair<Scalar, Scalar> cayley_check(const std::vector<Scalar>& xs, int distinguished);

}  // namespace semitree
