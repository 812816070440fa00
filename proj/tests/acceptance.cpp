// Acceptance suite: one line per criterion, [PASS]/[FAIL], with timing.
// Returns nonzero if any criterion fails. Failure details go to stderr.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semitree/io.hpp"
#include "semitree/oracle.hpp"
#include "semitree/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace semitree;
using namespace semitree::testsupport;

namespace {

int g_failures = 0;

#define ACC_CHECK(cond)                                                  \
    do {                                                                 \
        if (!(cond)) {                                                   \
            ++g_failures;                                                \
            if (g_failures <= 5)                                         \
                std::cerr << "    failed: " << #cond << " (" << __FILE__ \
                          << ":" << __LINE__ << ")\n";                   \
        }                                                                \
    } while (0)

std::string data_file(const char* name) {
    return std::string(SEMITREE_TEST_DATA_DIR) + "/" + name;
}

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SEMITREE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// --- criterion bodies ------------------------------------------------------

/// Exact reproduction of the two worked boolean chains.
void criterion1() {
    const Algebra b = sigma_boolean();
    ACC_CHECK(rst_vector_bruteforce(boolean_a1()).all_zero());

    const RstVector w = rst_vector_bruteforce(boolean_a2());
    const std::uint64_t s2 = b.bits_from_names({"σ2"}).bits;
    ACC_CHECK(std::get<SetBits>(w[0]).bits == 0);
    ACC_CHECK(std::get<SetBits>(w[1]).bits == s2);
    ACC_CHECK(std::get<SetBits>(w[2]).bits == s2);
}

/// Balance identity (and the stochastic fixed point) across all seven kinds.
void criterion2() {
    Rng rng(1001);
    for (const Algebra& alg : all_algebras()) {
        for (int n = 2; n <= 6; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                ACC_CHECK(check_balance(random_matrix(alg, n, rng)));

                const SquareMatrix st = random_stochastic(alg, n, rng);
                ACC_CHECK(check_balance(st));
                const RstVector w = rst_vector_bruteforce(st);
                ACC_CHECK(eq(transpose_apply(st, w), w));
            }
        }
    }
}

/// Reduction agrees with the exhaustive oracle on every semifield.
void criterion3() {
    Rng rng(1002);
    for (const Algebra& alg : semifield_algebras()) {
        for (int n = 2; n <= 6; ++n) {
            for (int trial = 0; trial < 40; ++trial) {
                const SquareMatrix a = random_matrix(alg, n, rng, 0.3, true);
                ACC_CHECK(eq(state_reduction(a), rst_vector_bruteforce(a)));
            }
        }
    }
}

/// Elimination scaling law at every step.
void criterion4() {
    Rng rng(1003);
    for (const Algebra& alg : {Algebra::classical(), Algebra::max_times()}) {
        for (int n = 3; n <= 6; ++n) {
            for (int trial = 0; trial < 25; ++trial) {
                const SquareMatrix a = random_matrix(alg, n, rng, 0.3, true);
                for (int step = 1; step <= n - 1; ++step)
                    ACC_CHECK(check_elimination_scaling(a, step));
            }
        }
    }
}

/// Stationary distributions against an independent linear solve.
void criterion5() {
    Rng rng(1004);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 19;  // 2..20
        const SquareMatrix a = random_irreducible_stochastic(n, rng);
        const std::vector<double> pi = stationary_by_linear_solve(a);

        const RstVector w = state_reduction(a);
        double total = 0;
        for (int i = 0; i < n; ++i) total += std::get<double>(w[i]);
        ACC_CHECK(total > 0);
        bool close = true;
        for (int i = 0; i < n; ++i)
            close = close && std::abs(std::get<double>(w[i]) / total -
                                      pi[static_cast<std::size_t>(i)]) < 1e-10;
        ACC_CHECK(close);
    }
}

/// Tree-enumerator identity with random scalars.
void criterion6() {
    Rng rng(1005);
    for (const Algebra& alg :
         {Algebra::classical(), Algebra::max_plus(), Algebra::boolean({"a", "b", "c"})}) {
        for (int n = 2; n <= 7; ++n) {
            for (int trial = 0; trial < 17; ++trial) {
                std::vector<Scalar> xs;
                for (int i = 0; i < n; ++i) xs.emplace_back(alg, random_value(alg, rng));
                const auto [lhs, rhs] = cayley_check(xs, static_cast<int>(rng() % n));
                ACC_CHECK(eq(lhs, rhs));
            }
        }
    }
}

/// Operation tallies: exact closed forms and the cubic leading terms.
void criterion7() {
    for (int n = 2; n <= 10; ++n) {
        OpCounts want;
        want.invs = static_cast<std::uint64_t>(n - 1);
        for (int m = 1; m <= n - 1; ++m) {
            want.adds += static_cast<std::uint64_t>(m - 1 + m * m);  // pivot sum + update
            want.muls += static_cast<std::uint64_t>(2 * m * m);
        }
        want.muls += static_cast<std::uint64_t>(n - 2);  // pivot product
        for (int m = 1; m <= n - 1; ++m) {               // substitution, m known successors
            want.adds += static_cast<std::uint64_t>(m);
            want.muls += static_cast<std::uint64_t>(m + 1);
        }
        ACC_CHECK(count_ops(n) == want);
    }

    const OpCounts big = count_ops(60);
    const double n3 = 60.0 * 60.0 * 60.0;
    ACC_CHECK(std::abs(static_cast<double>(big.adds) / n3 - 1.0 / 3.0) < 0.1);
    ACC_CHECK(std::abs(static_cast<double>(big.muls) / n3 - 2.0 / 3.0) < 0.1);
}

/// Dense 500-state reduction stays comfortably cubic. Stochastic rows keep
/// every pivot at most one, so the pivot product cannot overflow the carrier
/// the way an arbitrary dense matrix would over 499 steps.
void criterion8() {
    const int n = 500;
    const Algebra c = Algebra::classical();
    SquareMatrix a(c, n);
    for (int i = 0; i < n; ++i) {
        double total = 0;
        for (int j = 0; j < n; ++j)
            total += std::get<double>(a(i, j) = 0.05 + 0.01 * static_cast<double>((7 * i + 13 * j) % 10));
        for (int j = 0; j < n; ++j) a(i, j) = std::get<double>(a(i, j)) / total;
    }

    const RstVector w = state_reduction(a);
    ACC_CHECK(std::get<double>(w[0]) > 0);
}

/// CLI reports are byte-stable and every failure class maps to its exit code.
void criterion9() {
    for (const char* name : {"a1_boolean.json", "a2_boolean.json", "classical3.json"}) {
        const std::string args = "rst " + data_file(name);
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        ACC_CHECK(first.code == 0);
        ACC_CHECK(!first.out.empty());
        ACC_CHECK(first.out == second.out);
    }
    ACC_CHECK(run_cli("rst " + data_file("malformed.json")).code == 2);
    ACC_CHECK(run_cli("rst " + data_file("big10_classical.json")).code == 3);
    ACC_CHECK(run_cli("reduce " + data_file("a2_boolean.json")).code == 4);
    ACC_CHECK(run_cli("reduce " + data_file("diag2_classical.json")).code == 5);
}

// --- driver -----------------------------------------------------------------

bool run_criterion(int number, const char* label, double time_limit_sec,
                   const std::function<void()>& body) {
    g_failures = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        ++g_failures;
        std::cerr << "    threw: " << e.what() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const bool in_time = time_limit_sec <= 0 || elapsed < time_limit_sec;
    const bool pass = g_failures == 0 && in_time;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << " ("
              << timing << ")";
    if (!in_time) {
        std::snprintf(timing, sizeof timing, "%.0f s", time_limit_sec);
        std::cout << " - over the " << timing << " limit";
    }
    if (g_failures > 0) std::cout << " - " << g_failures << " failed checks";
    std::cout << "\n" << std::flush;
    return pass;
}

}  // namespace

int main() {
    int failed = 0;
    failed += !run_criterion(1, "worked boolean examples, exact", 1.0, criterion1);
    failed += !run_criterion(2, "balance identity across all seven kinds", 60.0, criterion2);
    failed += !run_criterion(3, "reduction matches the exhaustive oracle", 60.0, criterion3);
    failed += !run_criterion(4, "elimination scaling law at every step", 0, criterion4);
    failed += !run_criterion(5, "stationary distribution cross-check", 0, criterion5);
    failed += !run_criterion(6, "tree-enumerator identity", 0, criterion6);
    failed += !run_criterion(7, "operation tallies", 0, criterion7);
    failed += !run_criterion(8, "dense 500-state reduction", 5.0, criterion8);
    failed += !run_criterion(9, "CLI byte stability and exit codes", 0, criterion9);

    if (failed > 0) {
        std::cout << failed << " of 9 criteria failed\n";
        return 1;
    }
    std::cout << "all 9 criteria passed\n";
    return 0;
}
