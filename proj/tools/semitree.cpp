// Command-line front end: semitree rst|reduce|check|cayley|count-ops.
// Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 failed check, 2 parse, 3 enumeration cap, 4 algebra, 5 precondition.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semitree/io.hpp"
#include "semitree/oracle.hpp"
#include "semitree/reduction.hpp"

namespace {

using namespace semitree;

// Deterministic generator for --random: same seed, same scalars, everywhere.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0, 1)
};

Value random_value(const Algebra& alg, SplitMix64& rng) {
    switch (alg.kind()) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times: return 0.25 + 2.0 * rng.unit();
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus:
        case AlgebraKind::max_min: return -2.0 + 4.0 * rng.unit();
        case AlgebraKind::boolean_subsets: return SetBits{rng.next() & alg.universe_mask()};
        case AlgebraKind::interval: {
            const Value a = random_value(alg.base(), rng);
            const Value b = random_value(alg.base(), rng);
            const Value hi = alg.base().add(a, b);
            auto narrow = [](const Value& v) {
                if (const double* d = std::get_if<double>(&v)) return BaseValue(*d);
                return BaseValue(std::get<SetBits>(v));
            };
            return IntervalValue{narrow(a), narrow(hi)};
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

void print_header(std::ostream& out, const std::string& command, const Algebra& alg, int n) {
    out << "command: " << command << "\n";
    out << "algebra: " << alg.display_name() << "\n";
    out << "n: " << n << "\n";
}

void print_indexed(std::ostream& out, const char* name, const Algebra& alg,
                   const std::vector<Value>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        out << name << "[" << i + 1 << "] = " << format_value(alg, values[i]) << "\n";
}

void print_counts(std::ostream& out, const OpCounts& c) {
    out << "adds = " << c.adds << "\n";
    out << "muls = " << c.muls << "\n";
    out << "invs = " << c.invs << "\n";
}

std::vector<int> parse_permutation(const std::string& text, int n) {
    std::vector<int> perm;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            perm.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("--permute expects comma-separated state numbers, got \"" +
                             piece + "\"");
        }
    }
    if (static_cast<int>(perm.size()) != n)
        throw ParseError("--permute lists " + std::to_string(perm.size()) + " states but the matrix has " +
                         std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw ParseError("--permute must be a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return perm;
}

int run_rst(const std::string& path) {
    const SquareMatrix a = load_matrix_file(path);
    const RstVector w = rst_vector_bruteforce(a);
    print_header(std::cout, "rst", a.algebra(), a.size());
    print_indexed(std::cout, "w", a.algebra(), w.components());
    if (w.all_zero())
        std::cout << "warning: rooted-spanning-tree vector is all zero\n";
    return 0;
}

int run_reduce(const std::string& path, bool normalize, bool trace_flag, bool count_flag,
               const std::string& permute) {
    const SquareMatrix original = load_matrix_file(path);
    const int n = original.size();

    std::vector<int> perm;  // 1-based: position i runs original state perm[i]
    SquareMatrix a = original;
    if (!permute.empty()) {
        perm = parse_permutation(permute, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = original(perm[static_cast<std::size_t>(i)] - 1,
                                   perm[static_cast<std::size_t>(j)] - 1);
    }

    ReductionTrace trace{a.algebra(), a, {}, {}, {}};
    const RstVector w_run = state_reduction(a, &trace);

    // Report the vector in the original state order regardless of the
    // elimination order used.
    std::vector<Value> w = w_run.components();
    if (!perm.empty()) {
        std::vector<Value> unpermuted(w.size(), a.algebra().zero());
        for (int i = 0; i < n; ++i)
            unpermuted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] =
                w[static_cast<std::size_t>(i)];
        w = std::move(unpermuted);
    }

    std::string command = "reduce";
    if (normalize) command += " --normalize";
    if (trace_flag) command += " --trace";
    if (count_flag) command += " --count-ops";
    if (!perm.empty()) command += " --permute";

    print_header(std::cout, command, a.algebra(), n);
    if (!perm.empty()) {
        std::cout << "permutation:";
        for (int v : perm) std::cout << " " << v;
        std::cout << "\n";
    }
    print_indexed(std::cout, "w", a.algebra(), w);

    bool all_zero = true;
    for (const Value& v : w) all_zero = all_zero && a.algebra().is_zero(v);

    if (normalize) {
        if (a.algebra().kind() != AlgebraKind::classical_nonneg) {
            std::cout << "normalized: skipped (" << a.algebra().display_name()
                      << " is not classical-nonneg)\n";
        } else if (!is_stochastic(original)) {
            std::cout << "normalized: skipped (matrix is not stochastic)\n";
        } else if (all_zero) {
            std::cout << "normalized: skipped (vector is all zero)\n";
        } else {
            double total = 0;
            for (const Value& v : w) total += std::get<double>(v);
            for (std::size_t i = 0; i < w.size(); ++i)
                std::cout << "normalized[" << i + 1
                          << "] = " << format_real(std::get<double>(w[i]) / total) << "\n";
        }
    }
    if (trace_flag) print_indexed(std::cout, "s", a.algebra(), trace.s);
    if (count_flag) print_counts(std::cout, trace.counts);
    if (all_zero) std::cout << "warning: rooted-spanning-tree vector is all zero\n";
    return 0;
}

int run_check(const std::string& path, bool balance_flag, bool eigen_flag, bool scaling_flag,
              bool all_flag) {
    const SquareMatrix a = load_matrix_file(path);
    const Algebra& alg = a.algebra();
    if (!balance_flag && !eigen_flag && !scaling_flag && !all_flag) all_flag = true;

    const bool want_balance = balance_flag || eigen_flag || all_flag;
    const bool want_eigen = eigen_flag || all_flag;
    const bool want_scaling = scaling_flag || all_flag;

    std::string command = "check";
    if (all_flag) command += " --all";
    if (balance_flag) command += " --balance";
    if (eigen_flag) command += " --eigen";
    if (scaling_flag) command += " --lemma2";
    print_header(std::cout, command, alg, a.size());

    bool all_pass = true;
    if (want_balance) {
        const bool ok = check_balance(a);
        all_pass = all_pass && ok;
        std::cout << "balance: " << (ok ? "pass" : "FAIL") << "\n";
    }
    if (want_eigen) {
        if (!is_stochastic(a)) {
            std::cout << "eigen: skipped (matrix is not stochastic)\n";
        } else {
            const RstVector w = rst_vector_bruteforce(a);
            const bool ok = eq(transpose_apply(a, w), w);
            all_pass = all_pass && ok;
            std::cout << "eigen: " << (ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (want_scaling) {
        // With --all the scaling law is checked only where it applies; the
        // explicit flag makes its requirements hard errors.
        std::optional<std::string> skip;
        if (!alg.is_semifield()) {
            if (scaling_flag)
                throw NotASemifield("the elimination scaling check needs a semifield; " +
                                    alg.display_name() + " is not one");
            skip = alg.display_name() + " is not a semifield";
        }
        if (!skip) {
            try {
                bool ok = true;
                for (int step = 1; step <= a.size() - 1; ++step)
                    ok = ok && check_elimination_scaling(a, step);
                all_pass = all_pass && ok;
                std::cout << "lemma2: " << (ok ? "pass" : "FAIL") << "\n";
            } catch (const PreconditionViolated& e) {
                if (scaling_flag) throw;
                skip = e.what();
            }
        }
        if (skip) std::cout << "lemma2: skipped (" << *skip << ")\n";
    }
    std::cout << "result: " << (all_pass ? "pass" : "FAIL") << "\n";
    return all_pass ? 0 : 1;
}

int run_cayley(const std::string& path, std::optional<int> root, std::optional<std::uint64_t> seed,
               std::optional<int> n_flag) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(path + ": expected an object with \"algebra\"");
    for (const auto& item : j.items())
        if (item.key() != "algebra" && item.key() != "xs")
            throw ParseError(path + ": unknown field \"" + item.key() + "\"");
    if (!j.contains("algebra")) throw ParseError(path + ": missing \"algebra\"");
    const Algebra alg = algebra_from_json(j.at("algebra"));

    std::vector<Scalar> xs;
    std::string command = "cayley";
    if (seed) {
        if (j.contains("xs"))
            throw ParseError("--random replaces the file's \"xs\"; remove one of them");
        if (!n_flag) throw ParseError("--random needs --n to size the scalar tuple");
        if (*n_flag < 2) throw ParseError("--n must be at least 2");
        SplitMix64 rng(*seed);
        for (int i = 0; i < *n_flag; ++i) xs.emplace_back(alg, random_value(alg, rng));
        command += " --random " + std::to_string(*seed) + " --n " + std::to_string(*n_flag);
    } else {
        if (!j.contains("xs") || !j.at("xs").is_array())
            throw ParseError(path + ": needs an \"xs\" array (or use --random)");
        for (const nlohmann::json& e : j.at("xs")) xs.push_back(scalar_from_json(alg, e));
        if (n_flag && *n_flag != static_cast<int>(xs.size()))
            throw ParseError("--n disagrees with the file's " + std::to_string(xs.size()) +
                             " scalars");
        if (xs.size() < 2) throw ParseError(path + ": \"xs\" needs at least two scalars");
    }

    const int n = static_cast<int>(xs.size());
    int root_index = n - 1;
    if (root) {
        if (*root < 1 || *root > n)
            throw ParseError("--root must be in 1.." + std::to_string(n));
        root_index = *root - 1;
        command += " --root " + std::to_string(*root);
    }

    const auto [lhs, rhs] = cayley_check(xs, root_index);
    const bool ok = eq(lhs, rhs);

    print_header(std::cout, command, alg, n);
    for (int i = 0; i < n; ++i)
        std::cout << "x[" << i + 1 << "] = " << format_scalar(xs[static_cast<std::size_t>(i)])
                  << "\n";
    std::cout << "root: " << root_index + 1 << "\n";
    std::cout << "lhs = " << format_scalar(lhs) << "\n";
    std::cout << "rhs = " << format_scalar(rhs) << "\n";
    std::cout << "result: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_count_ops(const std::string& path, std::optional<int> n_flag) {
    if (path.empty() == !n_flag)
        throw ParseError("count-ops takes a matrix file or --n, exactly one of them");
    if (n_flag) {
        if (*n_flag < 2) throw ParseError("--n must be at least 2");
        print_header(std::cout, "count-ops --n " + std::to_string(*n_flag),
                     Algebra::classical(), *n_flag);
        print_counts(std::cout, count_ops(*n_flag));
        return 0;
    }
    const SquareMatrix a = load_matrix_file(path);
    print_header(std::cout, "count-ops", a.algebra(), a.size());
    print_counts(std::cout, count_ops(a));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning-tree vectors over commutative semirings"};
    app.require_subcommand(1);

    std::string rst_file;
    CLI::App* rst = app.add_subcommand("rst", "brute-force rooted-spanning-tree vector");
    rst->add_option("file", rst_file, "matrix file")->required();

    std::string reduce_file, permute;
    bool normalize = false, trace_flag = false, count_flag = false;
    CLI::App* reduce = app.add_subcommand("reduce", "spanning-tree vector by state reduction");
    reduce->add_option("file", reduce_file, "matrix file")->required();
    reduce->add_flag("--normalize", normalize,
                     "also print w/sum(w) (classical stochastic input only)");
    reduce->add_flag("--trace", trace_flag, "also print the pivot sums s[i]");
    reduce->add_flag("--count-ops", count_flag, "also print operation counts");
    reduce->add_option("--permute", permute,
                       "eliminate states in the given order, e.g. 3,1,2");

    std::string check_file;
    bool balance_flag = false, eigen_flag = false, scaling_flag = false, all_flag = false;
    CLI::App* check = app.add_subcommand("check", "verify tree-vector identities exhaustively");
    check->add_option("file", check_file, "matrix file")->required();
    check->add_flag("--balance", balance_flag, "balance identity at every state");
    check->add_flag("--eigen", eigen_flag, "A^T w = w for stochastic input (implies --balance)");
    check->add_flag("--lemma2", scaling_flag,
                    "elimination scaling law at every step (semifields only)");
    check->add_flag("--all", all_flag, "run every applicable check (default)");

    std::string cayley_file;
    std::optional<int> cayley_root, cayley_n;
    std::optional<std::uint64_t> cayley_seed;
    CLI::App* cayley = app.add_subcommand("cayley", "tree-enumerator identity on a scalar tuple");
    cayley->add_option("file", cayley_file, "file with \"algebra\" and optional \"xs\"")
        ->required();
    cayley->add_option("--root", cayley_root, "distinguished index, 1-based (default: n)");
    cayley->add_option("--random", cayley_seed, "draw the tuple deterministically from a seed");
    cayley->add_option("--n", cayley_n, "tuple size for --random");

    std::string count_file;
    std::optional<int> count_n;
    CLI::App* count = app.add_subcommand("count-ops", "operation counts of a reduction run");
    count->add_option("file", count_file, "matrix file");
    count->add_option("--n", count_n, "count a dense classical n-state run instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(rst)) return run_rst(rst_file);
        if (app.got_subcommand(reduce))
            return run_reduce(reduce_file, normalize, trace_flag, count_flag, permute);
        if (app.got_subcommand(check))
            return run_check(check_file, balance_flag, eigen_flag, scaling_flag, all_flag);
        if (app.got_subcommand(cayley))
            return run_cayley(cayley_file, cayley_root, cayley_seed, cayley_n);
        if (app.got_subcommand(count))
            return run_count_ops(count_file, count_n);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotASemifield& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
