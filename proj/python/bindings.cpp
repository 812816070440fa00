// Python bindings for the core operations. Matrices, algebras, and scalar
// values cross the boundary in the same JSON shapes the CLI reads and writes
// (dicts/lists/numbers, with "+inf"/"-inf" strings, element-name arrays for
// sets, and [lo, hi] pairs for intervals).

#include <pybind11/pybind11.h>

#include <string>

#include "semitree/io.hpp"
#include "semitree/oracle.hpp"
#include "semitree/reduction.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

json to_json(const py::handle& obj) {
    const auto dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

py::object from_json(const json& j) {
    const auto loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

semitree::SquareMatrix matrix_arg(const py::handle& obj) {
    return semitree::matrix_from_json(to_json(obj));
}

py::list vector_out(const semitree::RstVector& w) {
    py::list out;
    for (int i = 0; i < w.size(); ++i)
        out.append(from_json(semitree::value_to_json(w.algebra(), w[i])));
    return out;
}

py::dict counts_out(const semitree::OpCounts& c) {
    py::dict d;
    d["adds"] = c.adds;
    d["muls"] = c.muls;
    d["invs"] = c.invs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_semitree, m) {
    m.doc() = "Spanning-tree vectors over commutative semirings";

    // Error classes mirror the C++ hierarchy under a common base.
    auto base = py::register_exception<semitree::Error>(m, "Error");
    py::register_exception<semitree::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<semitree::NotASemifield>(m, "NotASemifield", base.ptr());
    py::register_exception<semitree::CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<semitree::PreconditionViolated>(m, "PreconditionViolated", base.ptr());
    py::register_exception<semitree::AlgebraMismatch>(m, "AlgebraMismatch", base.ptr());
    py::register_exception<semitree::InvalidScalar>(m, "InvalidScalar", base.ptr());
    py::register_exception<semitree::IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());
    py::register_exception<semitree::DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<semitree::ZeroInverse>(m, "ZeroInverse", base.ptr());

    m.def(
        "reduce",
        [](const py::handle& matrix, bool want_trace) {
            const semitree::SquareMatrix a = matrix_arg(matrix);
            semitree::ReductionTrace trace{a.algebra(), semitree::SquareMatrix(a.algebra(), 1),
                                           {}, {}, {}};
            const semitree::RstVector w = semitree::state_reduction(a, &trace);
            py::dict out;
            out["w"] = vector_out(w);
            if (want_trace) {
                py::list s;
                for (const semitree::Value& v : trace.s)
                    s.append(from_json(semitree::value_to_json(a.algebra(), v)));
                out["s"] = s;
                out["counts"] = counts_out(trace.counts);
            }
            return out;
        },
        py::arg("matrix"), py::arg("want_trace") = false,
        "Run the state reduction and return its spanning-tree vector; with "
        "want_trace=True also the pivot sums and operation counts.");

    m.def(
        "rst",
        [](const py::handle& matrix) { return vector_out(semitree::rst_vector_bruteforce(matrix_arg(matrix))); },
        py::arg("matrix"),
        "Exhaustive rooted-spanning-tree vector (state count is capped).");

    m.def(
        "check_balance",
        [](const py::handle& matrix) { return semitree::check_balance(matrix_arg(matrix)); },
        py::arg("matrix"),
        "Verify the tree/unicyclic balance identity at every state.");

    m.def(
        "check_scaling",
        [](const py::handle& matrix, int step) {
            return semitree::check_elimination_scaling(matrix_arg(matrix), step);
        },
        py::arg("matrix"), py::arg("step"),
        "Verify the elimination scaling law at one 1-based step.");

    m.def(
        "is_stochastic",
        [](const py::handle& matrix) { return semitree::is_stochastic(matrix_arg(matrix)); },
        py::arg("matrix"), "True iff every row sums to the multiplicative identity.");

    m.def(
        "unicyclic_total",
        [](const py::handle& matrix, int i) {
            const semitree::SquareMatrix a = matrix_arg(matrix);
            const semitree::Scalar total = semitree::unicyclic_total_weight(a, i);
            return from_json(semitree::scalar_to_json(total));
        },
        py::arg("matrix"), py::arg("i"),
        "Total weight of the functional graphs whose one non-loop cycle passes "
        "through 0-based state i.");

    m.def(
        "cayley",
        [](const py::handle& algebra, const py::handle& xs, int distinguished) {
            const semitree::Algebra alg = semitree::algebra_from_json(to_json(algebra));
            std::vector<semitree::Scalar> scalars;
            for (const py::handle& item : xs)
                scalars.push_back(semitree::scalar_from_json(alg, to_json(item)));
            const auto [lhs, rhs] = semitree::cayley_check(scalars, distinguished);
            py::dict out;
            out["lhs"] = from_json(semitree::scalar_to_json(lhs));
            out["rhs"] = from_json(semitree::scalar_to_json(rhs));
            out["equal"] = semitree::eq(lhs, rhs);
            return out;
        },
        py::arg("algebra"), py::arg("xs"), py::arg("distinguished"),
        "Evaluate both sides of the tree-enumerator identity for the scalars "
        "xs and the 0-based distinguished index.");

    m.def("count_ops", [](int n) { return counts_out(semitree::count_ops(n)); }, py::arg("n"),
          "Operation tallies for a dense n-state reduction.");

    m.def("oracle_cap", &semitree::oracle_cap,
          "Effective state cap for the exhaustive enumerations.");
    m.attr("ORACLE_CAP_LIMIT") = semitree::kOracleCapLimit;
}
