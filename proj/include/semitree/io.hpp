#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "semitree/matrix.hpp"

namespace semitree {

/// Builds an algebra from its JSON description:
///   {"kind": "max-plus"}
///   {"kind": "boolean-subsets", "universe": ["a", "b"]}
///   {"kind": "interval", "base": {"kind": "max-min"}}
/// Throws ParseError on anything malformed.
Algebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& alg);

/// Scalar encodings, by algebra kind:
///  - numeric kinds: a number, or the strings "inf"/"+inf"/"-inf"
///    (max-plus zero is -inf, min-plus zero is +inf)
///  - boolean-subsets: array of universe element names, e.g. ["a", "c"]
///  - interval: two-element array [lo, hi] of base-algebra encodings
Value value_from_json(const Algebra& alg, const nlohmann::json& j);
nlohmann::json value_to_json(const Algebra& alg, const Value& v);

Scalar scalar_from_json(const Algebra& alg, const nlohmann::json& j);
nlohmann::json scalar_to_json(const Scalar& s);

/// Matrix files look like:
///   {"algebra": {"kind": "classical-nonneg"}, "matrix": [[0, 0.5], [1, 0]]}
/// The matrix must be square and nonempty.
SquareMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const SquareMatrix& a);

/// Reads and parses a matrix file; ParseError carries the file name on any
/// I/O or syntax problem.
SquareMatrix load_matrix_file(const std::string& path);

/// Deterministic text rendering used by every report: shortest round-trip
/// digits for reals ("+inf"/"-inf" for infinities, never "-0"), universe
/// order inside "{...}" for sets, "[lo, hi]" for intervals.
std::string format_real(double x);
std::string format_value(const Algebra& alg, const Value& v);
std::string format_scalar(const Scalar& s);
std::string format_vector(const RstVector& w);

}  // namespace semitree
