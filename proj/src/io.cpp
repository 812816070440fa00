#include "semitree/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <utility>

namespace semitree {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

Value base_to_value(const BaseValue& b) {
    return std::visit([](auto x) { return Value(x); }, b);
}

BaseValue value_to_base(const Value& v) {
    if (const double* d = std::get_if<double>(&v)) return *d;
    return std::get<SetBits>(v);
}

}  // namespace

Algebra algebra_from_json(const json& j) {
    if (!j.is_object()) fail("algebra must be an object with a \"kind\" field");
    for (const auto& item : j.items())
        if (item.key() != "kind" && item.key() != "universe" && item.key() != "base")
            fail("algebra has an unknown field \"" + item.key() + "\"");
    if (!j.contains("kind") || !j.at("kind").is_string())
        fail("algebra needs a string \"kind\"");
    const std::string name = j.at("kind").get<std::string>();
    const std::optional<AlgebraKind> kind = kind_from_name(name);
    if (!kind) fail("unknown algebra kind \"" + name + "\"");
    if (*kind != AlgebraKind::boolean_subsets && j.contains("universe"))
        fail(name + " does not take a universe");
    if (*kind != AlgebraKind::interval && j.contains("base"))
        fail(name + " does not take a base algebra");
    try {
        switch (*kind) {
            case AlgebraKind::boolean_subsets: {
                if (!j.contains("universe") || !j.at("universe").is_array())
                    fail("boolean-subsets needs a \"universe\" array of element names");
                std::vector<std::string> universe;
                for (const json& e : j.at("universe")) {
                    if (!e.is_string()) fail("universe elements must be strings");
                    universe.push_back(e.get<std::string>());
                }
                return Algebra::boolean(std::move(universe));
            }
            case AlgebraKind::interval: {
                if (!j.contains("base")) fail("interval needs a \"base\" algebra");
                return Algebra::interval(algebra_from_json(j.at("base")));
            }
            default: return Algebra::of_kind(*kind);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(e.what());  // construction rules: duplicates, size cap, bad base
    }
}

json algebra_to_json(const Algebra& alg) {
    json j;
    j["kind"] = std::string(kind_name(alg.kind()));
    if (alg.kind() == AlgebraKind::boolean_subsets) j["universe"] = alg.universe();
    if (alg.kind() == AlgebraKind::interval) j["base"] = algebra_to_json(alg.base());
    return j;
}

Value value_from_json(const Algebra& alg, const json& j) {
    Value v;
    switch (alg.kind()) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times:
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus:
        case AlgebraKind::max_min: {
            if (j.is_number()) {
                v = j.get<double>();
            } else if (j.is_string()) {
                const std::string s = j.get<std::string>();
                const AlgebraKind k = alg.kind();
                if (s == "-inf" && (k == AlgebraKind::max_plus || k == AlgebraKind::max_min))
                    v = -kInf;
                else if ((s == "+inf" || s == "inf") &&
                         (k == AlgebraKind::min_plus || k == AlgebraKind::max_min))
                    v = kInf;
                else
                    fail("\"" + s + "\" is not a valid " + alg.display_name() + " scalar");
            } else {
                fail(alg.display_name() + " scalar must be a number");
            }
            break;
        }
        case AlgebraKind::boolean_subsets: {
            if (!j.is_array()) fail("boolean-subsets scalar must be an array of element names");
            std::vector<std::string> names;
            for (const json& e : j) {
                if (!e.is_string()) fail("set elements must be universe element names");
                names.push_back(e.get<std::string>());
            }
            try {
                v = alg.bits_from_names(names);
            } catch (const Error& e) {
                fail(e.what());
            }
            break;
        }
        case AlgebraKind::interval: {
            if (!j.is_array() || j.size() != 2)
                fail("interval scalar must be a two-element array [lo, hi]");
            const Value lo = value_from_json(alg.base(), j.at(0));
            const Value hi = value_from_json(alg.base(), j.at(1));
            v = IntervalValue{value_to_base(lo), value_to_base(hi)};
            break;
        }
    }
    try {
        alg.validate(v);
    } catch (const Error& e) {
        fail(e.what());
    }
    return v;
}

json value_to_json(const Algebra& alg, const Value& v) {
    switch (alg.kind()) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times:
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus:
        case AlgebraKind::max_min: {
            const double d = std::get<double>(v);
            if (std::isinf(d)) return json(d > 0 ? "+inf" : "-inf");
            return json(d);
        }
        case AlgebraKind::boolean_subsets:
            return json(alg.names_from_bits(std::get<SetBits>(v)));
        case AlgebraKind::interval: {
            const IntervalValue& iv = std::get<IntervalValue>(v);
            return json::array({value_to_json(alg.base(), base_to_value(iv.lo)),
                                value_to_json(alg.base(), base_to_value(iv.hi))});
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

Scalar scalar_from_json(const Algebra& alg, const json& j) {
    return Scalar(alg, value_from_json(alg, j));
}

json scalar_to_json(const Scalar& s) { return value_to_json(s.algebra(), s.value()); }

SquareMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) fail("matrix file must be an object with \"algebra\" and \"matrix\"");
    for (const auto& item : j.items())
        if (item.key() != "algebra" && item.key() != "matrix")
            fail("matrix file has an unknown field \"" + item.key() + "\"");
    if (!j.contains("algebra")) fail("matrix file is missing \"algebra\"");
    const Algebra alg = algebra_from_json(j.at("algebra"));
    if (!j.contains("matrix") || !j.at("matrix").is_array())
        fail("matrix file is missing the \"matrix\" array");
    const json& rows = j.at("matrix");
    const int n = static_cast<int>(rows.size());
    if (n == 0) fail("matrix must have at least one row");
    SquareMatrix a(alg, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            fail("row " + std::to_string(i + 1) + " must be an array of exactly " +
                 std::to_string(n) + " entries");
        for (int l = 0; l < n; ++l) {
            try {
                a(i, l) = value_from_json(alg, row.at(static_cast<std::size_t>(l)));
            } catch (const ParseError& e) {
                fail("entry (" + std::to_string(i + 1) + ", " + std::to_string(l + 1) +
                     "): " + e.what());
            }
        }
    }
    return a;
}

json matrix_to_json(const SquareMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.size(); ++i) {
        json row = json::array();
        for (int l = 0; l < a.size(); ++l) row.push_back(value_to_json(a.algebra(), a(i, l)));
        rows.push_back(std::move(row));
    }
    json j;
    j["algebra"] = algebra_to_json(a.algebra());
    j["matrix"] = std::move(rows);
    return j;
}

SquareMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string format_real(double x) {
    if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
    if (x == 0) x = 0;  // never print "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_value(const Algebra& alg, const Value& v) {
    switch (alg.kind()) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times:
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus:
        case AlgebraKind::max_min: return format_real(std::get<double>(v));
        case AlgebraKind::boolean_subsets: {
            std::string out = "{";
            bool first = true;
            for (const std::string& name : alg.names_from_bits(std::get<SetBits>(v))) {
                if (!first) out += ", ";
                out += name;
                first = false;
            }
            return out + "}";
        }
        case AlgebraKind::interval: {
            const IntervalValue& iv = std::get<IntervalValue>(v);
            return "[" + format_value(alg.base(), base_to_value(iv.lo)) + ", " +
                   format_value(alg.base(), base_to_value(iv.hi)) + "]";
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

std::string format_scalar(const Scalar& s) { return format_value(s.algebra(), s.value()); }

std::string format_vector(const RstVector& w) {
    std::string out = "(";
    for (int i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += format_value(w.algebra(), w[i]);
    }
    return out + ")";
}

}  // namespace semitree
