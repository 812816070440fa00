#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semitree/errors.hpp"

namespace semitree {

/// The seven built-in commutative semiring instances.
///
/// All of them are antinegative (x + y = 0 forces x = y = 0). The first four
/// are semifields; every kind except classical_nonneg has idempotent addition.
enum class AlgebraKind {
    classical_nonneg,  ///< nonnegative reals, ordinary + and *
    max_times,         ///< nonnegative reals, max and *
    max_plus,          ///< reals with -inf, max and +
    min_plus,          ///< reals with +inf, min and +
    boolean_subsets,   ///< subsets of a finite universe, union and intersection
    max_min,           ///< extended reals, max and min
    interval,          ///< order intervals [lo, hi] over an idempotent base
};

/// Canonical kind name used in files and reports ("classical-nonneg", ...).
std::string_view kind_name(AlgebraKind kind);
std::optional<AlgebraKind> kind_from_name(std::string_view name);

/// A subset of the universe of a boolean_subsets algebra, as a bitmask over
/// the ordered universe list. Universes are capped at 64 elements.
struct SetBits {
    std::uint64_t bits = 0;
    friend bool operator==(SetBits, SetBits) = default;
};

/// Carrier of an interval's endpoints: the base algebra is always real-valued
/// or set-valued (interval-over-interval is not allowed).
using BaseValue = std::variant<double, SetBits>;

/// An order interval [lo, hi] with lo \preceq hi in the base algebra's
/// canonical order (a \preceq b iff a + b = b).
struct IntervalValue {
    BaseValue lo;
    BaseValue hi;
    friend bool operator==(const IntervalValue&, const IntervalValue&) = default;
};

/// Raw carrier value, meaningful only together with an Algebra. Real-valued
/// kinds use the double alternative (with the infinities each kind admits).
using Value = std::variant<double, SetBits, IntervalValue>;

/// Equality tolerances for real carriers. Exact/set carriers ignore them;
/// infinities always compare exactly.
inline constexpr double kEqRelTol = 1e-9;
inline constexpr double kEqAbsTol = 1e-12;

/// One of the seven semiring instances, together with its parameters
/// (universe for boolean_subsets, base algebra for interval).
///
/// An Algebra is an immutable value; copies are cheap and all operations are
/// pure, so instances may be shared freely across threads. Operations on
/// `Value` assume the value belongs to this algebra (use validate() at trust
/// boundaries); the Scalar wrapper below carries its algebra and checks it.
class Algebra {
public:
    static Algebra classical();
    static Algebra max_times();
    static Algebra max_plus();
    static Algebra min_plus();
    static Algebra max_min();
    /// Universe must be nonempty, duplicate-free, and hold at most 64 names.
    static Algebra boolean(std::vector<std::string> universe);
    /// Base must have idempotent addition and must not itself be an interval
    /// algebra.
    static Algebra interval(const Algebra& base);
    /// Factory for the five parameterless kinds.
    static Algebra of_kind(AlgebraKind kind);

    AlgebraKind kind() const noexcept { return kind_; }
    bool is_semifield() const noexcept;
    bool is_idempotent_add() const noexcept;
    bool is_antinegative() const noexcept { return true; }

    /// Ordered element names; boolean_subsets only.
    const std::vector<std::string>& universe() const;
    std::uint64_t universe_mask() const;
    /// Base algebra; interval only.
    const Algebra& base() const;

    Value zero() const;
    Value one() const;
    Value add(const Value& x, const Value& y) const;
    Value mul(const Value& x, const Value& y) const;
    /// Multiplicative inverse. Throws NotASemifield for kinds without
    /// inverses and ZeroInverse when x is (indistinguishable from) zero.
    Value inv(const Value& x) const;
    /// Carrier equality: exact for set carriers, within kEqRelTol/kEqAbsTol
    /// for real carriers, componentwise for intervals.
    bool eq(const Value& x, const Value& y) const;
    bool is_zero(const Value& x) const { return eq(x, zero()); }
    /// Throws InvalidScalar unless x is a well-formed member of the carrier.
    void validate(const Value& x) const;

    /// Set helpers (boolean_subsets only).
    SetBits bits_from_names(const std::vector<std::string>& names) const;
    std::vector<std::string> names_from_bits(SetBits s) const;

    /// Human-readable instance name, e.g. "interval over max-plus".
    std::string display_name() const;

    friend bool operator==(const Algebra& a, const Algebra& b);
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
    Algebra(AlgebraKind kind, std::shared_ptr<const std::vector<std::string>> universe,
            std::shared_ptr<const Algebra> base);

    AlgebraKind kind_;
    std::shared_ptr<const std::vector<std::string>> universe_;  // boolean_subsets
    std::shared_ptr<const Algebra> base_;                       // interval
    std::uint64_t mask_ = 0;
};

/// A value tagged with its algebra. Combining scalars from different algebra
/// instances throws AlgebraMismatch.
class Scalar {
public:
    Scalar(Algebra algebra, Value value);

    const Algebra& algebra() const noexcept { return algebra_; }
    const Value& value() const noexcept { return value_; }

private:
    Algebra algebra_;
    Value value_;
};

Scalar add(const Scalar& x, const Scalar& y);
Scalar mul(const Scalar& x, const Scalar& y);
Scalar inv(const Scalar& x);
bool eq(const Scalar& x, const Scalar& y);
Scalar zero(const Algebra& a);
Scalar one(const Algebra& a);

}  // namespace semitree
