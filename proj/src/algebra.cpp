#include "semitree/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

namespace semitree {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double as_real(const Value& v) { return std::get<double>(v); }
SetBits as_set(const Value& v) { return std::get<SetBits>(v); }
const IntervalValue& as_interval(const Value& v) { return std::get<IntervalValue>(v); }

Value to_value(const BaseValue& b) {
    return std::visit([](auto x) { return Value(x); }, b);
}

BaseValue to_base(const Value& v) {
    if (const double* d = std::get_if<double>(&v)) return *d;
    if (const SetBits* s = std::get_if<SetBits>(&v)) return *s;
    throw InvalidScalar("interval endpoints must be base-algebra values");
}

bool real_eq(double x, double y) {
    if (x == y) return true;  // equal infinities and exact hits
    if (!std::isfinite(x) || !std::isfinite(y)) return false;
    const double scale = std::max(std::fabs(x), std::fabs(y));
    return std::fabs(x - y) <= std::max(kEqAbsTol, kEqRelTol * scale);
}

}  // namespace

std::string_view kind_name(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::classical_nonneg: return "classical-nonneg";
        case AlgebraKind::max_times: return "max-times";
        case AlgebraKind::max_plus: return "max-plus";
        case AlgebraKind::min_plus: return "min-plus";
        case AlgebraKind::boolean_subsets: return "boolean-subsets";
        case AlgebraKind::max_min: return "max-min";
        case AlgebraKind::interval: return "interval";
    }
    return "?";
}

std::optional<AlgebraKind> kind_from_name(std::string_view name) {
    for (AlgebraKind k :
         {AlgebraKind::classical_nonneg, AlgebraKind::max_times, AlgebraKind::max_plus,
          AlgebraKind::min_plus, AlgebraKind::boolean_subsets, AlgebraKind::max_min,
          AlgebraKind::interval})
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

Algebra::Algebra(AlgebraKind kind, std::shared_ptr<const std::vector<std::string>> universe,
                 std::shared_ptr<const Algebra> base)
    : kind_(kind), universe_(std::move(universe)), base_(std::move(base)) {
    if (universe_)
        mask_ = universe_->size() == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << universe_->size()) - 1;
}

Algebra Algebra::classical() {
    return Algebra(AlgebraKind::classical_nonneg, nullptr, nullptr);
}
Algebra Algebra::max_times() { return Algebra(AlgebraKind::max_times, nullptr, nullptr); }
Algebra Algebra::max_plus() { return Algebra(AlgebraKind::max_plus, nullptr, nullptr); }
Algebra Algebra::min_plus() { return Algebra(AlgebraKind::min_plus, nullptr, nullptr); }
Algebra Algebra::max_min() { return Algebra(AlgebraKind::max_min, nullptr, nullptr); }

Algebra Algebra::boolean(std::vector<std::string> universe) {
    if (universe.empty()) throw InvalidAlgebra("boolean-subsets needs a nonempty universe");
    if (universe.size() > 64)
        throw InvalidAlgebra("boolean-subsets universe is capped at 64 elements");
    std::set<std::string_view> seen;
    for (const std::string& name : universe)
        if (!seen.insert(name).second)
            throw InvalidAlgebra("duplicate universe element '" + name + "'");
    return Algebra(AlgebraKind::boolean_subsets,
                   std::make_shared<const std::vector<std::string>>(std::move(universe)),
                   nullptr);
}

Algebra Algebra::interval(const Algebra& base) {
    if (base.kind() == AlgebraKind::interval)
        throw InvalidAlgebra("interval base must not itself be an interval algebra");
    if (!base.is_idempotent_add())
        throw InvalidAlgebra("interval base must have idempotent addition; " +
                             base.display_name() + " does not");
    return Algebra(AlgebraKind::interval, nullptr, std::make_shared<const Algebra>(base));
}

Algebra Algebra::of_kind(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::classical_nonneg: return classical();
        case AlgebraKind::max_times: return max_times();
        case AlgebraKind::max_plus: return max_plus();
        case AlgebraKind::min_plus: return min_plus();
        case AlgebraKind::max_min: return max_min();
        case AlgebraKind::boolean_subsets:
            throw InvalidAlgebra("boolean-subsets needs a universe; use Algebra::boolean");
        case AlgebraKind::interval:
            throw InvalidAlgebra("interval needs a base algebra; use Algebra::interval");
    }
    throw InvalidAlgebra("unknown algebra kind");
}

bool Algebra::is_semifield() const noexcept {
    switch (kind_) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times:
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus: return true;
        default: return false;
    }
}

bool Algebra::is_idempotent_add() const noexcept {
    return kind_ != AlgebraKind::classical_nonneg;
}

const std::vector<std::string>& Algebra::universe() const {
    if (kind_ != AlgebraKind::boolean_subsets)
        throw InvalidAlgebra(display_name() + " has no universe");
    return *universe_;
}

std::uint64_t Algebra::universe_mask() const {
    if (kind_ != AlgebraKind::boolean_subsets)
        throw InvalidAlgebra(display_name() + " has no universe");
    return mask_;
}

const Algebra& Algebra::base() const {
    if (kind_ != AlgebraKind::interval) throw InvalidAlgebra(display_name() + " has no base");
    return *base_;
}

Value Algebra::zero() const {
    switch (kind_) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times: return 0.0;
        case AlgebraKind::max_plus:
        case AlgebraKind::max_min: return -kInf;
        case AlgebraKind::min_plus: return kInf;
        case AlgebraKind::boolean_subsets: return SetBits{0};
        case AlgebraKind::interval: {
            BaseValue z = to_base(base_->zero());
            return IntervalValue{z, z};
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

Value Algebra::one() const {
    switch (kind_) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times: return 1.0;
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus: return 0.0;
        case AlgebraKind::max_min: return kInf;
        case AlgebraKind::boolean_subsets: return SetBits{mask_};
        case AlgebraKind::interval: {
            BaseValue u = to_base(base_->one());
            return IntervalValue{u, u};
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

Value Algebra::add(const Value& x, const Value& y) const {
    switch (kind_) {
        case AlgebraKind::classical_nonneg: return as_real(x) + as_real(y);
        case AlgebraKind::max_times:
        case AlgebraKind::max_plus:
        case AlgebraKind::max_min: return std::max(as_real(x), as_real(y));
        case AlgebraKind::min_plus: return std::min(as_real(x), as_real(y));
        case AlgebraKind::boolean_subsets: return SetBits{as_set(x).bits | as_set(y).bits};
        case AlgebraKind::interval: {
            const IntervalValue& a = as_interval(x);
            const IntervalValue& b = as_interval(y);
            return IntervalValue{to_base(base_->add(to_value(a.lo), to_value(b.lo))),
                                 to_base(base_->add(to_value(a.hi), to_value(b.hi)))};
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

Value Algebra::mul(const Value& x, const Value& y) const {
    switch (kind_) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times: return as_real(x) * as_real(y);
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus: return as_real(x) + as_real(y);
        case AlgebraKind::max_min: return std::min(as_real(x), as_real(y));
        case AlgebraKind::boolean_subsets: return SetBits{as_set(x).bits & as_set(y).bits};
        case AlgebraKind::interval: {
            const IntervalValue& a = as_interval(x);
            const IntervalValue& b = as_interval(y);
            return IntervalValue{to_base(base_->mul(to_value(a.lo), to_value(b.lo))),
                                 to_base(base_->mul(to_value(a.hi), to_value(b.hi)))};
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

Value Algebra::inv(const Value& x) const {
    if (!is_semifield())
        throw NotASemifield(display_name() + " has no multiplicative inverses");
    if (is_zero(x)) throw ZeroInverse("inv of the zero element of " + display_name());
    switch (kind_) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times: return 1.0 / as_real(x);
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus: return -as_real(x);
        default: break;
    }
    throw InternalInvariantViolated("unknown semifield kind");
}

bool Algebra::eq(const Value& x, const Value& y) const {
    switch (kind_) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times:
        case AlgebraKind::max_plus:
        case AlgebraKind::min_plus:
        case AlgebraKind::max_min: return real_eq(as_real(x), as_real(y));
        case AlgebraKind::boolean_subsets: return as_set(x) == as_set(y);
        case AlgebraKind::interval: {
            const IntervalValue& a = as_interval(x);
            const IntervalValue& b = as_interval(y);
            return base_->eq(to_value(a.lo), to_value(b.lo)) &&
                   base_->eq(to_value(a.hi), to_value(b.hi));
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

void Algebra::validate(const Value& x) const {
    switch (kind_) {
        case AlgebraKind::classical_nonneg:
        case AlgebraKind::max_times: {
            const double* d = std::get_if<double>(&x);
            if (!d) throw InvalidScalar(display_name() + " scalar must be a number");
            if (std::isnan(*d)) throw InvalidScalar(display_name() + " scalar must not be NaN");
            if (*d < 0) throw InvalidScalar(display_name() + " scalar must be nonnegative");
            if (std::isinf(*d)) throw InvalidScalar(display_name() + " scalar must be finite");
            return;
        }
        case AlgebraKind::max_plus: {
            const double* d = std::get_if<double>(&x);
            if (!d) throw InvalidScalar("max-plus scalar must be a number");
            if (std::isnan(*d)) throw InvalidScalar("max-plus scalar must not be NaN");
            if (*d == kInf)
                throw InvalidScalar("max-plus admits -inf only, not +inf");
            return;
        }
        case AlgebraKind::min_plus: {
            const double* d = std::get_if<double>(&x);
            if (!d) throw InvalidScalar("min-plus scalar must be a number");
            if (std::isnan(*d)) throw InvalidScalar("min-plus scalar must not be NaN");
            if (*d == -kInf)
                throw InvalidScalar("min-plus admits +inf only, not -inf");
            return;
        }
        case AlgebraKind::max_min: {
            const double* d = std::get_if<double>(&x);
            if (!d) throw InvalidScalar("max-min scalar must be a number");
            if (std::isnan(*d)) throw InvalidScalar("max-min scalar must not be NaN");
            return;
        }
        case AlgebraKind::boolean_subsets: {
            const SetBits* s = std::get_if<SetBits>(&x);
            if (!s) throw InvalidScalar("boolean-subsets scalar must be a set");
            if (s->bits & ~mask_)
                throw InvalidScalar("set uses bits outside the declared universe");
            return;
        }
        case AlgebraKind::interval: {
            const IntervalValue* iv = std::get_if<IntervalValue>(&x);
            if (!iv) throw InvalidScalar(display_name() + " scalar must be an interval");
            base_->validate(to_value(iv->lo));
            base_->validate(to_value(iv->hi));
            // The canonical order lo <= hi means lo + hi = hi, checked
            // exactly: tolerating near-misses here would admit pairs that
            // are not order intervals at all.
            if (!(base_->add(to_value(iv->lo), to_value(iv->hi)) == to_value(iv->hi)))
                throw InvalidScalar(
                    "interval endpoints out of order: lo must precede hi in the base order");
            return;
        }
    }
    throw InternalInvariantViolated("unknown algebra kind");
}

SetBits Algebra::bits_from_names(const std::vector<std::string>& names) const {
    if (kind_ != AlgebraKind::boolean_subsets)
        throw InvalidAlgebra(display_name() + " has no universe");
    SetBits out;
    for (const std::string& name : names) {
        auto it = std::find(universe_->begin(), universe_->end(), name);
        if (it == universe_->end())
            throw InvalidScalar("'" + name + "' is not a universe element");
        out.bits |= std::uint64_t{1} << (it - universe_->begin());
    }
    return out;
}

std::vector<std::string> Algebra::names_from_bits(SetBits s) const {
    if (kind_ != AlgebraKind::boolean_subsets)
        throw InvalidAlgebra(display_name() + " has no universe");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < universe_->size(); ++k)
        if (s.bits >> k & 1) out.push_back((*universe_)[k]);
    return out;
}

std::string Algebra::display_name() const {
    if (kind_ == AlgebraKind::interval) return "interval over " + base_->display_name();
    if (kind_ == AlgebraKind::boolean_subsets) {
        std::string name = "boolean-subsets over {";
        for (std::size_t k = 0; k < universe_->size(); ++k) {
            if (k) name += ", ";
            name += (*universe_)[k];
        }
        return name + "}";
    }
    return std::string(kind_name(kind_));
}

bool operator==(const Algebra& a, const Algebra& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == AlgebraKind::boolean_subsets) return *a.universe_ == *b.universe_;
    if (a.kind_ == AlgebraKind::interval) return *a.base_ == *b.base_;
    return true;
}

Scalar::Scalar(Algebra algebra, Value value)
    : algebra_(std::move(algebra)), value_(std::move(value)) {
    algebra_.validate(value_);
}

namespace {

void require_same(const Algebra& a, const Algebra& b, const char* op) {
    if (!(a == b))
        throw AlgebraMismatch(std::string(op) + ": operands use different algebras (" +
                              a.display_name() + " vs " + b.display_name() + ")");
}

}  // namespace

Scalar add(const Scalar& x, const Scalar& y) {
    require_same(x.algebra(), y.algebra(), "add");
    return Scalar(x.algebra(), x.algebra().add(x.value(), y.value()));
}

Scalar mul(const Scalar& x, const Scalar& y) {
    require_same(x.algebra(), y.algebra(), "mul");
    return Scalar(x.algebra(), x.algebra().mul(x.value(), y.value()));
}

Scalar inv(const Scalar& x) { return Scalar(x.algebra(), x.algebra().inv(x.value())); }

bool eq(const Scalar& x, const Scalar& y) {
    require_same(x.algebra(), y.algebra(), "eq");
    return x.algebra().eq(x.value(), y.value());
}

Scalar zero(const Algebra& a) { return Scalar(a, a.zero()); }
Scalar one(const Algebra& a) { return Scalar(a, a.one()); }

}  // namespace semitree
