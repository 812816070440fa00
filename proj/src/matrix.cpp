#include "semitree/matrix.hpp"

#include <string>
#include <utility>

namespace semitree {
namespace {

void require_same(const Algebra& a, const Algebra& b, const char* what) {
    if (!(a == b))
        throw AlgebraMismatch(std::string(what) + " use different algebras (" +
                              a.display_name() + " vs " + b.display_name() + ")");
}

}  // namespace

SquareMatrix::SquareMatrix(Algebra algebra, int n)
    : algebra_(std::move(algebra)), n_(n) {
    if (n < 1) throw DimensionMismatch("matrix needs at least one state");
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                    algebra_.zero());
}

SquareMatrix SquareMatrix::from_rows(const Algebra& algebra,
                                     const std::vector<std::vector<Scalar>>& rows) {
    const int n = static_cast<int>(rows.size());
    SquareMatrix out(algebra, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw DimensionMismatch("row " + std::to_string(i + 1) + " has " +
                                    std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                    " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            const Scalar& s = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            require_same(algebra, s.algebra(), "matrix and entry");
            out(i, j) = s.value();
        }
    }
    return out;
}

Scalar SquareMatrix::entry(int i, int j) const {
    check_index(i, j);
    return Scalar(algebra_, (*this)(i, j));
}

void SquareMatrix::set_entry(int i, int j, const Scalar& s) {
    check_index(i, j);
    require_same(algebra_, s.algebra(), "matrix and entry");
    (*this)(i, j) = s.value();
}

void SquareMatrix::check_index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw IndexOutOfRange("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") of a " + std::to_string(n_) + "-state matrix");
}

RstVector::RstVector(Algebra algebra, std::vector<Value> components)
    : algebra_(std::move(algebra)), components_(std::move(components)) {
    if (components_.empty()) throw DimensionMismatch("vector needs at least one component");
    for (const Value& v : components_) algebra_.validate(v);
}

Scalar RstVector::at(int i) const {
    if (i < 0 || i >= size())
        throw IndexOutOfRange("component " + std::to_string(i) + " of a " +
                              std::to_string(size()) + "-vector");
    return Scalar(algebra_, components_[static_cast<std::size_t>(i)]);
}

bool RstVector::all_zero() const {
    for (const Value& v : components_)
        if (!algebra_.is_zero(v)) return false;
    return true;
}

Scalar row_offdiag_sum(const SquareMatrix& a, int i, OffDiagRange range) {
    if (i < 0 || i >= a.size())
        throw IndexOutOfRange("row " + std::to_string(i) + " of a " +
                              std::to_string(a.size()) + "-state matrix");
    const Algebra& alg = a.algebra();
    Value sum = alg.zero();
    const int first = range == OffDiagRange::suffix ? i + 1 : 0;
    for (int j = first; j < a.size(); ++j) {
        if (j == i) continue;
        sum = alg.add(sum, a(i, j));
    }
    return Scalar(alg, sum);
}

RstVector transpose_apply(const SquareMatrix& a, const RstVector& w) {
    require_same(a.algebra(), w.algebra(), "matrix and vector");
    if (w.size() != a.size())
        throw DimensionMismatch("matrix has " + std::to_string(a.size()) +
                                " states but vector has " + std::to_string(w.size()));
    const Algebra& alg = a.algebra();
    const int n = a.size();
    std::vector<Value> out(static_cast<std::size_t>(n), alg.zero());
    for (int j = 0; j < n; ++j) {
        Value sum = alg.zero();
        for (int i = 0; i < n; ++i) sum = alg.add(sum, alg.mul(w[i], a(i, j)));
        out[static_cast<std::size_t>(j)] = sum;
    }
    return RstVector(alg, std::move(out));
}

bool is_stochastic(const SquareMatrix& a) {
    const Algebra& alg = a.algebra();
    const Value one = alg.one();
    for (int i = 0; i < a.size(); ++i) {
        Value sum = alg.zero();
        for (int j = 0; j < a.size(); ++j) sum = alg.add(sum, a(i, j));
        if (!alg.eq(sum, one)) return false;
    }
    return true;
}

bool has_offdiag_nonzero_rows(const SquareMatrix& a) {
    const Algebra& alg = a.algebra();
    for (int i = 0; i < a.size(); ++i) {
        bool found = false;
        for (int j = 0; j < a.size() && !found; ++j)
            found = j != i && !alg.is_zero(a(i, j));
        if (!found) return false;
    }
    return true;
}

bool eq(const RstVector& u, const RstVector& v) {
    require_same(u.algebra(), v.algebra(), "vectors");
    if (u.size() != v.size()) return false;
    for (int i = 0; i < u.size(); ++i)
        if (!u.algebra().eq(u[i], v[i])) return false;
    return true;
}

bool eq(const SquareMatrix& a, const SquareMatrix& b) {
    require_same(a.algebra(), b.algebra(), "matrices");
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (!a.algebra().eq(a(i, j), b(i, j))) return false;
    return true;
}

}  // namespace semitree
