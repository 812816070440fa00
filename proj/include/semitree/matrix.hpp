#pragma once

#include <vector>

#include "semitree/algebra.hpp"

namespace semitree {

/// Dense n-by-n matrix over one algebra. Entry (i, j) is the weight of the
/// edge i -> j in the weighted digraph the matrix describes. Indices are
/// 0-based in code; reports and error messages use 1-based state numbers.
///
/// Matrices are value types; once built they are only mutated through the
/// explicit non-const accessors, so const instances are safe to share.
class SquareMatrix {
public:
    /// n >= 1; all entries start at the algebra's zero.
    SquareMatrix(Algebra algebra, int n);

    /// Builds from per-row scalars, checking that every entry belongs to
    /// `algebra` and that the rows form a square.
    static SquareMatrix from_rows(const Algebra& algebra,
                                  const std::vector<std::vector<Scalar>>& rows);

    int size() const noexcept { return n_; }
    const Algebra& algebra() const noexcept { return algebra_; }

    const Value& operator()(int i, int j) const { return entries_[index(i, j)]; }
    Value& operator()(int i, int j) { return entries_[index(i, j)]; }

    /// Bounds-checked access.
    Scalar entry(int i, int j) const;
    void set_entry(int i, int j, const Scalar& s);

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    void check_index(int i, int j) const;

    Algebra algebra_;
    int n_;
    std::vector<Value> entries_;
};

/// Rooted-spanning-tree vector: component i is the total weight of all
/// spanning trees rooted at state i (zero when no such tree has nonzero
/// weight).
class RstVector {
public:
    RstVector(Algebra algebra, std::vector<Value> components);

    int size() const noexcept { return static_cast<int>(components_.size()); }
    const Algebra& algebra() const noexcept { return algebra_; }
    const Value& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
    Scalar at(int i) const;
    const std::vector<Value>& components() const noexcept { return components_; }

    bool all_zero() const;

private:
    Algebra algebra_;
    std::vector<Value> components_;
};

/// Which off-diagonal entries of a row to sum.
enum class OffDiagRange {
    all,     ///< every j != i
    suffix,  ///< every j > i
};

/// Semiring sum of the selected off-diagonal entries of row i.
Scalar row_offdiag_sum(const SquareMatrix& a, int i, OffDiagRange range);

/// w |-> A^T w, i.e. result_j = sum_i w_i * a_ij.
RstVector transpose_apply(const SquareMatrix& a, const RstVector& w);

/// True iff every full row sum equals the multiplicative identity (under eq).
bool is_stochastic(const SquareMatrix& a);

/// True iff every row has at least one nonzero off-diagonal entry. This is
/// the precondition of the state reduction algorithm.
bool has_offdiag_nonzero_rows(const SquareMatrix& a);

/// Componentwise equality under the algebra's eq.
bool eq(const RstVector& u, const RstVector& v);
bool eq(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace semitree
