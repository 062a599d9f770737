#pragma once

// Exact dense linear algebra over the rationals.
//
// All routines reduce through one fraction-free (Bareiss) elimination on
// rows scaled to integers; rationals only reappear during back substitution.
// Pivots are the first nonzero entry scanning down the current column, so
// results are deterministic.

#include <cstddef>
#include <span>
#include <vector>

#include "maxcurve/rational.hpp"

namespace maxcurve {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; PreconditionError unless entries.size() == rows*cols.
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix identity(std::size_t n);
    /// All rows must have equal length.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
    static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const
    {
        return entries_[r * cols_ + c];
    }

    std::span<const Rational> row(std::size_t r) const
    {
        return {entries_.data() + r * cols_, cols_};
    }
    RationalVector column(std::size_t c) const;

    RationalMatrix transpose() const;
    RationalVector multiply(std::span<const Rational> v) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::size_t rank(const RationalMatrix& m);

struct SolveResult {
    enum class Status { unique, underdetermined, inconsistent };

    Status status = Status::inconsistent;
    // One exact solution (free variables set to zero); empty when inconsistent.
    RationalVector solution;
    // Dimension of the null space of the coefficient matrix.
    std::size_t null_dimension = 0;

    bool consistent() const { return status != Status::inconsistent; }
};

/// PreconditionError unless b.size() == m.rows().
SolveResult solve(const RationalMatrix& m, std::span<const Rational> b);

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that
/// column. Empty iff rank(m) == m.cols().
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// rank([m | v]) == rank(m). PreconditionError unless v.size() == m.rows().
bool in_column_span(const RationalMatrix& m, std::span<const Rational> v);

/// PreconditionError when m is not square or is singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace maxcurve
