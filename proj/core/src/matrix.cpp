#include "maxcurve/matrix.hpp"

#include <string>
#include <utility>

#include "maxcurve/errors.hpp"

namespace maxcurve {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_) {
        throw PreconditionError("RationalMatrix: " + std::to_string(entries_.size()) +
                                " entries for a " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " matrix");
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw PreconditionError("RationalMatrix::from_rows: ragged rows");
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return RationalMatrix(rows.size(), cols, std::move(entries));
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<RationalVector>& cols)
{
    RationalMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) {
            throw PreconditionError("RationalMatrix::from_columns: column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = cols[c][r];
        }
    }
    return m;
}

RationalVector RationalMatrix::column(std::size_t c) const
{
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

RationalVector RationalMatrix::multiply(std::span<const Rational> v) const
{
    if (v.size() != cols_) {
        throw PreconditionError("RationalMatrix::multiply: dimension mismatch");
    }
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (sgn(v[c]) != 0) {
                acc += (*this)(r, c) * v[c];
            }
        }
        out[r] = acc;
    }
    return out;
}

namespace {

// Integer row-echelon form of [A | B] where only the first `pivot_limit`
// columns (those of A) are eligible as pivots.
struct Echelon {
    std::size_t width = 0;
    std::vector<std::vector<Integer>> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

Echelon eliminate(const RationalMatrix& a, const RationalMatrix* b)
{
    const std::size_t extra = b ? b->cols() : 0;
    Echelon e;
    e.width = a.cols() + extra;
    e.rows.resize(a.rows(), std::vector<Integer>(e.width));

    // Scale each row by the lcm of its denominators; row scaling preserves
    // row space, and for [A | B] it preserves the solution set.
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer scale = 1;
        auto absorb = [&](const Rational& q) { mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t()); };
        for (std::size_t c = 0; c < a.cols(); ++c) {
            absorb(a(r, c));
        }
        for (std::size_t c = 0; c < extra; ++c) {
            absorb((*b)(r, c));
        }
        auto to_int = [&](const Rational& q) {
            Integer v = scale / q.get_den();
            return Integer(v * q.get_num());
        };
        for (std::size_t c = 0; c < a.cols(); ++c) {
            e.rows[r][c] = to_int(a(r, c));
        }
        for (std::size_t c = 0; c < extra; ++c) {
            e.rows[r][a.cols() + c] = to_int((*b)(r, c));
        }
    }

    auto& m = e.rows;
    Integer previous = 1;
    Integer t;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < m.size(); ++c) {
        std::size_t p = pivot_row;
        while (p < m.size() && sgn(m[p][c]) == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[pivot_row]);
        const Integer& pivot = m[pivot_row][c];
        for (std::size_t i = pivot_row + 1; i < m.size(); ++i) {
            const Integer lead = m[i][c];
            for (std::size_t j = c + 1; j < e.width; ++j) {
                t = pivot * m[i][j];
                t -= lead * m[pivot_row][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            m[i][c] = 0;
        }
        previous = pivot;
        e.pivots.push_back(c);
        ++pivot_row;
    }
    return e;
}

// Solution of the echelon system with right-hand side column `rhs`
// (npos for zero) and the free variable `free_col` (npos for none) set to 1.
RationalVector back_substitute(const Echelon& e, std::size_t unknowns, std::size_t rhs,
                               std::size_t free_col)
{
    RationalVector x(unknowns);
    if (free_col < unknowns) {
        x[free_col] = 1;
    }
    for (std::size_t r = e.rank(); r-- > 0;) {
        const auto& row = e.rows[r];
        const std::size_t p = e.pivots[r];
        Rational acc = rhs < e.width ? Rational(row[rhs]) : Rational(0);
        for (std::size_t j = p + 1; j < unknowns; ++j) {
            if (sgn(x[j]) != 0 && sgn(row[j]) != 0) {
                acc -= Rational(row[j]) * x[j];
            }
        }
        x[p] = acc / Rational(row[p]);
    }
    return x;
}

bool rhs_consistent(const Echelon& e, std::size_t col)
{
    for (std::size_t r = e.rank(); r < e.rows.size(); ++r) {
        if (sgn(e.rows[r][col]) != 0) {
            return false;
        }
    }
    return true;
}

RationalMatrix as_column(std::span<const Rational> v)
{
    return RationalMatrix(v.size(), 1, std::vector<Rational>(v.begin(), v.end()));
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return eliminate(m, nullptr).rank(); }

SolveResult solve(const RationalMatrix& m, std::span<const Rational> b)
{
    if (b.size() != m.rows()) {
        throw PreconditionError("solve: right-hand side has " + std::to_string(b.size()) +
                                " entries, matrix has " + std::to_string(m.rows()) + " rows");
    }
    const RationalMatrix rhs = as_column(b);
    const Echelon e = eliminate(m, &rhs);
    SolveResult result;
    result.null_dimension = m.cols() - e.rank();
    if (!rhs_consistent(e, m.cols())) {
        result.status = SolveResult::Status::inconsistent;
        return result;
    }
    result.status = result.null_dimension == 0 ? SolveResult::Status::unique
                                               : SolveResult::Status::underdetermined;
    result.solution = back_substitute(e, m.cols(), m.cols(), m.cols());
    return result;
}

std::vector<RationalVector> null_space(const RationalMatrix& m)
{
    const Echelon e = eliminate(m, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) {
            basis.push_back(back_substitute(e, m.cols(), e.width, c));
        }
    }
    return basis;
}

bool in_column_span(const RationalMatrix& m, std::span<const Rational> v)
{
    if (v.size() != m.rows()) {
        throw PreconditionError("in_column_span: vector length does not match row count");
    }
    const RationalMatrix rhs = as_column(v);
    return rhs_consistent(eliminate(m, &rhs), m.cols());
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw PreconditionError("inverse: matrix is not square");
    }
    const std::size_t n = m.rows();
    const RationalMatrix id = RationalMatrix::identity(n);
    const Echelon e = eliminate(m, &id);
    if (e.rank() != n) {
        throw PreconditionError("inverse: matrix is singular");
    }
    RationalMatrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const RationalVector x = back_substitute(e, n, n + c, n);
        for (std::size_t r = 0; r < n; ++r) {
            out(r, c) = x[r];
        }
    }
    return out;
}

}  // namespace maxcurve
