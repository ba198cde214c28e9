#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cg3 {

template <class R>
using Row = std::vector<R>;
template <class R>
using Matrix = std::vector<Row<R>>;

struct EchelonInfo {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form in place. Pivot choice is the first row with a
/// nonzero entry, so the result is deterministic for a given input.
template <class R>
EchelonInfo rref_in_place(Matrix<R>& m) {
    EchelonInfo info;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t sel = pr;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        const R inv = m[pr][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[pr][j] = m[pr][j] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][col].is_zero()) continue;
            const R factor = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= factor * m[pr][j];
        }
        info.pivot_cols.push_back(col);
        ++pr;
    }
    info.rank = pr;
    return info;
}

template <class R>
std::size_t rank_of(Matrix<R> m) {
    return rref_in_place(m).rank;
}

/// Basis of the null space of an (arbitrary) matrix with ncols columns, one
/// vector per free column in ascending column order.
template <class R>
Matrix<R> kernel_of(Matrix<R> m, std::size_t ncols, const R& ring) {
    for (const auto& row : m)
        if (row.size() != ncols) throw std::invalid_argument("kernel_of: ragged matrix");
    const EchelonInfo info = rref_in_place(m);
    std::vector<bool> is_pivot(ncols, false);
    for (const std::size_t c : info.pivot_cols) is_pivot[c] = true;
    Matrix<R> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Row<R> v(ncols, ring.zero_like());
        v[f] = ring.one_like();
        for (std::size_t k = 0; k < info.rank; ++k) {
            const R& coef = m[k][f];
            if (!coef.is_zero()) v[info.pivot_cols[k]] = -coef;
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Canonical reducer modulo a row span: keeps the span in reduced echelon
/// form so reduce() is linear and idempotent.
template <class R>
class RowSpace {
public:
    RowSpace(Matrix<R> gens, std::size_t ncols, const R& ring)
        : ncols_(ncols), ring_(ring) {
        for (const auto& row : gens)
            if (row.size() != ncols) throw std::invalid_argument("RowSpace: ragged generators");
        const EchelonInfo info = rref_in_place(gens);
        pivots_ = info.pivot_cols;
        rows_.assign(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(info.rank));
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

    Row<R> reduce(Row<R> v) const {
        if (v.size() != ncols_) throw std::invalid_argument("RowSpace: wrong vector length");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const R c = v[pivots_[k]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ncols_; ++j) v[j] -= c * rows_[k][j];
        }
        return v;
    }

    bool contains(const Row<R>& v) const {
        const Row<R> r = reduce(v);
        for (const R& c : r)
            if (!c.is_zero()) return false;
        return true;
    }

private:
    std::size_t ncols_;
    R ring_;
    Matrix<R> rows_;
    std::vector<std::size_t> pivots_;
};

/// Solves A x = b for a fixed A and many right-hand sides. Precomputes the
/// reduced form of [A | I]; free variables are set to zero.
template <class R>
class LinearSolver {
public:
    LinearSolver(const Matrix<R>& a, const R& ring) : ring_(ring) {
        nrows_ = a.size();
        ncols_ = nrows_ ? a[0].size() : 0;
        Matrix<R> aug = a;
        for (std::size_t i = 0; i < nrows_; ++i) {
            if (aug[i].size() != ncols_) throw std::invalid_argument("LinearSolver: ragged matrix");
            for (std::size_t j = 0; j < nrows_; ++j)
                aug[i].push_back(i == j ? ring.one_like() : ring.zero_like());
        }
        // eliminate using only the A-part columns; the I-part records the
        // row operations, so reduced[i] = sum_k transform[i][k] * a[k]
        std::size_t pr = 0;
        for (std::size_t col = 0; col < ncols_ && pr < nrows_; ++col) {
            std::size_t sel = pr;
            while (sel < nrows_ && aug[sel][col].is_zero()) ++sel;
            if (sel == nrows_) continue;
            std::swap(aug[pr], aug[sel]);
            const R inv = aug[pr][col].inverse();
            for (std::size_t j = 0; j < aug[pr].size(); ++j) aug[pr][j] = aug[pr][j] * inv;
            for (std::size_t r = 0; r < nrows_; ++r) {
                if (r == pr || aug[r][col].is_zero()) continue;
                const R factor = aug[r][col];
                for (std::size_t j = 0; j < aug[r].size(); ++j) aug[r][j] -= factor * aug[pr][j];
            }
            pivots_.push_back(col);
            ++pr;
        }
        rank_ = pr;
        transform_.resize(nrows_);
        for (std::size_t i = 0; i < nrows_; ++i)
            transform_[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(ncols_),
                                 aug[i].end());
    }

    std::size_t rank() const { return rank_; }

    std::optional<Row<R>> solve(const Row<R>& b) const {
        if (b.size() != nrows_) throw std::invalid_argument("LinearSolver: wrong rhs length");
        Row<R> y;
        y.reserve(nrows_);
        for (std::size_t i = 0; i < nrows_; ++i) {
            R acc = ring_.zero_like();
            for (std::size_t k = 0; k < nrows_; ++k) {
                if (transform_[i][k].is_zero() || b[k].is_zero()) continue;
                acc += transform_[i][k] * b[k];
            }
            y.push_back(std::move(acc));
        }
        for (std::size_t i = rank_; i < nrows_; ++i)
            if (!y[i].is_zero()) return std::nullopt;
        Row<R> x(ncols_, ring_.zero_like());
        for (std::size_t k = 0; k < rank_; ++k) x[pivots_[k]] = y[k];
        return x;
    }

private:
    std::size_t nrows_ = 0, ncols_ = 0, rank_ = 0;
    R ring_;
    Matrix<R> transform_;
    std::vector<std::size_t> pivots_;
};

}  // namespace cg3
