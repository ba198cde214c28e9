#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "cg3/linalg.hpp"

namespace cg3 {

/// Coordinate-list matrix with labelled rows and columns; entries are kept
/// sorted by (row, col) with no explicit zeros.
template <class R>
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::tuple<std::size_t, std::size_t, R>> entries;

    static SparseMatrix from_dense(const Matrix<R>& dense, std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels) {
        SparseMatrix out;
        out.rows = dense.size();
        out.cols = out.rows ? dense[0].size() : 0;
        out.row_labels = std::move(row_labels);
        out.col_labels = std::move(col_labels);
        for (std::size_t i = 0; i < out.rows; ++i)
            for (std::size_t j = 0; j < out.cols; ++j)
                if (!dense[i][j].is_zero()) out.entries.emplace_back(i, j, dense[i][j]);
        return out;
    }

    Matrix<R> to_dense(const R& ring) const {
        Matrix<R> out(rows, Row<R>(cols, ring.zero_like()));
        for (const auto& [i, j, v] : entries) out[i][j] = v;
        return out;
    }

    void sort_entries() {
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            return std::get<1>(a) < std::get<1>(b);
        });
    }

    std::size_t rank(const R& ring) const { return rank_of(to_dense(ring)); }
};

}  // namespace cg3
