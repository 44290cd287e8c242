#pragma once

#include <cstdint>
#include <vector>

#include "qcldpc/circulant.hpp"
#include "qcldpc/exponent_matrix.hpp"

namespace qcldpc {

/// Binary matrix stored as sorted column indices per row.
class SparseBinaryMatrix {
public:
    SparseBinaryMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), row_cols_(static_cast<std::size_t>(rows)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dims");
    }

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    const std::vector<std::int64_t>& row(std::int64_t r) const { return row_cols_.at(r); }
    std::vector<std::int64_t>& row(std::int64_t r) { return row_cols_.at(r); }

    /// Columns must be inserted in increasing order per row.
    void push_entry(std::int64_t r, std::int64_t c) {
        auto& cols = row_cols_.at(r);
        if (c < 0 || c >= cols_) throw std::out_of_range("column out of range");
        if (!cols.empty() && cols.back() >= c)
            throw std::invalid_argument("row columns must be strictly increasing");
        cols.push_back(c);
    }

    std::int64_t entry_count() const {
        std::int64_t n = 0;
        for (const auto& r : row_cols_) n += static_cast<std::int64_t>(r.size());
        return n;
    }

    std::vector<std::int64_t> column_weights() const {
        std::vector<std::int64_t> w(static_cast<std::size_t>(cols_), 0);
        for (const auto& r : row_cols_)
            for (std::int64_t c : r) ++w[static_cast<std::size_t>(c)];
        return w;
    }

    bool operator==(const SparseBinaryMatrix&) const = default;

private:
    std::int64_t rows_, cols_;
    std::vector<std::vector<std::int64_t>> row_cols_;
};

/// Expand the exponent matrix into the explicit n_c*N x n_v*N binary matrix.
/// Shift convention: x^a is the identity shifted a positions to the left,
/// i.e. block entry (r, (r+a) mod N) = 1. alist exports depend on this.
SparseBinaryMatrix lift(const ExponentMatrix& e, std::int64_t n);

/// H(x) as a block circulant matrix (one monomial per block).
BlockCirculantMatrix h_blocks(const ExponentMatrix& e, std::int64_t n);

/// The n_c x n_c cross-correlation matrix C_H: off-diagonal block (i,j) is
/// sum_l x^{E[i][l]-E[j][l]}, diagonal blocks are zero.
BlockCirculantMatrix compute_c_blocks(const ExponentMatrix& e, std::int64_t n);

/// B_n(H) = (H H^T)^{floor(n/2)} H^{n mod 2}. B_1 = H, B_2 = H H^T, ...
BlockCirculantMatrix compute_bn(const ExponentMatrix& e, std::int64_t n, int power);

}  // namespace qcldpc
