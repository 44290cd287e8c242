#include "qcldpc/gf2.hpp"

namespace qcldpc {

namespace {

struct BitRows {
    std::int64_t cols;
    std::size_t words;
    std::vector<std::uint64_t> data;  // rows * words

    BitRows(std::int64_t rows, std::int64_t cols_)
        : cols(cols_), words((static_cast<std::size_t>(cols_) + 63) / 64),
          data(static_cast<std::size_t>(rows) * words, 0) {}

    std::uint64_t* row(std::size_t r) { return data.data() + r * words; }
    void set(std::size_t r, std::int64_t c) {
        row(r)[static_cast<std::size_t>(c) >> 6] |= 1ull << (c & 63);
    }
    bool get(std::size_t r, std::int64_t c) {
        return (row(r)[static_cast<std::size_t>(c) >> 6] >> (c & 63)) & 1u;
    }
    void xor_rows(std::size_t dst, std::size_t src) {
        std::uint64_t* d = row(dst);
        const std::uint64_t* s = row(src);
        for (std::size_t w = 0; w < words; ++w) d[w] ^= s[w];
    }
};

}  // namespace

std::int64_t gf2_rank(const SparseBinaryMatrix& h) {
    BitRows m(h.rows(), h.cols());
    for (std::int64_t r = 0; r < h.rows(); ++r)
        for (std::int64_t c : h.row(r)) m.set(static_cast<std::size_t>(r), c);

    std::int64_t rank = 0;
    std::size_t rows = static_cast<std::size_t>(h.rows());
    for (std::int64_t c = 0; c < h.cols() && rank < h.rows(); ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != static_cast<std::size_t>(rank))
            for (std::size_t w = 0; w < m.words; ++w)
                std::swap(m.row(pivot)[w], m.row(static_cast<std::size_t>(rank))[w]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != static_cast<std::size_t>(rank) && m.get(r, c))
                m.xor_rows(r, static_cast<std::size_t>(rank));
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::uint8_t>> gf2_nullspace(const SparseBinaryMatrix& h) {
    const std::int64_t rows = h.rows(), cols = h.cols();
    BitRows m(rows, cols);
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c : h.row(r)) m.set(static_cast<std::size_t>(r), c);

    // Reduced row echelon form, tracking pivot columns.
    std::vector<std::int64_t> pivot_col;
    std::int64_t rank = 0;
    for (std::int64_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = static_cast<std::size_t>(rows);
        for (std::size_t r = static_cast<std::size_t>(rank); r < static_cast<std::size_t>(rows); ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot == static_cast<std::size_t>(rows)) continue;
        if (pivot != static_cast<std::size_t>(rank))
            for (std::size_t w = 0; w < m.words; ++w)
                std::swap(m.row(pivot)[w], m.row(static_cast<std::size_t>(rank))[w]);
        for (std::size_t r = 0; r < static_cast<std::size_t>(rows); ++r)
            if (r != static_cast<std::size_t>(rank) && m.get(r, c))
                m.xor_rows(r, static_cast<std::size_t>(rank));
        pivot_col.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (std::int64_t c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<std::uint8_t>> basis;
    for (std::int64_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(fc)] = 1;
        for (std::int64_t r = 0; r < rank; ++r)
            if (m.get(static_cast<std::size_t>(r), fc))
                v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qcldpc
