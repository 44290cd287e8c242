#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

SparseBinaryMatrix lift(const ExponentMatrix& e, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("lifting degree must be >= 1");
    const int nc = e.row_count(), nv = e.col_count();
    SparseBinaryMatrix h(static_cast<std::int64_t>(nc) * n, static_cast<std::int64_t>(nv) * n);
    for (int br = 0; br < nc; ++br) {
        for (std::int64_t p = 0; p < n; ++p) {
            std::int64_t row = static_cast<std::int64_t>(br) * n + p;
            for (int bc = 0; bc < nv; ++bc) {
                std::int64_t a = e.at(br, bc) % n;
                if (a < 0) a += n;
                h.push_entry(row, static_cast<std::int64_t>(bc) * n + (p + a) % n);
            }
        }
    }
    return h;
}

BlockCirculantMatrix h_blocks(const ExponentMatrix& e, std::int64_t n) {
    auto deg = LiftingDegree::finite(n);
    BlockCirculantMatrix h(e.row_count(), e.col_count(), deg);
    for (int r = 0; r < e.row_count(); ++r)
        for (int c = 0; c < e.col_count(); ++c) h.at(r, c).add_term(e.at(r, c));
    return h;
}

BlockCirculantMatrix compute_c_blocks(const ExponentMatrix& e, std::int64_t n) {
    auto deg = LiftingDegree::finite(n);
    const int nc = e.row_count(), nv = e.col_count();
    BlockCirculantMatrix c(nc, nc, deg);
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
            if (i == j) continue;
            for (int l = 0; l < nv; ++l) c.at(i, j).add_term(e.at(i, l) - e.at(j, l));
        }
    return c;
}

BlockCirculantMatrix compute_bn(const ExponentMatrix& e, std::int64_t n, int power) {
    if (power < 0) throw std::invalid_argument("B_n power must be >= 0");
    auto deg = LiftingDegree::finite(n);
    if (power == 0) return BlockCirculantMatrix::identity(e.row_count(), deg);
    BlockCirculantMatrix h = h_blocks(e, n);
    if (power == 1) return h;
    BlockCirculantMatrix hht = h * h.transposed();
    BlockCirculantMatrix acc = hht;
    for (int i = 2; i + 1 < power; i += 2) acc = acc * hht;
    return (power % 2 == 0) ? acc : acc * h;
}

}  // namespace qcldpc
