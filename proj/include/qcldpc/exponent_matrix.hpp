#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qcldpc {

/// The n_c x n_v table of circulant shift exponents defining a polynomial
/// parity-check matrix H(x). The canonical construction shape has row 0 and
/// column 0 all zero (first block row and column are identities), but the
/// type itself allows arbitrary entries so shifted/random matrices can be
/// analyzed too.
class ExponentMatrix {
public:
    ExponentMatrix(int n_c, int n_v)
        : n_c_(n_c), n_v_(n_v), e_(static_cast<std::size_t>(n_c) * n_v, 0) {
        if (n_c < 1 || n_v < 1) throw std::invalid_argument("exponent matrix dims must be positive");
    }

    static ExponentMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        if (rows.empty() || rows[0].empty())
            throw std::invalid_argument("exponent matrix rows must be non-empty");
        ExponentMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int r = 0; r < m.n_c_; ++r) {
            if (static_cast<int>(rows[r].size()) != m.n_v_)
                throw std::invalid_argument("ragged exponent matrix rows");
            for (int c = 0; c < m.n_v_; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    int row_count() const { return n_c_; }
    int col_count() const { return n_v_; }

    std::int64_t& at(int r, int c) { return e_[index(r, c)]; }
    std::int64_t at(int r, int c) const { return e_[index(r, c)]; }

    /// Entry-wise reduction mod N (results in [0, N)).
    ExponentMatrix reduced_mod(std::int64_t n) const {
        if (n < 1) throw std::invalid_argument("modulus must be >= 1");
        ExponentMatrix m(n_c_, n_v_);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::int64_t r = e_[i] % n;
            m.e_[i] = r < 0 ? r + n : r;
        }
        return m;
    }

    /// Subtract row 0 from every row. Column scaling of the lift, so all
    /// girth properties are preserved; afterwards row 0 is zero.
    ExponentMatrix row_normalized() const {
        ExponentMatrix m(n_c_, n_v_);
        for (int r = 0; r < n_c_; ++r)
            for (int c = 0; c < n_v_; ++c) m.at(r, c) = at(r, c) - at(0, c);
        return m;
    }

    bool canonical_shape() const {
        for (int c = 0; c < n_v_; ++c)
            if (at(0, c) != 0) return false;
        for (int r = 0; r < n_c_; ++r)
            if (at(r, 0) != 0) return false;
        return true;
    }

    bool operator==(const ExponentMatrix&) const = default;

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= n_c_ || c < 0 || c >= n_v_)
            throw std::out_of_range("exponent matrix index out of range");
        return static_cast<std::size_t>(r) * n_v_ + c;
    }

    int n_c_, n_v_;
    std::vector<std::int64_t> e_;
};

}  // namespace qcldpc
