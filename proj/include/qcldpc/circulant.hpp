#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcldpc {

/// Block size of a circulant lift: a finite N, or "free" while exponents are
/// still being chosen over the integers (no reduction applied).
class LiftingDegree {
public:
    static LiftingDegree finite(std::int64_t n) {
        if (n < 1) throw std::invalid_argument("lifting degree must be >= 1");
        return LiftingDegree(n);
    }
    static LiftingDegree free() { return LiftingDegree(0); }

    bool is_finite() const { return n_ != 0; }
    std::int64_t value() const {
        if (!is_finite()) throw std::logic_error("free lifting degree has no value");
        return n_;
    }
    bool operator==(const LiftingDegree&) const = default;

private:
    explicit LiftingDegree(std::int64_t n) : n_(n) {}
    std::int64_t n_ = 0;
};

/// A sum of circulant permutation matrices x^e with positive integer
/// multiplicities, stored as the exponent multiset. For a finite degree N
/// exponents live in [0, N); for the free degree they are arbitrary integers.
class CirculantSum {
public:
    explicit CirculantSum(LiftingDegree degree) : degree_(degree) {}

    static CirculantSum monomial(LiftingDegree degree, std::int64_t exponent,
                                 std::int64_t multiplicity = 1) {
        CirculantSum s(degree);
        s.add_term(exponent, multiplicity);
        return s;
    }

    const LiftingDegree& degree() const { return degree_; }
    const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t reduce(std::int64_t e) const {
        if (!degree_.is_finite()) return e;
        std::int64_t n = degree_.value();
        std::int64_t r = e % n;
        return r < 0 ? r + n : r;
    }

    /// Add `multiplicity` copies of x^exponent (may be negative to cancel).
    void add_term(std::int64_t exponent, std::int64_t multiplicity = 1) {
        if (multiplicity == 0) return;
        std::int64_t e = reduce(exponent);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
            terms_.emplace(e, multiplicity);
        } else {
            it->second += multiplicity;
            if (it->second < 0) throw std::invalid_argument("negative multiplicity");
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::int64_t multiplicity_of(std::int64_t exponent) const {
        auto it = terms_.find(reduce(exponent));
        return it == terms_.end() ? 0 : it->second;
    }

    std::int64_t total_multiplicity() const {
        std::int64_t t = 0;
        for (const auto& [e, m] : terms_) t += m;
        return t;
    }

    bool operator==(const CirculantSum&) const = default;

    std::string to_string() const;

private:
    LiftingDegree degree_;
    std::map<std::int64_t, std::int64_t> terms_;
};

CirculantSum operator+(const CirculantSum& a, const CirculantSum& b);
// Circulant product: exponents add mod N. Finite degree only.
CirculantSum operator*(const CirculantSum& a, const CirculantSum& b);
// (x^e)^T = x^{N-e}. Finite degree only.
CirculantSum transpose(const CirculantSum& a);

/// Grid of circulant sums sharing one lifting degree. Missing terms are the
/// zero sum, so the grid is always fully populated.
class BlockCirculantMatrix {
public:
    BlockCirculantMatrix(int rows, int cols, LiftingDegree degree)
        : rows_(rows), cols_(cols), degree_(degree),
          blocks_(static_cast<std::size_t>(rows) * cols, CirculantSum(degree)) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("block matrix dims must be positive");
    }

    static BlockCirculantMatrix identity(int n, LiftingDegree degree) {
        BlockCirculantMatrix m(n, n, degree);
        for (int i = 0; i < n; ++i) m.at(i, i).add_term(0);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const LiftingDegree& degree() const { return degree_; }

    CirculantSum& at(int r, int c) { return blocks_[index(r, c)]; }
    const CirculantSum& at(int r, int c) const { return blocks_[index(r, c)]; }

    BlockCirculantMatrix transposed() const;

    bool operator==(const BlockCirculantMatrix&) const = default;

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("block index out of range");
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_, cols_;
    LiftingDegree degree_;
    std::vector<CirculantSum> blocks_;
};

BlockCirculantMatrix operator+(const BlockCirculantMatrix& a, const BlockCirculantMatrix& b);
BlockCirculantMatrix operator*(const BlockCirculantMatrix& a, const BlockCirculantMatrix& b);

/// m (triangle) n = 1 iff m >= 2 and n = 0.
inline int triangle_scalar(std::int64_t m, std::int64_t n) {
    return (m >= 2 && n == 0) ? 1 : 0;
}

/// First position where M (triangle) P is nonzero: an exponent with
/// multiplicity >= 2 in a block of M while absent from the same block of P.
struct TriangleViolation {
    int block_row = 0;
    int block_col = 0;
    std::int64_t exponent = 0;
    std::int64_t multiplicity = 0;
};

std::optional<TriangleViolation> triangle_violation(const BlockCirculantMatrix& m,
                                                    const BlockCirculantMatrix& p);

/// True iff M (triangle) P = 0, i.e. no violation anywhere.
inline bool triangle_is_zero(const BlockCirculantMatrix& m, const BlockCirculantMatrix& p) {
    return !triangle_violation(m, p).has_value();
}

}  // namespace qcldpc
