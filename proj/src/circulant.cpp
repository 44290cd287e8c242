#include "qcldpc/circulant.hpp"

#include <sstream>

namespace qcldpc {

namespace {

void require_same_degree(const LiftingDegree& a, const LiftingDegree& b) {
    if (!(a == b)) throw std::invalid_argument("lifting degree mismatch");
}

}  // namespace

std::string CirculantSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, m] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (m != 1) out << m << "*";
        out << "x^" << e;
    }
    return out.str();
}

CirculantSum operator+(const CirculantSum& a, const CirculantSum& b) {
    require_same_degree(a.degree(), b.degree());
    CirculantSum r = a;
    for (const auto& [e, m] : b.terms()) r.add_term(e, m);
    return r;
}

CirculantSum operator*(const CirculantSum& a, const CirculantSum& b) {
    require_same_degree(a.degree(), b.degree());
    if (!a.degree().is_finite())
        throw std::invalid_argument("circulant product requires a finite lifting degree");
    CirculantSum r(a.degree());
    for (const auto& [ea, ma] : a.terms())
        for (const auto& [eb, mb] : b.terms())
            r.add_term(ea + eb, ma * mb);
    return r;
}

CirculantSum transpose(const CirculantSum& a) {
    if (!a.degree().is_finite())
        throw std::invalid_argument("circulant transpose requires a finite lifting degree");
    CirculantSum r(a.degree());
    for (const auto& [e, m] : a.terms()) r.add_term(-e, m);
    return r;
}

BlockCirculantMatrix BlockCirculantMatrix::transposed() const {
    BlockCirculantMatrix t(cols_, rows_, degree_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = transpose(at(r, c));
    return t;
}

BlockCirculantMatrix operator+(const BlockCirculantMatrix& a, const BlockCirculantMatrix& b) {
    require_same_degree(a.degree(), b.degree());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("block matrix dimension mismatch");
    BlockCirculantMatrix r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

BlockCirculantMatrix operator*(const BlockCirculantMatrix& a, const BlockCirculantMatrix& b) {
    require_same_degree(a.degree(), b.degree());
    if (a.cols() != b.rows())
        throw std::invalid_argument("block matrix inner dimension mismatch");
    if (!a.degree().is_finite())
        throw std::invalid_argument("block product requires a finite lifting degree");
    BlockCirculantMatrix r(a.rows(), b.cols(), a.degree());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const CirculantSum& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const CirculantSum& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                for (const auto& [ea, ma] : aik.terms())
                    for (const auto& [eb, mb] : bkj.terms())
                        r.at(i, j).add_term(ea + eb, ma * mb);
            }
        }
    return r;
}

std::optional<TriangleViolation> triangle_violation(const BlockCirculantMatrix& m,
                                                    const BlockCirculantMatrix& p) {
    if (m.rows() != p.rows() || m.cols() != p.cols())
        throw std::invalid_argument("triangle: dimension mismatch");
    require_same_degree(m.degree(), p.degree());
    if (!m.degree().is_finite())
        throw std::invalid_argument("triangle requires a finite lifting degree");
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const CirculantSum& mb = m.at(r, c);
            const CirculantSum& pb = p.at(r, c);
            for (const auto& [e, mult] : mb.terms())
                if (mult >= 2 && pb.multiplicity_of(e) == 0)
                    return TriangleViolation{r, c, e, mult};
        }
    return std::nullopt;
}

}  // namespace qcldpc
