#include "qcldpc/girth_conditions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace qcldpc {

std::int64_t SetElement::eval(const ExponentMatrix& e) const {
    std::int64_t v = 0;
    for (const SymTerm& t : terms) v += static_cast<std::int64_t>(t.coeff) * e.at(t.row, t.col);
    return v;
}

std::optional<std::int64_t> SetElement::eval_partial(
    const ExponentMatrix& e, const std::function<bool(int, int)>& filled) const {
    std::int64_t v = 0;
    for (const SymTerm& t : terms) {
        if (!filled(t.row, t.col)) return std::nullopt;
        v += static_cast<std::int64_t>(t.coeff) * e.at(t.row, t.col);
    }
    return v;
}

std::string SetElement::to_string() const {
    if (terms.empty()) return "0";
    static const char* row_name[] = {"r", "i", "j", "k"};
    std::ostringstream out;
    bool first = true;
    for (const SymTerm& t : terms) {
        int c = t.coeff;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        int a = c < 0 ? -c : c;
        if (a != 1) out << a << "*";
        if (t.row >= 0 && t.row <= 3)
            out << row_name[t.row] << "_" << (t.col + 1);
        else
            out << "e[" << t.row << "][" << t.col + 1 << "]";
    }
    return out.str();
}

std::string SetCollision::describe() const {
    std::ostringstream out;
    out << set_name << ": " << lhs.to_string() << " = " << rhs.to_string() << " = " << value;
    return out.str();
}

namespace {

class ElementBuilder {
public:
    // Append E[a][t] - E[b][t].
    ElementBuilder& diff(int a, int b, int t) {
        add(a, t, +1);
        add(b, t, -1);
        return *this;
    }
    ElementBuilder& term(int row, int t, int coeff) {
        add(row, t, coeff);
        return *this;
    }
    SetElement build() const {
        SetElement e;
        for (const auto& t : terms_)
            if (t.coeff != 0) e.terms.push_back(t);
        return e;
    }

private:
    void add(int row, int col, int coeff) {
        for (auto& t : terms_) {
            if (t.row == row && t.col == col) {
                t.coeff += coeff;
                return;
            }
        }
        terms_.push_back(SymTerm{row, col, coeff});
    }
    std::vector<SymTerm> terms_;
};

std::string set_label(const char* level, const std::string& detail) {
    return std::string(level) + ":" + detail;
}

// girth > 4: for every row pair, the per-column differences are distinct.
std::vector<DistinctnessSet> sets_gt4(int n_c, int n_v) {
    std::vector<DistinctnessSet> sets;
    for (int a = 0; a < n_c; ++a)
        for (int b = a + 1; b < n_c; ++b) {
            DistinctnessSet s;
            s.name = set_label("g>4", "rows(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
            for (int l = 0; l < n_v; ++l)
                s.elements.push_back(ElementBuilder().diff(a, b, l).build());
            sets.push_back(std::move(s));
        }
    return sets;
}

// girth > 6: per block column m and block row a, the entries of C_H*H that
// must stay below multiplicity 2 outside the support of H. Elements are
// D_ab(n) + (E[b][m] - E[0][m]) for b != a, n != m.
std::vector<DistinctnessSet> sets_gt6(int n_v, bool with_rule_family) {
    std::vector<DistinctnessSet> sets;
    for (int m = 0; m < n_v; ++m) {
        for (int a = 0; a < 4; ++a) {
            DistinctnessSet s;
            s.name = set_label("g>6", "col m=" + std::to_string(m + 1) + " row " + std::to_string(a + 1));
            for (int b = 0; b < 4; ++b) {
                if (b == a) continue;
                for (int n = 0; n < n_v; ++n) {
                    if (n == m) continue;
                    ElementBuilder eb;
                    eb.diff(a, b, n);
                    if (b != 0) eb.diff(b, 0, m);
                    s.elements.push_back(eb.build());
                }
            }
            if (with_rule_family && a != 0) {
                // Extended fourth element family of the per-column sets: for the
                // leading row a with partner rows (b, c) in row order,
                //   E[a][p] + (E[b][n]-E[b][m]) + (E[c][m]-E[c][p]).
                int b = 0, c = 0;
                if (a == 1) { b = 2; c = 3; }
                if (a == 2) { b = 1; c = 3; }
                if (a == 3) { b = 1; c = 2; }
                for (int n = 0; n < n_v; ++n) {
                    if (n == m) continue;
                    for (int p = 0; p < n_v; ++p) {
                        if (p == m) continue;
                        ElementBuilder eb;
                        eb.diff(a, 0, p).diff(b, 0, n).term(b, m, -1).term(0, m, +1)
                          .diff(c, 0, m).term(c, p, -1).term(0, p, +1);
                        s.elements.push_back(eb.build());
                    }
                }
            }
            sets.push_back(std::move(s));
        }
    }
    return sets;
}

// girth > 8: the sixteen families. Four "diagonal" sets (one per row) of
// walk differences D_ac(u) - D_ac(w), and twelve ordered-row-pair sets of
// walk sums D_ac(u) + D_cb(w), all over ordered column pairs u != w.
std::vector<DistinctnessSet> sets_gt8(int n_v) {
    std::vector<DistinctnessSet> sets;
    for (int a = 0; a < 4; ++a) {
        DistinctnessSet s;
        s.name = set_label("g>8", "diag row " + std::to_string(a + 1));
        for (int c = 0; c < 4; ++c) {
            if (c == a) continue;
            for (int u = 0; u < n_v; ++u)
                for (int w = 0; w < n_v; ++w) {
                    if (u == w) continue;
                    s.elements.push_back(ElementBuilder().diff(a, c, u).diff(c, a, w).build());
                }
        }
        sets.push_back(std::move(s));
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            DistinctnessSet s;
            s.name = set_label("g>8", "rows(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
            for (int c = 0; c < 4; ++c) {
                if (c == a || c == b) continue;
                for (int u = 0; u < n_v; ++u)
                    for (int w = 0; w < n_v; ++w) {
                        if (u == w) continue;
                        s.elements.push_back(ElementBuilder().diff(a, c, u).diff(c, b, w).build());
                    }
            }
            sets.push_back(std::move(s));
        }
    return sets;
}

// girth > 10: per block column l and block row a, entries of C_H^2*H that
// must stay below multiplicity 2 outside the support of H + C_H*H. Elements
// are D_ac(u) + D_cb(w) + (E[b][l] - E[0][l]) over all rows b, rows c not
// in {a,b}, and column pairs u != w with w != l.
std::vector<DistinctnessSet> sets_gt10(int n_v) {
    std::vector<DistinctnessSet> sets;
    for (int l = 0; l < n_v; ++l)
        for (int a = 0; a < 4; ++a) {
            DistinctnessSet s;
            s.name = set_label("g>10", "col l=" + std::to_string(l + 1) + " row " + std::to_string(a + 1));
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    if (c == a || c == b) continue;
                    for (int u = 0; u < n_v; ++u)
                        for (int w = 0; w < n_v; ++w) {
                            if (u == w || w == l) continue;
                            ElementBuilder eb;
                            eb.diff(a, c, u).diff(c, b, w);
                            if (b != 0) eb.diff(b, 0, l);
                            s.elements.push_back(eb.build());
                        }
                }
            sets.push_back(std::move(s));
        }
    return sets;
}

}  // namespace

std::vector<DistinctnessSet> girth_sets(int level, int n_c, int n_v) {
    if (level == 6) return sets_gt4(n_c, n_v);
    if (n_c != 4) throw std::invalid_argument("girth conditions beyond level 6 require n_c = 4");
    switch (level) {
        case 8: return sets_gt6(n_v, false);
        case 10: return sets_gt8(n_v);
        case 12: return sets_gt10(n_v);
        default: throw std::invalid_argument("girth level must be one of 6, 8, 10, 12");
    }
}

std::vector<DistinctnessSet> girth_sets_g8_rules(int n_v) { return sets_gt6(n_v, true); }

namespace {

std::int64_t reduce_mod(std::int64_t v, const LiftingDegree& deg) {
    if (!deg.is_finite()) return v;
    std::int64_t n = deg.value();
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

std::optional<SetCollision> find_collision(std::span<const DistinctnessSet> sets,
                                           const ExponentMatrix& e, const LiftingDegree& deg) {
    std::unordered_map<std::int64_t, int> seen;
    for (const auto& set : sets) {
        seen.clear();
        for (int i = 0; i < static_cast<int>(set.elements.size()); ++i) {
            std::int64_t v = reduce_mod(set.elements[i].eval(e), deg);
            auto [it, fresh] = seen.emplace(v, i);
            if (!fresh)
                return SetCollision{set.name, set.elements[it->second], set.elements[i], v};
        }
    }
    return std::nullopt;
}

std::optional<SetCollision> find_collision_partial(
    std::span<const DistinctnessSet> sets, const ExponentMatrix& e, const LiftingDegree& deg,
    const std::function<bool(int, int)>& filled) {
    std::unordered_map<std::int64_t, int> seen;
    for (const auto& set : sets) {
        seen.clear();
        for (int i = 0; i < static_cast<int>(set.elements.size()); ++i) {
            auto v = set.elements[i].eval_partial(e, filled);
            if (!v) continue;
            std::int64_t r = reduce_mod(*v, deg);
            auto [it, fresh] = seen.emplace(r, i);
            if (!fresh)
                return SetCollision{set.name, set.elements[it->second], set.elements[i], r};
        }
    }
    return std::nullopt;
}

namespace {

// Solutions x of c*x = d (over Z, or mod N).
void append_solutions(std::int64_t c, std::int64_t d, const LiftingDegree& deg,
                      std::vector<std::int64_t>& out) {
    if (c < 0) {
        c = -c;
        d = -d;
    }
    if (c == 0) return;
    if (!deg.is_finite()) {
        if (d % c == 0) out.push_back(d / c);
        return;
    }
    std::int64_t n = deg.value();
    c %= n;
    if (c == 0) return;
    std::int64_t g = std::gcd(c, n);
    d = reduce_mod(d, deg);
    if (d % g != 0) return;
    // c/g is invertible mod n/g; invert via extended gcd.
    std::int64_t n2 = n / g, c2 = c / g, d2 = (d / g) % n2;
    std::int64_t t0 = 0, t1 = 1, r0 = n2, r1 = c2 % n2;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
    }
    std::int64_t inv = t0 % n2;
    if (inv < 0) inv += n2;
    std::int64_t x0 = (d2 * inv) % n2;
    for (std::int64_t t = 0; t < g; ++t) out.push_back(x0 + t * n2);
}

}  // namespace

std::vector<std::int64_t> solve_forbidden(std::span<const DistinctnessSet> sets,
                                          const ExponentMatrix& e, int row, int col,
                                          const LiftingDegree& deg,
                                          const std::function<bool(int, int)>& filled) {
    std::vector<std::int64_t> out;
    // Split each element into coeff * x + base, where x = E[row][col];
    // elements touching any other unfilled entry are unusable.
    struct Split {
        std::int64_t coeff;
        std::int64_t base;
    };
    std::vector<Split> usable;
    for (const auto& set : sets) {
        usable.clear();
        for (const auto& el : set.elements) {
            Split s{0, 0};
            bool ok = true;
            for (const SymTerm& t : el.terms) {
                if (t.row == row && t.col == col) {
                    s.coeff += t.coeff;
                } else if (filled(t.row, t.col)) {
                    s.base += static_cast<std::int64_t>(t.coeff) * e.at(t.row, t.col);
                } else {
                    ok = false;
                    break;
                }
            }
            if (ok) usable.push_back(s);
        }
        for (std::size_t i = 0; i < usable.size(); ++i) {
            if (usable[i].coeff == 0) continue;
            for (std::size_t j = 0; j < usable.size(); ++j) {
                if (i == j) continue;
                // usable[i] = usable[j]  =>  (ci-cj) x = bj - bi
                append_solutions(usable[i].coeff - usable[j].coeff,
                                 usable[j].base - usable[i].base, deg, out);
            }
        }
    }
    for (auto& v : out) v = reduce_mod(v, deg);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qcldpc
