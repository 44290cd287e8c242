#include "qcldpc/construct.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "qcldpc/girth.hpp"

namespace qcldpc {

bool ForbiddenSet::contains(std::int64_t v) const {
    for (const auto& e : entries)
        if (e.value == v) return true;
    return false;
}

std::vector<std::int64_t> ForbiddenSet::values() const {
    std::vector<std::int64_t> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t ForbiddenSet::max_value() const {
    std::int64_t m = 0;
    for (const auto& e : entries) m = std::max(m, e.value);
    return m;
}

namespace {

std::int64_t reduce(std::int64_t v, const LiftingDegree& deg) {
    if (!deg.is_finite()) return v;
    std::int64_t n = deg.value();
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

// One published greedy rule: a value formula over prior columns m, n, p
// (arity says how many of them it reads) plus already-chosen slots of the
// current column.
struct Rule {
    const char* tag;
    int arity;
    std::int64_t (*value)(const ExponentMatrix&, int l, int m, int n, int p);
};

#define I(t) (e.at(1, (t)))
#define J(t) (e.at(2, (t)))
#define K(t) (e.at(3, (t)))

// Construction rules for girth > 4.
const Rule kG6RulesI[] = {
    {"i_m", 1, [](const ExponentMatrix& e, int, int m, int, int) { return I(m); }},
};
const Rule kG6RulesJ[] = {
    {"j_m", 1, [](const ExponentMatrix& e, int, int m, int, int) { return J(m); }},
    {"i_l+(j_m-i_m)", 1,
     [](const ExponentMatrix& e, int l, int m, int, int) { return I(l) + J(m) - I(m); }},
};
const Rule kG6RulesK[] = {
    {"k_m", 1, [](const ExponentMatrix& e, int, int m, int, int) { return K(m); }},
    {"i_l+(k_m-i_m)", 1,
     [](const ExponentMatrix& e, int l, int m, int, int) { return I(l) + K(m) - I(m); }},
    {"j_l+(k_m-j_m)", 1,
     [](const ExponentMatrix& e, int l, int m, int, int) { return J(l) + K(m) - J(m); }},
};

// Construction rules for girth > 6.
const Rule kG8RulesI[] = {
    {"i_m", 1, [](const ExponentMatrix& e, int, int m, int, int) { return I(m); }},
    {"(i_m-j_m)+j_n", 2,
     [](const ExponentMatrix& e, int, int m, int n, int) { return I(m) - J(m) + J(n); }},
    {"(j_m-k_m)+(k_n-j_n)+i_p", 3,
     [](const ExponentMatrix& e, int, int m, int n, int p) {
         return J(m) - K(m) + K(n) - J(n) + I(p);
     }},
    {"(i_m-k_m)+k_n", 2,
     [](const ExponentMatrix& e, int, int m, int n, int) { return I(m) - K(m) + K(n); }},
    {"(k_m-j_m)+(j_n-k_n)+i_p", 3,
     [](const ExponentMatrix& e, int, int m, int n, int p) {
         return K(m) - J(m) + J(n) - K(n) + I(p);
     }},
};
const Rule kG8RulesJ[] = {
    {"j_m", 1, [](const ExponentMatrix& e, int, int m, int, int) { return J(m); }},
    {"i_l+j_m-i_n", 2,
     [](const ExponentMatrix& e, int l, int m, int n, int) { return I(l) + J(m) - I(n); }},
    {"i_m+(j_n-i_n)", 2,
     [](const ExponentMatrix& e, int, int m, int n, int) { return I(m) + J(n) - I(n); }},
    {"(i_m-k_m)+(k_n-i_n)+j_p", 3,
     [](const ExponentMatrix& e, int, int m, int n, int p) {
         return I(m) - K(m) + K(n) - I(n) + J(p);
     }},
    {"i_l+(k_m-i_m)+(j_n-k_n)", 2,
     [](const ExponentMatrix& e, int l, int m, int n, int) {
         return I(l) + K(m) - I(m) + J(n) - K(n);
     }},
    {"(j_m-k_m)+k_n", 2,
     [](const ExponentMatrix& e, int, int m, int n, int) { return J(m) - K(m) + K(n); }},
    {"i_l+(j_m-k_m)+k_n-i_p", 3,
     [](const ExponentMatrix& e, int l, int m, int n, int p) {
         return I(l) + J(m) - K(m) + K(n) - I(p);
     }},
    {"2i_l+(k_m-i_m)+(j_n-k_n)-i_p", 3,
     [](const ExponentMatrix& e, int l, int m, int n, int p) {
         return 2 * I(l) + K(m) - I(m) + J(n) - K(n) - I(p);
     }},
};
const Rule kG8RulesK[] = {
    {"k_m", 1, [](const ExponentMatrix& e, int, int m, int, int) { return K(m); }},
    {"j_l+k_m-j_n", 2,
     [](const ExponentMatrix& e, int l, int m, int n, int) { return J(l) + K(m) - J(n); }},
    {"i_l+k_m-i_n", 2,
     [](const ExponentMatrix& e, int l, int m, int n, int) { return I(l) + K(m) - I(n); }},
    {"j_l+(i_m-j_m)+(i_n-k_n)", 2,
     [](const ExponentMatrix& e, int l, int m, int n, int) {
         return J(l) + I(m) - J(m) + I(n) - K(n);
     }},
    {"i_m+(k_n-i_n)", 2,
     [](const ExponentMatrix& e, int, int m, int n, int) { return I(m) + K(n) - I(n); }},
    {"j_l+i_m-j_n+(k_p-i_p)", 3,
     [](const ExponentMatrix& e, int l, int m, int n, int p) {
         return J(l) + I(m) - J(n) + K(p) - I(p);
     }},
    {"2j_l+(i_m-j_m)+(k_n-i_n)-j_p", 3,
     [](const ExponentMatrix& e, int l, int m, int n, int p) {
         return 2 * J(l) + I(m) - J(m) + K(n) - I(n) - J(p);
     }},
    {"(k_m-j_m)+j_n", 2,
     [](const ExponentMatrix& e, int, int m, int n, int) { return K(m) - J(m) + J(n); }},
    {"i_l+(j_m-i_m)+(k_n-j_n)", 2,
     [](const ExponentMatrix& e, int l, int m, int n, int) {
         return I(l) + J(m) - I(m) + K(n) - J(n);
     }},
    {"i_l+(k_m-j_m)+j_n-i_p", 3,
     [](const ExponentMatrix& e, int l, int m, int n, int p) {
         return I(l) + K(m) - J(m) + J(n) - I(p);
     }},
    {"2i_l+(j_m-i_m)+(k_n-j_n)-i_p", 3,
     [](const ExponentMatrix& e, int l, int m, int n, int p) {
         return 2 * I(l) + J(m) - I(m) + K(n) - J(n) - I(p);
     }},
};

#undef I
#undef J
#undef K

std::span<const Rule> rule_table(int girth_target, Slot slot) {
    if (girth_target == 6) {
        switch (slot) {
            case Slot::i: return kG6RulesI;
            case Slot::j: return kG6RulesJ;
            case Slot::k: return kG6RulesK;
        }
    }
    switch (slot) {
        case Slot::i: return kG8RulesI;
        case Slot::j: return kG8RulesJ;
        case Slot::k: return kG8RulesK;
    }
    throw std::logic_error("bad slot");
}

ForbiddenSet forbidden_from_rules(int girth_target, const ExponentMatrix& e, int col, Slot slot,
                                  const LiftingDegree& deg) {
    ForbiddenSet fs;
    for (const Rule& rule : rule_table(girth_target, slot)) {
        for (int m = 0; m < col; ++m) {
            if (rule.arity == 1) {
                fs.entries.push_back(
                    ForbiddenValue{reduce(rule.value(e, col, m, 0, 0), deg), rule.tag, {m, -1, -1}});
                continue;
            }
            for (int n = 0; n < col; ++n) {
                if (rule.arity == 2) {
                    fs.entries.push_back(ForbiddenValue{reduce(rule.value(e, col, m, n, 0), deg),
                                                        rule.tag,
                                                        {m, n, -1}});
                    continue;
                }
                for (int p = 0; p < col; ++p)
                    fs.entries.push_back(ForbiddenValue{reduce(rule.value(e, col, m, n, p), deg),
                                                        rule.tag,
                                                        {m, n, p}});
            }
        }
    }
    return fs;
}

std::vector<DistinctnessSet> solver_sets(int girth_target, int n_v) {
    std::vector<DistinctnessSet> sets = girth_sets(6, 4, n_v);
    auto append = [&sets](std::vector<DistinctnessSet> more) {
        for (auto& s : more) sets.push_back(std::move(s));
    };
    if (girth_target >= 10) append(girth_sets(10, 4, n_v));
    if (girth_target >= 12) append(girth_sets(12, 4, n_v));
    return sets;
}

ForbiddenSet forbidden_from_solver(int girth_target, const ExponentMatrix& e, int col, Slot slot,
                                   const LiftingDegree& deg) {
    // Solve the distinctness sets over the first col+1 columns for the new
    // symbol; conditions touching later columns do not exist yet.
    std::vector<DistinctnessSet> sets = solver_sets(girth_target, col + 1);
    auto filled = [col, slot](int r, int c) {
        if (c < col) return true;
        if (c > col) return false;
        return r < static_cast<int>(slot);
    };
    ForbiddenSet fs;
    for (const DistinctnessSet& s : sets) {
        std::span<const DistinctnessSet> one(&s, 1);
        for (std::int64_t v :
             solve_forbidden(one, e, static_cast<int>(slot), col, deg, filled))
            fs.entries.push_back(ForbiddenValue{v, s.name, {-1, -1, -1}});
    }
    return fs;
}

}  // namespace

ForbiddenSet forbidden_for(int girth_target, const ExponentMatrix& partial, int col, Slot slot,
                           const LiftingDegree& deg) {
    if (girth_target != 6 && girth_target != 8 && girth_target != 10 && girth_target != 12)
        throw std::invalid_argument("girth target must be one of 6, 8, 10, 12");
    if (partial.row_count() != 4) throw std::invalid_argument("construction requires n_c = 4");
    if (col < 1 || col >= partial.col_count())
        throw std::invalid_argument("column index out of range");
    if (girth_target <= 8) return forbidden_from_rules(girth_target, partial, col, slot, deg);
    return forbidden_from_solver(girth_target, partial, col, slot, deg);
}

namespace {

std::vector<std::int64_t> random_candidates(std::mt19937_64& rng, std::int64_t bound) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(bound));
    for (std::int64_t v = 1; v <= bound; ++v) c[static_cast<std::size_t>(v - 1)] = v;
    // Fisher-Yates with explicit draws so results are identical across
    // platforms (std::shuffle is unspecified).
    for (std::size_t i = c.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(c[i - 1], c[j]);
    }
    return c;
}

std::int64_t pick_free(const ForbiddenSet& fs, const Strategy& strategy, std::mt19937_64& rng,
                       Slot slot, int col) {
    switch (strategy.kind) {
        case Strategy::Kind::smallest_positive: {
            std::set<std::int64_t> bad;
            for (const auto& e : fs.entries) bad.insert(e.value);
            for (std::int64_t v = 1;; ++v)
                if (!bad.count(v)) return v;
        }
        case Strategy::Kind::max_plus_one:
            return fs.max_value() + 1;
        case Strategy::Kind::random_pick: {
            std::set<std::int64_t> bad;
            for (const auto& e : fs.entries) bad.insert(e.value);
            for (std::int64_t v : random_candidates(rng, strategy.bound))
                if (!bad.count(v)) return v;
            throw ConstructError("random strategy exhausted its bound at column " +
                                 std::to_string(col + 1) + ", slot " +
                                 std::to_string(static_cast<int>(slot)));
        }
    }
    throw std::logic_error("bad strategy");
}

}  // namespace

ExponentMatrix construct(int girth_target, int n_v, const Strategy& strategy) {
    if (n_v < 2) throw std::invalid_argument("construction requires n_v >= 2");
    ExponentMatrix e(4, n_v);
    std::mt19937_64 rng(strategy.seed);
    auto deg = LiftingDegree::free();
    for (int col = 1; col < n_v; ++col)
        for (Slot slot : {Slot::i, Slot::j, Slot::k}) {
            ForbiddenSet fs = forbidden_for(girth_target, e, col, slot, deg);
            e.at(static_cast<int>(slot), col) = pick_free(fs, strategy, rng, slot, col);
        }
    return e;
}

namespace {

bool passes_girth(const ExponentMatrix& e, const LiftingDegree& deg, int girth_target) {
    switch (girth_target) {
        case 6: return !check_distinct_g6(e, deg);
        case 8: return !check_distinct_g8(e, deg);
        case 10: return !check_distinct_g10(e, deg);
        case 12: return !check_distinct_g12(e, deg);
        default: throw std::invalid_argument("girth target must be one of 6, 8, 10, 12");
    }
}

// Any N beyond the largest set-element magnitude cannot introduce a new
// modular collision, so the scan below always terminates.
std::int64_t termination_bound(const ExponentMatrix& e, int girth_target) {
    std::vector<DistinctnessSet> sets = girth_sets(6, e.row_count(), e.col_count());
    if (girth_target >= 8 && e.row_count() == 4)
        for (int level : {8, 10, 12}) {
            if (level > girth_target) break;
            for (auto& s : girth_sets(level, 4, e.col_count())) sets.push_back(std::move(s));
        }
    std::int64_t m = 1;
    for (const auto& s : sets)
        for (const auto& el : s.elements) m = std::max(m, std::abs(el.eval(e)));
    return 2 * m + 2;
}

}  // namespace

std::int64_t min_lift(const ExponentMatrix& e, int girth_target) {
    if (!passes_girth(e, LiftingDegree::free(), girth_target))
        throw std::invalid_argument(
            "matrix does not satisfy the target girth conditions over the integers");
    std::int64_t cap = termination_bound(e, girth_target);
    for (std::int64_t n = std::max<std::int64_t>(2, e.col_count()); n <= cap; ++n)
        if (passes_girth(e, LiftingDegree::finite(n), girth_target)) return n;
    throw std::logic_error("min_lift scan exceeded its termination bound");
}

namespace {

struct SlotRef {
    int col;
    Slot slot;
};

bool dfs_assign(int girth_target, ExponentMatrix& e, std::int64_t n,
                const std::vector<SlotRef>& order, std::size_t pos, const Strategy& strategy,
                std::mt19937_64& rng, bool backtrack) {
    if (pos == order.size()) return true;
    auto [col, slot] = order[pos];
    auto deg = LiftingDegree::finite(n);
    ForbiddenSet fs = forbidden_for(girth_target, e, col, slot, deg);
    std::set<std::int64_t> bad;
    for (const auto& fv : fs.entries) bad.insert(fv.value);

    std::vector<std::int64_t> candidates;
    switch (strategy.kind) {
        case Strategy::Kind::smallest_positive:
            for (std::int64_t v = 1; v < n; ++v) candidates.push_back(v);
            break;
        case Strategy::Kind::max_plus_one: {
            std::int64_t start = fs.max_value() + 1;
            for (std::int64_t d = 0; d < n; ++d) {
                std::int64_t v = (start + d) % n;
                if (v != 0) candidates.push_back(v);
            }
            break;
        }
        case Strategy::Kind::random_pick:
            for (std::int64_t v : random_candidates(rng, std::min(strategy.bound, n - 1)))
                candidates.push_back(v);
            break;
    }

    for (std::int64_t v : candidates) {
        if (bad.count(v)) continue;
        e.at(static_cast<int>(slot), col) = v;
        if (dfs_assign(girth_target, e, n, order, pos + 1, strategy, rng, backtrack)) return true;
        e.at(static_cast<int>(slot), col) = 0;
        if (!backtrack) return false;
    }
    return false;
}

}  // namespace

std::optional<ExponentMatrix> construct_for_n(int girth_target, int n_v, std::int64_t n,
                                              const Strategy& strategy, bool backtrack) {
    if (n_v < 2) throw std::invalid_argument("construction requires n_v >= 2");
    if (n < 1) throw std::invalid_argument("lifting degree must be >= 1");
    ExponentMatrix e(4, n_v);
    std::vector<SlotRef> order;
    for (int col = 1; col < n_v; ++col)
        for (Slot slot : {Slot::i, Slot::j, Slot::k}) order.push_back(SlotRef{col, slot});
    std::mt19937_64 rng(strategy.seed);
    if (dfs_assign(girth_target, e, n, order, 0, strategy, rng, backtrack)) return e;
    return std::nullopt;
}

}  // namespace qcldpc
