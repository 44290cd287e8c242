#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcldpc/exponent_matrix.hpp"
#include "qcldpc/girth_conditions.hpp"

namespace qcldpc {

/// How the next exponent is picked among the non-forbidden candidates.
struct Strategy {
    enum class Kind { smallest_positive, max_plus_one, random_pick };
    Kind kind = Kind::smallest_positive;
    std::uint64_t seed = 0;
    std::int64_t bound = 0;  // random_pick: candidates drawn from [1, bound]

    static Strategy smallest() { return Strategy{}; }
    static Strategy max_plus() { return Strategy{Kind::max_plus_one, 0, 0}; }
    static Strategy random(std::uint64_t seed, std::int64_t bound) {
        if (bound < 1) throw std::invalid_argument("random strategy bound must be >= 1");
        return Strategy{Kind::random_pick, seed, bound};
    }
};

/// Which symbol of the current column is being chosen. Values are the row
/// indices of the exponent matrix (row 0 is the all-zero row).
enum class Slot : int { i = 1, j = 2, k = 3 };

/// One excluded value with the rule that generated it.
struct ForbiddenValue {
    std::int64_t value = 0;
    std::string rule;
    std::array<int, 3> idx{-1, -1, -1};  // (m, n, p) as used by the rule, 0-based
};

struct ForbiddenSet {
    std::vector<ForbiddenValue> entries;

    bool contains(std::int64_t v) const;
    std::vector<std::int64_t> values() const;  // sorted, deduplicated
    std::int64_t max_value() const;            // 0 if empty
};

/// Exclusion set for the given slot of column `col`, with columns
/// [0, col) complete and earlier slots of `col` already chosen. For girth
/// targets 6 and 8 these are the published greedy rules; for 10 and 12 they
/// are solved mechanically from the distinctness sets. Finite degree reduces
/// everything mod N (including the extra roots of coefficient-2 equations).
ForbiddenSet forbidden_for(int girth_target, const ExponentMatrix& partial, int col, Slot slot,
                           const LiftingDegree& deg);

struct ConstructError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Greedy construction over the integers (free degree): column 0 is all
/// zeros, then columns are filled in slot order i, j, k.
/// Throws ConstructError if the random strategy exhausts its bound.
ExponentMatrix construct(int girth_target, int n_v, const Strategy& strategy);

/// Smallest finite N such that the lift of `e` keeps the target girth.
/// Precondition: `e` satisfies the target's conditions over the integers.
std::int64_t min_lift(const ExponentMatrix& e, int girth_target);

/// Direct mod-N construction; candidates ordered by the strategy. With
/// backtrack, a depth-first search over candidate values; without it a
/// single greedy pass. Returns nullopt (FAILURE) when no assignment exists
/// (or the greedy pass gets stuck).
std::optional<ExponentMatrix> construct_for_n(int girth_target, int n_v, std::int64_t n,
                                              const Strategy& strategy, bool backtrack);

}  // namespace qcldpc
