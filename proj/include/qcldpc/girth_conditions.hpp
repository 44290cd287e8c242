#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcldpc/circulant.hpp"
#include "qcldpc/exponent_matrix.hpp"

namespace qcldpc {

/// coeff * E[row][col], one addend of a set element.
struct SymTerm {
    int row = 0;
    int col = 0;
    int coeff = 0;

    bool operator==(const SymTerm&) const = default;
};

/// One member of a distinctness set: a small integer-linear combination of
/// exponent-matrix entries.
struct SetElement {
    std::vector<SymTerm> terms;

    std::int64_t eval(const ExponentMatrix& e) const;
    /// nullopt if the element references an entry that is not filled yet.
    std::optional<std::int64_t> eval_partial(
        const ExponentMatrix& e, const std::function<bool(int, int)>& filled) const;
    std::string to_string() const;
};

/// A set whose elements must be pairwise distinct (mod N, or over the
/// integers for a free lift).
struct DistinctnessSet {
    std::string name;
    std::vector<SetElement> elements;
};

/// Two set members colliding at the same residue.
struct SetCollision {
    std::string set_name;
    SetElement lhs, rhs;
    std::int64_t value = 0;

    std::string describe() const;
};

/// Necessary-and-sufficient distinctness sets for one girth step of a
/// 4-row (column-weight-4) exponent matrix:
///   level 6  -> girth > 4   (six pairwise row-difference sets)
///   level 8  -> girth > 6   (four sets per block column)
///   level 10 -> girth > 8   (the sixteen pair-indexed families)
///   level 12 -> girth > 10  (four sets per block column, nine families)
/// Level 6 also works for 2 or 3 rows. Levels are incremental: a level's
/// sets assume the previous level already passed.
std::vector<DistinctnessSet> girth_sets(int level, int n_c, int n_v);

/// The g>6 sets in the form the construction algorithm is derived from:
/// the per-column sets plus the fourth element family of each. Slightly
/// stronger than girth_sets(8, ...); used only for rule generation and its
/// validation, never for girth verdicts.
std::vector<DistinctnessSet> girth_sets_g8_rules(int n_v);

/// First collision across the given sets, or nullopt if all sets have
/// pairwise-distinct members. Free degree means equality over the integers.
std::optional<SetCollision> find_collision(std::span<const DistinctnessSet> sets,
                                           const ExponentMatrix& e, const LiftingDegree& deg);

/// Collision check over a partially filled matrix: elements referencing
/// unfilled entries are skipped.
std::optional<SetCollision> find_collision_partial(
    std::span<const DistinctnessSet> sets, const ExponentMatrix& e, const LiftingDegree& deg,
    const std::function<bool(int, int)>& filled);

/// Values for entry (row, col) that would make two members of some set
/// collide, everything else being fixed. Solves each pairwise equation for
/// the unknown; pairs touching other unfilled entries are ignored. Sorted,
/// deduplicated; mod-N solutions for finite degree (including the extra
/// roots of 2x = d when N is even).
std::vector<std::int64_t> solve_forbidden(std::span<const DistinctnessSet> sets,
                                          const ExponentMatrix& e, int row, int col,
                                          const LiftingDegree& deg,
                                          const std::function<bool(int, int)>& filled);

}  // namespace qcldpc
