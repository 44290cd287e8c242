#pragma once

#include <optional>
#include <string>

#include "qcldpc/exponent_matrix.hpp"
#include "qcldpc/girth_conditions.hpp"

namespace qcldpc {

enum class GirthMethod { sets, ch_chain, bn_chain, oracle };

const char* to_string(GirthMethod m);

/// Girth verdict: an exact even value in [4, 12], or "greater than value"
/// when every tested condition passed (exceeds = true, value = tested max).
struct GirthVerdict {
    int value = 4;
    bool exceeds = false;

    bool operator==(const GirthVerdict&) const = default;
    std::string to_string() const;
};

/// Witness of a failed triangle condition (B_n or C_H chains).
struct BlockWitness {
    std::string condition;
    int block_row = 0;
    int block_col = 0;
    std::int64_t exponent = 0;
    std::int64_t multiplicity = 0;

    std::string describe() const;
};

struct GirthReport {
    GirthMethod method = GirthMethod::sets;
    GirthVerdict verdict;
    std::optional<SetCollision> set_witness;
    std::optional<BlockWitness> block_witness;

    std::string witness_text() const;
};

/// gir > 4: the six per-row-pair difference sets are collision-free.
std::optional<SetCollision> check_distinct_g6(const ExponentMatrix& e, const LiftingDegree& deg);
/// gir > 6: the per-column sets are collision-free.
std::optional<SetCollision> check_distinct_g8(const ExponentMatrix& e, const LiftingDegree& deg);
/// gir > 8: gir > 4 and the sixteen pair families are collision-free.
std::optional<SetCollision> check_distinct_g10(const ExponentMatrix& e, const LiftingDegree& deg);
/// gir > 10: gir > 8 and the four per-column families are collision-free.
std::optional<SetCollision> check_distinct_g12(const ExponentMatrix& e, const LiftingDegree& deg);

/// Cheapest checker: walks the set-distinctness chain. The final 12-vs-GT12
/// split needs one triangle condition (C_H^3 against I + C_H + C_H^2), since
/// the set conditions stop at gir > 10.
GirthReport girth_via_sets(const ExponentMatrix& e, std::int64_t n);

/// The five-condition equivalence chain on C_H. Requires n_c = 4.
GirthReport girth_via_ch(const ExponentMatrix& e, std::int64_t n, int g_max = 12);

/// Generic checker via B_t(H) triangle B_{t-2}(H), t = 2..g_max/2. Works for
/// any block-circulant H (n_c need not be 4).
GirthReport girth_via_bn(const ExponentMatrix& e, std::int64_t n, int g_max = 12);

/// Brute-force ground truth on the lifted Tanner graph, capped at 12.
/// use_symmetry selects BFS from one lift position per block (validated
/// against the full scan); full BFS otherwise.
GirthReport girth_via_oracle(const ExponentMatrix& e, std::int64_t n, bool use_symmetry = true);

/// Dispatcher: set-distinctness verdict; with verify = true also runs the
/// C_H and B_n chains and throws std::logic_error if any disagree.
GirthReport girth(const ExponentMatrix& e, std::int64_t n, bool verify = false);

}  // namespace qcldpc
