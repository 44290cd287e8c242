#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcldpc/exponent_matrix.hpp"
#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

/// Explicit bipartite Tanner graph of a binary matrix. Checks are nodes
/// [0, rows), variables [rows, rows+cols).
class TannerGraph {
public:
    explicit TannerGraph(const SparseBinaryMatrix& h);

    std::int64_t check_count() const { return checks_; }
    std::int64_t variable_count() const { return vars_; }
    std::int64_t node_count() const { return checks_ + vars_; }
    std::int64_t edge_count() const { return edges_; }

    const std::vector<std::int32_t>& neighbors(std::int64_t node) const {
        return adj_[static_cast<std::size_t>(node)];
    }

private:
    std::int64_t checks_, vars_, edges_;
    std::vector<std::vector<std::int32_t>> adj_;
};

/// Exact girth by BFS from every node, with optional early exit: with a cap,
/// any cycle longer than the cap is reported as "none found" (nullopt), so a
/// finite result never exceeds the cap. nullopt with no cap means acyclic.
std::optional<int> exact_girth(const TannerGraph& g, std::optional<int> cap = std::nullopt);

/// Shortest cycle through one root (BFS); nullopt if none within the cap.
std::optional<int> shortest_cycle_through(const TannerGraph& g, std::int64_t root,
                                          std::optional<int> cap = std::nullopt);

/// Girth of the lifted matrix using the circulant symmetry of the lift:
/// shifting all block positions is a graph automorphism, so BFS only from
/// position 0 of every block row/column. Agrees with exact_girth on lifts.
std::optional<int> qc_girth(const ExponentMatrix& e, std::int64_t n,
                            std::optional<int> cap = std::nullopt);

}  // namespace qcldpc
