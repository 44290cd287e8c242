#include "qcldpc/tanner.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace qcldpc {

TannerGraph::TannerGraph(const SparseBinaryMatrix& h)
    : checks_(h.rows()), vars_(h.cols()), edges_(0),
      adj_(static_cast<std::size_t>(h.rows() + h.cols())) {
    for (std::int64_t r = 0; r < checks_; ++r) {
        for (std::int64_t c : h.row(r)) {
            adj_[static_cast<std::size_t>(r)].push_back(static_cast<std::int32_t>(checks_ + c));
            adj_[static_cast<std::size_t>(checks_ + c)].push_back(static_cast<std::int32_t>(r));
            ++edges_;
        }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

namespace {

struct BfsScratch {
    std::vector<std::int32_t> dist;
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> touched;
};

// Shortest cycle through `root`, classic BFS with non-tree-edge detection.
// Values above `limit` are not reported.
std::optional<int> cycle_through(const TannerGraph& g, std::int64_t root, int limit,
                                 BfsScratch& s) {
    const auto n = static_cast<std::size_t>(g.node_count());
    if (s.dist.size() != n) {
        s.dist.assign(n, -1);
        s.parent.assign(n, -1);
    }
    for (std::int32_t v : s.touched) {
        s.dist[static_cast<std::size_t>(v)] = -1;
        s.parent[static_cast<std::size_t>(v)] = -1;
    }
    s.touched.clear();

    int best = std::numeric_limits<int>::max();
    std::queue<std::int32_t> q;
    q.push(static_cast<std::int32_t>(root));
    s.dist[static_cast<std::size_t>(root)] = 0;
    s.touched.push_back(static_cast<std::int32_t>(root));
    while (!q.empty()) {
        std::int32_t u = q.front();
        q.pop();
        int du = s.dist[static_cast<std::size_t>(u)];
        // Any cycle detected from depth du has length >= 2*du.
        if (2 * du >= best || 2 * du > limit) break;
        for (std::int32_t v : g.neighbors(u)) {
            if (v == s.parent[static_cast<std::size_t>(u)]) continue;
            int dv = s.dist[static_cast<std::size_t>(v)];
            if (dv < 0) {
                s.dist[static_cast<std::size_t>(v)] = du + 1;
                s.parent[static_cast<std::size_t>(v)] = u;
                s.touched.push_back(v);
                q.push(v);
            } else {
                best = std::min(best, du + dv + 1);
            }
        }
    }
    if (best > limit) return std::nullopt;
    return best;
}

std::optional<int> girth_from_roots(const TannerGraph& g, const std::vector<std::int64_t>& roots,
                                    std::optional<int> cap) {
    int limit = cap.value_or(std::numeric_limits<int>::max() / 2);
    int best = std::numeric_limits<int>::max();
    BfsScratch scratch;
    for (std::int64_t r : roots) {
        auto c = cycle_through(g, r, std::min(limit, best), scratch);
        if (c && *c < best) best = *c;
    }
    if (best > limit) return std::nullopt;
    return best;
}

}  // namespace

std::optional<int> shortest_cycle_through(const TannerGraph& g, std::int64_t root,
                                          std::optional<int> cap) {
    BfsScratch scratch;
    int limit = cap.value_or(std::numeric_limits<int>::max() / 2);
    return cycle_through(g, root, limit, scratch);
}

std::optional<int> exact_girth(const TannerGraph& g, std::optional<int> cap) {
    std::vector<std::int64_t> roots(static_cast<std::size_t>(g.node_count()));
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = static_cast<std::int64_t>(i);
    return girth_from_roots(g, roots, cap);
}

std::optional<int> qc_girth(const ExponentMatrix& e, std::int64_t n, std::optional<int> cap) {
    TannerGraph g(lift(e, n));
    // Every cycle can be shifted so that one chosen node lands in lift
    // position 0 of its block; roots at those positions suffice.
    std::vector<std::int64_t> roots;
    for (int r = 0; r < e.row_count(); ++r) roots.push_back(static_cast<std::int64_t>(r) * n);
    for (int c = 0; c < e.col_count(); ++c)
        roots.push_back(g.check_count() + static_cast<std::int64_t>(c) * n);
    return girth_from_roots(g, roots, cap);
}

}  // namespace qcldpc
