#pragma once

#include <string>
#include <vector>

#include "reesgb/errors.hpp"

namespace reesgb {

/// Edge joining X-vertex `x` to Y-vertex `y` (0-based indices into the
/// side label lists).
struct Edge {
    int x = 0;
    int y = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Bipartite graph with a fixed bipartition and an ordered edge list.
///
/// The edge order is significant: edge t (0-based) is the one presented by
/// the variable T_{t+1}. Canonical form requires |X| <= |Y| and every
/// vertex incident to at least one edge; `parse_graph` produces that form.
class BipartiteGraph {
public:
    BipartiteGraph(std::vector<std::string> x_labels,
                   std::vector<std::string> y_labels,
                   std::vector<Edge> edges);

    int n() const { return static_cast<int>(x_labels_.size()); }
    int m() const { return static_cast<int>(y_labels_.size()); }
    int q() const { return static_cast<int>(edges_.size()); }
    int num_vertices() const { return n() + m(); }

    const std::vector<std::string>& x_labels() const { return x_labels_; }
    const std::vector<std::string>& y_labels() const { return y_labels_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int t) const { return edges_.at(t); }

    /// Edge indices incident to a vertex of the given side.
    const std::vector<int>& edges_at_x(int xi) const { return adj_x_.at(xi); }
    const std::vector<int>& edges_at_y(int yi) const { return adj_y_.at(yi); }

    /// Global vertex ids: X block first (0..n-1), then Y block (n..n+m-1).
    int x_vertex(int xi) const { return xi; }
    int y_vertex(int yi) const { return n() + yi; }
    bool is_x_vertex(int v) const { return v < n(); }
    const std::string& label(int v) const;
    /// Endpoints of edge t as global vertex ids.
    std::pair<int, int> endpoints(int t) const;
    /// Edge index joining two global vertex ids, or -1.
    int edge_between(int u, int v) const;

    /// Serializes back to the edge-list text format accepted by
    /// `parse_graph` (one "u v" line per edge, in T order).
    std::string to_edge_list() const;

private:
    std::vector<std::string> x_labels_;
    std::vector<std::string> y_labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_x_;
    std::vector<std::vector<int>> adj_y_;
};

/// Parses an edge-list document: one "u v" pair per line, '#' comments and
/// blank lines ignored. Sides are inferred by 2-coloring each connected
/// component (the lexicographically least vertex of a component is placed
/// on side X); sides are swapped at the end if needed so |X| <= |Y|, and
/// labels are ordered lexicographically within each side. T-numbering
/// follows the order of first appearance of each edge.
///
/// Throws OddCycleError, DuplicateEdgeError, EmptyGraphError, InputError.
BipartiteGraph parse_graph(const std::string& text);

/// Set of pairwise vertex-disjoint edges, stored as sorted T-indices.
struct Matching {
    std::vector<int> edge_indices;
    int size() const { return static_cast<int>(edge_indices.size()); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

bool is_matching(const BipartiteGraph& g, const Matching& mt);
/// True when no edge of g can be added to mt.
bool is_maximal_matching(const BipartiteGraph& g, const Matching& mt);

/// Maximum-cardinality matching via augmenting paths. Deterministic:
/// X-vertices and their edges are scanned in order.
Matching maximum_matching(const BipartiteGraph& g);

/// All maximal (non-extendable) matchings, by exhaustive branching.
/// Throws SizeLimitError when q() > cap_edges.
std::vector<Matching> maximal_matchings(const BipartiteGraph& g,
                                        int cap_edges = 24);

/// A maximal matching of minimum cardinality (branch-and-bound, exact).
/// Throws SizeLimitError when q() > cap_edges.
Matching minimum_maximal_matching(const BipartiteGraph& g, int cap_edges = 24);

inline int matching_number(const BipartiteGraph& g) {
    return maximum_matching(g).size();
}
inline int min_maximal_matching_number(const BipartiteGraph& g,
                                       int cap_edges = 24) {
    return minimum_maximal_matching(g, cap_edges).size();
}

/// Minimum vertex cover (global vertex ids) built from a maximum matching
/// by alternating reachability; its size equals the matching number.
std::vector<int> min_vertex_cover(const BipartiteGraph& g);

/// Size of a maximum independent set: N minus the cover size.
int independence_number(const BipartiteGraph& g);

/// General graph produced by adding an apex vertex adjacent to everything.
struct ConeGraph {
    int num_vertices = 0;  // N + 1; the apex is the last vertex
    int apex = 0;
    std::vector<std::pair<int, int>> edges;  // original edges first
};
ConeGraph cone_graph(const BipartiteGraph& g);

/// Rank assignment putting a maximal matching on the diagonal: matched
/// pairs receive ranks 1..r on both sides (x and its partner share a
/// rank), remaining vertices follow in original order. Deterministic.
struct VertexRelabeling {
    std::vector<int> x_rank;  // x_rank[xi] in 1..n
    std::vector<int> y_rank;  // y_rank[yi] in 1..m
    int matched = 0;          // r
};

/// Throws NotMaximalError if `mt` is extendable (or not a matching).
VertexRelabeling renumber_for_matching(const BipartiteGraph& g,
                                       const Matching& mt);

// Small built-in families used by tests, benchmarks and the complete
// bipartite check. All go through parse_graph, so they are canonical.
BipartiteGraph complete_bipartite(int n, int m);
/// Path on `vertices` vertices labeled x1,y1,x2,y2,...
BipartiteGraph path_graph(int vertices);
/// Cycle on `vertices` vertices (must be even), edges in cyclic order.
BipartiteGraph cycle_graph(int vertices);

}  // namespace reesgb
