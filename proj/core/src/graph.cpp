#include "reesgb/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace reesgb {

BipartiteGraph::BipartiteGraph(std::vector<std::string> x_labels,
                               std::vector<std::string> y_labels,
                               std::vector<Edge> edges)
    : x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      edges_(std::move(edges)) {
    if (edges_.empty()) throw EmptyGraphError("graph has no edges");
    if (n() > m())
        throw InputError("side sizes violate |X| <= |Y|; normalize first");
    std::set<std::string> seen;
    for (const auto& l : x_labels_)
        if (!seen.insert(l).second)
            throw InputError("duplicate vertex label: " + l);
    for (const auto& l : y_labels_)
        if (!seen.insert(l).second)
            throw InputError("duplicate vertex label: " + l);

    adj_x_.assign(n(), {});
    adj_y_.assign(m(), {});
    std::set<std::pair<int, int>> edge_set;
    for (int t = 0; t < q(); ++t) {
        const Edge& e = edges_[t];
        if (e.x < 0 || e.x >= n() || e.y < 0 || e.y >= m())
            throw InputError("edge index out of range");
        if (!edge_set.insert({e.x, e.y}).second)
            throw DuplicateEdgeError("duplicate edge " + x_labels_[e.x] + " " +
                                     y_labels_[e.y]);
        adj_x_[e.x].push_back(t);
        adj_y_[e.y].push_back(t);
    }
    for (int i = 0; i < n(); ++i)
        if (adj_x_[i].empty())
            throw EmptyComponentError("isolated vertex: " + x_labels_[i]);
    for (int j = 0; j < m(); ++j)
        if (adj_y_[j].empty())
            throw EmptyComponentError("isolated vertex: " + y_labels_[j]);
}

const std::string& BipartiteGraph::label(int v) const {
    return is_x_vertex(v) ? x_labels_.at(v) : y_labels_.at(v - n());
}

std::pair<int, int> BipartiteGraph::endpoints(int t) const {
    const Edge& e = edge(t);
    return {x_vertex(e.x), y_vertex(e.y)};
}

int BipartiteGraph::edge_between(int u, int v) const {
    if (is_x_vertex(u) == is_x_vertex(v)) return -1;
    if (is_x_vertex(v)) std::swap(u, v);
    for (int t : adj_x_[u])
        if (y_vertex(edges_[t].y) == v) return t;
    return -1;
}

std::string BipartiteGraph::to_edge_list() const {
    std::ostringstream out;
    for (const Edge& e : edges_)
        out << x_labels_[e.x] << ' ' << y_labels_[e.y] << '\n';
    return out.str();
}

BipartiteGraph parse_graph(const std::string& text) {
    // Edge list in input order, as label pairs.
    std::vector<std::pair<std::string, std::string>> raw;
    std::set<std::pair<std::string, std::string>> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string u, v, extra;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v) || (ls >> extra))
            throw InputError("line " + std::to_string(lineno) +
                             ": expected exactly two vertex tokens");
        if (u == v)
            throw OddCycleError("line " + std::to_string(lineno) +
                                ": self-loop at " + u);
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        if (!seen.insert(key).second)
            throw DuplicateEdgeError("line " + std::to_string(lineno) +
                                     ": duplicate edge " + u + " " + v);
        raw.emplace_back(u, v);
    }
    if (raw.empty()) throw EmptyGraphError("no edges in input");

    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [u, v] : raw) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // 2-color each component, anchoring the lexicographically least vertex
    // of the component on side X. std::map iteration gives the anchors in
    // lexicographic order.
    std::map<std::string, int> color;
    for (const auto& [anchor, unused] : adj) {
        (void)unused;
        if (color.count(anchor)) continue;
        color[anchor] = 0;
        std::vector<std::string> queue{anchor};
        while (!queue.empty()) {
            std::string u = queue.back();
            queue.pop_back();
            for (const std::string& v : adj[u]) {
                auto it = color.find(v);
                if (it == color.end()) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (it->second == color[u]) {
                    throw OddCycleError("graph is not bipartite: edge " + u +
                                        " " + v + " closes an odd cycle");
                }
            }
        }
    }

    std::vector<std::string> side[2];
    for (const auto& [v, c] : color) side[c].push_back(v);  // sorted via map
    int x_side = side[0].size() <= side[1].size() ? 0 : 1;

    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(side[x_side].size()); ++i)
        index[side[x_side][i]] = i;
    for (int j = 0; j < static_cast<int>(side[1 - x_side].size()); ++j)
        index[side[1 - x_side][j]] = j;

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw) {
        const std::string& xu = color[u] == x_side ? u : v;
        const std::string& yv = color[u] == x_side ? v : u;
        edges.push_back(Edge{index[xu], index[yv]});
    }
    return BipartiteGraph(std::move(side[x_side]), std::move(side[1 - x_side]),
                          std::move(edges));
}

bool is_matching(const BipartiteGraph& g, const Matching& mt) {
    std::set<int> xs, ys;
    for (int t : mt.edge_indices) {
        if (t < 0 || t >= g.q()) return false;
        if (!xs.insert(g.edge(t).x).second) return false;
        if (!ys.insert(g.edge(t).y).second) return false;
    }
    return true;
}

bool is_maximal_matching(const BipartiteGraph& g, const Matching& mt) {
    if (!is_matching(g, mt)) return false;
    std::vector<char> cx(g.n(), 0), cy(g.m(), 0);
    for (int t : mt.edge_indices) {
        cx[g.edge(t).x] = 1;
        cy[g.edge(t).y] = 1;
    }
    for (const Edge& e : g.edges())
        if (!cx[e.x] && !cy[e.y]) return false;
    return true;
}

namespace {

bool try_augment(const BipartiteGraph& g, int xi, std::vector<int>& match_x,
                 std::vector<int>& match_y, std::vector<char>& visited) {
    for (int t : g.edges_at_x(xi)) {
        int yj = g.edge(t).y;
        if (visited[yj]) continue;
        visited[yj] = 1;
        if (match_y[yj] < 0 ||
            try_augment(g, g.edge(match_y[yj]).x, match_x, match_y, visited)) {
            match_x[xi] = t;
            match_y[yj] = t;
            return true;
        }
    }
    return false;
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) {
    std::vector<int> match_x(g.n(), -1), match_y(g.m(), -1);
    for (int xi = 0; xi < g.n(); ++xi) {
        std::vector<char> visited(g.m(), 0);
        try_augment(g, xi, match_x, match_y, visited);
    }
    Matching mt;
    for (int xi = 0; xi < g.n(); ++xi)
        if (match_x[xi] >= 0) mt.edge_indices.push_back(match_x[xi]);
    std::sort(mt.edge_indices.begin(), mt.edge_indices.end());
    return mt;
}

namespace {

// Enumerates maximal matchings: the lowest-indexed edge with both
// endpoints free must end up dominated, so branch over the edges that can
// cover one of its endpoints.
struct MaximalMatchingSearch {
    const BipartiteGraph& g;
    std::vector<char> cx, cy;
    std::vector<int> chosen;
    std::set<std::vector<int>> found;
    int best = -1;           // prune matchings of size >= best when minimizing
    bool collect_all = true;

    explicit MaximalMatchingSearch(const BipartiteGraph& graph)
        : g(graph), cx(graph.n(), 0), cy(graph.m(), 0) {}

    void take(int t, auto&& cont) {
        cx[g.edge(t).x] = 1;
        cy[g.edge(t).y] = 1;
        chosen.push_back(t);
        cont();
        chosen.pop_back();
        cx[g.edge(t).x] = 0;
        cy[g.edge(t).y] = 0;
    }

    void run() {
        if (!collect_all && best >= 0 &&
            static_cast<int>(chosen.size()) >= best)
            return;
        int free_edge = -1;
        for (int t = 0; t < g.q(); ++t)
            if (!cx[g.edge(t).x] && !cy[g.edge(t).y]) {
                free_edge = t;
                break;
            }
        if (free_edge < 0) {
            std::vector<int> mt = chosen;
            std::sort(mt.begin(), mt.end());
            if (collect_all)
                found.insert(std::move(mt));
            else if (best < 0 || static_cast<int>(mt.size()) < best) {
                best = static_cast<int>(mt.size());
                found = {std::move(mt)};
            }
            return;
        }
        const Edge e = g.edge(free_edge);
        for (int t : g.edges_at_x(e.x))
            if (!cy[g.edge(t).y]) take(t, [&] { run(); });
        // e.x stays uncovered: some edge at e.y (with a different x) must go in
        for (int t : g.edges_at_y(e.y))
            if (g.edge(t).x != e.x && !cx[g.edge(t).x]) take(t, [&] { run(); });
    }
};

}  // namespace

std::vector<Matching> maximal_matchings(const BipartiteGraph& g,
                                        int cap_edges) {
    if (g.q() > cap_edges)
        throw SizeLimitError("maximal-matching enumeration capped at " +
                             std::to_string(cap_edges) + " edges (graph has " +
                             std::to_string(g.q()) + ")");
    MaximalMatchingSearch s(g);
    s.run();
    std::vector<Matching> out;
    out.reserve(s.found.size());
    for (const auto& v : s.found) out.push_back(Matching{v});
    return out;
}

Matching minimum_maximal_matching(const BipartiteGraph& g, int cap_edges) {
    if (g.q() > cap_edges)
        throw SizeLimitError("minimum maximal matching capped at " +
                             std::to_string(cap_edges) + " edges (graph has " +
                             std::to_string(g.q()) + ")");
    MaximalMatchingSearch s(g);
    s.collect_all = false;
    s.run();
    return Matching{*s.found.begin()};
}

std::vector<int> min_vertex_cover(const BipartiteGraph& g) {
    Matching mm = maximum_matching(g);
    std::vector<int> match_x(g.n(), -1), match_y(g.m(), -1);
    for (int t : mm.edge_indices) {
        match_x[g.edge(t).x] = t;
        match_y[g.edge(t).y] = t;
    }
    // Alternating reachability from unmatched X vertices.
    std::vector<char> zx(g.n(), 0), zy(g.m(), 0);
    std::vector<int> stack;
    for (int xi = 0; xi < g.n(); ++xi)
        if (match_x[xi] < 0) {
            zx[xi] = 1;
            stack.push_back(xi);
        }
    while (!stack.empty()) {
        int xi = stack.back();
        stack.pop_back();
        for (int t : g.edges_at_x(xi)) {
            if (t == match_x[xi]) continue;
            int yj = g.edge(t).y;
            if (zy[yj]) continue;
            zy[yj] = 1;
            if (match_y[yj] >= 0) {
                int xk = g.edge(match_y[yj]).x;
                if (!zx[xk]) {
                    zx[xk] = 1;
                    stack.push_back(xk);
                }
            }
        }
    }
    std::vector<int> cover;
    for (int xi = 0; xi < g.n(); ++xi)
        if (!zx[xi]) cover.push_back(g.x_vertex(xi));
    for (int yj = 0; yj < g.m(); ++yj)
        if (zy[yj]) cover.push_back(g.y_vertex(yj));
    return cover;
}

int independence_number(const BipartiteGraph& g) {
    return g.num_vertices() - static_cast<int>(min_vertex_cover(g).size());
}

ConeGraph cone_graph(const BipartiteGraph& g) {
    ConeGraph c;
    c.num_vertices = g.num_vertices() + 1;
    c.apex = g.num_vertices();
    for (int t = 0; t < g.q(); ++t) c.edges.push_back(g.endpoints(t));
    for (int v = 0; v < g.num_vertices(); ++v) c.edges.emplace_back(v, c.apex);
    return c;
}

VertexRelabeling renumber_for_matching(const BipartiteGraph& g,
                                       const Matching& mt) {
    if (!is_matching(g, mt)) throw NotMaximalError("not a matching");
    if (!is_maximal_matching(g, mt))
        throw NotMaximalError("matching is extendable");
    VertexRelabeling rl;
    rl.matched = mt.size();
    rl.x_rank.assign(g.n(), 0);
    rl.y_rank.assign(g.m(), 0);
    // Matched pairs take ranks 1..r in order of the x endpoint.
    std::vector<std::pair<int, int>> pairs;
    for (int t : mt.edge_indices) pairs.push_back({g.edge(t).x, g.edge(t).y});
    std::sort(pairs.begin(), pairs.end());
    int rank = 1;
    for (const auto& [xi, yj] : pairs) {
        rl.x_rank[xi] = rank;
        rl.y_rank[yj] = rank;
        ++rank;
    }
    int next_x = rl.matched + 1;
    for (int xi = 0; xi < g.n(); ++xi)
        if (rl.x_rank[xi] == 0) rl.x_rank[xi] = next_x++;
    int next_y = rl.matched + 1;
    for (int yj = 0; yj < g.m(); ++yj)
        if (rl.y_rank[yj] == 0) rl.y_rank[yj] = next_y++;
    return rl;
}

BipartiteGraph complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw InputError("complete_bipartite needs n,m >= 1");
    if (n > m) std::swap(n, m);
    std::ostringstream text;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            text << 'u' << i << ' ' << 'w' << j << '\n';
    return parse_graph(text.str());
}

namespace {

std::string alternating_label(int i) {  // 1-based position along the walk
    return (i % 2 ? "x" : "y") + std::to_string((i + 1) / 2);
}

}  // namespace

BipartiteGraph path_graph(int vertices) {
    if (vertices < 2) throw InputError("path_graph needs >= 2 vertices");
    std::ostringstream text;
    for (int i = 1; i < vertices; ++i)
        text << alternating_label(i) << ' ' << alternating_label(i + 1) << '\n';
    return parse_graph(text.str());
}

BipartiteGraph cycle_graph(int vertices) {
    if (vertices < 4) throw InputError("cycle_graph needs >= 4 vertices");
    std::ostringstream text;
    for (int i = 1; i < vertices; ++i)
        text << alternating_label(i) << ' ' << alternating_label(i + 1) << '\n';
    text << alternating_label(vertices) << ' ' << alternating_label(1) << '\n';
    return parse_graph(text.str());
}

}  // namespace reesgb
