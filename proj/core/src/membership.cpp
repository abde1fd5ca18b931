#include "reesgb/membership.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace reesgb {

namespace {

std::string memo_key(const std::vector<int>& w, int power) {
    std::string key;
    key.reserve(w.size() + 1);
    for (int e : w) key.push_back(static_cast<char>(std::min(e, 127)));
    key.push_back(static_cast<char>(power));
    return key;
}

}  // namespace

bool MembershipOracle::flow_at_least(const std::vector<int>& w,
                                     int target) const {
    // Transportation network: source -> x_i with capacity w[x_i], edge
    // arcs with effectively infinite capacity, y_j -> sink with capacity
    // w[y_j]. BFS augmentation on a dense residual matrix; the networks
    // here have a handful of nodes.
    const int n = g_.n(), m = g_.m();
    const int source = n + m, sink = n + m + 1, nodes = n + m + 2;
    const int inf = 1 << 28;
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (int i = 0; i < n; ++i) cap[source][i] = w[i];
    for (int j = 0; j < m; ++j) cap[n + j][sink] = w[n + j];
    for (const Edge& e : g_.edges()) cap[e.x][n + e.y] = inf;

    int total = 0;
    std::vector<int> parent(nodes);
    while (total < target) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = source;
        std::vector<int> queue{source};
        for (size_t qi = 0; qi < queue.size() && parent[sink] < 0; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < nodes; ++v)
                if (parent[v] < 0 && cap[u][v] > 0) {
                    parent[v] = u;
                    queue.push_back(v);
                }
        }
        if (parent[sink] < 0) break;
        int bottleneck = inf;
        for (int v = sink; v != source; v = parent[v])
            bottleneck = std::min(bottleneck, cap[parent[v]][v]);
        bottleneck = std::min(bottleneck, target - total);
        for (int v = sink; v != source; v = parent[v]) {
            cap[parent[v]][v] -= bottleneck;
            cap[v][parent[v]] += bottleneck;
        }
        total += bottleneck;
    }
    return total >= target;
}

bool MembershipOracle::contains(const std::vector<int>& w, int power) const {
    if (static_cast<int>(w.size()) != g_.num_vertices())
        throw DimensionMismatchError("exponent vector length != N");
    if (power <= 0) return true;  // I^0 is the whole ring
    int degree = std::accumulate(w.begin(), w.end(), 0);
    if (degree < 2 * power) return false;
    std::string key = memo_key(w, power);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool result = flow_at_least(w, power);
    memo_.emplace(std::move(key), result);
    return result;
}

bool edge_power_membership(const std::vector<int>& w, int power,
                           const BipartiteGraph& g) {
    return MembershipOracle(g).contains(w, power);
}

PieceBasis piece_basis(const BipartiteGraph& g, int a, int b, int degree_cap,
                       const MembershipOracle* oracle) {
    if (a < 0 || b < 0) throw InputError("piece_basis needs a,b >= 0");
    const int degree = a + 2 * b;
    if (degree > degree_cap)
        throw SizeLimitError("piece degree " + std::to_string(degree) +
                             " exceeds cap " + std::to_string(degree_cap));
    MembershipOracle local(g);
    const MembershipOracle& oc = oracle ? *oracle : local;
    PieceBasis piece{a, b, {}};
    std::vector<int> w(g.num_vertices(), 0);
    auto enumerate = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == g.num_vertices() - 1) {
            w[pos] = remaining;
            if (oc.contains(w, b)) piece.monomials.push_back(w);
            w[pos] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            w[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        w[pos] = 0;
    };
    enumerate(enumerate, 0, degree);
    return piece;
}

}  // namespace reesgb
