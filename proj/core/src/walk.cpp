#include "reesgb/walk.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace reesgb {

namespace {

std::vector<int> edge_indices_of(const BipartiteGraph& g,
                                 const std::vector<int>& seq, bool closed) {
    std::vector<int> ts;
    const int steps = static_cast<int>(seq.size()) - (closed ? 0 : 1);
    for (int j = 0; j < steps; ++j) {
        int u = seq[j];
        int v = seq[(j + 1) % seq.size()];
        int t = g.edge_between(u, v);
        if (t < 0)
            throw MalformedWalkError("walk step " + g.label(u) + "-" +
                                     g.label(v) + " is not an edge");
        ts.push_back(t);
    }
    return ts;
}

void require_simple(const std::vector<int>& seq) {
    std::set<int> s(seq.begin(), seq.end());
    if (s.size() != seq.size())
        throw MalformedWalkError("walk revisits a vertex");
}

}  // namespace

Walk make_even_cycle(const BipartiteGraph& g, std::vector<int> vertices) {
    if (vertices.size() < 4 || vertices.size() % 2 != 0)
        throw MalformedWalkError("even cycle needs an even length >= 4");
    require_simple(vertices);
    // Rotate the least vertex to the front, then pick the direction with
    // the smaller second vertex.
    auto least = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), least, vertices.end());
    if (vertices.back() < vertices[1]) {
        std::reverse(vertices.begin() + 1, vertices.end());
    }
    Walk w{WalkKind::EvenCycle, {vertices}, {}};
    w.edge_ts = {edge_indices_of(g, vertices, /*closed=*/true)};
    return w;
}

Walk make_even_path(const BipartiteGraph& g, std::vector<int> vertices) {
    if (vertices.size() < 3 || vertices.size() % 2 == 0)
        throw MalformedWalkError("even path needs an even edge count >= 2");
    require_simple(vertices);
    if (vertices.front() > vertices.back())
        std::reverse(vertices.begin(), vertices.end());
    Walk w{WalkKind::EvenPath, {vertices}, {}};
    w.edge_ts = {edge_indices_of(g, vertices, /*closed=*/false)};
    return w;
}

Walk make_odd_pair(const BipartiteGraph& g, std::vector<int> first,
                   std::vector<int> second) {
    auto orient = [&](std::vector<int>& seq) {
        if (seq.size() < 2 || seq.size() % 2 != 0)
            throw MalformedWalkError("odd path needs an odd edge count >= 1");
        require_simple(seq);
        if (!g.is_x_vertex(seq.front())) std::reverse(seq.begin(), seq.end());
        if (!g.is_x_vertex(seq.front()) || g.is_x_vertex(seq.back()))
            throw MalformedWalkError("odd path must join the two sides");
    };
    orient(first);
    orient(second);
    std::set<int> used(first.begin(), first.end());
    for (int v : second)
        if (used.count(v))
            throw MalformedWalkError("paths of a pair must be vertex-disjoint");
    if (second.front() < first.front()) std::swap(first, second);
    Walk w{WalkKind::OddPathPair, {first, second}, {}};
    w.edge_ts = {edge_indices_of(g, first, false),
                 edge_indices_of(g, second, false)};
    return w;
}

Walk canonicalize(const BipartiteGraph& g, const Walk& w) {
    switch (w.kind) {
        case WalkKind::EvenCycle:
            return make_even_cycle(g, w.seqs.at(0));
        case WalkKind::EvenPath:
            return make_even_path(g, w.seqs.at(0));
        case WalkKind::OddPathPair:
            return make_odd_pair(g, w.seqs.at(0), w.seqs.at(1));
    }
    throw MalformedWalkError("unknown walk kind");
}

std::string Walk::str(const BipartiteGraph& g) const {
    std::ostringstream out;
    for (size_t s = 0; s < seqs.size(); ++s) {
        if (s) out << " | ";
        out << '(';
        for (size_t i = 0; i < seqs[s].size(); ++i) {
            if (i) out << ',';
            out << g.label(seqs[s][i]);
        }
        out << ')';
    }
    return out.str();
}

namespace {

std::vector<std::vector<int>> neighbors_of(const BipartiteGraph& g) {
    std::vector<std::vector<int>> nb(g.num_vertices());
    for (int t = 0; t < g.q(); ++t) {
        auto [u, v] = g.endpoints(t);
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    for (auto& v : nb) std::sort(v.begin(), v.end());
    return nb;
}

void check_cap(size_t count, const WalkLimits& limits) {
    if (count > limits.max_walks)
        throw SizeLimitError("walk enumeration exceeded cap of " +
                             std::to_string(limits.max_walks));
}

// All simple paths, reported through `emit(path)` for every DFS prefix
// with >= 1 edge. Each undirected path is visited from both endpoints.
template <typename Emit>
void all_simple_paths(const BipartiteGraph& g, Emit&& emit) {
    auto nb = neighbors_of(g);
    std::vector<int> path;
    std::vector<char> on_path(g.num_vertices(), 0);
    auto dfs = [&](auto&& self, int v) -> void {
        for (int u : nb[v]) {
            if (on_path[u]) continue;
            path.push_back(u);
            on_path[u] = 1;
            emit(path);
            self(self, u);
            on_path[u] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < g.num_vertices(); ++s) {
        path = {s};
        on_path.assign(g.num_vertices(), 0);
        on_path[s] = 1;
        dfs(dfs, s);
    }
}

}  // namespace

std::vector<Walk> enumerate_even_cycles(const BipartiteGraph& g,
                                        const WalkLimits& limits) {
    auto nb = neighbors_of(g);
    std::vector<Walk> out;
    std::vector<int> path;
    std::vector<char> on_path(g.num_vertices(), 0);
    int root = 0;
    // Cycles rooted at their least vertex, only vertices > root beyond it;
    // recorded in one direction only (second vertex < last vertex).
    auto dfs = [&](auto&& self, int v) -> void {
        for (int u : nb[v]) {
            if (u == root && path.size() >= 4) {
                if (path[1] < path.back()) {
                    out.push_back(make_even_cycle(g, path));
                    check_cap(out.size(), limits);
                }
            } else if (u > root && !on_path[u]) {
                path.push_back(u);
                on_path[u] = 1;
                self(self, u);
                on_path[u] = 0;
                path.pop_back();
            }
        }
    };
    for (root = 0; root < g.num_vertices(); ++root) {
        path = {root};
        on_path.assign(g.num_vertices(), 0);
        on_path[root] = 1;
        dfs(dfs, root);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Walk> enumerate_even_paths(const BipartiteGraph& g,
                                       const WalkLimits& limits) {
    std::vector<Walk> out;
    all_simple_paths(g, [&](const std::vector<int>& path) {
        if (path.size() % 2 == 1 && path.size() >= 3 &&
            path.front() < path.back()) {
            out.push_back(make_even_path(g, path));
            check_cap(out.size(), limits);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Walk> enumerate_disjoint_odd_pairs(const BipartiteGraph& g,
                                               const WalkLimits& limits) {
    // Odd paths once each, oriented to start on side X.
    std::vector<std::vector<int>> odd;
    all_simple_paths(g, [&](const std::vector<int>& path) {
        if (path.size() % 2 == 0 && g.is_x_vertex(path.front())) {
            odd.push_back(path);
            check_cap(odd.size(), limits);
        }
    });
    std::vector<Walk> out;
    for (size_t i = 0; i < odd.size(); ++i) {
        std::vector<char> used(g.num_vertices(), 0);
        for (int v : odd[i]) used[v] = 1;
        for (size_t j = i + 1; j < odd.size(); ++j) {
            bool disjoint = true;
            for (int v : odd[j])
                if (used[v]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            out.push_back(make_odd_pair(g, odd[i], odd[j]));
            check_cap(out.size(), limits);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Splits the steps of one sequence into the alternating T-products:
// steps 1,3,5,... (1-based) land in `odd_prod`, the rest in `even_prod`.
void accumulate_steps(const std::vector<int>& edge_ts, Monomial& even_prod,
                      Monomial& odd_prod) {
    for (size_t j = 0; j < edge_ts.size(); ++j) {
        Monomial& dst = (j % 2 == 0) ? odd_prod : even_prod;
        dst.t_exp(edge_ts[j]) += 1;
    }
}

void multiply_vertex(Monomial& mon, const BipartiteGraph& g, int v) {
    if (g.is_x_vertex(v))
        mon.x_exp(v) += 1;
    else
        mon.y_exp(v - g.n()) += 1;
}

}  // namespace

Binomial binomial_of_walk(const Walk& w, const BipartiteGraph& g) {
    Monomial even = Monomial::one(g);  // T_{w^+}
    Monomial odd = Monomial::one(g);   // T_{w^-}
    switch (w.kind) {
        case WalkKind::EvenCycle: {
            accumulate_steps(w.edge_ts.at(0), even, odd);
            return Binomial(even, odd);
        }
        case WalkKind::EvenPath: {
            accumulate_steps(w.edge_ts.at(0), even, odd);
            multiply_vertex(even, g, w.seqs[0].front());
            multiply_vertex(odd, g, w.seqs[0].back());
            return Binomial(even, odd);
        }
        case WalkKind::OddPathPair: {
            Monomial even2 = Monomial::one(g), odd2 = Monomial::one(g);
            accumulate_steps(w.edge_ts.at(0), even, odd);
            accumulate_steps(w.edge_ts.at(1), even2, odd2);
            Monomial a = even * odd2;  // T_{w1^+} T_{w2^-}
            Monomial b = odd * even2;  // T_{w1^-} T_{w2^+}
            multiply_vertex(a, g, w.seqs[0].front());
            multiply_vertex(a, g, w.seqs[0].back());
            multiply_vertex(b, g, w.seqs[1].front());
            multiply_vertex(b, g, w.seqs[1].back());
            return Binomial(a, b);
        }
    }
    throw MalformedWalkError("unknown walk kind");
}

std::vector<UgbElement> universal_groebner_basis(const BipartiteGraph& g,
                                                 const WalkLimits& limits) {
    std::vector<UgbElement> out;
    std::set<Binomial> seen;
    auto add = [&](std::vector<Walk>&& walks) {
        for (Walk& w : walks) {
            Binomial b = binomial_of_walk(w, g);
            if (seen.insert(b).second)
                out.push_back(UgbElement{std::move(w), std::move(b)});
        }
    };
    add(enumerate_even_cycles(g, limits));
    add(enumerate_even_paths(g, limits));
    add(enumerate_disjoint_odd_pairs(g, limits));
    std::sort(out.begin(), out.end(),
              [](const UgbElement& a, const UgbElement& b) {
                  return a.binomial < b.binomial;
              });
    return out;
}

std::vector<Binomial> ugb_binomials(const BipartiteGraph& g,
                                    const WalkLimits& limits) {
    std::vector<Binomial> out;
    for (auto& e : universal_groebner_basis(g, limits))
        out.push_back(e.binomial);
    return out;
}

}  // namespace reesgb
