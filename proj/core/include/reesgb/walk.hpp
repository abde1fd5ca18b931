#pragma once

#include <vector>

#include "reesgb/graph.hpp"
#include "reesgb/monomial.hpp"

namespace reesgb {

enum class WalkKind { EvenCycle, EvenPath, OddPathPair };

/// Canonicalized walk in a bipartite graph, as vertex sequences (global
/// vertex ids) plus the T-index of every step.
///
/// Canonical forms, enforced by the factories:
///  - EvenCycle: stored without repeating the start; rotated/reflected so
///    the least vertex comes first and its smaller cycle-neighbor second.
///  - EvenPath: endpoint-ordered, least endpoint first.
///  - OddPathPair: each path starts on side X; paths ordered by start.
struct Walk {
    WalkKind kind;
    std::vector<std::vector<int>> seqs;     // 1 sequence, or 2 for pairs
    std::vector<std::vector<int>> edge_ts;  // per-step edge indices

    friend bool operator==(const Walk&, const Walk&) = default;
    friend bool operator<(const Walk& a, const Walk& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.seqs < b.seqs;
    }
    std::string str(const BipartiteGraph& g) const;
};

Walk make_even_cycle(const BipartiteGraph& g, std::vector<int> vertices);
Walk make_even_path(const BipartiteGraph& g, std::vector<int> vertices);
Walk make_odd_pair(const BipartiteGraph& g, std::vector<int> first,
                   std::vector<int> second);

/// Rebuilds the walk through its factory; the identity on canonical input.
Walk canonicalize(const BipartiteGraph& g, const Walk& w);

struct WalkLimits {
    std::size_t max_walks = 200000;
};

/// All simple cycles, each once in canonical form (every cycle of a
/// bipartite graph is even).
std::vector<Walk> enumerate_even_cycles(const BipartiteGraph& g,
                                        const WalkLimits& limits = {});
/// All simple paths with an even number of edges (at least 2).
std::vector<Walk> enumerate_even_paths(const BipartiteGraph& g,
                                       const WalkLimits& limits = {});
/// All unordered pairs of vertex-disjoint simple paths of odd length.
std::vector<Walk> enumerate_disjoint_odd_pairs(const BipartiteGraph& g,
                                               const WalkLimits& limits = {});

/// Translates a canonical walk into its binomial: cycles give pure
/// T-binomials, even paths attach the two endpoints, odd pairs attach
/// both endpoint products. Result is canonically signed.
Binomial binomial_of_walk(const Walk& w, const BipartiteGraph& g);

struct UgbElement {
    Walk walk;
    Binomial binomial;
};

/// The universal Groebner basis of the Rees ideal: the three walk
/// families translated to binomials, deduplicated by canonical form and
/// sorted canonically.
std::vector<UgbElement> universal_groebner_basis(const BipartiteGraph& g,
                                                 const WalkLimits& limits = {});

/// The binomials of `universal_groebner_basis`, without the walks.
std::vector<Binomial> ugb_binomials(const BipartiteGraph& g,
                                    const WalkLimits& limits = {});

}  // namespace reesgb
