#pragma once

#include <unordered_map>
#include <vector>

#include "reesgb/graph.hpp"

namespace reesgb {

/// Decides whether a vertex-variable monomial lies in the b-th power of
/// the edge ideal: the monomial x^w is in I^b iff b edge monomials
/// (with multiplicity) divide it simultaneously, which is a transportation
/// feasibility problem solved by max-flow with vertex capacities w.
///
/// Queries are memoized; the oracle is cheap to share across a whole
/// Betti computation.
class MembershipOracle {
public:
    explicit MembershipOracle(const BipartiteGraph& g) : g_(g) {}

    /// `w` has length N (X block then Y block), entries >= 0.
    bool contains(const std::vector<int>& w, int power) const;

    const BipartiteGraph& graph() const { return g_; }

private:
    bool flow_at_least(const std::vector<int>& w, int target) const;

    const BipartiteGraph& g_;
    mutable std::unordered_map<std::string, bool> memo_;
};

/// One-shot version of MembershipOracle::contains.
bool edge_power_membership(const std::vector<int>& w, int power,
                           const BipartiteGraph& g);

/// Monomial basis of a bigraded piece of the Rees algebra: all exponent
/// vectors of total degree a+2b over the vertex variables whose monomial
/// lies in I^b.
struct PieceBasis {
    int a = 0, b = 0;
    std::vector<std::vector<int>> monomials;
    int dim() const { return static_cast<int>(monomials.size()); }
};

/// Throws SizeLimitError when a+2b exceeds `degree_cap`.
PieceBasis piece_basis(const BipartiteGraph& g, int a, int b,
                       int degree_cap = 40,
                       const MembershipOracle* oracle = nullptr);

}  // namespace reesgb
