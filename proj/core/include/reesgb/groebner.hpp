#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reesgb/graph.hpp"
#include "reesgb/monomial.hpp"
#include "reesgb/order.hpp"

namespace reesgb {

/// Basis element with its leading term designated by the basis order.
struct GBElement {
    Monomial lead, tail;
    Binomial canonical() const { return Binomial(lead, tail); }
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<GBElement> elements;
    bool reduced = false;
};

/// Normal form of a monomial: rewrites by lead -> tail until no leading
/// term divides. Always a monomial.
Monomial normal_form(Monomial mon, const GroebnerBasis& gb);

/// Normal form of a pure difference; nullopt when it reduces to zero.
std::optional<Binomial> normal_form(const Binomial& f,
                                    const GroebnerBasis& gb);

/// The S-polynomial of two oriented binomials; nullopt when it cancels.
std::optional<Binomial> spoly(const GBElement& f, const GBElement& g);

/// Buchberger's algorithm on pure-difference binomials (the toric setting
/// keeps every S-polynomial and remainder a pure difference). Normal pair
/// selection by lcm degree, coprime-lead pairs skipped.
GroebnerBasis buchberger(const std::vector<Binomial>& gens,
                         const MonomialOrder& order);

/// Inter-reduction: minimal leads, fully reduced tails. The result is the
/// unique reduced basis for the order.
GroebnerBasis reduce_basis(GroebnerBasis gb);

/// Minimal monomial generators of the initial ideal (the leading terms of
/// the reduced basis), sorted canonically.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);

/// Named orders (lex and grevlex under a few block permutations, a
/// matching-product order for every maximal matching up to
/// `matching_cap`) followed by `k` seeded weight orders.
std::vector<MonomialOrder> sample_orders(const BipartiteGraph& g, int k,
                                         unsigned long long seed,
                                         int matching_cap = 32,
                                         int cap_edges = 24);

struct OrderVerification {
    std::string order;
    bool reduced_subset_of_ugb = false;
    bool ugb_reduces_to_zero = false;
    int reduced_size = 0;
    bool ok() const { return reduced_subset_of_ugb && ugb_reduces_to_zero; }
};

struct UgbVerification {
    std::vector<OrderVerification> per_order;
    bool ok() const {
        for (const auto& v : per_order)
            if (!v.ok()) return false;
        return true;
    }
};

/// For each order, computes the reduced basis generated by `gens` and
/// checks (a) it is contained in `reference` as canonical sets and
/// (b) every element of `reference` reduces to zero against it.
UgbVerification verify_orders(const std::vector<Binomial>& gens,
                              const std::vector<Binomial>& reference,
                              const std::vector<MonomialOrder>& orders);

/// `verify_orders` with the universal basis as both generators and
/// reference.
UgbVerification verify_ugb(const BipartiteGraph& g,
                           const std::vector<MonomialOrder>& orders);

/// Checks, on the reduced basis under the matching-product order of `mt`,
/// that every element coming from a pair of odd paths has a matched
/// vertex in each of its two terms.
bool endpoint_lemma_check(const BipartiteGraph& g, const Matching& mt);

/// Builds the complete bipartite graph internally and checks that the
/// reduced matching-product basis only holds elements of vertex degree
/// at most one per term. Throws SizeLimitError when n*m > cap.
bool linear_xy_check_complete(int n, int m, int cap = 64);

/// Bidegrees of a minimal generating set of the Rees ideal, with
/// multiplicities, obtained by discarding members of the universal basis
/// that the remaining ones generate (ascending degree, deterministic).
std::map<std::pair<int, int>, int> minimal_generator_bidegrees(
    const BipartiteGraph& g);

}  // namespace reesgb
