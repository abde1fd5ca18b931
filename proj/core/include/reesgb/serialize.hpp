#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "reesgb/circuits.hpp"
#include "reesgb/graph.hpp"
#include "reesgb/groebner.hpp"
#include "reesgb/koszul.hpp"
#include "reesgb/monomial.hpp"
#include "reesgb/reports.hpp"
#include "reesgb/walk.hpp"

namespace reesgb {

/// Insertion-ordered JSON keeps output byte-identical across runs.
using Json = nlohmann::ordered_json;

Json monomial_json(const Monomial& m);
Json binomial_json(const Binomial& b, const BipartiteGraph& g);
Json walk_json(const Walk& w, const BipartiteGraph& g);

/// {x_labels, y_labels, edges, match, b, tau, beta0} plus n, m, q, dim.
Json graph_info_json(const BipartiteGraph& g, int cap_edges = 24);

/// List of {kind, walk, plus, minus, str}.
Json ugb_json(const std::vector<UgbElement>& ugb, const BipartiteGraph& g);

Json circuits_json(const std::vector<std::vector<int>>& circuits,
                   const BipartiteGraph& g);

/// Basis elements as {lead, tail, str} under the basis order.
Json groebner_json(const GroebnerBasis& gb, const BipartiteGraph& g);

Json verification_json(const UgbVerification& v);

/// {mode, window, complete, entries} with entries {i,a,b,beta} in Rees
/// mode and {i,d,beta} in power mode.
Json betti_table_json(const BettiTable& t);
std::string betti_table_text(const BettiTable& t);

Json claims_json(const std::vector<Claim>& claims);
Json bounds_report_json(const BoundsReport& rep);
Json linearity_report_json(const LinearityReport& rep);

}  // namespace reesgb
