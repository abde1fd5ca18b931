#include "reesgb/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace reesgb {

Json monomial_json(const Monomial& m) {
    return Json{{"x", m.xs()}, {"y", m.ys()}, {"T", m.ts()}};
}

Json binomial_json(const Binomial& b, const BipartiteGraph& g) {
    return Json{{"plus", monomial_json(b.plus())},
                {"minus", monomial_json(b.minus())},
                {"str", b.str(g)}};
}

namespace {

const char* walk_kind_name(WalkKind k) {
    switch (k) {
        case WalkKind::EvenCycle:
            return "even_cycle";
        case WalkKind::EvenPath:
            return "even_path";
        case WalkKind::OddPathPair:
            return "odd_path_pair";
    }
    return "?";
}

}  // namespace

Json walk_json(const Walk& w, const BipartiteGraph& g) {
    Json seqs = Json::array();
    for (const auto& seq : w.seqs) {
        Json labels = Json::array();
        for (int v : seq) labels.push_back(g.label(v));
        seqs.push_back(labels);
    }
    return seqs;
}

Json graph_info_json(const BipartiteGraph& g, int cap_edges) {
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back(Json::array({e.x + 1, e.y + 1}));
    return Json{{"x_labels", g.x_labels()},
                {"y_labels", g.y_labels()},
                {"edges", edges},
                {"n", g.n()},
                {"m", g.m()},
                {"q", g.q()},
                {"match", matching_number(g)},
                {"b", min_maximal_matching_number(g, cap_edges)},
                {"tau", static_cast<int>(min_vertex_cover(g).size())},
                {"beta0", independence_number(g)},
                {"dim", rees_dimension(g)}};
}

Json ugb_json(const std::vector<UgbElement>& ugb, const BipartiteGraph& g) {
    Json out = Json::array();
    for (const UgbElement& e : ugb) {
        Json item{{"kind", walk_kind_name(e.walk.kind)},
                  {"walk", walk_json(e.walk, g)}};
        Json bin = binomial_json(e.binomial, g);
        item["plus"] = bin["plus"];
        item["minus"] = bin["minus"];
        item["str"] = bin["str"];
        out.push_back(item);
    }
    return out;
}

Json circuits_json(const std::vector<std::vector<int>>& circuits,
                   const BipartiteGraph& g) {
    Json out = Json::array();
    for (const auto& c : circuits) {
        Binomial b = circuit_binomial(c, g);
        out.push_back(Json{{"vector", c}, {"binomial", b.str(g)}});
    }
    return out;
}

Json groebner_json(const GroebnerBasis& gb, const BipartiteGraph& g) {
    Json elems = Json::array();
    for (const GBElement& e : gb.elements)
        elems.push_back(Json{{"lead", monomial_json(e.lead)},
                             {"tail", monomial_json(e.tail)},
                             {"str", e.lead.str(g) + " - " + e.tail.str(g)}});
    return Json{{"order", gb.order.description()},
                {"reduced", gb.reduced},
                {"elements", elems}};
}

Json verification_json(const UgbVerification& v) {
    Json orders = Json::array();
    for (const OrderVerification& o : v.per_order)
        orders.push_back(Json{{"order", o.order},
                              {"reduced_subset_of_ugb", o.reduced_subset_of_ugb},
                              {"ugb_reduces_to_zero", o.ugb_reduces_to_zero},
                              {"reduced_size", o.reduced_size},
                              {"ok", o.ok()}});
    return Json{{"ok", v.ok()}, {"orders", orders}};
}

Json betti_table_json(const BettiTable& t) {
    const bool rees = t.mode == BettiTable::Mode::ReesBigraded;
    Json entries = Json::array();
    for (const auto& [key, beta] : t.entries) {
        if (beta == 0) continue;
        auto [i, a, b] = key;
        if (rees)
            entries.push_back(Json{{"i", i}, {"a", a}, {"b", b}, {"beta", beta}});
        else
            entries.push_back(Json{{"i", i}, {"d", a}, {"beta", beta}});
    }
    Json audit{{"strands", t.audit.strands},
               {"materialized", t.audit.materialized},
               {"dd_checks", t.audit.dd_checks},
               {"euler_checks", t.audit.euler_checks},
               {"all_dd_zero", t.audit.all_dd_zero},
               {"all_euler_ok", t.audit.all_euler_ok}};
    return Json{{"mode", rees ? "rees" : "power"},
                {"window", Json::array({t.window_a, t.window_b})},
                {"complete", t.complete},
                {"entries", entries},
                {"audit", audit}};
}

std::string betti_table_text(const BettiTable& t) {
    // Macaulay-style grid: columns are homological degrees, rows are
    // (total degree - i); bigraded detail listed underneath in Rees mode.
    const bool rees = t.mode == BettiTable::Mode::ReesBigraded;
    int max_i = 0, max_row = 0, min_row = 0;
    std::map<std::pair<int, int>, long long> grid;  // (row, i) -> beta
    for (const auto& [key, beta] : t.entries) {
        if (beta == 0) continue;
        auto [i, a, b] = key;
        int row = a + b - i;
        grid[{row, i}] += beta;
        max_i = std::max(max_i, i);
        max_row = std::max(max_row, row);
        min_row = std::min(min_row, row);
    }
    std::ostringstream out;
    out << (rees ? "bigraded Betti table (rows a+b-i, cols i)"
                 : "Betti table of R/I^s (rows d-i, cols i)")
        << (t.complete ? "" : "  [window incomplete]") << "\n     ";
    for (int i = 0; i <= max_i; ++i) out << std::setw(6) << i;
    out << '\n';
    for (int row = min_row; row <= max_row; ++row) {
        out << std::setw(4) << row << ':';
        for (int i = 0; i <= max_i; ++i) {
            auto it = grid.find({row, i});
            if (it == grid.end())
                out << std::setw(6) << '.';
            else
                out << std::setw(6) << it->second;
        }
        out << '\n';
    }
    if (rees) {
        out << "bigraded entries:\n";
        for (const auto& [key, beta] : t.entries) {
            if (beta == 0) continue;
            auto [i, a, b] = key;
            out << "  beta_" << i << ",(" << a << ',' << b << ") = " << beta
                << '\n';
        }
    }
    return out.str();
}

Json claims_json(const std::vector<Claim>& claims) {
    Json out = Json::array();
    for (const Claim& c : claims)
        out.push_back(Json{{"claim", c.claim},
                           {"lhs", c.lhs},
                           {"relation", c.relation},
                           {"rhs", c.rhs},
                           {"holds", c.holds},
                           {"asserted", c.asserted}});
    return out;
}

Json bounds_report_json(const BoundsReport& rep) {
    Json regs = Json::array();
    for (const PowerRegularity& r : rep.regs)
        regs.push_back(Json{{"s", r.s}, {"reg", r.reg}});
    return Json{{"ok", rep.ok()},
                {"regularities", regs},
                {"claims", claims_json(rep.claims)}};
}

Json linearity_report_json(const LinearityReport& rep) {
    Json steps = Json::array();
    for (const LinearityStep& s : rep.steps)
        steps.push_back(Json{{"s", s.s},
                             {"reg_s", s.reg_s},
                             {"reg_next", s.reg_next},
                             {"asserted", s.asserted},
                             {"holds", s.holds}});
    return Json{{"ok", rep.ok()},
                {"threshold", rep.threshold},
                {"steps", steps}};
}

}  // namespace reesgb
