#include "reesgb/groebner.hpp"

#include <algorithm>
#include <set>

#include "reesgb/walk.hpp"

namespace reesgb {

Monomial normal_form(Monomial mon, const GroebnerBasis& gb) {
    bool rewrote = true;
    while (rewrote) {
        rewrote = false;
        for (const GBElement& e : gb.elements) {
            if (e.lead.divides(mon)) {
                mon = mon.divided_by(e.lead) * e.tail;
                rewrote = true;
                break;
            }
        }
    }
    return mon;
}

std::optional<Binomial> normal_form(const Binomial& f,
                                    const GroebnerBasis& gb) {
    Monomial a = normal_form(f.plus(), gb);
    Monomial b = normal_form(f.minus(), gb);
    return Binomial::make(std::move(a), std::move(b));
}

std::optional<Binomial> spoly(const GBElement& f, const GBElement& g) {
    Monomial l = lcm(f.lead, g.lead);
    Monomial a = l.divided_by(f.lead) * f.tail;
    Monomial b = l.divided_by(g.lead) * g.tail;
    return Binomial::make(std::move(a), std::move(b));
}

namespace {

GBElement orient(const Binomial& b, const MonomialOrder& order) {
    if (order.greater(b.plus(), b.minus()))
        return GBElement{b.plus(), b.minus()};
    return GBElement{b.minus(), b.plus()};
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Binomial>& gens,
                         const MonomialOrder& order) {
    GroebnerBasis gb{order, {}, false};
    struct Pair {
        int deg;
        int i, j;
        bool operator<(const Pair& o) const {
            return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
        }
    };
    std::set<Pair> queue;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (gcd(gb.elements[i].lead, gb.elements[j].lead).is_one())
                continue;  // coprime leads reduce to zero
            int deg =
                lcm(gb.elements[i].lead, gb.elements[j].lead).total_degree();
            queue.insert(Pair{deg, i, j});
        }
    };
    for (const Binomial& b : gens) {
        gb.elements.push_back(orient(b, order));
        push_pairs(static_cast<int>(gb.elements.size()) - 1);
    }
    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        auto s = spoly(gb.elements[p.i], gb.elements[p.j]);
        if (!s) continue;
        auto r = normal_form(*s, gb);
        if (!r) continue;
        gb.elements.push_back(orient(*r, order));
        push_pairs(static_cast<int>(gb.elements.size()) - 1);
    }
    return gb;
}

GroebnerBasis reduce_basis(GroebnerBasis gb) {
    // Keep only elements whose lead no other kept lead divides.
    std::vector<GBElement> minimal;
    for (size_t i = 0; i < gb.elements.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gb.elements.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = gb.elements[i].lead;
            const Monomial& lj = gb.elements[j].lead;
            if (lj == li)
                redundant = j < i;  // deduplicate equal leads
            else if (lj.divides(li))
                redundant = true;
        }
        if (!redundant) minimal.push_back(gb.elements[i]);
    }
    GroebnerBasis out{gb.order, std::move(minimal), true};
    for (GBElement& e : out.elements) e.tail = normal_form(e.tail, out);
    std::erase_if(out.elements,
                  [](const GBElement& e) { return e.lead == e.tail; });
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const GBElement& a, const GBElement& b) {
                  return out.order.less(a.lead, b.lead);
              });
    return out;
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
    const GroebnerBasis* basis = &gb;
    GroebnerBasis reduced{gb.order, {}, false};
    if (!gb.reduced) {
        reduced = reduce_basis(gb);
        basis = &reduced;
    }
    std::vector<Monomial> out;
    for (const GBElement& e : basis->elements) out.push_back(e.lead);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MonomialOrder> sample_orders(const BipartiteGraph& g, int k,
                                         unsigned long long seed,
                                         int matching_cap, int cap_edges) {
    std::vector<MonomialOrder> orders;
    const int n = g.n(), m = g.m(), q = g.q();
    std::vector<int> identity(n + m + q);
    for (int s = 0; s < n + m + q; ++s) identity[s] = s;
    std::vector<int> reversed(identity.rbegin(), identity.rend());
    std::vector<int> t_first;
    for (int t = 0; t < q; ++t) t_first.push_back(n + m + t);
    for (int s = 0; s < n + m; ++s) t_first.push_back(s);
    std::vector<int> t_first_rev(t_first.rbegin(), t_first.rend());
    for (const auto& p : {identity, reversed, t_first, t_first_rev}) {
        orders.push_back(MonomialOrder::lex(g, p));
        orders.push_back(MonomialOrder::grevlex(g, p));
    }
    auto matchings = maximal_matchings(g, cap_edges);
    for (size_t i = 0;
         i < matchings.size() && i < static_cast<size_t>(matching_cap); ++i)
        orders.push_back(MonomialOrder::match_product(g, matchings[i]));
    for (auto& o : sampled_weight_orders(g, k, seed))
        orders.push_back(std::move(o));
    return orders;
}

UgbVerification verify_orders(const std::vector<Binomial>& gens,
                              const std::vector<Binomial>& reference,
                              const std::vector<MonomialOrder>& orders) {
    std::set<Binomial> ref(reference.begin(), reference.end());
    UgbVerification rep;
    for (const MonomialOrder& order : orders) {
        GroebnerBasis gb = reduce_basis(buchberger(gens, order));
        OrderVerification v;
        v.order = order.description();
        v.reduced_size = static_cast<int>(gb.elements.size());
        v.reduced_subset_of_ugb = true;
        for (const GBElement& e : gb.elements)
            if (!ref.count(e.canonical())) {
                v.reduced_subset_of_ugb = false;
                break;
            }
        v.ugb_reduces_to_zero = true;
        for (const Binomial& b : reference)
            if (normal_form(b, gb)) {
                v.ugb_reduces_to_zero = false;
                break;
            }
        rep.per_order.push_back(std::move(v));
    }
    return rep;
}

UgbVerification verify_ugb(const BipartiteGraph& g,
                           const std::vector<MonomialOrder>& orders) {
    auto ugb = ugb_binomials(g);
    return verify_orders(ugb, ugb, orders);
}

namespace {

bool term_touches_matching(const Monomial& mon, const BipartiteGraph& g,
                           const std::vector<char>& x_covered,
                           const std::vector<char>& y_covered) {
    for (int i = 0; i < g.n(); ++i)
        if (mon.x_exp(i) > 0 && x_covered[i]) return true;
    for (int j = 0; j < g.m(); ++j)
        if (mon.y_exp(j) > 0 && y_covered[j]) return true;
    return false;
}

}  // namespace

bool endpoint_lemma_check(const BipartiteGraph& g, const Matching& mt) {
    MonomialOrder order = MonomialOrder::match_product(g, mt);
    GroebnerBasis gb = reduce_basis(buchberger(ugb_binomials(g), order));
    std::vector<char> x_covered(g.n(), 0), y_covered(g.m(), 0);
    for (int t : mt.edge_indices) {
        x_covered[g.edge(t).x] = 1;
        y_covered[g.edge(t).y] = 1;
    }
    for (const GBElement& e : gb.elements) {
        // Only binomials from disjoint odd pairs: vertex degree 2 per term.
        if (e.lead.xy_degree() != 2 || e.tail.xy_degree() != 2) continue;
        if (!term_touches_matching(e.lead, g, x_covered, y_covered) ||
            !term_touches_matching(e.tail, g, x_covered, y_covered))
            return false;
    }
    return true;
}

bool linear_xy_check_complete(int n, int m, int cap) {
    if (n * m > cap)
        throw SizeLimitError("complete bipartite check capped at " +
                             std::to_string(cap) + " edges");
    BipartiteGraph g = complete_bipartite(n, m);
    MonomialOrder order = MonomialOrder::match_product(g, maximum_matching(g));
    GroebnerBasis gb = reduce_basis(buchberger(ugb_binomials(g), order));
    for (const GBElement& e : gb.elements)
        if (e.lead.xy_degree() > 1 || e.tail.xy_degree() > 1) return false;
    return true;
}

std::map<std::pair<int, int>, int> minimal_generator_bidegrees(
    const BipartiteGraph& g) {
    std::vector<Binomial> ugb = ugb_binomials(g);
    // Ascending bidegree; generators of higher degree cannot produce lower
    // ones, so one sweep suffices.
    std::stable_sort(ugb.begin(), ugb.end(),
                     [](const Binomial& a, const Binomial& b) {
                         auto da = a.plus().bidegree(), db = b.plus().bidegree();
                         return std::pair(da.first + da.second, da) <
                                std::pair(db.first + db.second, db);
                     });
    MonomialOrder order = MonomialOrder::grevlex(g);
    std::vector<char> kept(ugb.size(), 1);
    for (size_t i = 0; i < ugb.size(); ++i) {
        std::vector<Binomial> others;
        for (size_t j = 0; j < ugb.size(); ++j)
            if (j != i && kept[j]) others.push_back(ugb[j]);
        GroebnerBasis gb = reduce_basis(buchberger(others, order));
        if (!normal_form(ugb[i], gb)) kept[i] = 0;
    }
    std::map<std::pair<int, int>, int> counts;
    for (size_t i = 0; i < ugb.size(); ++i)
        if (kept[i]) counts[ugb[i].plus().bidegree()] += 1;
    return counts;
}

}  // namespace reesgb
