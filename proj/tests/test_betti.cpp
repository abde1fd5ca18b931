#include <map>
#include <random>

#include "doctest.h"
#include "reesgb/groebner.hpp"
#include "reesgb/koszul.hpp"
#include "reesgb/membership.hpp"
#include "reesgb/reports.hpp"
#include "reesgb/walk.hpp"
#include "test_helpers.hpp"

using namespace reesgb;
using namespace reesgb::testing;

TEST_CASE("edge power membership") {
    BipartiteGraph k11 = parse_graph("x1 y1\n");
    CHECK(edge_power_membership({1, 1}, 1, k11));
    CHECK(!edge_power_membership({2, 1}, 2, k11));  // x1^2*y1 needs y1^2
    CHECK(edge_power_membership({2, 2}, 2, k11));
    CHECK(edge_power_membership({5, 0}, 0, k11));  // I^0 = R

    BipartiteGraph c4 = cycle_graph(4);
    CHECK(edge_power_membership({1, 1, 1, 1}, 2, c4));  // opposite edges
}

TEST_CASE("membership agrees with multiset enumeration") {
    std::mt19937_64 rng(99);
    for (const auto& name : {std::string("c4"), std::string("example")}) {
        BipartiteGraph g = corpus_graph(name);
        CAPTURE(name);
        MembershipOracle oracle(g);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<int> w(g.num_vertices());
            for (int& e : w) e = static_cast<int>(rng() % 4);
            int b = static_cast<int>(rng() % 4);
            CHECK(oracle.contains(w, b) ==
                  brute_edge_power_membership(g, w, b));
        }
    }
}

TEST_CASE("piece bases") {
    BipartiteGraph c4 = cycle_graph(4);
    CHECK(piece_basis(c4, 0, 0).dim() == 1);
    CHECK(piece_basis(c4, 0, 1).dim() == 4);  // the four edge monomials

    // (1,1): all degree-3 monomials in I, cross-checked by enumeration
    PieceBasis p = piece_basis(c4, 1, 1);
    int expected = 0;
    std::vector<int> w(c4.num_vertices(), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == c4.num_vertices()) {
            if (left == 0 && brute_edge_power_membership(c4, w, 1)) ++expected;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            w[pos] = e;
            self(self, pos + 1, left - e);
        }
        w[pos] = 0;
    };
    rec(rec, 0, 3);
    CHECK(p.dim() == expected);

    // b = 0 gives the full degree-a piece of the polynomial ring
    CHECK(piece_basis(c4, 3, 0).dim() == 20);  // C(3+3,3)
    CHECK_THROWS_AS(piece_basis(c4, 50, 0, 40), SizeLimitError);
}

TEST_CASE("piece dimension equals the number of fibers of psi") {
    // dim (S/J)_(a,b) counts distinct images of the degree-(a,b) monomials
    // of S, which is what the piece basis enumerates directly.
    BipartiteGraph g = example_graph();
    MembershipOracle oracle(g);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            std::set<std::pair<std::vector<int>, int>> fibers;
            Monomial mon = Monomial::one(g);
            auto enumerate = [&](auto&& self, int slot, int xy_left,
                                 int t_left) -> void {
                const int nm = g.n() + g.m(), q = g.q();
                if (slot == nm + q) {
                    if (xy_left == 0 && t_left == 0) {
                        PsiImage im = psi(mon, g);
                        fibers.insert({im.w, im.t});
                    }
                    return;
                }
                bool is_t = slot >= nm;
                int& budget = is_t ? t_left : xy_left;
                for (int e = 0; e <= budget; ++e) {
                    int* exp = nullptr;
                    if (slot < g.n())
                        exp = &mon.x_exp(slot);
                    else if (slot < nm)
                        exp = &mon.y_exp(slot - g.n());
                    else
                        exp = &mon.t_exp(slot - nm);
                    *exp = e;
                    int saved = budget;
                    budget -= e;
                    self(self, slot + 1, xy_left, t_left);
                    budget = saved;
                    *exp = 0;
                }
            };
            enumerate(enumerate, 0, a, b);
            CHECK(static_cast<int>(fibers.size()) ==
                  piece_basis(g, a, b, 40, &oracle).dim());
        }
}

namespace {

std::map<std::array<int, 3>, long long> nonzero_entries(const BettiTable& t) {
    std::map<std::array<int, 3>, long long> out;
    for (const auto& [k, v] : t.entries)
        if (v != 0) out[k] = v;
    return out;
}

}  // namespace

TEST_CASE("Rees Betti tables on the small corpus") {
    BipartiteGraph k11 = parse_graph("x1 y1\n");
    BettiTable tk = koszul_betti_rees(k11);
    CHECK(tk.complete);
    CHECK(nonzero_entries(tk) ==
          std::map<std::array<int, 3>, long long>{{{0, 0, 0}, 1}});
    RegStats rk = reg_stats(tk);
    CHECK(rk.reg == 0);
    CHECK(rk.pd == 0);

    BettiTable tp = koszul_betti_rees(path_graph(3));
    CHECK(nonzero_entries(tp) ==
          std::map<std::array<int, 3>, long long>{{{0, 0, 0}, 1},
                                                  {{1, 1, 1}, 1}});
    RegStats rp = reg_stats(tp);
    CHECK(rp.reg == 1);
    CHECK(rp.reg_xy == 0);
    CHECK(rp.reg_T == 0);
    CHECK(rp.pd == 1);

    BettiTable tc = koszul_betti_rees(cycle_graph(4));
    RegStats rc = reg_stats(tc);
    CHECK(rc.reg == 2);
    CHECK(rc.pd == 3);
    CHECK(tc.audit.all_dd_zero);
    CHECK(tc.audit.all_euler_ok);
}

TEST_CASE("the Rees module is cyclic: beta_0 lives only at (0,0)") {
    for (const auto& name : {std::string("c4"), std::string("example")}) {
        BipartiteGraph g = corpus_graph(name);
        CAPTURE(name);
        BettiTable t = koszul_betti_rees(g);
        CHECK(t.beta(0, 0, 0) == 1);
        for (const auto& [key, beta] : t.entries)
            if (key[0] == 0 && beta != 0) {
                CHECK(key[1] == 0);
                CHECK(key[2] == 0);
            }
    }
}

TEST_CASE("window enlargement does not change the table") {
    BipartiteGraph p4 = path_graph(4);
    BettiTable base = koszul_betti_rees(p4);
    KoszulOptions wide;
    wide.window = {base.window_a + 2, base.window_b + 2};
    BettiTable enlarged = koszul_betti_rees(p4, wide);
    CHECK(enlarged.complete);
    CHECK(nonzero_entries(base) == nonzero_entries(enlarged));
}

TEST_CASE("full audit mode agrees with the shortcut mode") {
    for (const auto& name : {std::string("p4"), std::string("c4")}) {
        BipartiteGraph g = corpus_graph(name);
        CAPTURE(name);
        KoszulOptions audit;
        audit.full_audit = true;
        BettiTable a = koszul_betti_rees(g, audit);
        BettiTable b = koszul_betti_rees(g);
        CHECK(nonzero_entries(a) == nonzero_entries(b));
        CHECK(a.audit.materialized == a.audit.strands);
        CHECK(a.audit.dd_checks > 0);
        CHECK(a.audit.all_dd_zero);
        CHECK(a.audit.all_euler_ok);
    }
}

TEST_CASE("large-prime mode matches exact arithmetic on the corpus") {
    KoszulOptions modp;
    modp.modular_prime = 2147483629;  // large prime, avoids bad torsion
    for (const auto& name :
         {std::string("p4"), std::string("c4"), std::string("example")}) {
        BipartiteGraph g = corpus_graph(name);
        CAPTURE(name);
        CHECK(nonzero_entries(koszul_betti_rees(g, modp)) ==
              nonzero_entries(koszul_betti_rees(g)));
    }
    CHECK(nonzero_entries(koszul_betti_power(corpus_graph("k22"), 2, {}, modp)) ==
          nonzero_entries(koszul_betti_power(corpus_graph("k22"), 2)));
}

TEST_CASE("incomplete windows are flagged and refuse reg stats") {
    BipartiteGraph c4 = cycle_graph(4);
    KoszulOptions narrow;
    narrow.window = {0, 0};
    BettiTable t = koszul_betti_rees(c4, narrow);
    CHECK(!t.complete);
    CHECK_THROWS_AS(reg_stats(t), IncompleteTableError);
}

TEST_CASE("variable cap") {
    KoszulOptions opts;
    opts.var_cap = 5;
    CHECK_THROWS_AS(koszul_betti_rees(example_graph(), opts), SizeLimitError);
}

TEST_CASE("power tables") {
    BipartiteGraph k11 = parse_graph("x1 y1\n");
    for (int s = 1; s <= 3; ++s) {
        BettiTable t = koszul_betti_power(k11, s);
        CHECK(t.complete);
        CHECK(power_ideal_regularity(t) == 2 * s);
        CHECK(t.beta(0, 0) == 1);
    }
    CHECK(power_ideal_regularity(koszul_betti_power(complete_bipartite(2, 2), 1)) ==
          2);
    CHECK(power_ideal_regularity(koszul_betti_power(path_graph(3), 1)) == 2);
    CHECK_THROWS_AS(koszul_betti_power(parse_graph("x1 y1\n"), 0), InputError);
    CHECK_THROWS_AS(koszul_betti_power(complete_bipartite(3, 4), 30),
                    SizeLimitError);
    CHECK_THROWS_AS(power_ideal_regularity(koszul_betti_rees(k11)),
                    InputError);
}

TEST_CASE("beta_1 equals the minimal generator bidegrees") {
    for (const auto& name :
         {std::string("p3"), std::string("p4"), std::string("p5"),
          std::string("c4"), std::string("example")}) {
        BipartiteGraph g = corpus_graph(name);
        CAPTURE(name);
        BettiTable t = koszul_betti_rees(g);
        std::map<std::pair<int, int>, int> from_table;
        for (const auto& [key, beta] : t.entries)
            if (key[0] == 1 && beta != 0)
                from_table[{key[1], key[2]}] = static_cast<int>(beta);
        CHECK(from_table == minimal_generator_bidegrees(g));
    }
}

TEST_CASE("taylor bound for the vertex regularity") {
    CHECK(taylor_xy_bound({}) == 0);
    BipartiteGraph p3 = path_graph(3);
    CHECK(taylor_xy_bound({parse_monomial(p3, "x1*T2")}) == 0);
    CHECK_THROWS_AS(
        taylor_xy_bound(std::vector<Monomial>(25, Monomial::one(p3)), 20),
        SizeLimitError);

    // semicontinuity: the bound dominates the true vertex regularity for
    // every sampled order
    for (const auto& name : {std::string("p4"), std::string("c4"),
                             std::string("example")}) {
        BipartiteGraph g = corpus_graph(name);
        CAPTURE(name);
        int reg_xy = reg_stats(koszul_betti_rees(g)).reg_xy;
        auto ugb = ugb_binomials(g);
        for (const MonomialOrder& o : sample_orders(g, 5, 3)) {
            auto init = initial_ideal(buchberger(ugb, o));
            CHECK(reg_xy <= taylor_xy_bound(init));
        }
    }
}

TEST_CASE("rees dimension equals N+1") {
    CHECK(rees_dimension(parse_graph("x1 y1\n")) == 3);
    CHECK(rees_dimension(cycle_graph(4)) == 5);
    CHECK(rees_dimension(example_graph()) == 7);
    for (const auto& entry : corpus()) {
        const std::string& name = entry.first;
        const BipartiteGraph& g = entry.second;
        CAPTURE(name);
        CHECK(rees_dimension(g) == g.num_vertices() + 1);
    }
}

TEST_CASE("bounds report") {
    BoundsReport k11 = bounds_report(parse_graph("x1 y1\n"), 3);
    CHECK(k11.ok());
    REQUIRE(k11.regs.size() == 3);
    for (const auto& r : k11.regs) CHECK(r.reg == 2 * r.s);

    CHECK(bounds_report(cycle_graph(4), 2).ok());
    BoundsReport k23 = bounds_report(complete_bipartite(2, 3), 3);
    CHECK(k23.ok());
    for (const auto& r : k23.regs) CHECK(r.reg == 2 * r.s);
}

TEST_CASE("linearity report") {
    BipartiteGraph p3 = path_graph(3);
    LinearityReport rep = linearity_check(p3, 4, 6);
    CHECK(rep.threshold == 4);  // match + q + 1 = 1 + 2 + 1
    REQUIRE(rep.steps.size() == 2);
    for (const auto& s : rep.steps) {
        CHECK(s.asserted);
        CHECK(s.holds);
    }
    CHECK(rep.ok());

    LinearityReport k11 = linearity_check(parse_graph("x1 y1\n"), 3, 5);
    CHECK(k11.threshold == 3);
    CHECK(k11.ok());

    // below the threshold nothing is asserted
    LinearityReport below = linearity_check(cycle_graph(4), 1, 3);
    CHECK(below.threshold == 7);
    for (const auto& s : below.steps) CHECK(!s.asserted);
    CHECK(below.ok());

    CHECK_THROWS_AS(linearity_check(p3, 0, 2), InputError);
}
