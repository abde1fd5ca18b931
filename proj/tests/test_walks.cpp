#include <set>

#include "doctest.h"
#include "reesgb/circuits.hpp"
#include "reesgb/linalg.hpp"
#include "reesgb/walk.hpp"
#include "test_helpers.hpp"

using namespace reesgb;
using namespace reesgb::testing;

TEST_CASE("cycle enumeration") {
    CHECK(enumerate_even_cycles(path_graph(4)).empty());
    CHECK(enumerate_even_cycles(cycle_graph(4)).size() == 1);
    CHECK(enumerate_even_cycles(cycle_graph(6)).size() == 1);
    for (const auto& entry : corpus()) {
        const std::string& name = entry.first;
        const BipartiteGraph& g = entry.second;
        CAPTURE(name);
        CHECK(static_cast<int>(enumerate_even_cycles(g).size()) ==
              brute_cycle_count(g));
    }
}

TEST_CASE("even path enumeration") {
    CHECK(enumerate_even_paths(parse_graph("x1 y1\n")).empty());
    BipartiteGraph ex = example_graph();
    auto ex_paths = enumerate_even_paths(ex);
    REQUIRE(ex_paths.size() == 2);
    std::set<Walk> got(ex_paths.begin(), ex_paths.end());
    std::set<Walk> expected{
        make_even_path(ex, {ex.x_vertex(1), ex.y_vertex(1), ex.x_vertex(2)}),
        make_even_path(ex, {ex.y_vertex(1), ex.x_vertex(2), ex.y_vertex(2)})};
    CHECK(got == expected);
    CHECK(enumerate_even_paths(cycle_graph(4)).size() == 4);
    for (const auto& entry : corpus()) {
        const std::string& name = entry.first;
        const BipartiteGraph& g = entry.second;
        CAPTURE(name);
        CHECK(static_cast<int>(enumerate_even_paths(g).size()) ==
              brute_path_count(g, 0, 2));
    }
}

TEST_CASE("disjoint odd pair enumeration") {
    BipartiteGraph star = parse_graph("c a\nc b\nc d\n");  // K_{1,3}
    CHECK(enumerate_disjoint_odd_pairs(star).empty());
    CHECK(enumerate_disjoint_odd_pairs(example_graph()).size() == 5);
    CHECK(enumerate_disjoint_odd_pairs(cycle_graph(4)).size() == 2);
}

TEST_CASE("enumeration caps raise explicit errors") {
    WalkLimits tight;
    tight.max_walks = 1;
    CHECK_THROWS_AS(enumerate_even_paths(cycle_graph(4), tight),
                    SizeLimitError);
    CHECK_THROWS_AS(enumerate_disjoint_odd_pairs(cycle_graph(6), tight),
                    SizeLimitError);
}

TEST_CASE("walk canonicalization is idempotent") {
    for (const auto& entry : corpus()) {
        const std::string& name = entry.first;
        const BipartiteGraph& g = entry.second;
        CAPTURE(name);
        auto check_all = [&](const std::vector<Walk>& walks) {
            for (const Walk& w : walks) CHECK(canonicalize(g, w) == w);
        };
        check_all(enumerate_even_cycles(g));
        check_all(enumerate_even_paths(g));
        check_all(enumerate_disjoint_odd_pairs(g));
    }
    // a reversed path canonicalizes back to endpoint order
    BipartiteGraph ex = example_graph();
    Walk fwd = make_even_path(ex, {ex.x_vertex(1), ex.y_vertex(1), ex.x_vertex(2)});
    Walk rev = make_even_path(ex, {ex.x_vertex(2), ex.y_vertex(1), ex.x_vertex(1)});
    CHECK(fwd == rev);
}

TEST_CASE("malformed walks are rejected") {
    BipartiteGraph ex = example_graph();
    // x1-y2 is not an edge
    CHECK_THROWS_AS(make_even_path(ex, {ex.x_vertex(0), ex.y_vertex(1),
                                        ex.x_vertex(2)}),
                    MalformedWalkError);
    // odd edge count for an even path
    CHECK_THROWS_AS(make_even_path(ex, {ex.x_vertex(0), ex.y_vertex(0)}),
                    MalformedWalkError);
    // pair sharing a vertex
    CHECK_THROWS_AS(
        make_odd_pair(ex, {ex.x_vertex(1), ex.y_vertex(1)},
                      {ex.x_vertex(2), ex.y_vertex(1)}),
        MalformedWalkError);
    // cycles need length >= 4
    CHECK_THROWS_AS(make_even_cycle(ex, {ex.x_vertex(0), ex.y_vertex(0)}),
                    MalformedWalkError);
}

TEST_CASE("binomial translation of walks") {
    BipartiteGraph ex = example_graph();
    // The odd pair (x1,y1) | (x2,y2,x3,y3)
    Walk pair = make_odd_pair(
        ex, {ex.x_vertex(0), ex.y_vertex(0)},
        {ex.x_vertex(1), ex.y_vertex(1), ex.x_vertex(2), ex.y_vertex(2)});
    CHECK(binomial_of_walk(pair, ex) ==
          parse_binomial(ex, "x1*y1*T2*T4 - x2*y3*T1*T3"));

    Walk path = make_even_path(
        ex, {ex.x_vertex(1), ex.y_vertex(1), ex.x_vertex(2)});
    CHECK(binomial_of_walk(path, ex) ==
          parse_binomial(ex, "x3*T2 - x2*T3"));

    BipartiteGraph c4 = cycle_graph(4);
    auto cycles = enumerate_even_cycles(c4);
    REQUIRE(cycles.size() == 1);
    Binomial cyc = binomial_of_walk(cycles[0], c4);
    CHECK(cyc.plus().xy_degree() == 0);
    CHECK(cyc.minus().xy_degree() == 0);
    CHECK(cyc == parse_binomial(c4, "T1*T3 - T2*T4"));
}

TEST_CASE("universal basis golden values") {
    CHECK(universal_groebner_basis(parse_graph("x1 y1\n")).empty());

    BipartiteGraph ex = example_graph();
    auto ugb = universal_groebner_basis(ex);
    REQUIRE(ugb.size() == 7);
    std::set<Binomial> got;
    for (const auto& e : ugb) got.insert(e.binomial);
    std::set<Binomial> expected{
        parse_binomial(ex, "x2*y2*T1 - x1*y1*T2"),
        parse_binomial(ex, "x2*y3*T1*T3 - x1*y1*T2*T4"),
        parse_binomial(ex, "x3*T2 - x2*T3"),
        parse_binomial(ex, "x3*y2*T1 - x1*y1*T3"),
        parse_binomial(ex, "x3*y3*T1 - x1*y1*T4"),
        parse_binomial(ex, "y3*T3 - y2*T4"),
        parse_binomial(ex, "x3*y3*T2 - x2*y2*T4"),
    };
    CHECK(got == expected);

    auto c4_ugb = universal_groebner_basis(cycle_graph(4));
    CHECK(c4_ugb.size() == 7);
    int cycles = 0, paths = 0, pairs = 0;
    for (const auto& e : c4_ugb) {
        cycles += e.walk.kind == WalkKind::EvenCycle;
        paths += e.walk.kind == WalkKind::EvenPath;
        pairs += e.walk.kind == WalkKind::OddPathPair;
    }
    CHECK(cycles == 1);
    CHECK(paths == 4);
    CHECK(pairs == 2);
}

TEST_CASE("universal basis structural invariants") {
    for (const auto& entry : corpus()) {
        const std::string& name = entry.first;
        const BipartiteGraph& g = entry.second;
        CAPTURE(name);
        for (const auto& e : universal_groebner_basis(g)) {
            const Binomial& b = e.binomial;
            CHECK(is_in_rees_ideal(b, g));
            CHECK(b.is_squarefree());
            CHECK(b.terms_coprime());
            for (const Monomial* m : {&b.plus(), &b.minus()}) {
                CHECK(m->x_degree() <= 1);
                CHECK(m->y_degree() <= 1);
            }
            auto [axy, at] = b.plus().bidegree();
            CHECK(b.minus().bidegree() == std::pair{axy, at});
            switch (e.walk.kind) {
                case WalkKind::EvenCycle:
                    CHECK(axy == 0);
                    CHECK(at == static_cast<int>(e.walk.seqs[0].size()) / 2);
                    break;
                case WalkKind::EvenPath:
                    CHECK(axy == 1);
                    break;
                case WalkKind::OddPathPair:
                    CHECK(axy == 2);
                    break;
            }
        }
    }
}

TEST_CASE("presentation matrix") {
    ReesMatrix k11 = rees_matrix(parse_graph("x1 y1\n"));
    CHECK(k11.rows == 3);
    CHECK(k11.cols == 3);
    CHECK(k11.a == std::vector<std::vector<int>>{
                       {1, 1, 0}, {1, 0, 1}, {1, 0, 0}});

    for (const auto& entry : corpus()) {
        const std::string& name = entry.first;
        const BipartiteGraph& g = entry.second;
        CAPTURE(name);
        ReesMatrix mat = rees_matrix(g);
        CHECK(mat.rows == g.num_vertices() + 1);
        CHECK(mat.cols == g.q() + g.num_vertices());
        for (int t = 0; t < g.q(); ++t) {
            int ones = 0;
            for (int r = 0; r < mat.rows; ++r) ones += mat.a[r][t];
            CHECK(ones == 3);
        }
    }
}

TEST_CASE("circuits oracle") {
    CHECK(circuits(parse_graph("x1 y1\n")).empty());
    CHECK(circuits(cycle_graph(4)).size() == 7);
    CHECK(circuits(example_graph()).size() == 7);
    CHECK_THROWS_AS(circuits(cycle_graph(6), 10), SizeLimitError);

    BipartiteGraph ex = example_graph();
    CHECK_THROWS_AS(
        circuit_binomial(std::vector<int>(ex.q() + ex.num_vertices(), 0), ex),
        MalformedCircuitError);
    CHECK_THROWS_AS(circuit_binomial({1, -1}, ex), MalformedCircuitError);

    // the C4 cycle circuit: T-support of all four edges
    BipartiteGraph c4 = cycle_graph(4);
    bool found_cycle_circuit = false;
    for (const auto& c : circuits(c4)) {
        int t_support = 0;
        for (int k = 0; k < c4.q(); ++k) t_support += c[k] != 0;
        if (t_support == 4) {
            found_cycle_circuit = true;
            CHECK(circuit_binomial(c, c4) ==
                  parse_binomial(c4, "T1*T3 - T2*T4"));
        }
    }
    CHECK(found_cycle_circuit);
}

TEST_CASE("main theorem: universal basis equals the circuit binomials") {
    for (const auto& entry : corpus()) {
        const std::string& name = entry.first;
        const BipartiteGraph& g = entry.second;
        CAPTURE(name);
        if (g.q() + g.num_vertices() > 18) continue;
        CHECK(ugb_binomials(g) == circuit_binomials(circuits(g), g));
    }
}

TEST_CASE("circuit coordinates follow the T-then-vertex convention") {
    BipartiteGraph ex = example_graph();
    for (const auto& c : circuits(ex)) {
        REQUIRE(c.size() == static_cast<size_t>(ex.q() + ex.num_vertices()));
        Binomial b = circuit_binomial(c, ex);
        CHECK(b.terms_coprime());
        CHECK(is_in_rees_ideal(b, ex));
    }
}
