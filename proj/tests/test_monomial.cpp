#include "doctest.h"
#include "reesgb/monomial.hpp"
#include "test_helpers.hpp"

using namespace reesgb;
using namespace reesgb::testing;

TEST_CASE("monomial arithmetic") {
    BipartiteGraph g = example_graph();
    Monomial a = parse_monomial(g, "x1*y1*T2");
    Monomial b = parse_monomial(g, "x1*T2^2");
    CHECK(a.xy_degree() == 2);
    CHECK(a.t_degree() == 1);
    CHECK(a.bidegree() == std::pair{2, 1});
    CHECK(b.t_degree() == 2);
    CHECK((a * b) == parse_monomial(g, "x1^2*y1*T2^3"));
    CHECK(lcm(a, b) == parse_monomial(g, "x1*y1*T2^2"));
    CHECK(gcd(a, b) == parse_monomial(g, "x1*T2"));
    CHECK(gcd(a, b).divides(a));
    CHECK(a.divided_by(gcd(a, b)) == parse_monomial(g, "y1"));
    CHECK(a.is_squarefree());
    CHECK(!b.is_squarefree());
    CHECK(Monomial::one(g).is_one());
    CHECK(parse_monomial(g, "1") == Monomial::one(g));
    CHECK_THROWS_AS(parse_monomial(g, "z9"), InputError);
}

TEST_CASE("monomial rendering uses graph labels") {
    BipartiteGraph g = example_graph();
    CHECK(parse_monomial(g, "x3*T2").str(g) == "x3*T2");
    CHECK(parse_monomial(g, "x1^2*y2*T4").str(g) == "x1^2*y2*T4");
    CHECK(Monomial::one(g).str(g) == "1");
}

TEST_CASE("reference order: degree first, then lex with T_q largest") {
    BipartiteGraph g = example_graph();
    auto cmp = [&](const char* a, const char* b) {
        return reference_compare(parse_monomial(g, a), parse_monomial(g, b));
    };
    CHECK(cmp("x1*y1", "T4") == Cmp::GT);          // higher total degree wins
    CHECK(cmp("T4", "T3") == Cmp::GT);             // T4 is the largest variable
    CHECK(cmp("x1*y1*T2*T4", "x2*y3*T1*T3") == Cmp::GT);
    CHECK(cmp("x2*T3", "x3*T2") == Cmp::GT);
    CHECK(cmp("x1*T2", "x1*T2") == Cmp::EQ);
    BipartiteGraph h = path_graph(3);
    CHECK_THROWS_AS(
        reference_compare(Monomial::one(g), Monomial::one(h)),
        DimensionMismatchError);
}

TEST_CASE("binomial canonical sign and ordering") {
    BipartiteGraph g = example_graph();
    Binomial b(parse_monomial(g, "x2*y2*T1"), parse_monomial(g, "x1*y1*T2"));
    // x1*y1*T2 has the larger reference order (T2 beats T1), so it leads.
    CHECK(b.plus() == parse_monomial(g, "x1*y1*T2"));
    CHECK(b.str(g) == "x1*y1*T2 - x2*y2*T1");
    Binomial same(b.plus(), b.minus());
    CHECK(same == b);  // canonicalization is idempotent
    CHECK(b.terms_coprime());
    CHECK(b.is_squarefree());
    CHECK(!Binomial::make(Monomial::one(g), Monomial::one(g)).has_value());
    CHECK_THROWS_AS(Binomial(Monomial::one(g), Monomial::one(g)),
                    MalformedWalkError);
    CHECK(parse_binomial(g, "x2*y2*T1 - x1*y1*T2") == b);
}

TEST_CASE("psi substitutes edge variables") {
    BipartiteGraph g = example_graph();
    PsiImage t1 = psi(parse_monomial(g, "T1"), g);
    CHECK(t1.t == 1);
    CHECK(t1.w == std::vector<int>{1, 0, 0, 1, 0, 0});  // x1*y1

    CHECK(psi(parse_monomial(g, "x2*y2*T1"), g) ==
          psi(parse_monomial(g, "x1*y1*T2"), g));

    PsiImage pure = psi(parse_monomial(g, "x1^2*y3"), g);
    CHECK(pure.t == 0);
    CHECK(pure.w == std::vector<int>{2, 0, 0, 0, 0, 1});
}

TEST_CASE("membership in the Rees ideal") {
    BipartiteGraph g = example_graph();
    CHECK(is_in_rees_ideal(parse_binomial(g, "x2*y2*T1 - x1*y1*T2"), g));
    CHECK(!is_in_rees_ideal(parse_binomial(g, "x1*T1 - y1*T1"), g));
}
