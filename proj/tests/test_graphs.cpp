#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srg/graph6.hpp>
#include <srg/graphs.hpp>
#include <srg/params.hpp>

#include "oracles.hpp"

using namespace srg;

namespace {

Graph path(std::size_t n) {
    BitMatrix adj(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        adj.set(i, i + 1, true);
        adj.set(i + 1, i, true);
    }
    return Graph(std::move(adj));
}

}  // namespace

TEST_CASE("petersen graph is SR(10,3,0,1)") {
    const Graph g = petersen();
    const SrgVerification v = verify_srg(g);
    REQUIRE(v.ok());
    CHECK(v.certificate->k == 3);
    CHECK(v.certificate->a == 0);
    CHECK(v.certificate->c == 1);
    CHECK(v.certificate->connected);
    CHECK(v.certificate->identityChecked);

    const auto counts = oracle::count_pairs(g);
    CHECK(counts.is_srg);
    CHECK(counts.k == 3);
    CHECK(counts.a == 0);
    CHECK(counts.c == 1);
}

TEST_CASE("paths are rejected with a named violation") {
    const SrgVerification v = verify_srg(path(4));
    CHECK_FALSE(v.ok());
    CHECK(v.failure.find("not regular") != std::string::npos);
}

TEST_CASE("5-cycle is SR(5,2,0,1)") {
    const SrgVerification v = verify_srg(cycle(5));
    REQUIRE(v.ok());
    CHECK(v.certificate->k == 2);
    CHECK(v.certificate->a == 0);
    CHECK(v.certificate->c == 1);
    const auto counts = oracle::count_pairs(cycle(5));
    CHECK(counts.is_srg);
    CHECK(counts.a == 0);
    CHECK(counts.c == 1);
}

TEST_CASE("6-cycle is not strongly regular") {
    CHECK_FALSE(verify_srg(cycle(6)).ok());
}

TEST_CASE("line graph of K6 is SR(15,8,4,4)") {
    const Graph g = line_graph(complete(6));
    REQUIRE(g.n() == 15);
    const SrgVerification v = verify_srg(g);
    REQUIRE(v.ok());
    CHECK(v.certificate->k == 8);
    CHECK(v.certificate->a == 4);
    CHECK(v.certificate->c == 4);
    const auto counts = oracle::count_pairs(g);
    CHECK(counts.is_srg);
    CHECK(counts.k == 8);
}

TEST_CASE("line graph of K33 is SR(9,4,1,2)") {
    const Graph g = line_graph(complete_bipartite(3, 3));
    REQUIRE(g.n() == 9);
    const SrgVerification v = verify_srg(g);
    REQUIRE(v.ok());
    CHECK(v.certificate->k == 4);
    CHECK(v.certificate->a == 1);
    CHECK(v.certificate->c == 2);
}

TEST_CASE("complement of the line graph of K6 is SR(15,6,1,3)") {
    const Graph g = complement(line_graph(complete(6)));
    const SrgVerification v = verify_srg(g);
    REQUIRE(v.ok());
    CHECK(v.certificate->k == 6);
    CHECK(v.certificate->a == 1);
    CHECK(v.certificate->c == 3);
}

TEST_CASE("complement of petersen is SR(10,6,3,4) and complements involute") {
    const Graph comp = complement(petersen());
    const SrgVerification v = verify_srg(comp);
    REQUIRE(v.ok());
    CHECK(v.certificate->k == 6);
    CHECK(v.certificate->a == 3);
    CHECK(v.certificate->c == 4);

    // Matches the parameter-level complement of (a, c, e) = (0, 1, 1).
    const ParamTriple comp_triple = complement_params({0, 1, 1});
    CHECK(Int(v.certificate->a) == comp_triple.a);
    CHECK(Int(v.certificate->c) == comp_triple.c);
    CHECK(derive(comp_triple).k == v.certificate->k);

    CHECK(complement(comp) == petersen());
}

TEST_CASE("generalized windmill with e = 1 is the star K15") {
    const Graph g = generalized_windmill(1);
    REQUIRE(g.n() == 6);
    CHECK(g == complete_bipartite(1, 5));
}

TEST_CASE("windmill constructor builds t triangles through the hub") {
    const Graph g = windmill(5);
    REQUIRE(g.n() == 11);
    CHECK(g.degree(0) == 10);
    for (std::size_t v = 1; v < g.n(); ++v) CHECK(g.degree(v) == 2);
    // e = 2 gives e^2+2e+2 = 10 cliques of size 2: the 10-triangle windmill.
    CHECK(windmill(10) == generalized_windmill(2));
}

TEST_CASE("subconstituents of petersen") {
    const DerivedParams d = derive({0, 1, 1});
    const Graph g = petersen();
    for (std::size_t v = 0; v < g.n(); ++v) {
        const InducedSubgraph x1 = subconstituent(g, v, 1);
        REQUIRE(Int(x1.graph.n()) == d.k);
        for (std::size_t u = 0; u < x1.graph.n(); ++u) CHECK(x1.graph.degree(u) == 0);

        const InducedSubgraph x2 = subconstituent(g, v, 2);
        REQUIRE(Rat(static_cast<unsigned long>(x2.graph.n())) == d.l);
        // 2-regular, connected, and triangle-free on 6 vertices: a 6-cycle.
        for (std::size_t u = 0; u < x2.graph.n(); ++u) CHECK(x2.graph.degree(u) == 2);
        CHECK(verify_srg(x2.graph).failure.find("complete") == std::string::npos);
        const auto cliques = local_cliques(g, v);
        REQUIRE(cliques.has_value());
        CHECK(*cliques == std::vector<std::size_t>{1, 1, 1});
    }
}

TEST_CASE("subconstituent sizes match derived parameters on certified graphs") {
    struct Case {
        Graph graph;
        ParamTriple triple;
    };
    const Case cases[] = {
        {line_graph(complete(6)), {4, 4, 2}},
        {line_graph(complete_bipartite(3, 3)), {1, 2, 1}},
        {complement(petersen()), {3, 4, 1}},
    };
    for (const auto& [graph, triple] : cases) {
        const DerivedParams d = derive(triple);
        REQUIRE(verify_srg(graph).ok());
        for (std::size_t v = 0; v < graph.n(); ++v) {
            CHECK(Int(subconstituent(graph, v, 1).graph.n()) == d.k);
            CHECK(Rat(static_cast<unsigned long>(subconstituent(graph, v, 2).graph.n())) == d.l);
        }
    }
}

TEST_CASE("closed neighbourhoods put the hub first") {
    const InducedSubgraph nbhd = closed_neighborhood(petersen(), 7);
    REQUIRE(nbhd.graph.n() == 4);
    CHECK(nbhd.vertices[0] == 7);
    CHECK(nbhd.graph == complete_bipartite(1, 3));

    const InducedSubgraph whole = closed_neighborhood(complete(4), 2);
    CHECK(whole.graph == complete(4));
}

TEST_CASE("local cliques distinguishes clique unions from other structures") {
    const auto windmill_cliques = local_cliques(windmill(4), 0);
    REQUIRE(windmill_cliques.has_value());
    CHECK(*windmill_cliques == std::vector<std::size_t>(4, 2));

    CHECK_FALSE(local_cliques(line_graph(complete(6)), 0).has_value());
}

TEST_CASE("graph6 encoding of pinned small graphs") {
    BitMatrix one(1, 1);
    CHECK(graph6_encode(Graph(std::move(one))) == "@");
    CHECK(graph6_encode(complete(2)) == "A_");
    CHECK(graph6_encode(complete(4)) == "C~");
    CHECK(graph6_encode(cycle(5)) == "Dhc");
}

TEST_CASE("graph6 round-trips the constructed families including long form") {
    const Graph graphs[] = {
        petersen(),
        cycle(5),
        complete_bipartite(3, 3),
        line_graph(complete(6)),
        generalized_windmill(3),   // 52 vertices, short form
        generalized_windmill(4),   // 105 vertices, long form
        complete(63),              // smallest long-form order
        complement(petersen()),
    };
    for (const Graph& g : graphs) {
        const std::string text = graph6_encode(g);
        CHECK(graph6_decode(text) == g);
    }
}

TEST_CASE("graph6 decode rejects malformed input with an offset") {
    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("D"), ParseError);         // truncated edge bits
    CHECK_THROWS_AS(graph6_decode("Dhc!"), ParseError);      // trailing bytes
    CHECK_THROWS_AS(graph6_decode(std::string(1, '\x1f')), ParseError);
    try {
        graph6_decode("Dh\x07");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.offset == 2);
    }
}

TEST_CASE("dot export stays within the documentation cap") {
    const std::string dot = to_dot(cycle(3));
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK_THROWS_AS(to_dot(complete(31)), DomainError);
}

TEST_CASE("certificate identity agrees with the exact rational matrix product") {
    const Graph graphs[] = {petersen(), line_graph(complete(6)), complement(petersen()),
                            line_graph(complete_bipartite(3, 3))};
    for (const Graph& g : graphs) {
        const SrgVerification v = verify_srg(g);
        REQUIRE(v.ok());
        const auto& cert = *v.certificate;
        const ExactMatrix a = g.adjacency_exact();
        const std::size_t n = g.n();
        const ExactMatrix lhs = a * a - a.scaled(Rat(cert.a - cert.c)) -
                                ExactMatrix::identity(n).scaled(Rat(cert.k - cert.c));
        CHECK(lhs == ExactMatrix::all_ones(n).scaled(Rat(cert.c)));
        CHECK(a * ExactMatrix::all_ones(n) == ExactMatrix::all_ones(n).scaled(Rat(cert.k)));
    }
}

TEST_CASE("adjacency validation rejects loops and asymmetry") {
    BitMatrix loop(2, 2);
    loop.set(0, 0, true);
    CHECK_THROWS_AS(Graph(std::move(loop)), DomainError);

    BitMatrix asym(2, 2);
    asym.set(0, 1, true);
    CHECK_THROWS_AS(Graph(std::move(asym)), DomainError);
}
