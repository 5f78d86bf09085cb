#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rado/constructions.hpp"
#include "rado/core.hpp"

using namespace rado;

TEST_CASE("integer-to-natural bijection") {
    CHECK(int_to_nat(0) == 0);
    CHECK(int_to_nat(3) == 5);
    CHECK(int_to_nat(-3) == 6);
    for (int z = -100; z <= 100; ++z) {
        Vertex n = int_to_nat(z);
        CHECK(n >= 0);
        CHECK(nat_to_int(n) == z);
    }
    // distinct integers map to distinct naturals
    std::set<Vertex> seen;
    for (int z = -50; z <= 50; ++z) seen.insert(int_to_nat(z));
    CHECK(seen.size() == 101);
}

TEST_CASE("finite graph invariants and serialization") {
    FiniteGraph g(5);
    g.set_edge(0, 1);
    g.set_edge(1, 3);
    g.set_edge(2, 4);
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.to_edge_list() == "0 1\n1 3\n2 4\n");

    auto round = FiniteGraph::from_edge_list(g.to_edge_list());
    CHECK(round == g);
    auto json_round = FiniteGraph::from_json(g.to_json());
    CHECK(json_round == g);

    auto dot = g.to_dot();
    CHECK(dot.find("0 -- 1") != std::string::npos);

    SUBCASE("induced subgraph") {
        auto h = g.induced({1, 3, 4});
        CHECK(h.size() == 3);
        CHECK(h.adjacent(0, 1)); // old 1-3
        CHECK_FALSE(h.adjacent(0, 2));
    }
}

TEST_CASE("truncate restricts the oracle pointwise") {
    auto bit = make_bit();
    auto g = truncate(*bit, 3);
    // forced by the base-2 encoding: 1-0 and 2-1 only
    CHECK(g.to_edge_list() == "0 1\n1 2\n");
    CHECK(truncate(*bit, 0).size() == 0);

    auto big = truncate(*bit, 64);
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = 0; j < 64; ++j)
            CHECK(big.adjacent(i, j) == bit->adjacent(i, j));
}

TEST_CASE("verify_extension on the bit oracle") {
    auto bit = make_bit();
    std::vector<Vertex> pool;
    for (int i = 0; i < 10; ++i) pool.push_back(i);
    auto report = verify_extension(*bit, pool, 4, 0);
    CHECK(report.failed == 0);
    CHECK(report.exhausted == 0);
    CHECK(report.passed == report.outcomes.size());
    // query count: sum over subsets of size <= 4 of 2^k splits
    CHECK(report.outcomes.size() == 1 + 10 * 2 + 45 * 4 + 120 * 8 + 210 * 16);
}

TEST_CASE("empty query accepts any fresh vertex; exhaustion is reported") {
    auto seeded = make_seeded(42);
    WitnessQuery empty;
    auto r = seeded->witness(empty, 10);
    REQUIRE(r.ok());
    CHECK(witness_satisfies(*seeded, empty, r.vertex));

    std::vector<Vertex> pool;
    for (int i = 0; i < 10; ++i) pool.push_back(i);
    auto tight = verify_extension(*seeded, pool, 4, 10);
    CHECK(tight.exhausted > 0); // bound 10 is too small for 4-constraint queries
}

TEST_CASE("witness honours the exclusion set") {
    auto bit = make_bit();
    WitnessQuery q;
    q.U = {Vertex(0), Vertex(1)};
    q.V = {Vertex(2)};
    auto r1 = bit->witness(q, 0);
    REQUIRE(r1.ok());
    q.excluded.insert(r1.vertex);
    auto r2 = bit->witness(q, 0);
    REQUIRE(r2.ok());
    CHECK(r2.vertex != r1.vertex);
    CHECK(witness_satisfies(*bit, q, r2.vertex));
}

TEST_CASE("determinism: same construction, same truncation") {
    for (auto selector : {"bit", "shift:concat", "seeded:9", "closure"}) {
        auto a = truncate(*make_by_name(selector), 48);
        auto b = truncate(*make_by_name(selector), 48);
        CHECK(a == b);
    }
}
