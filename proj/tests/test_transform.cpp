#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rado/constructions.hpp"
#include "rado/transform.hpp"

using namespace rado;

namespace {

std::vector<Vertex> pool_of(int n) {
    std::vector<Vertex> pool;
    for (int i = 0; i < n; ++i) pool.push_back(i);
    return pool;
}

} // namespace

TEST_CASE("complement flips adjacency and is an involution") {
    auto bit = make_bit();
    auto comp = complement(bit);
    CHECK(truncate(*comp, 3).to_edge_list() == "0 2\n");

    auto twice = complement(comp);
    CHECK(truncate(*twice, 64) == truncate(*bit, 64));

    WitnessQuery q{{0, 2}, {1}, {}};
    auto direct = comp->witness(q, 0);
    auto swapped = bit->witness(WitnessQuery{{1}, {0, 2}, {}}, 0);
    REQUIRE(direct.ok());
    CHECK(direct.vertex == swapped.vertex);
    CHECK(witness_satisfies(*comp, q, direct.vertex));
}

TEST_CASE("switching: identity, involution, example, isolation") {
    auto bit = make_bit();
    CHECK(truncate(*switch_graph(bit, {}), 64) == truncate(*bit, 64));

    VertexSet X{0, 1, 2};
    CHECK(truncate(*switch_graph(switch_graph(bit, X), X), 64) == truncate(*bit, 64));

    CHECK(truncate(*switch_graph(bit, {0}), 3).to_edge_list() == "0 2\n1 2\n");

    // switching by the neighbourhood of 0 isolates 0 in the window
    VertexSet nbhd;
    for (int v = 1; v < 64; ++v)
        if (bit->adjacent(0, v)) nbhd.insert(v);
    auto isolated = truncate(*switch_graph(bit, nbhd), 64);
    for (std::size_t v = 1; v < 64; ++v) CHECK_FALSE(isolated.adjacent(0, v));
}

TEST_CASE("switch witnesses avoid X and satisfy the switched query") {
    auto bit = make_bit();
    VertexSet X{0, 3};
    auto sw = switch_graph(bit, X);
    WitnessQuery q{{0, 1}, {2, 3}, {}};
    auto r = sw->witness(q, 0);
    REQUIRE(r.ok());
    CHECK_FALSE(X.count(r.vertex));
    CHECK(witness_satisfies(*sw, q, r.vertex));
}

TEST_CASE("edit: deletion re-indexes, flips are local") {
    auto bit = make_bit();
    auto del = edit(bit, EditSet{{0}, {}, {}});
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            CHECK(del->adjacent(i, j) == bit->adjacent(i + 1, j + 1));

    auto flip = edit(bit, EditSet{{}, {{0, 1}}, {}});
    CHECK_FALSE(flip->adjacent(0, 1));
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
            if (i == 0 && j == 1) continue;
            CHECK(flip->adjacent(i, j) == bit->adjacent(i, j));
        }

    CHECK_THROWS_AS(edit(bit, EditSet{{1}, {{0, 1}}, {}}), std::invalid_argument);
}

TEST_CASE("edited oracles keep the extension property") {
    auto bit = make_bit();
    auto combo = edit(bit, EditSet{{5}, {{0, 1}}, {}});
    CHECK(verify_extension(*combo, pool_of(10), 3, 0).all_passed());

    auto full = edit(bit, EditSet{{0, 1}, {{2, 3}}, {4, 5}});
    CHECK(verify_extension(*full, pool_of(10), 3, 0).all_passed());
}

TEST_CASE("pigeonhole probe") {
    auto bit = make_bit();
    auto constant = pigeonhole_probe(bit, [](const Vertex&) { return 0; }, 1, 10, 3, 4096);
    CHECK(constant == 0);

    auto parity = pigeonhole_probe(
        bit, [](const Vertex& v) { return (v % 2 == 0) ? std::size_t(0) : 1; }, 2,
        8, 3, 1000000);
    REQUIRE(parity.has_value());
    // evens fail: every even vertex misses bit 0, so nothing in the part is
    // adjacent to vertex 0
    CHECK(*parity == 1);

    auto lonely = pigeonhole_probe(
        bit, [](const Vertex& v) { return v == 0 ? std::size_t(1) : 0; }, 2, 10, 2,
        20000);
    CHECK(lonely == 0);
}

TEST_CASE("greedy maximal clique matches the arithmetic simulation") {
    auto bit = make_bit();
    CHECK(greedy_maximal_clique(*bit, 0).vertices.empty());

    // independent oracle: the least integer with prescribed bits is the sum
    std::vector<Vertex> expected;
    for (int s = 0; s < 5; ++s) {
        Vertex next = 0;
        for (const auto& w : expected) next += Vertex(1) << w.convert_to<std::size_t>();
        expected.push_back(next);
    }
    CHECK(expected == std::vector<Vertex>{0, 1, 3, 11, 2059});

    auto four = greedy_maximal_clique(*bit, 4);
    CHECK(four.vertices == std::vector<Vertex>{0, 1, 3, 11});
    auto five = greedy_maximal_clique(*bit, 5);
    CHECK(five.vertices == expected);
    CHECK_FALSE(five.exhausted);

    // clique property: pairwise adjacent, and no skipped vertex extends it
    for (std::size_t i = 0; i < five.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < five.vertices.size(); ++j)
            CHECK(bit->adjacent(five.vertices[i], five.vertices[j]));

    auto six = greedy_maximal_clique(*bit, 6, 100000);
    CHECK(six.exhausted); // next element is 2^0+2^1+2^3+2^11+2^2059
}
