#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rado/constructions.hpp"
#include "rado/isoengine.hpp"
#include "rado/transform.hpp"

using namespace rado;

namespace {

// i ~ i+1 only
class PathOracle final : public GraphOracle {
public:
    std::string name() const override { return "path"; }
    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        return u + 1 == v || v + 1 == u;
    }
    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        return scan_witness(*this, q, bound ? bound : 4096);
    }
};

class CompleteOracle final : public GraphOracle {
public:
    std::string name() const override { return "complete"; }
    bool adjacent(const Vertex& u, const Vertex& v) const override { return u != v; }
    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        return scan_witness(*this, q, bound ? bound : 4096);
    }
};

class EmptyOracle final : public GraphOracle {
public:
    std::string name() const override { return "empty"; }
    bool adjacent(const Vertex&, const Vertex&) const override { return false; }
    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        return scan_witness(*this, q, bound ? bound : 4096);
    }
};

} // namespace

TEST_CASE("PartialMap bookkeeping") {
    PartialMap f;
    f.pairs = {{0, 5}, {2, 7}};
    CHECK(f.size() == 2);
    CHECK(f.in_domain(0));
    CHECK_FALSE(f.in_domain(5));
    CHECK(f.in_range(7));
    CHECK(f.image(2) == Vertex(7));
    CHECK(f.preimage(5) == Vertex(0));
    CHECK_FALSE(f.image(1).has_value());
}

TEST_CASE("check_partial_iso catches both failure modes") {
    auto bit = make_bit();
    PartialMap dup;
    dup.pairs = {{0, 1}, {0, 2}};
    CHECK_FALSE(check_partial_iso(*bit, *bit, dup).injective);

    PartialMap id;
    for (int i = 0; i < 8; ++i) id.pairs.emplace_back(i, i);
    CHECK(check_partial_iso(*bit, *bit, id).ok());

    // 0~1 in bit but 0~2 is not, so swapping images breaks inducedness
    PartialMap bad;
    bad.pairs = {{0, 0}, {1, 2}};
    auto c = check_partial_iso(*bit, *bit, bad);
    CHECK(c.injective);
    CHECK_FALSE(c.induced);

    // spanning mode only objects to source edges landing on non-edges
    PathOracle path;
    PartialMap onto;
    onto.pairs = {{0, 0}, {1, 1}, {2, 3}};
    CHECK_FALSE(check_partial_iso(path, *bit, onto).ok());
    CHECK(check_partial_iso(path, *bit, onto, /*spanning=*/true).ok());
}

TEST_CASE("extend_one_point picks the least suitable image") {
    auto bit = make_bit();

    PartialMap empty;
    auto fresh = extend_one_point(*bit, *bit, empty, 7, 0);
    REQUIRE(fresh.ok());
    CHECK(fresh.map.pairs == std::vector<std::pair<Vertex, Vertex>>{{7, 0}});

    PartialMap f;
    f.pairs = {{0, 0}};
    auto r = extend_one_point(*bit, *bit, f, 1, 0);
    REQUIRE(r.ok());
    CHECK(r.map.pairs.back() == std::pair<Vertex, Vertex>{1, 1});
    CHECK(check_partial_iso(*bit, *bit, r.map).ok());

    // exhaustion surfaces when the target cannot satisfy an adjacency demand
    PathOracle path;
    EmptyOracle none;
    PartialMap g;
    g.pairs = {{0, 0}};
    auto bad = extend_one_point(path, none, g, 1, 64, 64);
    CHECK_FALSE(bad.ok());
    CHECK(bad.status == WitnessStatus::exhausted);
}

TEST_CASE("back_and_forth builds an isomorphism prefix") {
    auto bit = make_bit();
    auto rnd = make_seeded(1);

    CHECK(back_and_forth(*bit, *rnd, 0, 0).map.size() == 0);

    // backward rounds search the bit graph, whose witnesses explode in
    // magnitude past a dozen constraints; stay within the feasible window
    auto r = back_and_forth(*bit, *rnd, 12, 1u << 20);
    REQUIRE(r.ok());
    CHECK(r.map.size() == 12);
    CHECK(check_partial_iso(*bit, *rnd, r.map).ok());
    for (int v = 0; v < 6; ++v) {
        CHECK(r.map.in_domain(v));
        CHECK(r.map.in_range(v));
    }
}

TEST_CASE("back_and_forth into the complement reverses adjacency") {
    auto bit = make_bit();
    auto anti = complement(bit);
    auto r = back_and_forth(*bit, *anti, 8, 1u << 20);
    REQUIRE(r.ok());
    CHECK(check_partial_iso(*bit, *anti, r.map).ok());
    for (std::size_t i = 0; i < r.map.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < r.map.pairs.size(); ++j) {
            bool src = bit->adjacent(r.map.pairs[i].first, r.map.pairs[j].first);
            bool img = bit->adjacent(r.map.pairs[i].second, r.map.pairs[j].second);
            CHECK(src == !img);
        }
}

TEST_CASE("forth_embed produces induced copies") {
    auto bit = make_bit();

    CHECK(forth_embed(PathOracle(), *bit, 0, 0).map.size() == 0);

    PathOracle path;
    auto five = forth_embed(path, *bit, 5, 1u << 20);
    REQUIRE(five.ok());
    CHECK(check_partial_iso(path, *bit, five.map).ok());
    for (int i = 0; i + 1 < 5; ++i)
        CHECK(bit->adjacent(*five.map.image(i), *five.map.image(i + 1)));
    CHECK_FALSE(bit->adjacent(*five.map.image(0), *five.map.image(2)));

    CompleteOracle complete;
    auto clique = forth_embed(complete, *bit, 4, 1u << 20);
    REQUIRE(clique.ok());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(bit->adjacent(*clique.map.image(i), *clique.map.image(j)));
}

TEST_CASE("spanning_embed: path spans, complete source fails") {
    auto bit = make_bit();
    PathOracle path;
    auto r = spanning_embed(path, *bit, 20, 1u << 20);
    REQUIRE(r.ok());
    CHECK(r.map.size() == 20);
    CHECK(check_partial_iso(path, *bit, r.map, /*spanning=*/true).ok());
    // forward-mapped source edges land on target edges
    for (const auto& [s, t] : r.map.pairs) {
        auto next = r.map.image(s + 1);
        if (next) CHECK(bit->adjacent(t, *next));
    }
    // both sides cover an initial segment
    for (int v = 0; v < 10; ++v) {
        CHECK(r.map.in_domain(v));
        CHECK(r.map.in_range(v));
    }

    // edgeless source: any bijection prefix qualifies; with an edgeless
    // target every choice is unconstrained, so least-index gives the identity
    EmptyOracle none;
    auto any = spanning_embed(none, *bit, 8, 1u << 20);
    REQUIRE(any.ok());
    CHECK(check_partial_iso(none, *bit, any.map, /*spanning=*/true).ok());
    auto id = spanning_embed(none, none, 8, 1u << 20);
    REQUIRE(id.ok());
    for (const auto& [s, t] : id.map.pairs) CHECK(s == t);

    CompleteOracle complete;
    auto bad = spanning_embed(complete, *bit, 20, 1u << 12);
    CHECK_FALSE(bad.ok());
    CHECK(bad.status == WitnessStatus::exhausted);
    CHECK(bad.detail.find("backward") != std::string::npos);
}

TEST_CASE("generic_automorphism returns a finite-cycle automorphism") {
    auto rnd = make_seeded(1);

    auto empty = generic_automorphism(*rnd, 0, 10, 0);
    CHECK(empty.ok);
    CHECK(empty.perm.size() == 0);

    auto a = generic_automorphism(*rnd, 12, 24, 1u << 20);
    REQUIRE(a.ok);
    REQUIRE(a.perm.size() >= 2);

    // permutation: domain equals range
    VertexSet dom, ran;
    for (const auto& [s, t] : a.perm.pairs) {
        dom.insert(s);
        ran.insert(t);
    }
    CHECK(dom == ran);
    CHECK(dom.size() == a.perm.size());

    // cycle lengths account for the whole support
    std::size_t total = 0;
    for (auto len : a.cycle_lengths) {
        CHECK(len >= 1);
        CHECK(len <= 24);
        total += len;
    }
    CHECK(total == a.perm.size());

    // automorphism on the support
    CHECK(check_partial_iso(*rnd, *rnd, a.perm).ok());
}

TEST_CASE("generic_automorphism works over the bit oracle too") {
    auto bit = make_bit();
    auto a = generic_automorphism(*bit, 6, 16, 1u << 20);
    REQUIRE(a.ok);
    CHECK(check_partial_iso(*bit, *bit, a.perm).ok());
    VertexSet dom, ran;
    for (const auto& [s, t] : a.perm.pairs) {
        dom.insert(s);
        ran.insert(t);
    }
    CHECK(dom == ran);
}

TEST_CASE("to_json reports pairs and verification") {
    auto bit = make_bit();
    PartialMap f;
    f.pairs = {{0, 0}, {1, 1}};
    auto text = f.to_json(*bit, *bit);
    CHECK(text.find("\"injective\":true") != std::string::npos);
    CHECK(text.find("\"induced\":true") != std::string::npos);
}
