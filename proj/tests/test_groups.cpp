#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "rado/groups.hpp"

using namespace rado;

namespace {

std::vector<Vertex> small_pool(int n) {
    std::vector<Vertex> pool;
    for (int i = 0; i < n; ++i) pool.push_back(i);
    return pool;
}

} // namespace

TEST_CASE("group enumeration is a bijection and the axioms hold") {
    for (auto g : {GroupSpec::integers(), GroupSpec::integer_pairs()}) {
        std::set<GroupElement> seen;
        for (int i = 0; i < 200; ++i) {
            auto e = g.element(i);
            CHECK(g.index_of(e) == Vertex(i));
            CHECK(seen.insert(e).second); // no repeats
        }
        // sampled triples: associativity, identity, inverses
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; j += 3) {
                auto a = g.element(i), b = g.element(j), c = g.element(i + j);
                CHECK(g.multiply(g.multiply(a, b), c) ==
                      g.multiply(a, g.multiply(b, c)));
                CHECK(g.multiply(a, g.identity()) == a);
                CHECK(g.multiply(a, g.inverse(a)) == g.identity());
                CHECK(g.multiply(a, b) == g.multiply(b, a));
            }
    }
    CHECK(GroupSpec::integers().element(0) == GroupElement{0});
    CHECK(GroupSpec::integers().element(1) == GroupElement{1});
    CHECK(GroupSpec::integers().element(2) == GroupElement{-1});
    CHECK(element_to_string(GroupSpec::integer_pairs().element(4)) == "(1,1)");
}

TEST_CASE("cyclic graph carries the shift automorphism") {
    auto s = UniversalSequence::concatenation();
    auto o = cyclic_graph(s);
    auto shift = make_shift(s);

    for (int u = 0; u < 40; ++u)
        for (int v = u + 1; v < 40; ++v)
            CHECK(o->adjacent(u, v) == shift->adjacent(u, v));

    // integer pairs |x|, |y| <= 50 live below natural label 101
    for (int u = 0; u <= 100; ++u)
        for (int v = u + 1; v <= 100; ++v)
            CHECK(o->adjacent(u, v) ==
                  o->adjacent(shift_image(u), shift_image(v)));

    // the generating set is recovered as the neighbourhood of 0
    for (std::uint64_t n = 1; n <= 64; ++n)
        CHECK(o->adjacent(int_to_nat(Vertex(n)), 0) == s.at(n));

    auto report = verify_extension(*o, small_pool(10), 3, 1000000);
    CHECK(report.all_passed());
}

TEST_CASE("cyclic conjugacy compares generating sets") {
    auto concat = UniversalSequence::concatenation();
    CHECK(cyclic_conjugacy(concat, concat, 512).equal);
    CHECK(cyclic_conjugacy(UniversalSequence::seeded(5),
                           UniversalSequence::seeded(5), 512)
              .equal);

    auto d1 = cyclic_conjugacy(concat, UniversalSequence::seeded(7), 64);
    CHECK(!d1.equal);
    CHECK(d1.differ_at >= 1);
    CHECK(d1.differ_at <= 64);
    CHECK(concat.at(d1.differ_at) != UniversalSequence::seeded(7).at(d1.differ_at));

    auto d2 = cyclic_conjugacy(UniversalSequence::seeded(1),
                               UniversalSequence::seeded(2), 256);
    CHECK(!d2.equal);
}

TEST_CASE("cayley adjacency is symmetric and irreflexive") {
    for (auto g : {GroupSpec::integers(), GroupSpec::integer_pairs()}) {
        auto o = cayley_oracle(g, 11);
        for (int u = 0; u <= 128; u += 7) {
            CHECK(!o->adjacent(u, u));
            for (int v = 0; v <= 128; v += 5)
                CHECK(o->adjacent(u, v) == o->adjacent(v, u));
        }
    }
}

TEST_CASE("the integer cayley graph is a shift graph in disguise") {
    auto g = GroupSpec::integers();
    auto o = cayley_oracle(g, 23);
    // membership of n in the connection set, read off the graph at 0
    auto member = [&](const Vertex& n) {
        return o->adjacent(int_to_nat(n), int_to_nat(Vertex(0)));
    };
    for (int x = -20; x <= 20; ++x)
        for (int y = -20; y < x; ++y) {
            Vertex d = Vertex(x) - Vertex(y);
            CHECK(o->adjacent(int_to_nat(Vertex(x)), int_to_nat(Vertex(y))) ==
                  member(d));
        }
}

TEST_CASE("cayley graphs satisfy the extension property at small scale") {
    std::size_t passes = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto o = cayley_oracle(GroupSpec::integers(), seed);
        if (verify_extension(*o, small_pool(10), 3, 1000000).all_passed())
            ++passes;
    }
    CHECK(passes >= 4);

    auto z2 = cayley_oracle(GroupSpec::integer_pairs(), 3);
    CHECK(verify_extension(*z2, small_pool(10), 3, 1000000).all_passed());
}

TEST_CASE("square-root sets") {
    auto z = GroupSpec::integers();
    auto r4 = sqrt_set(z, {4}, 64);
    REQUIRE(r4.size() == 1);
    CHECK(r4[0] == GroupElement{2});
    CHECK(sqrt_set(z, {3}, 64).empty());
    for (int a = -10; a <= 10; ++a)
        CHECK(sqrt_set(z, {a}, 128).size() <= 1);

    auto z2 = GroupSpec::integer_pairs();
    auto r22 = sqrt_set(z2, {2, 2}, 256);
    REQUIRE(r22.size() == 1);
    CHECK(r22[0] == (GroupElement{1, 1}));
    CHECK_THROWS(sqrt_set(z2, {1}, 16)); // arity mismatch
}

TEST_CASE("triangle report on hand-picked sets") {
    auto good = triangle_report(std::vector<std::uint64_t>{1, 4}, 10);
    CHECK(!good.schur_triple);
    CHECK(!good.triangle);
    CHECK(good.equivalent());
    CHECK(!good.all_odd); // 4 is even

    auto bad = triangle_report(std::vector<std::uint64_t>{1, 2}, 10);
    CHECK(bad.schur_triple); // 1 + 1 = 2
    CHECK(bad.triangle);     // {0, 1, 2}
    CHECK(bad.equivalent());

    auto odd = triangle_report(std::vector<std::uint64_t>{1, 5, 9}, 20);
    CHECK(odd.all_odd);
    CHECK(!odd.triangle);
    CHECK_THROWS(triangle_report(std::vector<std::uint64_t>{}, 2));
}

TEST_CASE("generated sets are sum-free") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SumFreeSet s(seed);
        auto members = s.members_upto(1000);
        std::vector<bool> in(1001, false);
        for (auto m : members) in[m] = true;
        for (auto x : members)
            for (auto y : members) {
                if (x + y > 1000) break;
                CHECK(!in[x + y]);
            }
        auto report = triangle_report(s, 200);
        CHECK(!report.triangle);
        CHECK(report.equivalent());
    }
}

TEST_CASE("triangle equivalence holds for arbitrary sets") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::vector<std::uint64_t> members;
        for (std::uint64_t n = 1; n <= 200; ++n)
            if (mix_triple(n, seed, 0xa5a5) & 1) members.push_back(n);
        CHECK(triangle_report(members, 200).equivalent());
    }
}

TEST_CASE("the all-odd event shows up at the expected rate") {
    std::size_t all_odd = 0;
    const std::size_t trials = 500;
    for (std::uint64_t seed = 0; seed < trials; ++seed)
        if (triangle_report(SumFreeSet(seed), 300).all_odd) ++all_odd;
    double rate = double(all_odd) / double(trials);
    CHECK(rate > 0.12);
    CHECK(rate < 0.35);
}
