#ifndef RADO_GROUPS_HPP
#define RADO_GROUPS_HPP

#include "rado/constructions.hpp"
#include "rado/core.hpp"

namespace rado {

// ---------------------------------------------------------------------------
// Built-in countable abelian groups with an explicit enumeration.  Elements
// are coordinate vectors: one entry for the integers, two for pairs.
using GroupElement = std::vector<Vertex>;

class GroupSpec {
public:
    static GroupSpec integers();     // (Z, +), enumerated 0, 1, -1, 2, -2, ...
    static GroupSpec integer_pairs(); // (Z^2, +), Cantor pairing of two copies

    const std::string& name() const { return name_; }
    std::size_t arity() const { return arity_; }

    GroupElement element(const Vertex& index) const; // bijection N -> G
    Vertex index_of(const GroupElement& e) const;    // its inverse

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement identity() const;

private:
    GroupSpec(std::string name, std::size_t arity)
        : name_(std::move(name)), arity_(arity) {}
    std::string name_;
    std::size_t arity_;
};

std::string element_to_string(const GroupElement& e);

// ---------------------------------------------------------------------------
// Cyclic automorphisms.  The shift graph already has one: x -> x + 1 on the
// integers.  cyclic_graph returns that same oracle; shift_image transports
// the map to the natural-number vertex labels so adjacency invariance can be
// checked directly.
OraclePtr cyclic_graph(UniversalSequence s);
Vertex shift_image(const Vertex& natural_vertex);

// Compare the generating sets of two cyclic automorphisms position by
// position up to `bound`; equality only means equal at this scale.
struct ConjugacyResult {
    bool equal = true;
    std::uint64_t differ_at = 0; // first differing position when !equal
};
ConjugacyResult cyclic_conjugacy(const UniversalSequence& s1,
                                 const UniversalSequence& s2,
                                 std::uint64_t bound);

// ---------------------------------------------------------------------------
// Random Cayley graph on the group's enumeration: one seeded coin decides
// each inverse-closed pair {a, a^-1} jointly, keyed to the smaller-index
// representative; x ~ y iff x * y^-1 landed in the connection set.
OraclePtr cayley_oracle(const GroupSpec& g, std::uint64_t seed);

// All enumerated x with index < enum_bound and x * x = a.
std::vector<GroupElement> sqrt_set(const GroupSpec& g, const GroupElement& a,
                                   std::uint64_t enum_bound);

// ---------------------------------------------------------------------------
// Random sum-free subset of the positive integers: scan n = 1, 2, ...;
// n = x + y with x, y already in (x = y allowed) is excluded outright,
// anything else joins on a fair seeded coin.
class SumFreeSet {
public:
    explicit SumFreeSet(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    bool contains(std::uint64_t n) const; // n >= 1
    std::vector<std::uint64_t> members_upto(std::uint64_t prefix) const;

private:
    void extend(std::uint64_t upto) const;
    std::uint64_t seed_;
    mutable std::vector<bool> in_ = {false}; // index 0 unused
};

// Over the difference graph on vertices {0..prefix} with x ~ y iff |x - y|
// is a member: triangle existence, the matching additive witness
// (a, b, a + b all members with a + b <= prefix), and whether every member
// up to the prefix is odd.
struct TriangleReport {
    bool triangle = false;
    bool schur_triple = false;
    bool all_odd = true;
    bool equivalent() const { return triangle == schur_triple; }
};

TriangleReport triangle_report(const std::vector<std::uint64_t>& members,
                               std::uint64_t prefix);
TriangleReport triangle_report(const SumFreeSet& s, std::uint64_t prefix);

} // namespace rado

#endif
