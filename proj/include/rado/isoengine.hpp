#ifndef RADO_ISOENGINE_HPP
#define RADO_ISOENGINE_HPP

#include "rado/core.hpp"

namespace rado {

// Finite injective map between two oracles' vertex sets.
struct PartialMap {
    std::vector<std::pair<Vertex, Vertex>> pairs;

    bool in_domain(const Vertex& x) const;
    bool in_range(const Vertex& y) const;
    std::optional<Vertex> image(const Vertex& x) const;
    std::optional<Vertex> preimage(const Vertex& y) const;
    std::size_t size() const { return pairs.size(); }

    std::string to_json(const GraphOracle& src, const GraphOracle& tgt) const;
};

// Brute-force verification: injectivity both ways plus, per pair of pairs,
// source adjacency equal to target adjacency.  Spanning mode only demands
// that source edges land on target edges.
struct MapCheck {
    bool injective = false;
    bool induced = false;
    std::string detail;
    bool ok() const { return injective && induced; }
};

MapCheck check_partial_iso(const GraphOracle& src, const GraphOracle& tgt,
                           const PartialMap& f, bool spanning = false);

struct ExtendResult {
    WitnessStatus status = WitnessStatus::exhausted;
    PartialMap map;
    std::string detail;
    bool ok() const { return status == WitnessStatus::found; }
};

// Append (x, z): z is the least-index suitable target vertex if one lives
// below scan_cap, otherwise whatever the target's witness strategy returns.
ExtendResult extend_one_point(const GraphOracle& src, const GraphOracle& tgt,
                              const PartialMap& f, const Vertex& x,
                              std::uint64_t bound, std::uint64_t scan_cap = 1 << 16);

// Alternating extension: even rounds map the least unmapped vertex of o1,
// odd rounds pull back the least uncovered vertex of o2.
ExtendResult back_and_forth(const GraphOracle& o1, const GraphOracle& o2,
                            std::size_t rounds, std::uint64_t bound,
                            std::uint64_t scan_cap = 1 << 16);

// Forth only: embed src vertices 0..n-1 into tgt as an induced subgraph.
ExtendResult forth_embed(const GraphOracle& src, const GraphOracle& tgt,
                         std::size_t n, std::uint64_t bound,
                         std::uint64_t scan_cap = 1 << 16);

// Bijection prefix in which backward steps only promise that source
// non-adjacency is never violated, so the source spans its image.
ExtendResult spanning_embed(const GraphOracle& src, const GraphOracle& tgt,
                            std::size_t rounds, std::uint64_t bound,
                            std::uint64_t scan_cap = 1 << 16);

struct AutomorphismResult {
    PartialMap perm; // domain = range, all cycles closed
    std::vector<std::size_t> cycle_lengths;
    bool ok = false;
    std::string detail;
};

// Finite approximation to a generic automorphism: orbits grow by fresh
// witnesses and close as soon as wrapping around is adjacency-consistent.
// Closure is only attempted once an orbit has at least two elements.
AutomorphismResult generic_automorphism(const GraphOracle& o, std::size_t rounds,
                                        std::size_t max_cycle, std::uint64_t bound,
                                        std::uint64_t scan_cap = 1 << 16);

} // namespace rado

#endif
