#ifndef RADO_TRANSFORM_HPP
#define RADO_TRANSFORM_HPP

#include "rado/core.hpp"

#include <functional>

namespace rado {

// Finite surgery on an oracle.  Flips and the switching set refer to the
// base oracle's vertex ids; flipped pairs must avoid deleted vertices.
struct EditSet {
    VertexSet deleted;
    std::vector<std::pair<Vertex, Vertex>> flipped;
    VertexSet switched;
};

OraclePtr complement(OraclePtr o);
OraclePtr switch_graph(OraclePtr o, VertexSet X);
OraclePtr edit(OraclePtr o, EditSet e);

// Least part index whose induced subgraph passes verification at the given
// scale; nullopt when no part does at this scale (which refutes nothing —
// a part can fail every finite test and still induce the whole graph).
std::optional<std::size_t> pigeonhole_probe(
    const OraclePtr& o,
    const std::function<std::size_t(const Vertex&)>& coloring,
    std::size_t parts,
    std::size_t pool_size,
    std::size_t max_query_size,
    std::uint64_t search_bound);

struct CliqueResult {
    std::vector<Vertex> vertices;
    bool exhausted = false;
};

// Greedy maximal clique: repeatedly append the least-index vertex joined to
// everything chosen so far, scanning at most scan_bound candidates per step.
CliqueResult greedy_maximal_clique(const GraphOracle& o, std::size_t steps,
                                   std::uint64_t scan_bound = 10000000);

} // namespace rado

#endif
