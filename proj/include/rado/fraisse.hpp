#ifndef RADO_FRAISSE_HPP
#define RADO_FRAISSE_HPP

#include "rado/core.hpp"

namespace rado {

// A hereditary class of finite graphs given by induced-subgraph exclusions.
struct ClassSpec {
    std::vector<FiniteGraph> forbidden; // each of size >= 2

    // Accepts "Kn:<n>" (forbid the complete graph on n vertices) or JSON
    // {"forbidden":[{"n":…,"edges":[[u,v],…]},…]}.
    static ClassSpec parse(const std::string& text);
    std::string describe() const;
};

// True iff no induced subgraph of g is isomorphic to a forbidden graph.
bool is_member(const ClassSpec& spec, const FiniteGraph& g);

// Exhaustive amalgamation check over class members B1, B2 of size <=
// size_bound and every common part A with its embeddings.  An amalgam may
// identify vertices of B1\A with vertices of B2\A; `strong_failures` lists
// the triples that only amalgamate with such identifications.
struct AmalgamationFailure {
    FiniteGraph A, B1, B2;
    std::string detail;
};

struct AmalgamationReport {
    std::size_t checked = 0;
    std::vector<AmalgamationFailure> failures;
    std::vector<AmalgamationFailure> strong_failures;
    bool ok() const { return failures.empty(); }
};

AmalgamationReport check_amalgamation(const ClassSpec& spec, std::size_t size_bound);

// Saturated stage chain: stage k+1 appends, for each subset U of the stage-k
// vertices in rank order, a vertex adjacent exactly to U — skipping subsets
// whose addition would leave the class.  With no exclusions this reproduces
// the closure-chain construction vertex for vertex.
OraclePtr limit_oracle(const ClassSpec& spec);

// Witness inside the K_n-free limit: rejects queries whose U already induces
// a K_{n-1} (the witness would complete a K_n).
WitnessResult henson_witness(const GraphOracle& o, std::size_t n,
                             const WitnessQuery& q, std::uint64_t bound);

} // namespace rado

#endif
