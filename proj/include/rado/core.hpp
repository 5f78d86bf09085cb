#ifndef RADO_CORE_HPP
#define RADO_CORE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rado {

// Vertex indices are arbitrary-precision: closure-chain witnesses pass 2^64
// after a handful of stages.
using Vertex = boost::multiprecision::cpp_int;

using VertexSet = std::set<Vertex>;

// ---------------------------------------------------------------------------
// FiniteGraph: symmetric irreflexive adjacency on vertices 0..n-1.
// Rows are packed into 64-bit words so the logic evaluator can sweep
// candidate witnesses a word at a time.
class FiniteGraph {
public:
    FiniteGraph() = default;
    explicit FiniteGraph(std::size_t n)
        : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool adjacent(std::size_t i, std::size_t j) const {
        return (rows_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }

    void set_edge(std::size_t i, std::size_t j, bool value = true) {
        if (i == j) return;
        set_bit(i, j, value);
        set_bit(j, i, value);
    }

    void flip_edge(std::size_t i, std::size_t j) {
        set_edge(i, j, !adjacent(i, j));
    }

    const std::uint64_t* row(std::size_t i) const { return rows_.data() + i * words_; }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const { return edges().size(); }

    FiniteGraph induced(const std::vector<std::size_t>& verts) const;
    FiniteGraph relabeled(const std::vector<std::size_t>& perm) const;

    bool operator==(const FiniteGraph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

    // Serialization: edge list ("u v" per line, u < v, ascending), DOT, JSON.
    std::string to_edge_list() const;
    std::string to_dot() const;
    std::string to_json() const;
    static FiniteGraph from_edge_list(const std::string& text);
    static FiniteGraph from_json(const std::string& text);

private:
    void set_bit(std::size_t i, std::size_t j, bool value) {
        auto& w = rows_[i * words_ + j / 64];
        std::uint64_t mask = std::uint64_t(1) << (j % 64);
        if (value) w |= mask; else w &= ~mask;
    }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

// ---------------------------------------------------------------------------
// Witness machinery for the extension property: given disjoint finite U, V,
// find z adjacent to everything in U and nothing in V.  `excluded` lets
// callers (the isomorphism engine, edit wrappers) rule out further vertices
// without constraining their adjacency.
struct WitnessQuery {
    VertexSet U;
    VertexSet V;
    VertexSet excluded;
};

enum class WitnessStatus { found, exhausted, unsatisfiable };

struct WitnessResult {
    WitnessStatus status = WitnessStatus::exhausted;
    Vertex vertex = 0;
    std::string detail;

    bool ok() const { return status == WitnessStatus::found; }
    static WitnessResult hit(Vertex v) { return {WitnessStatus::found, std::move(v), {}}; }
    static WitnessResult out(std::string why = "search bound exceeded") {
        return {WitnessStatus::exhausted, 0, std::move(why)};
    }
    static WitnessResult no(std::string why) {
        return {WitnessStatus::unsatisfiable, 0, std::move(why)};
    }
};

// A deterministic countable graph: adjacency predicate plus a witness
// strategy.  Implementations must be symmetric, irreflexive and immutable
// after construction.
class GraphOracle {
public:
    virtual ~GraphOracle() = default;
    virtual std::string name() const = 0;
    virtual bool adjacent(const Vertex& u, const Vertex& v) const = 0;
    virtual WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const = 0;
};

using OraclePtr = std::shared_ptr<const GraphOracle>;

// Generic witness search by linear scan, honouring the exclusion set.
// Shared by the seeded / Cayley / fallback paths.
WitnessResult scan_witness(const GraphOracle& o, const WitnessQuery& q,
                           std::uint64_t bound);

FiniteGraph truncate(const GraphOracle& o, std::size_t n);

// ---------------------------------------------------------------------------
// Extension-property verifier.
struct QueryOutcome {
    WitnessQuery query;
    WitnessResult result;
    bool pass = false;
    std::string failure;
};

struct ExtensionReport {
    std::vector<QueryOutcome> outcomes;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t exhausted = 0;

    bool all_passed() const { return failed == 0 && exhausted == 0; }
};

ExtensionReport verify_extension(const GraphOracle& o,
                                 const std::vector<Vertex>& pool,
                                 std::size_t max_query_size,
                                 std::uint64_t search_bound,
                                 bool stop_on_failure = false);

// Check one witness against its query (the three conditions).
bool witness_satisfies(const GraphOracle& o, const WitnessQuery& q, const Vertex& z);

// Brute-force isomorphism for small graphs (tries every vertex bijection).
bool graphs_isomorphic(const FiniteGraph& a, const FiniteGraph& b);

// All k-subsets of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn);

// ---------------------------------------------------------------------------
// ZxN bijection: 0 -> 0, k -> 2k-1, -k -> 2k.  Shift/cyclic constructions
// live on the integers; oracles live on naturals.
Vertex int_to_nat(const Vertex& z);
Vertex nat_to_int(const Vertex& n);

// 64-bit avalanche mix used by every seeded construction.  Documented
// bit-for-bit in the README so truncations are portable.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t mix_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c);

} // namespace rado

#endif
