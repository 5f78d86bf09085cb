#ifndef RADO_LOGIC_HPP
#define RADO_LOGIC_HPP

#include "rado/core.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rado {

// ---------------------------------------------------------------------------
// First-order graph sentences.  `edge` atoms carry hyperedge predicates of
// arbitrary arity; everything else is the two-sorted-free graph language.
enum class FormulaKind { adj, eq, edge, not_, and_, or_, implies, forall, exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    FormulaKind kind;
    std::string var1, var2;        // atom operands; quantified variable in var1
    std::vector<std::string> args; // edge-atom arguments
    FormulaPtr left, right;        // not_/quantifiers use left only

    bool operator==(const Formula& other) const;
};

FormulaPtr f_adj(std::string x, std::string y);
FormulaPtr f_eq(std::string x, std::string y);
FormulaPtr f_edge(std::vector<std::string> args);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_forall(std::string x, FormulaPtr body);
FormulaPtr f_exists(std::string x, FormulaPtr body);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string what, std::size_t pos)
        : std::runtime_error(std::move(what)), position(pos) {}
};

// Concrete syntax:
//   atom    := ident "~" ident | ident "=" ident | ident "(" ident {"," ident} ")"
//   formula := atom | "!" formula | "(" formula ("&"|"|"|"->") formula ")"
//            | ("forall"|"exists") ident "(" formula ")"
FormulaPtr parse(const std::string& text);
std::string print(const Formula& f);

std::vector<std::string> free_vars(const Formula& f);
// parse + reject free variables
FormulaPtr parse_sentence(const std::string& text);

// ---------------------------------------------------------------------------
// Finite-model evaluation: Tarski semantics, quantifiers over 0..n-1.
// Innermost quantifiers with quantifier-free bodies sweep packed adjacency
// rows a word at a time.
bool eval_finite(const Formula& s, const FiniteGraph& g);

// Sentence sigma(m, n): every m+n distinct vertices admit a correctly joined
// distinct witness.  `distinct_z` controls the explicit z-distinctness
// conjuncts (without them, non-adjacency to the v's does not force z fresh).
FormulaPtr sigma(std::size_t m, std::size_t n, bool distinct_z = true);

// Truth in the countable homogeneous limit: quantifiers range over one-vertex
// extensions of the current finite configuration, every adjacency pattern
// being realized.
bool decide_R(const Formula& s);

// Monte-Carlo zero-one-law harness: fraction of `samples` draws of G(N, p)
// satisfying s.  Per-sample seeds derive from `seed` so scheduling cannot
// change the result; samples run across hardware threads.
double mc_zero_one(const Formula& s, std::size_t N, std::size_t samples,
                   std::uint64_t seed, double p = 0.5);

// Deterministic G(N, p) sample used by the harness, exposed for tests.
FiniteGraph sample_gnp(std::size_t N, double p, std::uint64_t sample_seed);

// ---------------------------------------------------------------------------
// Hypergraphs derived from a family of forbidden/selected finite graphs.
struct Hypergraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> edges; // each sorted, size >= 1
};

// Hyperedges are the vertex subsets of g inducing a graph isomorphic to some
// member of F.
Hypergraph derived_hypergraph(const std::vector<FiniteGraph>& F, const FiniteGraph& g);

// Evaluate a sentence over a hypergraph: edge atoms test their (distinct)
// argument set for hyperedge membership; adjacency atoms are out of language.
bool eval_hyper(const Formula& s, const Hypergraph& h);

// Rewrite each arity-k edge atom into the disjunction, over k-vertex members
// of F and vertex orderings, of the describing adjacency literals plus
// pairwise distinctness.
FormulaPtr translate(const Formula& hs, const std::vector<FiniteGraph>& F);

} // namespace rado

#endif
