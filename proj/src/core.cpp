#include "rado/core.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace rado {

std::vector<std::pair<std::size_t, std::size_t>> FiniteGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

FiniteGraph FiniteGraph::induced(const std::vector<std::size_t>& verts) const {
    FiniteGraph g(verts.size());
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (adjacent(verts[a], verts[b])) g.set_edge(a, b);
    return g;
}

FiniteGraph FiniteGraph::relabeled(const std::vector<std::size_t>& perm) const {
    FiniteGraph g(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) g.set_edge(perm[i], perm[j]);
    return g;
}

std::string FiniteGraph::to_edge_list() const {
    std::ostringstream os;
    for (auto [u, v] : edges()) os << u << ' ' << v << '\n';
    return os.str();
}

std::string FiniteGraph::to_dot() const {
    std::ostringstream os;
    os << "graph g {\n";
    for (std::size_t i = 0; i < n_; ++i) os << "  " << i << ";\n";
    for (auto [u, v] : edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string FiniteGraph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : edges()) j["edges"].push_back({u, v});
    return j.dump();
}

FiniteGraph FiniteGraph::from_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::pair<std::size_t, std::size_t>> es;
    std::size_t u, v, n = 0;
    while (is >> u >> v) {
        es.emplace_back(u, v);
        n = std::max({n, u + 1, v + 1});
    }
    FiniteGraph g(n);
    for (auto [a, b] : es) g.set_edge(a, b);
    return g;
}

FiniteGraph FiniteGraph::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    FiniteGraph g(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges"))
        g.set_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return g;
}

WitnessResult scan_witness(const GraphOracle& o, const WitnessQuery& q,
                           std::uint64_t bound) {
    for (std::uint64_t i = 0; i < bound; ++i) {
        Vertex z(i);
        if (q.U.count(z) || q.V.count(z) || q.excluded.count(z)) continue;
        if (witness_satisfies(o, q, z)) return WitnessResult::hit(z);
    }
    return WitnessResult::out();
}

bool witness_satisfies(const GraphOracle& o, const WitnessQuery& q, const Vertex& z) {
    if (q.U.count(z) || q.V.count(z) || q.excluded.count(z)) return false;
    for (const auto& u : q.U)
        if (!o.adjacent(z, u)) return false;
    for (const auto& v : q.V)
        if (o.adjacent(z, v)) return false;
    return true;
}

FiniteGraph truncate(const GraphOracle& o, std::size_t n) {
    FiniteGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (o.adjacent(Vertex(i), Vertex(j))) g.set_edge(i, j);
    return g;
}

namespace {

// Enumerate all (U,V) disjoint pairs from pool with |U|+|V| <= max size.
void for_each_query(const std::vector<Vertex>& pool, std::size_t max_size,
                    const std::function<bool(const VertexSet&, const VertexSet&)>& fn) {
    const std::size_t n = pool.size();
    // choose a subset W of the pool, then split W into (U, V) every way
    bool stop = false;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
        if (stop) return;
        if (idx.size() <= max_size) {
            const std::size_t k = idx.size();
            for (std::uint64_t m = 0; m < (std::uint64_t(1) << k); ++m) {
                VertexSet U, V;
                for (std::size_t t = 0; t < k; ++t)
                    ((m >> t) & 1 ? U : V).insert(pool[idx[t]]);
                if (!fn(U, V)) { stop = true; return; }
            }
        }
        if (idx.size() == max_size) return;
        for (std::size_t i = start; i < n; ++i) {
            idx.push_back(i);
            choose(i + 1);
            idx.pop_back();
            if (stop) return;
        }
    };
    choose(0);
}

} // namespace

ExtensionReport verify_extension(const GraphOracle& o,
                                 const std::vector<Vertex>& pool,
                                 std::size_t max_query_size,
                                 std::uint64_t search_bound,
                                 bool stop_on_failure) {
    ExtensionReport report;
    for_each_query(pool, max_query_size, [&](const VertexSet& U, const VertexSet& V) {
        QueryOutcome qo;
        qo.query = WitnessQuery{U, V, {}};
        qo.result = o.witness(qo.query, search_bound);
        if (qo.result.status == WitnessStatus::found) {
            qo.pass = witness_satisfies(o, qo.query, qo.result.vertex);
            if (!qo.pass) qo.failure = "returned witness violates the query";
        } else {
            qo.pass = false;
            qo.failure = qo.result.detail;
        }
        if (qo.pass) ++report.passed;
        else if (qo.result.status == WitnessStatus::found) ++report.failed;
        else ++report.exhausted;
        bool failed = !qo.pass;
        report.outcomes.push_back(std::move(qo));
        return !(stop_on_failure && failed);
    });
    return report;
}

bool graphs_isomorphic(const FiniteGraph& a, const FiniteGraph& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> perm(a.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        bool match = true;
        for (std::size_t i = 0; i < a.size() && match; ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (a.adjacent(i, j) != b.adjacent(perm[i], perm[j])) {
                    match = false;
                    break;
                }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Vertex int_to_nat(const Vertex& z) {
    if (z == 0) return 0;
    if (z > 0) return 2 * z - 1;
    return -2 * z;
}

Vertex nat_to_int(const Vertex& n) {
    if (n == 0) return 0;
    if (n % 2 == 1) return (n + 1) / 2;
    return -(n / 2);
}

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(mix64(a) ^ b) ^ c);
}

} // namespace rado
