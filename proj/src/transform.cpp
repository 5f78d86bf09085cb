#include "rado/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace rado {

namespace {

class ComplementOracle final : public GraphOracle {
public:
    explicit ComplementOracle(OraclePtr base) : base_(std::move(base)) {}

    std::string name() const override { return "complement(" + base_->name() + ")"; }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        return !base_->adjacent(u, v);
    }

    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        return base_->witness(WitnessQuery{q.V, q.U, q.excluded}, bound);
    }

private:
    OraclePtr base_;
};

class SwitchOracle final : public GraphOracle {
public:
    SwitchOracle(OraclePtr base, VertexSet X) : base_(std::move(base)), X_(std::move(X)) {}

    std::string name() const override { return "switch(" + base_->name() + ")"; }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        bool a = base_->adjacent(u, v);
        if (X_.count(u) != X_.count(v)) a = !a;
        return a;
    }

    // A vertex outside X sees X-side requirements inverted in the base graph;
    // excluding X itself makes the remaining requirements verbatim.
    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        WitnessQuery base_q;
        for (const auto& u : q.U) (X_.count(u) ? base_q.V : base_q.U).insert(u);
        for (const auto& v : q.V) (X_.count(v) ? base_q.U : base_q.V).insert(v);
        base_q.excluded = q.excluded;
        for (const auto& x : X_) base_q.excluded.insert(x);
        return base_->witness(base_q, bound);
    }

private:
    OraclePtr base_;
    VertexSet X_;
};

class EditOracle final : public GraphOracle {
public:
    EditOracle(OraclePtr base, EditSet e) : base_(std::move(base)), e_(std::move(e)) {
        for (const auto& [a, b] : e_.flipped) {
            if (a == b) throw std::invalid_argument("flip endpoints must differ");
            if (e_.deleted.count(a) || e_.deleted.count(b))
                throw std::invalid_argument("flip touches a deleted vertex");
        }
        deleted_sorted_.assign(e_.deleted.begin(), e_.deleted.end());
    }

    std::string name() const override { return "edit(" + base_->name() + ")"; }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        Vertex a = to_base(u), b = to_base(v);
        bool adj = base_->adjacent(a, b);
        if (flipped(a, b)) adj = !adj;
        if (e_.switched.count(a) != e_.switched.count(b)) adj = !adj;
        return adj;
    }

    // Exclude every tampered vertex from the search; away from them the
    // edited graph agrees with the switch of the base, so reuse its repair.
    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        WitnessQuery base_q;
        for (const auto& u : q.U) {
            Vertex a = to_base(u);
            (e_.switched.count(a) ? base_q.V : base_q.U).insert(a);
        }
        for (const auto& v : q.V) {
            Vertex a = to_base(v);
            (e_.switched.count(a) ? base_q.U : base_q.V).insert(a);
        }
        for (const auto& x : q.excluded) base_q.excluded.insert(to_base(x));
        for (const auto& d : e_.deleted) base_q.excluded.insert(d);
        for (const auto& s : e_.switched) base_q.excluded.insert(s);
        for (const auto& [a, b] : e_.flipped) {
            base_q.excluded.insert(a);
            base_q.excluded.insert(b);
        }
        auto r = base_->witness(base_q, bound);
        if (!r.ok()) return r;
        return WitnessResult::hit(from_base(r.vertex));
    }

private:
    Vertex to_base(const Vertex& v) const {
        Vertex out = v;
        for (const auto& d : deleted_sorted_)
            if (d <= out) ++out;
        return out;
    }

    Vertex from_base(const Vertex& v) const {
        Vertex out = v;
        for (const auto& d : deleted_sorted_) {
            if (d == v) throw std::logic_error("deleted vertex has no image");
            if (d < v) --out;
        }
        return out;
    }

    bool flipped(const Vertex& a, const Vertex& b) const {
        for (const auto& [x, y] : e_.flipped)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    }

    OraclePtr base_;
    EditSet e_;
    std::vector<Vertex> deleted_sorted_;
};

// Restriction of an oracle to one color class, re-indexed through the
// class's enumeration.
class PartOracle final : public GraphOracle {
public:
    PartOracle(OraclePtr base, std::vector<Vertex> members)
        : base_(std::move(base)), members_(std::move(members)) {}

    std::string name() const override { return "part(" + base_->name() + ")"; }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        return base_->adjacent(member(u), member(v));
    }

    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        return scan_witness(*this, q, std::min<std::uint64_t>(bound, members_.size()));
    }

private:
    const Vertex& member(const Vertex& i) const {
        if (i >= Vertex(members_.size()))
            throw std::out_of_range("part member beyond enumerated range");
        return members_[i.convert_to<std::size_t>()];
    }

    OraclePtr base_;
    std::vector<Vertex> members_;
};

} // namespace

OraclePtr complement(OraclePtr o) {
    return std::make_shared<ComplementOracle>(std::move(o));
}

OraclePtr switch_graph(OraclePtr o, VertexSet X) {
    return std::make_shared<SwitchOracle>(std::move(o), std::move(X));
}

OraclePtr edit(OraclePtr o, EditSet e) {
    return std::make_shared<EditOracle>(std::move(o), std::move(e));
}

std::optional<std::size_t> pigeonhole_probe(
    const OraclePtr& o,
    const std::function<std::size_t(const Vertex&)>& coloring,
    std::size_t parts,
    std::size_t pool_size,
    std::size_t max_query_size,
    std::uint64_t search_bound) {
    for (std::size_t p = 0; p < parts; ++p) {
        // enumerate enough members for the pool plus witness-search room
        std::vector<Vertex> members;
        for (Vertex v = 0; members.size() < search_bound; ++v) {
            if (coloring(v) == p) members.push_back(v);
            if (v > Vertex(8 * search_bound + 1024)) break;
        }
        if (members.size() < pool_size) continue;
        PartOracle part(o, std::move(members));
        std::vector<Vertex> pool;
        for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(i);
        auto report = verify_extension(part, pool, max_query_size, search_bound,
                                       /*stop_on_failure=*/true);
        if (report.all_passed()) return p;
    }
    return std::nullopt;
}

CliqueResult greedy_maximal_clique(const GraphOracle& o, std::size_t steps,
                                   std::uint64_t scan_bound) {
    CliqueResult result;
    for (std::size_t s = 0; s < steps; ++s) {
        bool found = false;
        for (std::uint64_t c = 0; c < scan_bound; ++c) {
            Vertex z(c);
            if (std::find(result.vertices.begin(), result.vertices.end(), z) !=
                result.vertices.end())
                continue;
            bool joined = true;
            for (const auto& w : result.vertices)
                if (!o.adjacent(z, w)) { joined = false; break; }
            if (joined) {
                result.vertices.push_back(z);
                found = true;
                break;
            }
        }
        if (!found) { result.exhausted = true; break; }
    }
    return result;
}

} // namespace rado
