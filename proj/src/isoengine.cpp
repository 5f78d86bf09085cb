#include "rado/isoengine.hpp"

#include <json.hpp>

namespace rado {

bool PartialMap::in_domain(const Vertex& x) const {
    return image(x).has_value();
}

bool PartialMap::in_range(const Vertex& y) const {
    return preimage(y).has_value();
}

std::optional<Vertex> PartialMap::image(const Vertex& x) const {
    for (const auto& [s, t] : pairs)
        if (s == x) return t;
    return std::nullopt;
}

std::optional<Vertex> PartialMap::preimage(const Vertex& y) const {
    for (const auto& [s, t] : pairs)
        if (t == y) return s;
    return std::nullopt;
}

std::string PartialMap::to_json(const GraphOracle& src, const GraphOracle& tgt) const {
    nlohmann::json j;
    j["pairs"] = nlohmann::json::array();
    for (const auto& [s, t] : pairs)
        j["pairs"].push_back({s.str(), t.str()});
    auto check = check_partial_iso(src, tgt, *this);
    j["verification"] = {{"injective", check.injective},
                         {"induced", check.induced},
                         {"size", pairs.size()}};
    return j.dump();
}

MapCheck check_partial_iso(const GraphOracle& src, const GraphOracle& tgt,
                           const PartialMap& f, bool spanning) {
    MapCheck c;
    c.injective = true;
    for (std::size_t i = 0; i < f.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < f.pairs.size(); ++j) {
            if (f.pairs[i].first == f.pairs[j].first ||
                f.pairs[i].second == f.pairs[j].second) {
                c.injective = false;
                c.detail = "duplicate coordinate";
                return c;
            }
        }
    c.induced = true;
    for (std::size_t i = 0; i < f.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < f.pairs.size(); ++j) {
            bool s = src.adjacent(f.pairs[i].first, f.pairs[j].first);
            bool t = tgt.adjacent(f.pairs[i].second, f.pairs[j].second);
            bool bad = spanning ? (s && !t) : (s != t);
            if (bad) {
                c.induced = false;
                c.detail = "adjacency mismatch at pair (" + f.pairs[i].first.str() +
                           "," + f.pairs[j].first.str() + ")";
                return c;
            }
        }
    return c;
}

namespace {

// Least-index search below scan_cap, then the oracle's own strategy.
WitnessResult find_target(const GraphOracle& tgt, const WitnessQuery& q,
                          std::uint64_t bound, std::uint64_t scan_cap) {
    auto scanned = scan_witness(tgt, q, scan_cap);
    if (scanned.ok()) return scanned;
    return tgt.witness(q, bound);
}

WitnessQuery query_for(const GraphOracle& src, const PartialMap& f, const Vertex& x,
                       bool forward) {
    WitnessQuery q;
    for (const auto& [s, t] : f.pairs) {
        const Vertex& probe = forward ? s : t;
        const Vertex& img = forward ? t : s;
        (src.adjacent(x, probe) ? q.U : q.V).insert(img);
    }
    return q;
}

} // namespace

ExtendResult extend_one_point(const GraphOracle& src, const GraphOracle& tgt,
                              const PartialMap& f, const Vertex& x,
                              std::uint64_t bound, std::uint64_t scan_cap) {
    ExtendResult out;
    out.map = f;
    auto q = query_for(src, f, x, /*forward=*/true);
    for (const auto& [s, t] : f.pairs) q.excluded.insert(t);
    auto r = find_target(tgt, q, bound, scan_cap);
    out.status = r.status;
    out.detail = r.detail;
    if (r.ok()) out.map.pairs.emplace_back(x, r.vertex);
    return out;
}

namespace {

Vertex least_absent(const std::vector<std::pair<Vertex, Vertex>>& pairs, bool domain,
                    Vertex& cursor) {
    for (;; ++cursor) {
        bool used = false;
        for (const auto& [s, t] : pairs)
            if ((domain ? s : t) == cursor) { used = true; break; }
        if (!used) return cursor;
    }
}

} // namespace

ExtendResult back_and_forth(const GraphOracle& o1, const GraphOracle& o2,
                            std::size_t rounds, std::uint64_t bound,
                            std::uint64_t scan_cap) {
    ExtendResult out;
    Vertex fwd_cursor = 0, bwd_cursor = 0;
    for (std::size_t r = 0; r < rounds; ++r) {
        bool forward = (r % 2 == 0);
        const GraphOracle& from = forward ? o1 : o2;
        const GraphOracle& to = forward ? o2 : o1;
        Vertex x;
        if (forward) {
            Vertex probe = fwd_cursor;
            x = least_absent(out.map.pairs, true, probe);
        } else {
            Vertex probe = bwd_cursor;
            x = least_absent(out.map.pairs, false, probe);
        }
        WitnessQuery q = query_for(from, out.map, x, forward);
        for (const auto& [s, t] : out.map.pairs) q.excluded.insert(forward ? t : s);
        auto w = find_target(to, q, bound, scan_cap);
        if (!w.ok()) {
            out.status = w.status;
            out.detail = "round " + std::to_string(r) + ": " + w.detail;
            return out;
        }
        if (forward)
            out.map.pairs.emplace_back(x, w.vertex);
        else
            out.map.pairs.emplace_back(w.vertex, x);
    }
    out.status = WitnessStatus::found;
    return out;
}

ExtendResult forth_embed(const GraphOracle& src, const GraphOracle& tgt,
                         std::size_t n, std::uint64_t bound, std::uint64_t scan_cap) {
    ExtendResult out;
    out.status = WitnessStatus::found;
    for (std::size_t i = 0; i < n; ++i) {
        auto step = extend_one_point(src, tgt, out.map, Vertex(i), bound, scan_cap);
        if (!step.ok()) {
            step.detail = "vertex " + std::to_string(i) + ": " + step.detail;
            return step;
        }
        out.map = std::move(step.map);
    }
    return out;
}

ExtendResult spanning_embed(const GraphOracle& src, const GraphOracle& tgt,
                            std::size_t rounds, std::uint64_t bound,
                            std::uint64_t scan_cap) {
    ExtendResult out;
    for (std::size_t r = 0; r < rounds; ++r) {
        bool forward = (r % 2 == 0);
        Vertex probe = 0;
        if (forward) {
            Vertex x = least_absent(out.map.pairs, true, probe);
            WitnessQuery q = query_for(src, out.map, x, true);
            for (const auto& [s, t] : out.map.pairs) q.excluded.insert(t);
            auto w = find_target(tgt, q, bound, scan_cap);
            if (!w.ok()) {
                out.status = w.status;
                out.detail = "forward round " + std::to_string(r) + ": " + w.detail;
                return out;
            }
            out.map.pairs.emplace_back(x, w.vertex);
        } else {
            Vertex y = least_absent(out.map.pairs, false, probe);
            // only source non-adjacency must be preserved: the new source
            // vertex may not be joined to any d whose image misses y
            WitnessQuery q;
            for (const auto& [s, t] : out.map.pairs)
                if (!tgt.adjacent(y, t)) q.V.insert(s);
            for (const auto& [s, t] : out.map.pairs) q.excluded.insert(s);
            auto w = find_target(src, q, bound, scan_cap);
            if (!w.ok()) {
                out.status = w.status;
                out.detail = "backward round " + std::to_string(r) +
                             " (source may lack a vertex avoiding a finite set): " +
                             w.detail;
                return out;
            }
            out.map.pairs.emplace_back(w.vertex, y);
        }
    }
    out.status = WitnessStatus::found;
    return out;
}

namespace {

bool consistent_assignment(const GraphOracle& o, const PartialMap& f,
                           const Vertex& x, const Vertex& y) {
    for (const auto& [a, b] : f.pairs) {
        if (a == x || b == y) continue;
        if (o.adjacent(x, a) != o.adjacent(y, b)) return false;
    }
    return true;
}

} // namespace

AutomorphismResult generic_automorphism(const GraphOracle& o, std::size_t rounds,
                                        std::size_t max_cycle, std::uint64_t bound,
                                        std::uint64_t scan_cap) {
    AutomorphismResult out;
    VertexSet used;
    std::vector<Vertex> orbit; // open orbit: f(orbit[i]) = orbit[i+1]
    Vertex fresh_cursor = 0;

    auto finish_orbit = [&]() -> bool {
        // close by wrapping the end to the start
        out.perm.pairs.emplace_back(orbit.back(), orbit.front());
        out.cycle_lengths.push_back(orbit.size());
        orbit.clear();
        return true;
    };

    for (std::size_t r = 0; r < rounds || !orbit.empty(); ++r) {
        if (r >= rounds + max_cycle + 8) {
            out.detail = "open orbit refused to close";
            return out;
        }
        if (orbit.empty()) {
            while (used.count(fresh_cursor)) ++fresh_cursor;
            orbit.push_back(fresh_cursor);
            used.insert(fresh_cursor);
            continue;
        }
        bool may_close = orbit.size() >= 2;
        if (may_close && consistent_assignment(o, out.perm, orbit.back(), orbit.front())) {
            finish_orbit();
            continue;
        }
        if (orbit.size() >= max_cycle) {
            out.detail = "no consistent closure within the cycle bound";
            return out;
        }
        // extend the orbit with a fresh witness for the one-point extension
        // orbit.back() -> z of the map-so-far
        WitnessQuery q;
        for (const auto& [a, b] : out.perm.pairs)
            (o.adjacent(orbit.back(), a) ? q.U : q.V).insert(b);
        for (const auto& v : used) q.excluded.insert(v);
        auto w = find_target(o, q, bound, scan_cap);
        if (!w.ok()) {
            out.detail = "orbit extension: " + w.detail;
            return out;
        }
        out.perm.pairs.emplace_back(orbit.back(), w.vertex);
        orbit.push_back(w.vertex);
        used.insert(w.vertex);
    }
    out.ok = true;
    return out;
}

} // namespace rado
