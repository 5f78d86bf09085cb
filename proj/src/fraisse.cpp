#include "rado/fraisse.hpp"
#include "rado/constructions.hpp"

#include <algorithm>
#include <json.hpp>
#include <mutex>
#include <sstream>

namespace rado {

// ---------------------------------------------------------------------------
// ClassSpec

ClassSpec ClassSpec::parse(const std::string& text) {
    ClassSpec spec;
    auto first = text.find_first_not_of(" \t\r\n");
    std::string body = first == std::string::npos ? "" : text.substr(first);
    if (body.rfind("Kn:", 0) == 0) {
        std::size_t n = std::stoul(body.substr(3));
        if (n < 2) throw std::invalid_argument("Kn exclusion needs n >= 2");
        FiniteGraph k(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) k.set_edge(i, j);
        spec.forbidden.push_back(std::move(k));
        return spec;
    }
    auto j = nlohmann::json::parse(body);
    for (const auto& item : j.at("forbidden")) {
        FiniteGraph g(item.at("n").get<std::size_t>());
        for (const auto& e : item.at("edges"))
            g.set_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        spec.forbidden.push_back(std::move(g));
    }
    for (const auto& f : spec.forbidden)
        if (f.size() < 2)
            throw std::invalid_argument("forbidden graphs need at least 2 vertices");
    return spec;
}

std::string ClassSpec::describe() const {
    std::ostringstream os;
    os << "forbid[";
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        const auto& f = forbidden[i];
        if (i) os << ",";
        std::size_t full = f.size() * (f.size() - 1) / 2;
        if (f.edge_count() == full)
            os << "K" << f.size();
        else
            os << f.size() << "v" << f.edge_count() << "e";
    }
    os << "]";
    return os.str();
}

bool is_member(const ClassSpec& spec, const FiniteGraph& g) {
    for (const auto& f : spec.forbidden) {
        if (f.size() > g.size()) continue;
        bool found = false;
        for_each_subset(g.size(), f.size(), [&](const std::vector<std::size_t>& s) {
            if (found) return;
            if (graphs_isomorphic(g.induced(s), f)) found = true;
        });
        if (found) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Amalgamation

namespace {

std::vector<FiniteGraph> class_members_upto(const ClassSpec& spec, std::size_t bound) {
    std::vector<FiniteGraph> out;
    for (std::size_t n = 1; n <= bound; ++n) {
        std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            FiniteGraph g(n);
            std::size_t bit = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if ((mask >> bit++) & 1) g.set_edge(i, j);
            if (!is_member(spec, g)) continue;
            bool dup = false;
            for (const auto& h : out)
                if (h.size() == n && graphs_isomorphic(g, h)) { dup = true; break; }
            if (!dup) out.push_back(std::move(g));
        }
    }
    return out;
}

// Search for an amalgam of B1 and B2 over the common part (S, img).
// Identifications pair leftovers of B1 with leftovers of B2; the remaining
// cross adjacencies are completed every possible way.
bool amalgam_exists(const ClassSpec& spec, const FiniteGraph& B1,
                    const std::vector<std::size_t>& S, const FiniteGraph& B2,
                    const std::vector<std::size_t>& img, bool allow_ident) {
    std::vector<std::size_t> D1, D2;
    for (std::size_t v = 0; v < B1.size(); ++v)
        if (std::find(S.begin(), S.end(), v) == S.end()) D1.push_back(v);
    for (std::size_t v = 0; v < B2.size(); ++v)
        if (std::find(img.begin(), img.end(), v) == img.end()) D2.push_back(v);

    // assignment[i] = index into D2, or npos for unmatched
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> assign(D1.size(), npos);

    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == D1.size()) {
            std::size_t matched = 0;
            for (auto a : assign)
                if (a != npos) ++matched;
            if (matched > 0 && !allow_ident) return false;
            // consistency of the identified pairs
            for (std::size_t x = 0; x < D1.size(); ++x) {
                if (assign[x] == npos) continue;
                for (std::size_t s = 0; s < S.size(); ++s)
                    if (B1.adjacent(D1[x], S[s]) !=
                        B2.adjacent(D2[assign[x]], img[s]))
                        return false;
                for (std::size_t y = x + 1; y < D1.size(); ++y)
                    if (assign[y] != npos &&
                        B1.adjacent(D1[x], D1[y]) !=
                            B2.adjacent(D2[assign[x]], D2[assign[y]]))
                        return false;
            }
            std::vector<std::size_t> U2; // unmatched leftovers of B2
            for (std::size_t y = 0; y < D2.size(); ++y)
                if (std::find(assign.begin(), assign.end(), y) == assign.end())
                    U2.push_back(y);
            std::vector<std::size_t> free1; // unmatched leftovers of B1
            for (std::size_t x = 0; x < D1.size(); ++x)
                if (assign[x] == npos) free1.push_back(x);

            const std::size_t k = S.size(), d1 = D1.size(), u2 = U2.size();
            FiniteGraph C(k + d1 + u2);
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = a + 1; b < k; ++b)
                    C.set_edge(a, b, B1.adjacent(S[a], S[b]));
                for (std::size_t x = 0; x < d1; ++x)
                    C.set_edge(a, k + x, B1.adjacent(S[a], D1[x]));
                for (std::size_t w = 0; w < u2; ++w)
                    C.set_edge(a, k + d1 + w, B2.adjacent(img[a], D2[U2[w]]));
            }
            for (std::size_t x = 0; x < d1; ++x) {
                for (std::size_t y = x + 1; y < d1; ++y)
                    C.set_edge(k + x, k + y, B1.adjacent(D1[x], D1[y]));
                if (assign[x] != npos)
                    for (std::size_t w = 0; w < u2; ++w)
                        C.set_edge(k + x, k + d1 + w,
                                   B2.adjacent(D2[assign[x]], D2[U2[w]]));
            }
            for (std::size_t w = 0; w < u2; ++w)
                for (std::size_t w2 = w + 1; w2 < u2; ++w2)
                    C.set_edge(k + d1 + w, k + d1 + w2,
                               B2.adjacent(D2[U2[w]], D2[U2[w2]]));

            const std::size_t bits = free1.size() * u2;
            for (std::uint64_t cross = 0; cross < (1ull << bits); ++cross) {
                std::size_t b = 0;
                for (auto x : free1)
                    for (std::size_t w = 0; w < u2; ++w)
                        C.set_edge(k + x, k + d1 + w, (cross >> b++) & 1);
                if (is_member(spec, C)) return true;
            }
            return false;
        }
        if (place(i + 1)) return true; // unmatched first (covers the free amalgam)
        if (allow_ident) {
            for (std::size_t y = 0; y < D2.size(); ++y) {
                if (std::find(assign.begin(), assign.end(), y) != assign.end())
                    continue;
                assign[i] = y;
                if (place(i + 1)) { assign[i] = npos; return true; }
                assign[i] = npos;
            }
        }
        return false;
    };
    return place(0);
}

} // namespace

AmalgamationReport check_amalgamation(const ClassSpec& spec, std::size_t size_bound) {
    if (size_bound < 2) throw std::invalid_argument("size_bound must be >= 2");
    AmalgamationReport report;
    auto members = class_members_upto(spec, size_bound);
    for (const auto& B1 : members) {
        const std::size_t n1 = B1.size();
        for (std::uint64_t sel = 0; sel < (1ull << n1); ++sel) {
            std::vector<std::size_t> S;
            for (std::size_t v = 0; v < n1; ++v)
                if ((sel >> v) & 1) S.push_back(v);
            FiniteGraph A = B1.induced(S);
            for (const auto& B2 : members) {
                if (B2.size() < S.size()) continue;
                // every embedding of A into B2
                for_each_subset(B2.size(), S.size(), [&](const std::vector<std::size_t>& tgt) {
                    std::vector<std::size_t> img = tgt;
                    std::sort(img.begin(), img.end());
                    do {
                        bool embeds = true;
                        for (std::size_t a = 0; a < S.size() && embeds; ++a)
                            for (std::size_t b = a + 1; b < S.size(); ++b)
                                if (B1.adjacent(S[a], S[b]) !=
                                    B2.adjacent(img[a], img[b])) {
                                    embeds = false;
                                    break;
                                }
                        if (!embeds) continue;
                        ++report.checked;
                        bool strong = amalgam_exists(spec, B1, S, B2, img, false);
                        bool weak =
                            strong || amalgam_exists(spec, B1, S, B2, img, true);
                        if (!strong || !weak) {
                            AmalgamationFailure fail{A, B1, B2, ""};
                            std::ostringstream os;
                            os << "|A|=" << S.size() << " |B1|=" << B1.size()
                               << " |B2|=" << B2.size();
                            fail.detail = os.str();
                            if (!strong) report.strong_failures.push_back(fail);
                            if (!weak) report.failures.push_back(std::move(fail));
                        }
                    } while (std::next_permutation(img.begin(), img.end()));
                });
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Limit oracle

namespace {

// Stage chain with one record per vertex: the stage's base size and the exact
// neighbour set below that base.  Subsets are enumerated in rank (numeric)
// order; when every forbidden graph is complete the legal subsets are the
// clique-free ones, enumerated directly with pruning, otherwise ranks are
// scanned one by one under a budget.
class LimitOracle final : public GraphOracle {
public:
    explicit LimitOracle(ClassSpec spec) : spec_(std::move(spec)) {
        clique_bound_ = 0;
        for (const auto& f : spec_.forbidden) {
            std::size_t full = f.size() * (f.size() - 1) / 2;
            if (f.edge_count() != full) { clique_bound_ = 0; break; }
            std::size_t c = f.size() - 1;
            clique_bound_ = clique_bound_ == 0 ? c : std::min(clique_bound_, c);
        }
        stages_.push_back(Stage{0, 0, 0, 0, false});
    }

    std::string name() const override { return "limit(" + spec_.describe() + ")"; }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        const Vertex& hi = u > v ? u : v;
        const Vertex& lo = u > v ? v : u;
        std::lock_guard<std::mutex> lock(mu_);
        std::size_t h = to_index(hi);
        ensure_count(h + 1);
        if (h >= records_.size())
            throw std::out_of_range("vertex beyond the materializable ledger");
        std::uint32_t l = static_cast<std::uint32_t>(lo.convert_to<std::size_t>());
        const auto& nb = records_[h].nbrs;
        return std::binary_search(nb.begin(), nb.end(), l);
    }

    WitnessResult witness(const WitnessQuery& q, std::uint64_t) const override {
        std::lock_guard<std::mutex> lock(mu_);
        std::size_t M = 0;
        std::vector<std::uint32_t> want;
        for (const auto& u : q.U) {
            std::size_t v = to_index(u);
            M = std::max(M, v + 1);
            want.push_back(static_cast<std::uint32_t>(v));
        }
        for (const auto& v : q.V) M = std::max(M, to_index(v) + 1);
        std::sort(want.begin(), want.end());

        // walk the stages with base >= M in order
        for (std::size_t si = 0;; ++si) {
            while (si >= stages_.size())
                if (!open_next_stage()) return WitnessResult::out("ledger exhausted");
            if (stages_[si].base < M) continue;
            if (!legal(want, stages_[si].base)) {
                if (q.excluded.empty())
                    return WitnessResult::no("no class member extends this way");
                break; // an excluded earlier candidate was the only shape
            }
            auto idx = find_in_stage(si, want);
            if (!idx) break; // enumeration budget or ledger cap reached
            Vertex z(*idx);
            if (!q.excluded.count(z)) return WitnessResult::hit(z);
            // excluded: try the same subset in the next covering stage
        }
        return WitnessResult::out("ledger exhausted");
    }

private:
    struct Stage {
        std::uint32_t base;      // vertices below this stage
        std::uint32_t start;     // index of the stage's first vertex
        std::uint64_t emitted;   // legal subsets appended so far
        std::uint64_t next_rank; // generic path: next rank to test
        bool closed;
    };

    struct Record {
        std::uint32_t base;
        std::vector<std::uint32_t> nbrs;
    };

    static constexpr std::size_t kMaxVertices = 1u << 17;
    static constexpr std::uint64_t kRankBudget = 1u << 20;

    std::size_t to_index(const Vertex& v) const {
        if (v < 0 || v > Vertex(kMaxVertices))
            throw std::out_of_range("vertex beyond the materializable ledger");
        return v.convert_to<std::size_t>();
    }

    bool adjacent_base(std::uint32_t a, std::uint32_t b) const {
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        const auto& nb = records_[b].nbrs;
        return std::binary_search(nb.begin(), nb.end(), a);
    }

    // clique path: would adding m to the (clique-free) set keep it free of
    // K_{clique_bound_}?
    bool clique_extend_ok(const std::vector<std::uint32_t>& chosen,
                          std::uint32_t m) const {
        if (clique_bound_ == 1) return false; // no vertex may be joined
        std::vector<std::uint32_t> adj;
        for (auto u : chosen)
            if (adjacent_base(std::min(u, m), std::max(u, m))) adj.push_back(u);
        if (clique_bound_ == 2) return adj.empty();
        std::size_t need = clique_bound_ - 1;
        if (adj.size() < need) return true;
        bool clique = false;
        for_each_subset(adj.size(), need, [&](const std::vector<std::size_t>& s) {
            if (clique) return;
            bool all = true;
            for (std::size_t i = 0; i < s.size() && all; ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    if (!adjacent_base(adj[s[i]], adj[s[j]])) { all = false; break; }
            if (all) clique = true;
        });
        return !clique;
    }

    // full legality of a fresh vertex joined exactly to `want` over `base`
    bool legal(const std::vector<std::uint32_t>& want, std::uint32_t base) const {
        if (clique_bound_ > 0) {
            // only cliques inside the neighbour set matter
            if (clique_bound_ == 1) return want.empty();
            if (want.size() < clique_bound_) return true;
            bool bad = false;
            for_each_subset(want.size(), clique_bound_,
                            [&](const std::vector<std::size_t>& s) {
                if (bad) return;
                bool all = true;
                for (std::size_t i = 0; i < s.size() && all; ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        if (!adjacent_base(want[s[i]], want[s[j]])) {
                            all = false;
                            break;
                        }
                if (all) bad = true;
            });
            return !bad;
        }
        // generic: look for a forbidden graph through the fresh vertex
        auto fresh_adjacent = [&](std::uint32_t v) {
            return std::binary_search(want.begin(), want.end(), v);
        };
        for (const auto& f : spec_.forbidden) {
            std::size_t k = f.size();
            if (k - 1 > base) continue;
            bool bad = false;
            for_each_subset(base, k - 1, [&](const std::vector<std::size_t>& s) {
                if (bad) return;
                FiniteGraph cand(k);
                for (std::size_t i = 0; i + 1 < k; ++i) {
                    for (std::size_t j = i + 1; j + 1 < k; ++j)
                        cand.set_edge(i, j,
                                      adjacent_base(static_cast<std::uint32_t>(s[i]),
                                                    static_cast<std::uint32_t>(s[j])));
                    cand.set_edge(i, k - 1,
                                  fresh_adjacent(static_cast<std::uint32_t>(s[i])));
                }
                if (graphs_isomorphic(cand, f)) bad = true;
            });
            if (bad) return false;
        }
        return true;
    }

    void append(const std::vector<std::uint32_t>& nbrs_desc, Stage& st) const {
        Record r;
        r.base = st.base;
        r.nbrs.assign(nbrs_desc.begin(), nbrs_desc.end());
        std::sort(r.nbrs.begin(), r.nbrs.end());
        records_.push_back(std::move(r));
        ++st.emitted;
    }

    // numeric comparison of descending-bit subsets
    static bool rank_less(const std::vector<std::uint32_t>& a_desc,
                          const std::vector<std::uint32_t>& b_desc) {
        for (std::size_t i = 0; i < std::min(a_desc.size(), b_desc.size()); ++i) {
            if (a_desc[i] != b_desc[i]) return a_desc[i] < b_desc[i];
        }
        return a_desc.size() < b_desc.size();
    }

    // Enumerate the current stage's legal subsets in numeric order, skipping
    // the ones already emitted, until `stop` says enough.  Returns true when
    // the stage was fully enumerated.
    bool advance_stage(Stage& st,
                       const std::function<bool()>& stop) const {
        if (st.closed) return true;
        if (clique_bound_ > 0) {
            std::uint64_t seen = 0;
            std::vector<std::uint32_t> chosen; // descending
            bool stopped = false;
            auto emit = [&]() {
                if (seen++ < st.emitted) return;
                append(chosen, st);
                if (records_.size() >= kMaxVertices || stop()) stopped = true;
            };
            std::function<void(std::uint32_t)> visit = [&](std::uint32_t below) {
                for (std::uint32_t m = 0; m < below && !stopped; ++m) {
                    if (!clique_extend_ok(chosen, m)) continue;
                    chosen.push_back(m);
                    emit();
                    if (!stopped) visit(m);
                    chosen.pop_back();
                }
            };
            emit(); // the empty subset
            if (!stopped) visit(st.base);
            if (!stopped) st.closed = true;
            return st.closed;
        }
        // generic path: test ranks one at a time
        std::uint64_t cap =
            st.base >= 64 ? ~0ull : (1ull << st.base);
        std::uint64_t budget = kRankBudget;
        while (st.next_rank < cap && budget-- > 0) {
            std::uint64_t r = st.next_rank++;
            std::vector<std::uint32_t> want;
            for (std::uint32_t b = 0; b < 64; ++b)
                if ((r >> b) & 1) want.push_back(b);
            if (!legal(want, st.base)) continue;
            std::vector<std::uint32_t> desc(want.rbegin(), want.rend());
            append(desc, st);
            if (records_.size() >= kMaxVertices || stop()) return false;
        }
        if (st.next_rank >= cap) st.closed = true;
        return st.closed;
    }

    bool open_next_stage() const {
        if (stages_.empty()) return false;
        Stage& last = stages_.back();
        if (!last.closed) {
            advance_stage(last, [] { return false; });
            if (!last.closed) return false; // budget or cap hit
        }
        if (last.emitted == 0) return false; // saturated class
        std::uint32_t base = static_cast<std::uint32_t>(records_.size());
        stages_.push_back(Stage{base, base, 0, 0, false});
        return true;
    }

    void ensure_count(std::size_t count) const {
        while (records_.size() < count && records_.size() < kMaxVertices) {
            Stage& st = stages_.back();
            bool done = advance_stage(
                st, [&] { return records_.size() >= count; });
            if (records_.size() >= count) return;
            if (done && !open_next_stage()) return;
            if (!done) return; // budget hit mid-stage
        }
    }

    // index of the stage's vertex whose neighbour set is exactly `want`
    std::optional<std::size_t> find_in_stage(std::size_t si,
                                             const std::vector<std::uint32_t>& want) const {
        std::vector<std::uint32_t> want_desc(want.rbegin(), want.rend());
        for (;;) {
            Stage& st = stages_[si];
            std::size_t end =
                si + 1 < stages_.size() ? stages_[si + 1].start : records_.size();
            for (std::size_t i = st.start; i < end; ++i) {
                std::vector<std::uint32_t> desc(records_[i].nbrs.rbegin(),
                                                records_[i].nbrs.rend());
                if (desc == want_desc) return i;
                if (rank_less(want_desc, desc)) return std::nullopt; // passed it
            }
            if (st.closed) return std::nullopt; // legal but skipped: impossible
            // materialize further until we pass the wanted rank
            std::size_t before = records_.size();
            advance_stage(st, [&] {
                if (records_.size() == 0) return false;
                std::vector<std::uint32_t> desc(records_.back().nbrs.rbegin(),
                                                records_.back().nbrs.rend());
                return !rank_less(desc, want_desc);
            });
            if (records_.size() == before && !st.closed) return std::nullopt;
        }
    }

    ClassSpec spec_;
    std::size_t clique_bound_; // >0 when every forbidden graph is complete
    mutable std::mutex mu_;
    mutable std::vector<Record> records_;
    mutable std::vector<Stage> stages_;
};

} // namespace

OraclePtr limit_oracle(const ClassSpec& spec) {
    auto guard = check_amalgamation(spec, 4);
    if (!guard.ok())
        throw std::invalid_argument("class fails amalgamation at size 4");
    if (spec.forbidden.empty()) return make_closure_chain();
    return std::make_shared<LimitOracle>(spec);
}

WitnessResult henson_witness(const GraphOracle& o, std::size_t n,
                             const WitnessQuery& q, std::uint64_t bound) {
    if (n < 2) throw std::invalid_argument("Henson parameter must be >= 2");
    std::vector<Vertex> us(q.U.begin(), q.U.end());
    if (us.size() >= n - 1) {
        bool bad = false;
        for_each_subset(us.size(), n - 1, [&](const std::vector<std::size_t>& s) {
            if (bad) return;
            bool all = true;
            for (std::size_t i = 0; i < s.size() && all; ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    if (!o.adjacent(us[s[i]], us[s[j]])) { all = false; break; }
            if (all) bad = true;
        });
        if (bad)
            return WitnessResult::no("U induces K_" + std::to_string(n - 1) +
                                     "; the witness would complete K_" +
                                     std::to_string(n));
    }
    return o.witness(q, bound);
}

} // namespace rado
