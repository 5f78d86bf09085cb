#include "rado/groups.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rado {

namespace {

// Cantor pairing on naturals and its inverse.
Vertex cantor_pair(const Vertex& i, const Vertex& j) {
    Vertex s = i + j;
    return s * (s + 1) / 2 + j;
}

std::pair<Vertex, Vertex> cantor_unpair(const Vertex& n) {
    Vertex w = (boost::multiprecision::sqrt(Vertex(8 * n + 1)) - 1) / 2;
    Vertex t = w * (w + 1) / 2;
    Vertex j = n - t;
    return {w - j, j};
}

void check_arity(const GroupSpec& g, const GroupElement& e) {
    if (e.size() != g.arity())
        throw std::invalid_argument("element arity does not match the group");
}

} // namespace

GroupSpec GroupSpec::integers() { return GroupSpec("Z", 1); }
GroupSpec GroupSpec::integer_pairs() { return GroupSpec("Z^2", 2); }

GroupElement GroupSpec::element(const Vertex& index) const {
    if (index < 0) throw std::invalid_argument("enumeration index must be >= 0");
    if (arity_ == 1) return {nat_to_int(index)};
    auto [i, j] = cantor_unpair(index);
    return {nat_to_int(i), nat_to_int(j)};
}

Vertex GroupSpec::index_of(const GroupElement& e) const {
    check_arity(*this, e);
    if (arity_ == 1) return int_to_nat(e[0]);
    return cantor_pair(int_to_nat(e[0]), int_to_nat(e[1]));
}

GroupElement GroupSpec::multiply(const GroupElement& a, const GroupElement& b) const {
    check_arity(*this, a);
    check_arity(*this, b);
    GroupElement out(arity_);
    for (std::size_t k = 0; k < arity_; ++k) out[k] = a[k] + b[k];
    return out;
}

GroupElement GroupSpec::inverse(const GroupElement& a) const {
    check_arity(*this, a);
    GroupElement out(arity_);
    for (std::size_t k = 0; k < arity_; ++k) out[k] = -a[k];
    return out;
}

GroupElement GroupSpec::identity() const { return GroupElement(arity_, Vertex(0)); }

std::string element_to_string(const GroupElement& e) {
    std::ostringstream os;
    if (e.size() == 1) {
        os << e[0];
    } else {
        os << "(";
        for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
        os << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

OraclePtr cyclic_graph(UniversalSequence s) { return make_shift(std::move(s)); }

Vertex shift_image(const Vertex& natural_vertex) {
    return int_to_nat(nat_to_int(natural_vertex) + 1);
}

ConjugacyResult cyclic_conjugacy(const UniversalSequence& s1,
                                 const UniversalSequence& s2,
                                 std::uint64_t bound) {
    for (std::uint64_t i = 1; i <= bound; ++i)
        if (s1.at(i) != s2.at(i)) return {false, i};
    return {true, 0};
}

// ---------------------------------------------------------------------------

namespace {

class CayleyOracle final : public GraphOracle {
public:
    CayleyOracle(GroupSpec g, std::uint64_t seed)
        : group_(std::move(g)), seed_(seed) {}

    std::string name() const override {
        return "cayley(" + group_.name() + ",seed=" + std::to_string(seed_) + ")";
    }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        GroupElement d =
            group_.multiply(group_.element(u), group_.inverse(group_.element(v)));
        Vertex idx = group_.index_of(d);
        Vertex inv = group_.index_of(group_.inverse(d));
        const Vertex& canon = idx < inv ? idx : inv;
        if (canon > Vertex(1) << 62)
            throw std::overflow_error("connection-set key beyond coin range");
        return mix_triple(canon.convert_to<std::uint64_t>(), seed_,
                          group_.arity()) & 1;
    }

    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        return scan_witness(*this, q, bound);
    }

private:
    GroupSpec group_;
    std::uint64_t seed_;
};

} // namespace

OraclePtr cayley_oracle(const GroupSpec& g, std::uint64_t seed) {
    return std::make_shared<CayleyOracle>(g, seed);
}

std::vector<GroupElement> sqrt_set(const GroupSpec& g, const GroupElement& a,
                                   std::uint64_t enum_bound) {
    check_arity(g, a);
    std::vector<GroupElement> out;
    for (std::uint64_t i = 0; i < enum_bound; ++i) {
        GroupElement x = g.element(Vertex(i));
        if (g.multiply(x, x) == a) out.push_back(std::move(x));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool SumFreeSet::contains(std::uint64_t n) const {
    if (n == 0) return false;
    extend(n);
    return in_[n];
}

std::vector<std::uint64_t> SumFreeSet::members_upto(std::uint64_t prefix) const {
    extend(prefix);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= prefix; ++n)
        if (in_[n]) out.push_back(n);
    return out;
}

void SumFreeSet::extend(std::uint64_t upto) const {
    for (std::uint64_t n = in_.size(); n <= upto; ++n) {
        bool forced_out = false;
        for (std::uint64_t x = 1; 2 * x <= n; ++x)
            if (in_[x] && in_[n - x]) { forced_out = true; break; }
        in_.push_back(!forced_out && (mix_triple(n, seed_, 0x5f5eeULL) & 1));
    }
}

TriangleReport triangle_report(const std::vector<std::uint64_t>& members,
                               std::uint64_t prefix) {
    if (prefix < 3) throw std::invalid_argument("prefix must be >= 3");
    TriangleReport report;
    std::vector<bool> in(prefix + 1, false);
    for (auto m : members)
        if (m >= 1 && m <= prefix) {
            in[m] = true;
            if (m % 2 == 0) report.all_odd = false;
        }

    for (std::uint64_t a = 1; a <= prefix && !report.schur_triple; ++a)
        for (std::uint64_t b = a; a + b <= prefix; ++b)
            if (in[a] && in[b] && in[a + b]) {
                report.schur_triple = true;
                break;
            }

    // independent graph-side check: brute force over vertex triples
    for (std::uint64_t x = 0; x <= prefix && !report.triangle; ++x)
        for (std::uint64_t y = x + 1; y <= prefix && !report.triangle; ++y) {
            if (!in[y - x]) continue;
            for (std::uint64_t z = y + 1; z <= prefix; ++z)
                if (in[z - y] && in[z - x]) {
                    report.triangle = true;
                    break;
                }
        }
    return report;
}

TriangleReport triangle_report(const SumFreeSet& s, std::uint64_t prefix) {
    return triangle_report(s.members_upto(prefix), prefix);
}

} // namespace rado
