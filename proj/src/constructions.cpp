#include "rado/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rado {

namespace {

// Fold an arbitrary-precision vertex into 64 bits for seeded hashing.
// Exact for values below 2^64, which is every vertex a seeded construction
// realistically sees.
std::uint64_t key64(const Vertex& v) {
    if (v >= 0 && v <= Vertex(std::numeric_limits<std::uint64_t>::max()))
        return v.convert_to<std::uint64_t>();
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    Vertex t = v;
    while (t > 0) {
        h = mix64(h ^ (t & 0xffffffffffffffffULL).convert_to<std::uint64_t>());
        t >>= 64;
    }
    return h;
}

bool fits_u64(const Vertex& v) {
    return v >= 0 && v <= Vertex(std::numeric_limits<std::uint64_t>::max());
}

} // namespace

// ---------------------------------------------------------------------------
// UniversalSequence

UniversalSequence UniversalSequence::concatenation() {
    return UniversalSequence(Kind::concat, 0);
}

UniversalSequence UniversalSequence::seeded(std::uint64_t seed) {
    return UniversalSequence(Kind::seeded, seed);
}

std::string UniversalSequence::describe() const {
    if (kind_ == Kind::concat) return "concat";
    return "rand:" + std::to_string(seed_);
}

namespace {

// Positions 1..cum(l) hold the strings of length <= l, where
// cum(l) = sum_{j<=l} j*2^j = (l-1)*2^(l+1) + 2.
std::uint64_t concat_cum_u64(unsigned l) {
    if (l == 0) return 0;
    return (std::uint64_t(l) - 1) * (std::uint64_t(1) << (l + 1)) + 2;
}

bool concat_at_u64(std::uint64_t i) {
    unsigned l = 1;
    while (l < 57 && concat_cum_u64(l) < i) ++l;
    std::uint64_t idx = i - concat_cum_u64(l - 1) - 1;
    std::uint64_t value = idx / l;
    std::uint64_t pos = idx % l;
    return (value >> (l - 1 - pos)) & 1;
}

bool concat_at_big(const Vertex& i) {
    Vertex cum_prev = 0;
    unsigned l = 1;
    for (;; ++l) {
        Vertex cum = (Vertex(l) - 1) * (Vertex(1) << (l + 1)) + 2;
        if (cum >= i) break;
        cum_prev = cum;
        if (l > 100000) throw std::overflow_error("sequence position out of range");
    }
    Vertex idx = i - cum_prev - 1;
    Vertex value = idx / l;
    std::uint64_t pos = (idx % l).convert_to<std::uint64_t>();
    return boost::multiprecision::bit_test(value, l - 1 - pos);
}

} // namespace

bool UniversalSequence::at(std::uint64_t i) const {
    if (i == 0) throw std::invalid_argument("sequence positions start at 1");
    if (kind_ == Kind::concat) {
        if (i <= concat_cum_u64(57)) return concat_at_u64(i);
        return concat_at_big(Vertex(i));
    }
    return mix_triple(i, seed_, 0x5eedb175ULL) & 1;
}

bool UniversalSequence::at(const Vertex& i) const {
    if (fits_u64(i)) return at(i.convert_to<std::uint64_t>());
    if (kind_ == Kind::concat) return concat_at_big(i);
    return mix_triple(key64(i), seed_, 0x5eedb175ULL) & 1;
}

// ---------------------------------------------------------------------------
// Bit construction: for x < y, adjacent iff bit x of y is set.

namespace {

class BitOracle final : public GraphOracle {
public:
    std::string name() const override { return "bit"; }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        const Vertex& lo = u < v ? u : v;
        const Vertex& hi = u < v ? v : u;
        if (hi == 0) return false;
        std::size_t bits = boost::multiprecision::msb(hi) + 1;
        if (lo >= Vertex(bits)) return false;
        return boost::multiprecision::bit_test(hi, lo.convert_to<std::size_t>());
    }

    WitnessResult witness(const WitnessQuery& q, std::uint64_t) const override {
        if (q.U.empty() && q.V.empty()) {
            for (Vertex z = 0;; ++z)
                if (!q.excluded.count(z)) return WitnessResult::hit(z);
        }
        Vertex base = 0;
        Vertex max_u = -1, max_all = -1;
        for (const auto& u : q.U) {
            base += Vertex(1) << u.convert_to<std::size_t>();
            max_u = std::max(max_u, u);
        }
        for (const auto& v : q.V) max_all = std::max(max_all, v);
        max_all = std::max(max_all, max_u);
        if (max_u >= Vertex(1) << 24 || max_all >= Vertex(1) << 24)
            return WitnessResult::out("witness magnitude beyond representable size");
        // Keep the guaranteeing high bit but try to place it just above U:
        // positions between max(U) and max(U u V) may verify directly and keep
        // the witness exponentially smaller.  The final candidate, with the
        // high bit above everything, always verifies.
        std::size_t t_low = (max_u + 1).convert_to<std::size_t>();
        std::size_t t_top = (max_all + 1).convert_to<std::size_t>();
        for (std::size_t t = t_low;; ++t) {
            Vertex z = base + (Vertex(1) << t);
            if (witness_satisfies(*this, q, z)) return WitnessResult::hit(z);
            if (t > t_top + 64)
                return WitnessResult::out("witness magnitude beyond representable size");
        }
    }
};

// ---------------------------------------------------------------------------
// Shift construction on the integers, pulled back to naturals.

class ShiftOracle final : public GraphOracle {
public:
    explicit ShiftOracle(UniversalSequence s) : seq_(s) {}

    std::string name() const override { return "shift:" + seq_.describe(); }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        Vertex d = nat_to_int(u) - nat_to_int(v);
        if (d < 0) d = -d;
        return seq_.at(d);
    }

    // Pattern scan: with l = min, L = max over U u V as integers and offsets
    // j = w - l + 1, a window at N with sequence bit 1 exactly at the U
    // offsets yields the witness z = l - 1 - N.
    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        if (q.U.empty() && q.V.empty()) {
            for (Vertex z = 0;; ++z)
                if (!q.excluded.count(z)) return WitnessResult::hit(z);
        }
        std::vector<std::pair<Vertex, bool>> offsets; // (w - l, required bit)
        Vertex l, L;
        bool first = true;
        auto note = [&](const Vertex& nat) {
            Vertex z = nat_to_int(nat);
            if (first || z < l) l = z;
            if (first || z > L) L = z;
            first = false;
        };
        for (const auto& u : q.U) note(u);
        for (const auto& v : q.V) note(v);
        for (const auto& u : q.U) offsets.emplace_back(nat_to_int(u) - l, true);
        for (const auto& v : q.V) offsets.emplace_back(nat_to_int(v) - l, false);
        for (std::uint64_t N = 0; N < bound; ++N) {
            bool match = true;
            for (const auto& [off, want] : offsets) {
                if (seq_.at(Vertex(off + 1 + N)) != want) { match = false; break; }
            }
            if (!match) continue;
            Vertex z = int_to_nat(l - 1 - N);
            if (q.excluded.count(z)) continue;
            return WitnessResult::hit(z);
        }
        return WitnessResult::out();
    }

    const UniversalSequence& sequence() const { return seq_; }

private:
    UniversalSequence seq_;
};

} // namespace

OraclePtr make_bit() { return std::make_shared<BitOracle>(); }

OraclePtr make_shift(UniversalSequence s) { return std::make_shared<ShiftOracle>(s); }

// ---------------------------------------------------------------------------
// Prime construction: vertices are primes congruent to 1 mod 4 in ascending
// order, adjacent when one is a quadratic residue of the other.

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Lazy segmented enumeration of primes congruent to 1 mod 4, supporting
// both directions (index -> prime, prime -> index) without storing every
// prime: per-block cumulative counts plus on-demand block resieves.
class PrimeLedger {
public:
    static constexpr std::uint64_t kBlock = 1 << 20;

    std::uint64_t prime_at(std::uint64_t index) {
        std::lock_guard<std::mutex> lock(mu_);
        while (cum_.size() < 2 || cum_.back() <= index) sieve_next_block();
        // find block b with cum_[b] <= index < cum_[b+1]
        auto it = std::upper_bound(cum_.begin(), cum_.end(), index);
        std::size_t b = static_cast<std::size_t>(it - cum_.begin()) - 1;
        const auto& primes = block_primes(b);
        return primes[index - cum_[b]];
    }

    // Number of primes = 1 mod 4 strictly below z; -1 offset gives the index
    // of z itself when z is such a prime.
    std::uint64_t count_below(std::uint64_t z) {
        std::lock_guard<std::mutex> lock(mu_);
        std::size_t b = static_cast<std::size_t>(z / kBlock);
        while (cum_.size() <= b + 1) sieve_next_block();
        std::uint64_t n = cum_[b];
        for (std::uint64_t p : block_primes(b)) {
            if (p >= z) break;
            ++n;
        }
        return n;
    }

private:
    void ensure_base(std::uint64_t limit) {
        if (base_limit_ >= limit) return;
        std::uint64_t new_limit = std::max<std::uint64_t>(limit, base_limit_ * 2);
        std::vector<bool> composite(new_limit + 1, false);
        base_.clear();
        for (std::uint64_t p = 2; p <= new_limit; ++p) {
            if (composite[p]) continue;
            base_.push_back(p);
            for (std::uint64_t q = p * p; q <= new_limit; q += p) composite[q] = true;
        }
        base_limit_ = new_limit;
    }

    std::vector<std::uint64_t> sieve_block(std::size_t b) {
        std::uint64_t lo = b * kBlock, hi = lo + kBlock;
        std::uint64_t root = 2;
        while (root * root < hi) ++root;
        ensure_base(root);
        std::vector<bool> composite(kBlock, false);
        for (std::uint64_t p : base_) {
            if (p * p >= hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t q = start; q < hi; q += p) composite[q - lo] = true;
        }
        std::vector<std::uint64_t> out;
        for (std::uint64_t v = lo; v < hi; ++v) {
            if (v < 2 || composite[v - lo]) continue;
            if ((v & 3) == 1) out.push_back(v);
        }
        return out;
    }

    void sieve_next_block() {
        if (cum_.empty()) cum_.push_back(0);
        std::size_t b = cum_.size() - 1;
        cum_.push_back(cum_[b] + block_primes(b).size());
    }

    const std::vector<std::uint64_t>& block_primes(std::size_t b) {
        auto it = cache_.find(b);
        if (it != cache_.end()) return it->second;
        if (cache_.size() > 256) cache_.clear();
        return cache_.emplace(b, sieve_block(b)).first->second;
    }

    std::mutex mu_;
    std::vector<std::uint64_t> base_;
    std::uint64_t base_limit_ = 1;
    std::vector<std::uint64_t> cum_; // cum_[b] = count below b*kBlock
    std::map<std::size_t, std::vector<std::uint64_t>> cache_;
};

PrimeLedger& prime_ledger() {
    static PrimeLedger ledger;
    return ledger;
}

int legendre_impl(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    std::uint64_t r = powmod_u64(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

class PrimeOracle final : public GraphOracle {
public:
    std::string name() const override { return "prime"; }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        std::uint64_t p = vertex_prime(u), q = vertex_prime(v);
        if (p > q) std::swap(p, q);
        return legendre_impl(q % p, p) == 1;
    }

    // Chinese-remainder witness: z = 1 mod 4, z = 1 mod p for p in U (so z is
    // a residue of each), z = b_q mod q for q in V with b_q the least
    // non-residue, then scan the progression for a prime.
    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        if (q.U.empty() && q.V.empty()) {
            for (Vertex z = 0;; ++z)
                if (!q.excluded.count(z)) return WitnessResult::hit(z);
        }
        Vertex modulus = 4, residue = 1;
        auto combine = [&](std::uint64_t m, std::uint64_t r) {
            // both moduli coprime; solve x = residue (mod modulus), x = r (mod m)
            Vertex step = modulus;
            Vertex x = residue;
            while (x % m != r) x += step;
            modulus *= m;
            residue = x;
        };
        for (const auto& u : q.U) combine(vertex_prime(u), 1);
        for (const auto& v : q.V) {
            std::uint64_t p = vertex_prime(v);
            std::uint64_t b = 2;
            while (legendre_impl(b, p) != -1) ++b;
            combine(p, b);
        }
        if (modulus > (Vertex(1) << 36))
            return WitnessResult::out("progression modulus too large for prime search");
        std::uint64_t m = modulus.convert_to<std::uint64_t>();
        std::uint64_t x = residue.convert_to<std::uint64_t>();
        for (std::uint64_t k = 0; k < bound; ++k) {
            std::uint64_t cand = x + k * m;
            if (cand < 5 || !miller_rabin_u64(cand)) continue;
            Vertex index(prime_ledger().count_below(cand));
            if (q.excluded.count(index) || q.U.count(index) || q.V.count(index))
                continue;
            return WitnessResult::hit(index);
        }
        return WitnessResult::out();
    }

private:
    static std::uint64_t vertex_prime(const Vertex& v) {
        if (v >= (Vertex(1) << 40))
            throw std::out_of_range("prime vertex index out of supported range");
        return prime_ledger().prime_at(v.convert_to<std::uint64_t>());
    }
};

// ---------------------------------------------------------------------------
// Seeded construction: one documented avalanche bit per unordered pair.

class SeededOracle final : public GraphOracle {
public:
    explicit SeededOracle(std::uint64_t seed) : seed_(seed) {}

    std::string name() const override { return "seeded:" + std::to_string(seed_); }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        std::uint64_t a = key64(u), b = key64(v);
        if (u > v) std::swap(a, b);
        return mix_triple(a, b, seed_) & 1;
    }

    WitnessResult witness(const WitnessQuery& q, std::uint64_t bound) const override {
        // Hot path: everything fits in 64 bits, so scan without
        // arbitrary-precision arithmetic.
        std::vector<std::pair<std::uint64_t, bool>> constraints;
        bool small = true;
        for (const auto& u : q.U) {
            if (!fits_u64(u)) { small = false; break; }
            constraints.emplace_back(u.convert_to<std::uint64_t>(), true);
        }
        if (small) {
            for (const auto& v : q.V) {
                if (!fits_u64(v)) { small = false; break; }
                constraints.emplace_back(v.convert_to<std::uint64_t>(), false);
            }
        }
        if (!small) return scan_witness(*this, q, bound);
        std::vector<std::uint64_t> skip;
        for (const auto& [w, want] : constraints) skip.push_back(w);
        for (const auto& e : q.excluded)
            if (fits_u64(e)) skip.push_back(e.convert_to<std::uint64_t>());
        std::sort(skip.begin(), skip.end());
        for (std::uint64_t z = 0; z < bound; ++z) {
            if (std::binary_search(skip.begin(), skip.end(), z)) continue;
            bool ok = true;
            for (const auto& [w, want] : constraints) {
                std::uint64_t a = std::min(z, w), b = std::max(z, w);
                if (bool(mix_triple(a, b, seed_) & 1) != want) { ok = false; break; }
            }
            if (ok) return WitnessResult::hit(Vertex(z));
        }
        return WitnessResult::out();
    }

private:
    std::uint64_t seed_;
};

// ---------------------------------------------------------------------------
// Iterated closure: each stage appends one vertex per subset of the previous
// stage, adjacent to exactly that subset.

class ClosureChainOracle final : public GraphOracle {
public:
    ClosureChainOracle() {
        // Stage boundaries: 0, 1, 3, 11, 2059, 2059 + 2^2059.  The boundary
        // after that would need ~2^2059 bits; everything below suffices.
        Vertex n = 0;
        boundaries_.push_back(n);
        while (n <= 65536) {
            n += (n == 0 ? Vertex(1) : Vertex(1) << n.convert_to<std::size_t>());
            boundaries_.push_back(n);
        }
    }

    std::string name() const override { return "closure"; }

    bool adjacent(const Vertex& u, const Vertex& v) const override {
        if (u == v) return false;
        const Vertex& lo = u < v ? u : v;
        const Vertex& hi = u < v ? v : u;
        std::size_t k = stage_of(hi);
        const Vertex& base = boundaries_[k];
        if (lo >= base) return false; // same stage
        Vertex rank = hi - base;
        if (lo >= Vertex(1) << 20) return false; // rank has fewer bits than that
        return boost::multiprecision::bit_test(rank, lo.convert_to<std::size_t>());
    }

    WitnessResult witness(const WitnessQuery& q, std::uint64_t) const override {
        Vertex max_v = -1;
        for (const auto& u : q.U) max_v = std::max(max_v, u);
        for (const auto& v : q.V) max_v = std::max(max_v, v);
        Vertex rank = 0;
        for (const auto& u : q.U) {
            if (u >= Vertex(1) << 20)
                return WitnessResult::out("witness rank beyond representable size");
            rank += Vertex(1) << u.convert_to<std::size_t>();
        }
        for (std::size_t k = 1; k + 1 < boundaries_.size(); ++k) {
            if (boundaries_[k] <= max_v) continue; // base must contain U u V
            Vertex z = boundaries_[k] + rank;
            if (!q.excluded.count(z)) return WitnessResult::hit(z);
        }
        return WitnessResult::out("query beyond materialized stages");
    }

private:
    std::size_t stage_of(const Vertex& v) const {
        for (std::size_t k = 1; k < boundaries_.size(); ++k)
            if (v < boundaries_[k]) return k - 1;
        throw std::out_of_range("vertex beyond materialized closure stages");
    }

    std::vector<Vertex> boundaries_; // boundaries_[k] = first vertex of stage k+1
};

} // namespace

OraclePtr make_prime() { return std::make_shared<PrimeOracle>(); }
OraclePtr make_seeded(std::uint64_t seed) { return std::make_shared<SeededOracle>(seed); }
OraclePtr make_closure_chain() { return std::make_shared<ClosureChainOracle>(); }

std::uint64_t nth_prime_1mod4(std::size_t i) { return prime_ledger().prime_at(i); }

int legendre(std::uint64_t a, std::uint64_t p) { return legendre_impl(a, p); }

OraclePtr make_by_name(const std::string& selector) {
    if (selector == "bit") return make_bit();
    if (selector == "prime") return make_prime();
    if (selector == "closure") return make_closure_chain();
    if (selector == "shift:concat") return make_shift(UniversalSequence::concatenation());
    auto parse_seed = [](const std::string& s) -> std::uint64_t {
        return std::stoull(s);
    };
    if (selector.rfind("shift:rand:", 0) == 0)
        return make_shift(UniversalSequence::seeded(parse_seed(selector.substr(11))));
    if (selector.rfind("seeded:", 0) == 0)
        return make_seeded(parse_seed(selector.substr(7)));
    throw std::invalid_argument("unknown construction: " + selector);
}

} // namespace rado
