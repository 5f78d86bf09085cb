#ifndef RADO_CONSTRUCTIONS_HPP
#define RADO_CONSTRUCTIONS_HPP

#include "rado/core.hpp"

namespace rado {

// ---------------------------------------------------------------------------
// Universal 0/1 sequences on positions 1, 2, 3, ...  The concatenation kind
// lists every finite binary string in length-lex order and reads the result
// position by position; the seeded kind draws one coin per position.
class UniversalSequence {
public:
    enum class Kind { concat, seeded };

    static UniversalSequence concatenation();
    static UniversalSequence seeded(std::uint64_t seed);

    Kind kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }
    std::string describe() const;

    // Characteristic bit at position i >= 1.
    bool at(const Vertex& i) const;
    bool at(std::uint64_t i) const;

private:
    UniversalSequence(Kind k, std::uint64_t s) : kind_(k), seed_(s) {}
    Kind kind_;
    std::uint64_t seed_;
};

// The five models.  Each satisfies the extension property; bit and the
// closure chain have closed-form witnesses, the rest search under a bound.
OraclePtr make_bit();
OraclePtr make_shift(UniversalSequence s);
OraclePtr make_prime();
OraclePtr make_seeded(std::uint64_t seed);
OraclePtr make_closure_chain();

// Selector strings: "bit", "shift:concat", "shift:rand:<seed>", "prime",
// "seeded:<seed>", "closure".  Throws std::invalid_argument on anything else.
OraclePtr make_by_name(const std::string& selector);

// Exposed for tests: the i-th prime congruent to 1 mod 4 (0-based), and the
// Legendre symbol computed by Euler's criterion.
std::uint64_t nth_prime_1mod4(std::size_t i);
int legendre(std::uint64_t a, std::uint64_t p);

} // namespace rado

#endif
