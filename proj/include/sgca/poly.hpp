#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgca {

// Dense polynomial over GF(2). Bit k of the packed word array is the
// coefficient of D^k; trailing zero words are trimmed so equality is
// representation-independent.
class BitPoly {
public:
    BitPoly() = default; // the zero polynomial

    static BitPoly zero() { return BitPoly(); }
    static BitPoly one() { return monomial(0); }
    static BitPoly monomial(unsigned k);
    static BitPoly from_words(std::vector<std::uint64_t> words);

    // Accepts either term notation ("1+D^2+D^5", "D", "0") or hex with bit k
    // for the D^k coefficient ("0x25"). Throws std::invalid_argument naming
    // the offending token.
    static BitPoly parse(std::string_view text);

    bool is_zero() const { return words_.empty(); }
    // Degree of the zero polynomial is undefined -> nullopt.
    std::optional<unsigned> degree() const;
    // degree() or 0 for zero; handy where zero has already been excluded.
    unsigned degree_or0() const;
    bool coeff(unsigned k) const;
    void set_coeff(unsigned k, bool value);
    // Number of nonzero coefficients.
    std::size_t weight() const;

    BitPoly operator+(const BitPoly& rhs) const; // GF(2): addition == XOR
    BitPoly& operator+=(const BitPoly& rhs);
    BitPoly operator*(const BitPoly& rhs) const;
    BitPoly operator<<(unsigned k) const; // multiply by D^k
    BitPoly operator>>(unsigned k) const; // floor-divide by D^k

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<BitPoly, BitPoly> divmod(const BitPoly& a, const BitPoly& b);
    BitPoly operator/(const BitPoly& rhs) const;
    BitPoly operator%(const BitPoly& rhs) const;

    BitPoly squared() const;
    // Plain power with a degree safety cap; use poly_pow_mod for modular work.
    BitPoly pow(std::uint64_t e) const;
    // Coefficient reversal within the degree (the reciprocal polynomial).
    BitPoly reversed() const;

    std::string text() const; // "1+D^2+D^5"; zero prints "0"
    std::string hex() const;  // "0x25"; zero prints "0x0"

    bool operator==(const BitPoly&) const = default;
    std::size_t hash_value() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

struct BitPolyHash {
    std::size_t operator()(const BitPoly& p) const { return p.hash_value(); }
};

BitPoly gcd(BitPoly a, BitPoly b);

// Extended Euclid: returns {g, u} with u*a == g (mod m). m must be nonzero.
std::pair<BitPoly, BitPoly> gcd_with_inverse(const BitPoly& a, const BitPoly& m);

// a*b mod m and a^e mod m; m must be nonzero.
BitPoly poly_mul_mod(const BitPoly& a, const BitPoly& b, const BitPoly& m);
BitPoly poly_pow_mod(const BitPoly& a, std::uint64_t e, const BitPoly& m);

} // namespace sgca
