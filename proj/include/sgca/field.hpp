#pragma once

#include <cstdint>
#include <vector>

#include "sgca/poly.hpp"

namespace sgca {

// Rabin's test: p is irreducible over GF(2) iff D^(2^m) == D (mod p) and
// gcd(D^(2^(m/q)) + D, p) == 1 for every prime q dividing m = deg p.
// Requires degree >= 1.
bool is_irreducible(const BitPoly& p);

// Irreducible AND the residue of D generates the full multiplicative group.
// Uses an embedded factor table of 2^m - 1; degrees 1..64 supported.
bool is_primitive(const BitPoly& p);

// Distinct prime factors of 2^m - 1 (1 <= m <= 64).
const std::vector<std::uint64_t>& mersenne_prime_factors(unsigned m);

// GF(2^m) presented as GF(2)[D] mod a primitive polynomial.
class FieldContext {
public:
    explicit FieldContext(BitPoly modulus); // must be primitive, degree 1..64

    const BitPoly& modulus() const { return modulus_; }
    unsigned m() const { return m_; }

private:
    BitPoly modulus_;
    unsigned m_;
};

// Element of a FieldContext, stored as the residue of a polynomial in D.
class FieldElement {
public:
    FieldElement(const FieldContext& ctx, BitPoly value)
        : ctx_(&ctx), residue_(std::move(value) % ctx.modulus()) {}

    const BitPoly& residue() const { return residue_; }
    const FieldContext& context() const { return *ctx_; }
    bool is_zero() const { return residue_.is_zero(); }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement pow(std::uint64_t e) const;
    bool operator==(const FieldElement& rhs) const { return residue_ == rhs.residue_; }

private:
    const FieldContext* ctx_;
    BitPoly residue_;
};

// Minimal polynomial over GF(2) of alpha^e, where alpha is the residue of D
// in ctx: the product of (D + beta) over the conjugates beta = alpha^(e*2^k).
// Requires 1 <= e < 2^m. The result is irreducible with degree = coset size.
BitPoly minimal_polynomial_of_power(const FieldContext& ctx, std::uint64_t e);

} // namespace sgca
