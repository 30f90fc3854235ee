#pragma once

#include <cstdint>

#include "sgca/poly.hpp"
#include "sgca/sequences.hpp"

namespace sgca {

// Keep b[i] exactly when a[i] == 1. The streams must have equal length.
BitSeq shrink_streams(const BitSeq& a, const BitSeq& b);

// Two-register shrinking keystream generator: a control register decimates a
// data register. Both feedback polynomials must be primitive and the two
// lengths coprime.
class ShrinkingGenerator {
public:
    ShrinkingGenerator(Lfsr control, Lfsr data);

    // Next n keystream bits. Raises a stalled-generator error when the
    // control register holds all zeros (it would never select a bit).
    BitSeq generate(std::size_t n);

    const Lfsr& control() const { return control_; }
    const Lfsr& data() const { return data_; }

private:
    Lfsr control_;
    Lfsr data_;
};

// Structural forecast of the keystream from the two register parameters
// alone (no seeds): period, balance, linear-complexity bracket, and the
// irreducible factor whose power annihilates the stream.
struct SgPrediction {
    std::uint64_t period;         // (2^L2 - 1) * 2^(L1 - 1)
    std::uint64_t ones_per_period;// 2^(L2 - 1) * 2^(L1 - 1)
    std::uint64_t lc_lower;       // exclusive: L2 * 2^(L1 - 2)
    std::uint64_t lc_upper;       // inclusive: L2 * 2^(L1 - 1)
    BitPoly p;                    // coset polynomial of the data register
    std::uint64_t n_lower;        // exclusive: 2^(L1 - 2)
    std::uint64_t n_upper;        // inclusive: 2^(L1 - 1)
};

// Requires L1 >= 2, deg(P2) == L2, P2 primitive, gcd(L1, L2) == 1, and
// L1 + L2 - 1 <= 64 so the counts fit in 64 bits.
SgPrediction sg_predict(unsigned l1, unsigned l2, const BitPoly& p2);

// True when P(E)^(2^(L1-1)) annihilates s: with Q = P^(2^(L1-1)) of degree d,
// sum_k Q_k s[t+k] == 0 for every t with t + d < |s|. The window must cover
// at least one full application of Q.
bool verify_annihilator(const BitSeq& s, const BitPoly& p, unsigned l1);

} // namespace sgca
