#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgca/poly.hpp"

namespace sgca {

using Bit = std::uint8_t;
using BitSeq = std::vector<Bit>;

// "0101..." <-> BitSeq, leftmost character is the earliest bit.
BitSeq parse_bits(std::string_view text);
std::string format_bits(const BitSeq& s);

// Fibonacci-configuration linear feedback shift register. The seed is given
// in register order s_1..s_L (the order register contents are convention-
// ally written); each step emits the last stage and feeds the parity of the
// stages named by the feedback polynomial's nonzero exponents into stage 1.
// Internally stage 0 is the next bit to be emitted. The output stream obeys
// o_t = sum over taps k of o_{t-k}, i.e. the feedback polynomial is the
// connection polynomial of the produced sequence.
class Lfsr {
public:
    // feedback must have constant term 1 and degree == seed length (1..64).
    Lfsr(BitPoly feedback, const BitSeq& seed);

    Bit step();
    BitSeq generate(std::size_t n);

    unsigned length() const { return len_; }
    const BitPoly& feedback() const { return feedback_; }
    bool state_is_zero() const { return state_ == 0; }

private:
    BitPoly feedback_;
    std::uint64_t state_ = 0; // bit j = stage j; stage 0 emitted first
    std::uint64_t taps_ = 0;  // mask of state bits XORed into the new top stage
    unsigned len_ = 0;
};

// Smallest t with 1 <= t <= n/2 and s[i] == s[i+t] throughout the window;
// nullopt when the window exhibits no such period.
std::optional<std::size_t> seq_period(const BitSeq& s);

struct BmResult {
    std::size_t lc;     // linear complexity of the window
    BitPoly connection; // C with C(0) = 1, deg <= lc: s_t = sum c_k s_{t-k}
};

// Berlekamp-Massey over GF(2). The all-zero window has lc 0, connection 1.
BmResult berlekamp_massey(const BitSeq& s);

// Continue a sequence from its connection polynomial: bits 0..lc-1 are taken
// from `first`, later bits follow s_t = sum_{k>=1} c_k s_{t-k}. This is what
// an LFSR with that connection polynomial produces, and it also covers the
// degenerate deg(C) < lc case no physical register represents.
BitSeq regenerate_recurrence(const BitPoly& connection, std::size_t lc,
                             const BitSeq& first, std::size_t n);

// Minimal connection polynomial of a (purely periodic) sequence window:
// Berlekamp-Massey plus stabilization checks. Requires 2*lc <= |s| and
// deg(C) == lc; otherwise the window does not pin the polynomial down and an
// insufficient-data error is raised. All-zero windows yield the constant 1.
BitPoly minimal_polynomial_of_seq(const BitSeq& s);

} // namespace sgca
