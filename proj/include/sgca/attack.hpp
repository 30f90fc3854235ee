#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgca/automaton.hpp"
#include "sgca/poly.hpp"
#include "sgca/sequences.hpp"

namespace sgca {

// Back-substitution triangle for a window read at the LAST cell (cell n) of
// the automaton. Row t (0-based) holds cells t+1..n at time t; row 0 is the
// full state at the moment the window began. Derivation: cell j+1's update
// rule solved for its left neighbour,
//   x_j(t) = x_{j+1}(t+1) + d_{j+1} x_{j+1}(t) + x_{j+2}(t),
// applied column by column from the window inward (x_{n+1} = 0). The window
// must contain exactly n bits.
std::vector<BitSeq> recover_triangle(const RuleVector& rules, const BitSeq& window);

// Row 0 of the triangle: the full automaton state at the start of the window.
CaState recover_state(const RuleVector& rules, const BitSeq& window);

// Reconstruct `horizon` keystream bits from a window of at least n bits read
// at cell n: recover the state from the first n bits, re-run the automaton,
// and insist the regenerated trace reproduces the entire provided window
// (verification-mismatch error otherwise).
BitSeq recover_keystream(const RuleVector& rules, const BitSeq& window, std::size_t horizon);

struct AttackReport {
    std::string ca_rules;      // rule vector that hosts the window
    std::string orientation;   // window cell: "rightmost" or "leftmost"
    std::string variant;       // "direct" or "reciprocal" data polynomial
    BitPoly p_used;            // coset polynomial of the hosting model
    CaState state;             // automaton state at the first window bit
    std::size_t bits_required; // automaton length n = L2 * 2^(L1-1)
    std::size_t bm_equivalent; // bits a generic linear attack would need (2n)
    BitSeq keystream;          // horizon bits from the window start (if asked)
    bool degenerate = false;   // all-zero window: state recovery is trivial
};

// Full known-parameter attack: build the automaton pair for p2 and for its
// reciprocal, try each candidate (and each window orientation) against the
// intercepted window, and reconstruct the keystream with the first candidate
// that reproduces every window bit. The window must span at least
// deg(p2) * 2^(L1-1) bits; `horizon` > 0 additionally emits that many
// keystream bits in the report.
AttackReport attack_sg(unsigned l1, const BitPoly& p2, const BitSeq& window,
                       std::size_t horizon = 0);

} // namespace sgca
