#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sgca/sequences.hpp"

namespace sgca {

// Per-cell rule assignment for a one-dimensional hybrid cellular automaton
// with null boundaries. Character i-1 of the text names cell i's update rule:
// '0' -> cell takes left XOR right neighbour, '1' -> left XOR self XOR right.
class RuleVector {
public:
    explicit RuleVector(std::string rules);

    std::size_t size() const { return rules_.size(); }
    const std::string& text() const { return rules_; }
    bool self_term(std::size_t cell) const { return rules_[cell - 1] == '1'; } // 1-based
    RuleVector reversed() const;

    bool operator==(const RuleVector&) const = default;

private:
    std::string rules_;
};

using CaState = BitSeq; // cell i (1-based) at index i-1

// One synchronous update of all cells (null boundaries: missing neighbours
// read as 0). State length must equal the rule vector length.
CaState ca_step(const RuleVector& rules, const CaState& state);

// The sequence of cell `cell` (1-based) over n steps, starting with its value
// in the given initial state. Uses packed whole-row updates internally.
BitSeq cell_trace(const RuleVector& rules, const CaState& state, std::size_t cell, std::size_t n);

// n x n one-step transition matrix A (tridiagonal: super/sub diagonals 1,
// diagonal bit i = 1 iff cell i+1 uses the self term): next = A * state.
std::vector<std::vector<Bit>> transition_matrix(const RuleVector& rules);

// Bit-packed state row for repeated stepping; cell i maps to packed bit i-1.
class PackedCa {
public:
    PackedCa(const RuleVector& rules, const CaState& state);

    void step();
    Bit cell(std::size_t cell) const; // 1-based
    CaState state() const;

private:
    std::vector<std::uint64_t> w_;     // current row
    std::vector<std::uint64_t> self_;  // mask of cells with the self term
    std::vector<std::uint64_t> tmp_;
    std::size_t n_;
};

} // namespace sgca
