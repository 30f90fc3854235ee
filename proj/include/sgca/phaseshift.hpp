#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgca/automaton.hpp"
#include "sgca/poly.hpp"

namespace sgca {

// Transfer polynomials pi_1..pi_n of the automaton: pi_i(S) relates cell i's
// trace to cell n's trace via trace_i = pi_i(S) applied to trace_n, where S
// is the one-step shift operator acting modulo the characteristic
// polynomial. Computed by the descending recurrence
//   pi_n = 1, pi_{n-1} = S + d_n, pi_{i-1} = (S + d_i) pi_i + pi_{i+1},
// and checked against the closing identity (S + d_1) pi_1 + pi_2 =
// charpoly. Entry 0 of the returned vector is unused.
std::vector<BitPoly> transfer_polynomials(const RuleVector& rules);

// Discrete logarithm of pi in the shift operator: the least e >= 0 with
// S^e == pi (mod m), or nullopt when pi is not a power of S. Raises a
// zero-operator error when pi vanishes mod m. The orbit of S is enumerated
// up to 2^22 residues (insufficient-data error beyond).
std::optional<std::uint64_t> shift_log(const BitPoly& pi, const BitPoly& m);

struct PhaseClass {
    std::size_t reference; // cell the shifts are measured against
    // (cell, shift): trace_cell(t) == trace_reference(t + shift).
    std::vector<std::pair<std::size_t, std::uint64_t>> members;
};

struct PhaseReport {
    BitPoly charpoly;
    std::vector<PhaseClass> classes;     // every cell appears in exactly one
    std::vector<std::size_t> unmatched;  // cells whose class is a singleton
};

// Group the cells of the automaton into shift-equivalence classes: cells i
// and j land together when pi_i == S^e * pi_j (mod charpoly) for some e, so
// their traces are time-shifted copies of one another for every initial
// state. The class containing cell n is reported relative to cell n; other
// classes relative to their lowest cell.
PhaseReport phase_report(const RuleVector& rules);

} // namespace sgca
