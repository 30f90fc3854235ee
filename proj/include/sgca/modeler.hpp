#pragma once

#include <utility>

#include "sgca/automaton.hpp"
#include "sgca/field.hpp"
#include "sgca/poly.hpp"

namespace sgca {

// Characteristic polynomial of the automaton's transition matrix, computed
// by the tridiagonal continuant recurrence
//   Delta_0 = 1, Delta_k = (D + d_k) * Delta_{k-1} + Delta_{k-2}
// where d_k is cell k's self term. Invariant under rule-vector reversal.
BitPoly ca_charpoly(const RuleVector& rules);

// Minimal polynomial of alpha^E with E = 2^L1 - 1, alpha a root of the
// primitive polynomial p2. The conjugate coset must have full size deg(p2)
// (degenerate-coset error otherwise). For gcd(L1, deg p2) == 1 the result is
// primitive; in general it is irreducible of degree deg(p2).
BitPoly coset_polynomial(const BitPoly& p2, unsigned l1);

// The two null-boundary hybrid automata (a mirror pair, returned in
// lexicographic order) whose characteristic polynomial equals the given
// irreducible p. Degree 1..64.
//
// Method: cell 1's state-to-state moment sequence c_t = (A^t)_{1,1} for a
// valid rule vector is the power-series expansion of B/p whose linear
// complexity profile is perfect; perfect-profile sequences are exactly those
// with c_0 = 1 and c_{2j} = c_{2j-1} + c_{j-1}. Those conditions plus the
// recurrence imposed by p form a GF(2) linear system for c_0..c_{n-1}; each
// solution yields the subdiagonal polynomial B = sum_{c_t=1} (p >> (t+1)),
// and the continued-fraction expansion of p/B (all quotients of degree 1)
// reads off the rules, first quotient = cell 1. Every candidate is verified
// through ca_charpoly before being returned; an exhaustive search (degree
// <= 24) backs the solver up should verification ever fail.
std::pair<RuleVector, RuleVector> synthesize_ca(const BitPoly& p);

// Length-doubling step: complement the last rule, then append the mirror
// image of the modified vector. Squares the characteristic polynomial.
RuleVector expand_once(const RuleVector& rules);

// The automaton pair for a shrunken keystream: synthesize the coset
// polynomial's automata, then apply L1-1 doubling steps, so the result has
// length deg(p2) * 2^(L1-1) and characteristic polynomial
// coset_polynomial(p2, L1)^(2^(L1-1)). Work is proportional to the output
// length; no exhaustive search over phases takes place.
std::pair<RuleVector, RuleVector> model_sg(unsigned l1, const BitPoly& p2);

} // namespace sgca
