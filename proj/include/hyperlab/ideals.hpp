#pragma once

#include <optional>
#include <vector>

#include "hyperlab/hyperring.hpp"

namespace hyperlab {

// subset-of-carrier tests for the two defining closure properties:
// a,b in I => a-b in I, and r in H, a in I => r*a subset of I.
bool is_hyperideal(const HyperRing& h, const ElemSet& I);

// Least hyperideal containing `gens`: closure under subtraction and
// ring-element absorption, grown as a fixed point.
ElemSet ideal_generate(const HyperRing& h, const ElemSet& gens);

// All hyperideals of h, proper and improper, sorted by (size, mask).
// Works lattice-first: enumerates additive subgroups by closure growth,
// then filters by absorption. Throws std::invalid_argument when the
// carrier exceeds `max_carrier`, std::runtime_error if more than `limit`
// subgroups show up (guards against pathological carriers).
std::vector<ElemSet> enumerate_hyperideals(const HyperRing& h,
                                           int max_carrier = 16,
                                           size_t limit = 4096);

// Residual (A : B) = { x : x*B subset of A }. Always a hyperideal when A is.
ElemSet residual(const HyperRing& h, const ElemSet& A, const ElemSet& B);

// Hyperideal sum: closure of A union B (for subgroups A+B is already the
// set-sum, but closing keeps the contract obvious).
ElemSet ideal_sum(const HyperRing& h, const ElemSet& A, const ElemSet& B);

}  // namespace hyperlab
