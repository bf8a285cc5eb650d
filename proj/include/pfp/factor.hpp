#pragma once

// Exact factorization of monic univariate polynomials over Q into monic
// irreducible factors (Zassenhaus: Berlekamp mod p, Hensel lifting, subset
// recombination). Used to obtain true minimal polynomials of algebraic
// numbers, so that Q[x]/(minpoly) is a genuine field.

#include <utility>
#include <vector>

#include "pfp/poly.hpp"
#include "pfp/rational.hpp"

namespace pfp {

// f monic over Q, deg(f) >= 1. Factors are monic irreducible over Q;
// multiplicities sum (weighted by degree) to deg(f).
std::vector<std::pair<Poly<Rat>, int>> factor_monic(const Poly<Rat>& f);

// Convenience: true iff f (monic, deg >= 1) is irreducible over Q.
bool is_irreducible_monic(const Poly<Rat>& f);

}  // namespace pfp
