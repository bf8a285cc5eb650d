#pragma once

// The induction-step polynomial system of the certificate verification:
// the entries of T A(n+m-1)...A(n) T^{-1} applied to each cone generator,
// cleared to polynomials over Q(lambda) by the common monic denominator.
// Both the verifier (positivity from N) and the prover (least admissible K)
// consume this structure.

#include <optional>
#include <string>
#include <vector>

#include "pfp/algebraic.hpp"
#include "pfp/cone.hpp"
#include "pfp/matrix.hpp"
#include "pfp/ratfun.hpp"
#include "pfp/recurrence.hpp"

namespace pfp {

struct InductionSystem {
    // cleared image coordinates per generator: w_i = sum_j N_ij g_j.
    // For r = infinity the "generators" are the standard basis vectors, so
    // block k holds column k of the cleared matrix.
    struct Block {
        std::vector<Poly<FieldElement>> entries;  // coordinate positivity
        std::vector<Poly<FieldElement>> ratios;   // r w_j v_i - w_i v_j >= 0 (finite r)
    };
    Poly<Rat> denominator;  // monic common denominator of the symbolic product
    std::vector<Block> blocks;
    bool infinite_radius = false;

    long polynomial_count() const {
        long n = 0;
        for (const auto& b : blocks) n += static_cast<long>(b.entries.size() + b.ratios.size());
        return n;
    }
};

InductionSystem induction_system(const MatrixRecurrence& m_rec, const Matrix<Rat>& t,
                                 const Matrix<Rat>& t_inv, const Cone<FieldElement>& cone,
                                 long m);

// Same, from a precomputed symbolic product P(n) = T A(n+m-1)...A(n) T^{-1}
// (lets the prover grow the product incrementally over candidate m).
InductionSystem induction_system_from_product(const Matrix<RationalFunction>& product,
                                              const Cone<FieldElement>& cone);

// Least K >= 0 such that every induction inequality holds for all real
// n >= K (and the cleared denominator is positive there); nullopt when some
// inequality fails for all large n, i.e. this block length m does not
// contract the cone.
std::optional<Int> least_induction_threshold(const InductionSystem& sys);

// Do all induction inequalities hold for real n >= from? On failure,
// `detail` names the first offending polynomial.
bool induction_holds_from(const InductionSystem& sys, const Rat& from, std::string* detail);

}  // namespace pfp
