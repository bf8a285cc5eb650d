#pragma once

// The PositivityProof search: hypothesis gate, change of basis, cone radius,
// contraction index K, and the main loop that either finds the entry index N
// of the cone, disproves positivity with a witness, or gives up at the
// budget.

#include <optional>
#include <string>
#include <vector>

#include "pfp/algebraic.hpp"
#include "pfp/cone.hpp"
#include "pfp/matrix.hpp"
#include "pfp/recurrence.hpp"
#include "pfp/spectral.hpp"

namespace pfp {

struct Certificate {
    Matrix<Rat> T;
    std::optional<Rat> r;  // nullopt = infinity
    long N = 0;
    long m = 1;

    void validate() const;  // throws MalformedCertificate
};

struct Witness {
    long term_index = 0;       // scalar index for companion input, vector index otherwise
    std::size_t coordinate = 0;
};

struct Outcome {
    enum class Tag { Positive, NonPositive, Inconclusive, HypothesisFailure };
    Tag tag = Tag::Inconclusive;
    std::optional<Certificate> certificate;  // Positive (absent for the zero orbit)
    bool trivially_zero = false;
    std::optional<Witness> witness;  // NonPositive
    long budget_used = 0;            // Inconclusive
    std::optional<HypothesisReport> report;  // HypothesisFailure
    // diagnostics
    long contraction_index = 0;  // the K of the search
    long transform_power = 1;    // least m with T A^m T^{-1} > 0 (strict)
    unsigned tolerance_exponent = 0;
};

struct ProverOptions {
    long budget = 100000;
    bool strict = false;
    std::optional<Matrix<Rat>> transform_override;
    long m_cap = 64;
    // retry the rationalization with a tighter tolerance while the
    // contraction index exceeds this cap (the quality of T drives K)
    long k_cap = 100000;
};

// r such that T^{-1} B_r(v) > 0: infinity when T^{-1} is nonnegative with
// positive rows, else r = 2 refined by dichotomy r <- (r+1)/2.
std::optional<Rat> find_radius(const Matrix<Rat>& t_inv, const std::vector<FieldElement>& v);

// Least K >= 0 with T A(n+m-1)...A(n) T^{-1} (B_r(v)) inside B_r(v) for all
// real n >= K, via exact positivity thresholds of the cleared induction
// polynomials; nullopt when this m does not contract.
std::optional<Int> find_K(const MatrixRecurrence& m_rec, const Matrix<Rat>& t,
                          const Matrix<Rat>& t_inv, const Cone<FieldElement>& cone, long m);

Outcome positivity_proof(const MatrixRecurrence& m_rec, const std::vector<Rat>& u0,
                         const ProverOptions& opts = {});

}  // namespace pfp
