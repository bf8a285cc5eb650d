#pragma once

// Characteristic polynomial of the limit matrix, exact isolation of the
// unique simple dominant eigenvalue, eigenvectors over Q(lambda), and the
// hypothesis checks of the main theorem.

#include <optional>
#include <string>
#include <vector>

#include "pfp/algebraic.hpp"
#include "pfp/matrix.hpp"
#include "pfp/poly.hpp"

namespace pfp {

struct DominantSpectrum {
    AlgebraicPtr lambda;
    bool is_unique = false;
    bool is_simple = false;
    // rational rho with |mu| <= rho < |lambda| for every other eigenvalue mu;
    // certified by counting roots of the squared-modulus polynomial in
    // [rho^2, lambda^2)
    Rat modulus_gap_witness;
    Poly<Rat> characteristic;
};

// Monic characteristic polynomial, exact (Faddeev-LeVerrier).
Poly<Rat> char_poly(const Matrix<Rat>& a);

// Polynomial of degree (deg p)^2 whose roots are all pairwise products of
// the roots of p (so the squared moduli |z|^2 appear among its real roots).
// p must be monic with p(0) != 0.
Poly<Rat> squared_modulus_poly(const Poly<Rat>& p);

// The unique simple dominant eigenvalue. Throws NoUniqueDominant when the
// maximal modulus is shared, NotSimple when the dominant root is multiple,
// HypothesisViolation when A has no nonzero eigenvalue.
DominantSpectrum dominant_eigenvalue(const Matrix<Rat>& a);

// Eigenvector for a simple eigenvalue: exactly (1, lambda, ..., lambda^{d-1})
// for companion matrices, otherwise a kernel vector of A - lambda I with
// first nonzero coordinate 1.
std::vector<FieldElement> eigenvector(const Matrix<Rat>& a, const AlgebraicPtr& lambda,
                                      bool companion_flag);

struct HypothesisReport {
    bool has_nonzero_eigenvalue = false;
    bool unique_dominant = false;
    bool simple_dominant = false;
    int lambda_sign = 0;
    bool eigenvector_positive = false;
    std::optional<DominantSpectrum> spectrum;
    std::vector<FieldElement> dominant_eigenvector;  // sign-fixed when it exists
    std::vector<std::string> notes;

    // hypotheses of the main theorem (positivity of the eigenvector includes
    // lambda > 0 for companion matrices)
    bool ok() const {
        return has_nonzero_eigenvalue && unique_dominant && simple_dominant && lambda_sign > 0 &&
               eigenvector_positive;
    }
};

// Never throws for spectral reasons: failures become report entries.
HypothesisReport check_hypotheses(const Matrix<Rat>& a, bool companion_flag);

}  // namespace pfp
