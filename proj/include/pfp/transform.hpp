#pragma once

// Constructive change of basis: T over Q(lambda) giving T A T^{-1} positive
// right and left eigenvectors, rationalization of T into GL_d(Q), and the
// power m with T A^m T^{-1} entrywise positive.

#include <vector>

#include "pfp/algebraic.hpp"
#include "pfp/matrix.hpp"

namespace pfp {

struct TransformResult {
    Matrix<Rat> T;
    Matrix<Rat> T_inv;
    long m = 1;
    std::vector<FieldElement> v;  // v = T e, entrywise positive
    unsigned tolerance_exponent = 0;  // entries of T are within 2^-exponent of the exact T
};

// Q with Q A Q^{-1} = (lambda) + B' in block-diagonal form; lambda simple.
Matrix<FieldElement> block_split(const Matrix<Rat>& a, const AlgebraicPtr& lambda);

// T_alg = S Q with S = (a | s_2 | ... | s_d), a = (1,...,1), s_i = u_1 - u_i
// orthogonal to b = (1/d,...,1/d): M = T_alg A T_alg^{-1} has M a = lambda a
// and M^T b = lambda b.
Matrix<FieldElement> build_T_exact(const Matrix<Rat>& a, const AlgebraicPtr& lambda);

// Rational T near T_alg (entrywise continued-fraction convergents within
// 2^-tolerance_exponent), with v = T e sign-fixed and the least power
// m <= m_cap with T A^m T^{-1} > 0. Throws PowerCapExceeded when the
// perturbation was too coarse; the driver retries with a tighter tolerance.
TransformResult rationalize(const Matrix<FieldElement>& t_alg, const Matrix<Rat>& a,
                            const std::vector<FieldElement>& e, unsigned tolerance_exponent,
                            long m_cap = 64);

// Full driver: exact construction, then the tolerance schedule
// 2^-start, 2^-2*start, ... (rational lambda skips the approximation; the
// prover restarts with a higher exponent when the resulting contraction
// index is unusable).
TransformResult find_transform(const Matrix<Rat>& a, const AlgebraicPtr& lambda,
                               const std::vector<FieldElement>& e, long m_cap = 64,
                               unsigned start_exponent = 16);

// Validates a caller-supplied T (certificate override): computes T_inv,
// v = T e with the sign fix, and the least m <= m_cap with T A^m T^{-1} > 0.
TransformResult validate_transform(const Matrix<Rat>& t, const Matrix<Rat>& a,
                                   const std::vector<FieldElement>& e, long m_cap = 64);

}  // namespace pfp
