#pragma once

// Scalar P-finite recurrences, matrix recurrences U_{n+1} = A(n) U_n,
// companion form, normalization of integer roots of the leading/trailing
// coefficients, limit matrices, and exact unrolling.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pfp/matrix.hpp"
#include "pfp/poly.hpp"
#include "pfp/ratfun.hpp"

namespace pfp {

// p_d(n) u_{n+d} = p_{d-1}(n) u_{n+d-1} + ... + p_0(n) u_n
struct Recurrence {
    std::vector<Poly<Rat>> coeffs;  // p_0 .. p_d
    std::vector<Rat> initial;       // u_0 .. u_{d-1}

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
    void validate() const;
};

class MatrixRecurrence {
  public:
    // Checks that every entry denominator is nonvanishing on integers >= 0.
    explicit MatrixRecurrence(Matrix<RationalFunction> entries, bool companion_origin = false);

    std::size_t dim() const { return entries_.rows(); }
    bool is_companion() const { return companion_; }
    const Matrix<RationalFunction>& entries() const { return entries_; }

    Matrix<Rat> value_at(long n) const;      // A(n), exact
    MatrixRecurrence shifted(long s) const;  // A(n + s)

  private:
    Matrix<RationalFunction> entries_;
    bool companion_;
};

// Companion matrix of a normalized recurrence (p_d root-free on N).
MatrixRecurrence companion(const Recurrence& rec);

// Shift away integer roots >= 0 of p_d and p_0. Returns the prefix terms
// u_0..u_{s-1} the verifier must check directly, plus the shifted
// recurrence in u_{n+s}. Extra sequence values not forced by the recurrence
// (where p_d vanishes) are consumed from prefix_values in index order.
std::pair<std::vector<Rat>, Recurrence> normalize(const Recurrence& rec,
                                                  const std::vector<Rat>& prefix_values = {});

// Entrywise limit of A(n) as n -> infinity; NotPoincareType if any entry
// diverges.
Matrix<Rat> limit_matrix(const MatrixRecurrence& m);

// Exact orbit U_0..U_n.
std::vector<std::vector<Rat>> unroll(const MatrixRecurrence& m, const std::vector<Rat>& u0, long n);

// Streaming scaled orbit: visit(k, W_k) receives W_k = s_k U_k with s_k > 0
// an (unknown) positive rational scale; visiting stops when the visitor
// returns false. Sign patterns and cone membership of U_k are preserved.
void unroll_scaled(const MatrixRecurrence& m, const std::vector<Rat>& u0, long n_max,
                   const std::function<bool(long, const std::vector<Int>&)>& visit);

// Integer roots n >= 0 of p (exact; Sturm guard then root isolation).
std::vector<Int> integer_roots_geq0(const Poly<Rat>& p);

// det A(n) as a rational function of n.
RationalFunction det_ratfun(const MatrixRecurrence& m);

// Verifies the Theorem hypothesis that A(n) is invertible for all n >= 0;
// throws HypothesisViolation naming the offending index otherwise.
void check_invertible_on_naturals(const MatrixRecurrence& m);

}  // namespace pfp
