#pragma once

// Real algebraic numbers as (irreducible monic minimal polynomial,
// isolating rational interval), and arithmetic in Q(lambda) with exact,
// always-terminating sign determination. Degree-1 numbers are normalized
// to exact rationals so the frequent rational-eigenvalue case stays fast.

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pfp/poly.hpp"
#include "pfp/rational.hpp"

namespace pfp {

class AlgebraicReal {
  public:
    // Trusted constructor: minpoly monic irreducible; for degree 1 the
    // interval collapses to the exact rational root, for degree >= 2 the
    // unique root in [lo, hi] lies strictly inside and the endpoints are
    // not roots.
    AlgebraicReal(Poly<Rat> minpoly, Rat lo, Rat hi);

    static AlgebraicReal from_rational(const Rat& q);

    // General constructor: p squarefree with exactly one real root in
    // [lo, hi]. Factors p and keeps the irreducible factor owning the root.
    static AlgebraicReal from_root(const Poly<Rat>& p, const Rat& lo, const Rat& hi);

    const Poly<Rat>& minpoly() const { return minpoly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    long degree() const { return minpoly_.degree(); }
    bool is_rational() const { return minpoly_.degree() == 1; }
    Rat rational_value() const { return -minpoly_[0]; }

    // Isolating interval of width <= width (same root).
    AlgebraicReal refined(const Rat& width) const;
    // -lambda
    AlgebraicReal negated() const;

    int sign() const;
    int compare(const Rat& q) const;  // sign of (this - q)
    double approx() const;

    // One bisection step on a working copy of an isolating interval.
    void bisect_once(Rat& lo, Rat& hi) const;

    // Exact value equality.
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);
    // Exact three-way comparison of |a| and |b|.
    static int compare_abs(const AlgebraicReal& a, const AlgebraicReal& b);

  private:
    Poly<Rat> minpoly_;
    Rat lo_, hi_;
};

using AlgebraicPtr = std::shared_ptr<const AlgebraicReal>;

// An element of Q(lambda), represented canonically as a polynomial in
// lambda of degree < deg(minpoly). A null base means a plain rational; any
// value that reduces to a constant is stored base-free, so rationals and
// degree-0 residues compare equal structurally.
class FieldElement {
  public:
    FieldElement() : c_() {}
    FieldElement(const Rat& q) { set_rational(q); }           // NOLINT(google-explicit-constructor)
    FieldElement(long v) { set_rational(Rat(v)); }            // NOLINT(google-explicit-constructor)
    FieldElement(const Int& v) { set_rational(Rat(v)); }      // NOLINT(google-explicit-constructor)
    FieldElement(AlgebraicPtr base, std::vector<Rat> coeffs);

    static FieldElement generator(const AlgebraicPtr& base);

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return base_ == nullptr; }
    const Rat& rational_value() const;
    const AlgebraicPtr& base() const { return base_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const Rat& s);
    friend FieldElement operator*(const Rat& s, const FieldElement& a) { return a * s; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    FieldElement inverse() const;

    // Exact sign: 0 iff the canonical residue is zero; otherwise adaptive
    // interval refinement, which terminates because an irreducible minpoly
    // cannot divide a shorter nonzero residue.
    int sign() const;

    // Rational enclosure [lo, hi] of the value with hi - lo <= width.
    std::pair<Rat, Rat> enclosure(const Rat& width) const;
    Rat abs_upper() const;
    Int floor() const;
    double approx() const;

  private:
    void set_rational(const Rat& q) {
        base_ = nullptr;
        c_.clear();
        if (q != 0) c_.push_back(q);
    }
    void reduce();
    AlgebraicPtr base_;
    std::vector<Rat> c_;
};

template <>
struct field_traits<FieldElement> {
    static FieldElement zero() { return FieldElement(); }
    static FieldElement one() { return FieldElement(Rat(1)); }
    static bool is_zero(const FieldElement& x) { return x.is_zero(); }
    static int sign(const FieldElement& x) { return x.sign(); }
    static Rat abs_upper(const FieldElement& x) { return x.abs_upper(); }
    static double to_double(const FieldElement& x) { return x.approx(); }
};

// --- spec operations of the numbers module ---

inline int sign_of(const FieldElement& x) { return x.sign(); }

inline AlgebraicReal refine_interval(const AlgebraicReal& a, const Rat& width) {
    return a.refined(width);
}

// Best rational approximation with |result - x| < tol, taken as the first
// continued-fraction convergent inside the tolerance. Exact rational inputs
// are returned unchanged.
Rat rational_convergent(const FieldElement& x, const Rat& tol);
Rat rational_convergent(const AlgebraicReal& a, const Rat& tol);

// Isolating intervals for all real roots of a squarefree p, sorted
// increasingly. Each interval is either an exact rational point (lo == hi)
// or has the root strictly inside with non-root endpoints.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly<Rat>& p);

}  // namespace pfp
