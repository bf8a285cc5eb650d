#pragma once

// Rational functions over Q in the recurrence index n, normalized with
// coprime numerator/denominator and a monic denominator.

#include <optional>
#include <utility>

#include "pfp/errors.hpp"
#include "pfp/poly.hpp"

namespace pfp {

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rat(1)) {}
    RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Poly<Rat> num, Poly<Rat> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroDivision("rational function with zero denominator");
        normalize();
    }
    explicit RationalFunction(Poly<Rat> num) : num_(std::move(num)), den_(Rat(1)) {}

    const Poly<Rat>& num() const { return num_; }
    const Poly<Rat>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ZeroDivision("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // value at an integer index; the denominator must not vanish there
    Rat eval_at(long n) const {
        const Rat d = eval(den_, Rat(n));
        if (d == 0) throw DenominatorZero(n);
        return eval(num_, Rat(n)) / d;
    }

    // substitution n -> n + s
    RationalFunction shifted(long s) const {
        return RationalFunction(taylor_shift(num_, Rat(s)), taylor_shift(den_, Rat(s)));
    }

    // entrywise limit as n -> infinity: finite value or nullopt (divergence)
    std::optional<Rat> limit() const {
        if (num_.is_zero()) return Rat(0);
        if (num_.degree() < den_.degree()) return Rat(0);
        if (num_.degree() == den_.degree()) return num_.lc() / den_.lc();
        return std::nullopt;
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<Rat>(Rat(1));
            return;
        }
        const Poly<Rat> g = gcd_poly(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rat lc = den_.lc();
        if (lc != 1) {
            const Rat inv = Rat(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly<Rat> num_, den_;
};

template <>
struct field_traits<RationalFunction> {
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(Rat(1)); }
    static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
    static int sign(const RationalFunction&) {
        throw Error("rational functions are not sign-ordered");
    }
    static Rat abs_upper(const RationalFunction&) {
        throw Error("rational functions have no magnitude bound");
    }
    static double to_double(const RationalFunction&) {
        throw Error("rational functions have no scalar value");
    }
};

}  // namespace pfp
