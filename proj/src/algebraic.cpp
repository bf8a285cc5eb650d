#include "pfp/algebraic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "pfp/errors.hpp"
#include "pfp/factor.hpp"

namespace pfp {

namespace {

struct Interval {
    Rat lo, hi;
};

Interval iv_add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval iv_mul(const Interval& a, const Interval& b) {
    const Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval iv_horner(const std::vector<Rat>& coeffs, const Interval& x) {
    Interval acc{Rat(0), Rat(0)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = iv_add(iv_mul(acc, x), Interval{*it, *it});
    return acc;
}

}  // namespace

// ---------------------------------------------------------------------
// AlgebraicReal
// ---------------------------------------------------------------------

AlgebraicReal::AlgebraicReal(Poly<Rat> minpoly, Rat lo, Rat hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    assert(minpoly_.degree() >= 1);
    assert(!(hi_ < lo_));
    if (minpoly_.degree() == 1) {
        lo_ = hi_ = -minpoly_[0];
    } else {
        assert(sgn(eval(minpoly_, lo_)) * sgn(eval(minpoly_, hi_)) < 0);
    }
}

AlgebraicReal AlgebraicReal::from_rational(const Rat& q) {
    return AlgebraicReal(Poly<Rat>(std::vector<Rat>{-q, Rat(1)}), q, q);
}

AlgebraicReal AlgebraicReal::from_root(const Poly<Rat>& p, const Rat& lo, const Rat& hi) {
    if (p.degree() < 1) throw Error("from_root: constant polynomial");
    auto factors = factor_monic(monic(p));
    for (const auto& [f, mult] : factors) {
        (void)mult;
        if (f.degree() == 1) {
            const Rat root = -f[0];
            if (!(root < lo) && !(hi < root)) return from_rational(root);
        } else if (count_roots(f, lo, hi) >= 1) {
            // an irreducible factor of degree >= 2 has no rational roots, so
            // the endpoints are clean and the single root is strictly interior
            return AlgebraicReal(f, lo, hi);
        }
    }
    throw Error("from_root: no factor has a root in the interval");
}

void AlgebraicReal::bisect_once(Rat& lo, Rat& hi) const {
    const Rat mid = (lo + hi) / 2;
    // irreducible of degree >= 2 has no rational roots, so sign != 0
    const int sm = sgn(eval(minpoly_, mid));
    const int sl = sgn(eval(minpoly_, lo));
    if (sm == sl)
        lo = mid;
    else
        hi = mid;
}

AlgebraicReal AlgebraicReal::refined(const Rat& width) const {
    if (width <= 0) throw Error("refine_interval: width must be positive");
    if (is_rational()) return *this;
    Rat lo = lo_, hi = hi_;
    while (hi - lo > width) bisect_once(lo, hi);
    return AlgebraicReal(minpoly_, lo, hi);
}

AlgebraicReal AlgebraicReal::negated() const {
    Poly<Rat> m = scale_arg(minpoly_, Rat(-1));
    if (m.degree() % 2 != 0) m = -m;  // keep monic
    return AlgebraicReal(std::move(m), -hi_, -lo_);
}

int AlgebraicReal::sign() const {
    if (is_rational()) return sgn(rational_value());
    Rat lo = lo_, hi = hi_;
    while (true) {
        if (sgn(lo) >= 0) return 1;  // root lies strictly above lo
        if (sgn(hi) <= 0) return -1;
        bisect_once(lo, hi);  // 0 is not a root of an irreducible of deg >= 2
    }
}

int AlgebraicReal::compare(const Rat& q) const {
    if (is_rational()) return sgn(rational_value() - q);
    Rat lo = lo_, hi = hi_;
    while (true) {
        if (!(q < hi)) return -1;  // root < hi <= q
        if (!(lo < q)) return 1;   // q <= lo < root
        bisect_once(lo, hi);       // q is rational, never the root itself
    }
}

double AlgebraicReal::approx() const {
    if (is_rational()) return rational_value().get_d();
    const AlgebraicReal r = refined(pow2_neg(60));
    return Rat((r.lo_ + r.hi_) / 2).get_d();
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.minpoly_ != b.minpoly_) return false;
    if (a.is_rational()) return a.rational_value() == b.rational_value();
    // same irreducible polynomial: equal iff the isolating intervals share
    // their root
    const Rat lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
    if (!(lo < hi)) return false;
    return count_roots(a.minpoly_, lo, hi) >= 1;
}

int AlgebraicReal::compare_abs(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a == b || a == b.negated()) return 0;
    Rat alo = a.lo_, ahi = a.hi_, blo = b.lo_, bhi = b.hi_;
    auto absiv = [](const Rat& lo, const Rat& hi) -> Interval {
        if (sgn(lo) >= 0) return {lo, hi};
        if (sgn(hi) <= 0) return {Rat(-hi), Rat(-lo)};
        return {Rat(0), std::max(Rat(-lo), hi)};
    };
    while (true) {
        const Interval ia = absiv(alo, ahi), ib = absiv(blo, bhi);
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
        if (!a.is_rational()) a.bisect_once(alo, ahi);
        if (!b.is_rational()) b.bisect_once(blo, bhi);
    }
}

// ---------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------

FieldElement::FieldElement(AlgebraicPtr base, std::vector<Rat> coeffs)
    : base_(std::move(base)), c_(std::move(coeffs)) {
    reduce();
}

FieldElement FieldElement::generator(const AlgebraicPtr& base) {
    if (!base) throw Error("generator of a null base");
    if (base->is_rational()) return FieldElement(base->rational_value());
    return FieldElement(base, std::vector<Rat>{Rat(0), Rat(1)});
}

void FieldElement::reduce() {
    if (!base_) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (c_.size() > 1) throw Error("rational FieldElement with degree > 0");
        return;
    }
    if (base_->is_rational()) {
        // substitute the exact rational root
        Rat v = eval(Poly<Rat>(c_), base_->rational_value());
        set_rational(v);
        return;
    }
    const Poly<Rat>& m = base_->minpoly();
    Poly<Rat> r = divmod(Poly<Rat>(c_), m).second;
    c_ = r.coeffs();
    if (static_cast<long>(c_.size()) <= 1) {
        const Rat v = c_.empty() ? Rat(0) : c_[0];
        set_rational(v);
    }
}

const Rat& FieldElement::rational_value() const {
    static const Rat zero(0);
    if (!is_rational()) throw Error("rational_value of an irrational element");
    return c_.empty() ? zero : c_[0];
}

namespace {

// shared base of two elements, enforcing compatibility
AlgebraicPtr common_base(const FieldElement& a, const FieldElement& b) {
    if (!a.base()) return b.base();
    if (!b.base()) return a.base();
    if (a.base() == b.base()) return a.base();
    if (*a.base() == *b.base() && a.base()->minpoly() == b.base()->minpoly()) return a.base();
    throw Error("FieldElement arithmetic across different base fields");
}

}  // namespace

FieldElement FieldElement::operator-() const {
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    FieldElement r;
    r.base_ = base_;
    r.c_ = std::move(c);
    return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    AlgebraicPtr base = common_base(a, b);
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return FieldElement(std::move(base), std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.is_zero() || b.is_zero()) return FieldElement();
    AlgebraicPtr base = common_base(a, b);
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return FieldElement(std::move(base), std::move(c));
}

FieldElement operator*(const FieldElement& a, const Rat& s) {
    std::vector<Rat> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(x * s);
    return FieldElement(a.base_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ZeroDivision("inverse of zero field element");
    if (is_rational()) return FieldElement(Rat(1) / rational_value());
    // extended Euclid in Q[x]: s*u + t*minpoly = 1 (minpoly irreducible)
    const Poly<Rat>& m = base_->minpoly();
    Poly<Rat> r0 = m, r1 = Poly<Rat>(c_);
    Poly<Rat> s0, s1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<Rat> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    assert(r0.degree() == 0);
    const Rat g = r0[0];
    Poly<Rat> inv = (Rat(1) / g) * s0;
    return FieldElement(base_, inv.coeffs());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (!a.is_rational()) {
        if (!(a.base() == b.base() || (*a.base() == *b.base() && a.base()->minpoly() == b.base()->minpoly())))
            return false;
    }
    return a.c_ == b.c_;
}

int FieldElement::sign() const {
    if (c_.empty()) return 0;
    if (is_rational()) return sgn(c_[0]);
    // interval refinement; the value is provably nonzero, so this terminates
    Rat lo = base_->lo(), hi = base_->hi();
    while (true) {
        const Interval v = iv_horner(c_, {lo, hi});
        if (sgn(v.lo) > 0) return 1;
        if (sgn(v.hi) < 0) return -1;
        base_->bisect_once(lo, hi);
    }
}

std::pair<Rat, Rat> FieldElement::enclosure(const Rat& width) const {
    if (is_rational()) {
        const Rat v = c_.empty() ? Rat(0) : c_[0];
        return {v, v};
    }
    Rat lo = base_->lo(), hi = base_->hi();
    while (true) {
        const Interval v = iv_horner(c_, {lo, hi});
        if (v.hi - v.lo <= width) return {v.lo, v.hi};
        base_->bisect_once(lo, hi);
    }
}

Rat FieldElement::abs_upper() const {
    if (is_rational()) return c_.empty() ? Rat(0) : abs(c_[0]);
    const Interval v = iv_horner(c_, {base_->lo(), base_->hi()});
    return std::max(Rat(abs(v.lo)), Rat(abs(v.hi)));
}

Int FieldElement::floor() const {
    if (is_rational()) return floor_rat(c_.empty() ? Rat(0) : c_[0]);
    // a non-constant canonical residue has an irrational value, so the
    // enclosure eventually separates from every integer
    Rat lo = base_->lo(), hi = base_->hi();
    while (true) {
        const Interval v = iv_horner(c_, {lo, hi});
        const Int fl = floor_rat(v.lo), fh = floor_rat(v.hi);
        if (fl == fh) return fl;
        base_->bisect_once(lo, hi);
    }
}

double FieldElement::approx() const {
    auto [lo, hi] = enclosure(pow2_neg(60));
    return Rat((lo + hi) / 2).get_d();
}

// ---------------------------------------------------------------------
// rational_convergent
// ---------------------------------------------------------------------

Rat rational_convergent(const FieldElement& x, const Rat& tol) {
    if (tol <= 0) throw Error("rational_convergent: tol must be positive");
    if (x.is_rational()) return x.is_zero() ? Rat(0) : x.rational_value();
    // continued-fraction walk with exact arithmetic in Q(lambda)
    FieldElement cur = x;
    Int pm1(1), pm0, qm1(0), qm0;
    {
        const Int a0 = cur.floor();
        pm0 = a0;
        qm0 = 1;
    }
    while (true) {
        const Rat conv = make_rational(pm0, qm0);
        const FieldElement diff = x - FieldElement(conv);
        // |diff| < tol ?
        if ((diff - FieldElement(tol)).sign() < 0 && (diff + FieldElement(tol)).sign() > 0) return conv;
        const FieldElement frac = cur - FieldElement(Rat(cur.floor()));
        if (frac.is_zero()) return conv;  // exact rational reached
        cur = frac.inverse();
        const Int a = cur.floor();
        const Int pn = a * pm0 + pm1, qn = a * qm0 + qm1;
        pm1 = pm0;
        qm1 = qm0;
        pm0 = pn;
        qm0 = qn;
    }
}

Rat rational_convergent(const AlgebraicReal& a, const Rat& tol) {
    if (a.is_rational()) return a.rational_value();
    auto base = std::make_shared<const AlgebraicReal>(a);
    return rational_convergent(FieldElement::generator(base), tol);
}

// ---------------------------------------------------------------------
// real root isolation
// ---------------------------------------------------------------------

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly<Rat>& p) {
    if (p.is_zero()) throw Error("isolate_real_roots of the zero polynomial");
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() == 0) return out;
    const Poly<Rat> s = squarefree_part(p);
    const Rat bound = cauchy_root_bound(s) + 1;
    const auto chain = sturm_chain(s);
    auto count = [&chain](const Rat& a, const Rat& b) {
        return detail::chain_variations(chain, a) - detail::chain_variations(chain, b);
    };

    // exact root at b gets emitted as a point; otherwise shrink until the
    // left endpoint is clear of roots so the root is strictly interior
    std::function<void(Rat, Rat, long)> split = [&](Rat a, Rat b, long c) {
        if (c == 0) return;
        if (c == 1) {
            if (eval(s, b) == 0) {
                out.emplace_back(b, b);
                return;
            }
            while (eval(s, a) == 0) {
                const Rat m = (a + b) / 2;
                if (eval(s, m) == 0) {
                    out.emplace_back(m, m);
                    return;
                }
                if (count(m, b) == 1)
                    a = m;
                else
                    b = m;
            }
            out.emplace_back(a, b);
            return;
        }
        const Rat m = (a + b) / 2;
        const long right = count(m, b);
        split(a, m, c - right);
        split(m, b, right);
    };
    split(-bound, bound, count(-bound, bound));
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace pfp
