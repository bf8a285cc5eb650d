#pragma once

// Univariate polynomials over an exactly computable ordered field K
// (K = Rat or K = FieldElement). Sturm chains, root counting on half-open
// intervals (lo, hi], and the "positive from N on" decisions every
// induction check reduces to.

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfp/errors.hpp"
#include "pfp/rational.hpp"

namespace pfp {

// Customization point for coefficient fields.
template <class K>
struct field_traits;

template <>
struct field_traits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static int sign(const Rat& x) { return sgn(x); }
    // Exact rational upper bound on |x|, used for Cauchy-type root bounds.
    static Rat abs_upper(const Rat& x) { return abs(x); }
    static double to_double(const Rat& x) { return x.get_d(); }
};

template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Poly(K constant) : c_{std::move(constant)} { trim(); }

    static Poly monomial(K coeff, std::size_t degree) {
        std::vector<K> c(degree + 1, field_traits<K>::zero());
        c[degree] = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](std::size_t i) const { return c_[i]; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_traits<K>::zero(); }
    const K& lc() const { return c_.back(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly operator-() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(-x);
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), field_traits<K>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, field_traits<K>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const K& s, const Poly& p) {
        std::vector<K> c;
        c.reserve(p.c_.size());
        for (const auto& x : p.c_) c.push_back(s * x);
        return Poly(std::move(c));
    }

  private:
    void trim() {
        while (!c_.empty() && field_traits<K>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;  // ascending degree
};

template <class K>
Poly<K> derivative(const Poly<K>& p) {
    if (p.degree() <= 0) return Poly<K>();
    std::vector<K> c;
    c.reserve(p.degree());
    for (long i = 1; i <= p.degree(); ++i) c.push_back(Rat(i) * p[i]);
    return Poly<K>(std::move(c));
}

// Evaluation at a point of any ring X into which both K and Rat embed.
template <class K, class X>
X eval_at(const Poly<K>& p, const X& x) {
    X acc = field_traits<X>::zero();
    for (long i = p.degree(); i >= 0; --i) acc = acc * x + X(p[i]);
    return acc;
}

template <class K>
K eval(const Poly<K>& p, const Rat& x) {
    K acc = field_traits<K>::zero();
    for (long i = p.degree(); i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

// Quotient and remainder over a field.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw ZeroDivision("polynomial division by zero");
    std::vector<K> r(a.coeffs());
    const long db = b.degree();
    if (a.degree() < db) return {Poly<K>(), a};
    std::vector<K> q(a.degree() - db + 1, field_traits<K>::zero());
    for (long i = a.degree(); i >= db; --i) {
        if (field_traits<K>::is_zero(r[i])) continue;
        K t = r[i] / b.lc();
        q[i - db] = t;
        for (long j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * b[j];
        r[i] = field_traits<K>::zero();  // cancel exactly
    }
    return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

// p(x + a)
template <class K>
Poly<K> taylor_shift(const Poly<K>& p, const Rat& a) {
    if (p.is_zero()) return p;
    std::vector<K> c(p.coeffs());
    const std::size_t n = c.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j >= k + 1; --j) c[j - 1] = c[j - 1] + c[j] * a;
    return Poly<K>(std::move(c));
}

// p(a * x)
template <class K>
Poly<K> scale_arg(const Poly<K>& p, const Rat& a) {
    std::vector<K> c(p.coeffs());
    Rat pw(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = c[i] * pw;
        pw *= a;
    }
    return Poly<K>(std::move(c));
}

namespace detail {

// Rescales by a positive factor only, so Sturm sign data is preserved.
// Over Q this is the primitive part (controls coefficient growth); over an
// extension field we make the leading coefficient +/-1.
inline Poly<Rat> normalize_positive(const Poly<Rat>& p) {
    if (p.is_zero()) return p;
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : p.coeffs()) {
        num_gcd = gcd_int(num_gcd, c.get_num());
        den_lcm = lcm_int(den_lcm, c.get_den());
    }
    Rat f = make_rational(den_lcm, num_gcd);  // positive since gcd, lcm > 0
    return f * p;
}

template <class K>
Poly<K> normalize_positive(const Poly<K>& p) {
    if (p.is_zero()) return p;
    const int s = field_traits<K>::sign(p.lc());
    K f = (s >= 0 ? field_traits<K>::one() : -field_traits<K>::one()) / p.lc();
    return f * p;
}

}  // namespace detail

template <class K>
Poly<K> monic(const Poly<K>& p) {
    if (p.is_zero()) return p;
    K inv_lc = field_traits<K>::one() / p.lc();
    return inv_lc * p;
}

template <class K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
    a = detail::normalize_positive(a);
    b = detail::normalize_positive(b);
    while (!b.is_zero()) {
        Poly<K> r = divmod(a, b).second;
        a = std::move(b);
        b = detail::normalize_positive(r);
    }
    return monic(a);
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
    if (p.degree() <= 0) return monic(p);
    Poly<K> g = gcd_poly(p, derivative(p));
    if (g.degree() == 0) return monic(p);
    return monic(divmod(p, g).first);
}

// Standard Sturm chain: p, p', then negated remainders (positively rescaled)
// until the chain dies out.
template <class K>
std::vector<Poly<K>> sturm_chain(const Poly<K>& p) {
    if (p.is_zero()) throw Error("sturm_chain of the zero polynomial");
    std::vector<Poly<K>> chain{p};
    Poly<K> d = derivative(p);
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const Poly<K>& a = chain[chain.size() - 2];
        const Poly<K>& b = chain[chain.size() - 1];
        Poly<K> r = -divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(detail::normalize_positive(r));
    }
    return chain;
}

namespace detail {

inline int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

template <class K>
int sign_at_infinity(const Poly<K>& p, bool positive_end) {
    if (p.is_zero()) return 0;
    int s = field_traits<K>::sign(p.lc());
    if (!positive_end && (p.degree() % 2 != 0)) s = -s;
    return s;
}

// Sign variation count of a chain at a rational point or at +/-infinity.
// Zeros are skipped, which makes V right-continuous, so V(a) - V(b) counts
// the distinct real roots in the half-open interval (a, b].
template <class K>
int chain_variations(const std::vector<Poly<K>>& chain, const std::optional<Rat>& at,
                     bool positive_end = true) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain)
        signs.push_back(at ? field_traits<K>::sign(eval(q, *at)) : sign_at_infinity(q, positive_end));
    return variations(signs);
}

}  // namespace detail

// Precomputed Sturm data for repeated root-location queries on one
// polynomial (the chain of the squarefree part, built once).
template <class K>
class SturmData {
  public:
    explicit SturmData(const Poly<K>& p) : p_(p) {
        if (p.is_zero()) throw Error("Sturm data of the zero polynomial");
        if (p.degree() >= 1) chain_ = sturm_chain(squarefree_part(p));
    }

    long count(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const {
        if (lo && hi && !(*lo < *hi)) throw Error("count_roots requires lo < hi");
        if (p_.degree() == 0) return 0;
        const int vlo =
            lo ? detail::chain_variations(chain_, lo) : detail::chain_variations(chain_, std::nullopt, false);
        const int vhi =
            hi ? detail::chain_variations(chain_, hi) : detail::chain_variations(chain_, std::nullopt, true);
        return vlo - vhi;
    }

    // p(x) > 0 for all real x >= from
    bool positive_from(const Rat& from) const {
        if (field_traits<K>::sign(p_.lc()) <= 0) return false;
        if (field_traits<K>::sign(eval(p_, from)) <= 0) return false;
        if (p_.degree() == 0) return true;
        return count(from, std::nullopt) == 0;
    }

    const Poly<K>& poly() const { return p_; }

  private:
    Poly<K> p_;
    std::vector<Poly<K>> chain_;
};

// Number of distinct real roots of p in (lo, hi]; nullopt endpoints mean
// -infinity / +infinity.
template <class K>
long count_roots(const Poly<K>& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    return SturmData<K>(p).count(lo, hi);
}

// Rational B such that all real roots of p lie in [-B, B] (Cauchy bound).
template <class K>
Rat cauchy_root_bound(const Poly<K>& p) {
    if (p.is_zero() || p.degree() == 0) return Rat(0);
    Rat m(0);
    for (long i = 0; i < p.degree(); ++i) m = std::max(m, field_traits<K>::abs_upper(p[i]));
    // |lc| >= 1/den(abs_upper) is not available generically; use 1 + max|c_i| / |lc|
    // with an exact lower bound on |lc| obtained from abs_upper(1/lc).
    K inv_lc = field_traits<K>::one() / p.lc();
    Rat inv_abs = field_traits<K>::abs_upper(inv_lc);
    return Rat(1) + m * inv_abs;
}

// true iff p(x) > 0 for all real x >= from.
template <class K>
bool is_positive_from(const Poly<K>& p, const Rat& from) {
    if (p.is_zero()) return false;
    if (field_traits<K>::sign(p.lc()) <= 0) return false;
    return SturmData<K>(p).positive_from(from);
}

// Least integer K >= 0 with p(x) > 0 for all real x >= K.
// Requires a positive leading coefficient (otherwise p is eventually <= 0).
template <class K>
Int positivity_threshold(const Poly<K>& p) {
    if (p.is_zero() || field_traits<K>::sign(p.lc()) <= 0) throw NonPositiveLeadingCoeff();
    const SturmData<K> sturm(p);
    if (sturm.positive_from(Rat(0))) return Int(0);
    // All roots lie within the Cauchy bound, so hi is certainly admissible.
    Int lo(0), hi = ceil_rat(cauchy_root_bound(p)) + 1;
    assert(sturm.positive_from(Rat(hi)));
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (sturm.positive_from(Rat(mid)))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

inline std::string coeff_str(const Rat& q) { return to_string(q); }

template <class K>
std::string poly_to_string(const Poly<K>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        if (field_traits<K>::is_zero(p[i])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeff_str(p[i]) + ")";
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

// --- integer-polynomial helpers (used by factorization and streaming) ---

// Returns primitive integer coefficients c and positive scale s with
// p = (1/s) * sum c_i x^i * content-sign convention: lc(c) keeps p's sign.
struct IntPoly {
    std::vector<Int> c;
};

inline std::pair<std::vector<Int>, Int> clear_denominators(const Poly<Rat>& p) {
    Int den(1);
    for (const auto& q : p.coeffs()) den = lcm_int(den, q.get_den());
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(q.get_num() * (den / q.get_den()));
    return {std::move(c), den};
}

// Primitive integer form of nonzero p: the unique positive-rational multiple
// of p with coprime integer coefficients. Sign of p is preserved.
inline std::vector<Int> primitive_form(const Poly<Rat>& p) {
    auto [c, den] = clear_denominators(p);
    Int g(0);
    for (const auto& x : c) g = gcd_int(g, x);
    for (auto& x : c) x /= g;
    return c;
}

}  // namespace pfp
