#include "pfp/recurrence.hpp"

#include <algorithm>
#include <cassert>

#include "pfp/algebraic.hpp"
#include "pfp/errors.hpp"

namespace pfp {

void Recurrence::validate() const {
    if (coeffs.size() < 2) throw Error("recurrence needs order >= 1 (coefficients p_0..p_d)");
    if (coeffs.back().is_zero()) throw Error("leading coefficient p_d is identically zero");
    if (initial.size() != static_cast<std::size_t>(order()))
        throw Error("recurrence of order " + std::to_string(order()) + " needs exactly " +
                    std::to_string(order()) + " initial values");
}

MatrixRecurrence::MatrixRecurrence(Matrix<RationalFunction> entries, bool companion_origin)
    : entries_(std::move(entries)), companion_(companion_origin) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw Error("matrix recurrence must be square and nonempty");
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = 0; j < entries_.cols(); ++j) {
            const auto roots = integer_roots_geq0(entries_(i, j).den());
            if (!roots.empty()) throw DenominatorZero(roots.front().get_si());
        }
}

Matrix<Rat> MatrixRecurrence::value_at(long n) const {
    Matrix<Rat> a(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) a(i, j) = entries_(i, j).eval_at(n);
    return a;
}

MatrixRecurrence MatrixRecurrence::shifted(long s) const {
    Matrix<RationalFunction> e(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) e(i, j) = entries_(i, j).shifted(s);
    return MatrixRecurrence(std::move(e), companion_);
}

MatrixRecurrence companion(const Recurrence& rec) {
    rec.validate();
    const std::size_t d = static_cast<std::size_t>(rec.order());
    const Poly<Rat>& pd = rec.coeffs.back();
    if (!integer_roots_geq0(pd).empty())
        throw Error("companion form needs a normalized recurrence (p_d root-free on N)");
    Matrix<RationalFunction> a(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) a(i, i + 1) = RationalFunction(Rat(1));
    for (std::size_t j = 0; j < d; ++j) a(d - 1, j) = RationalFunction(rec.coeffs[j], pd);
    return MatrixRecurrence(std::move(a), true);
}

std::pair<std::vector<Rat>, Recurrence> normalize(const Recurrence& rec,
                                                  const std::vector<Rat>& prefix_values) {
    rec.validate();
    const long d = rec.order();
    Int shift_from(0);
    bool any = false;
    for (const Poly<Rat>* p : {&rec.coeffs.back(), &rec.coeffs.front()}) {
        if (p->is_zero()) continue;  // a zero trailing coefficient never becomes root-free
        for (const Int& r : integer_roots_geq0(*p)) {
            any = true;
            shift_from = std::max(shift_from, r);
        }
    }
    if (rec.coeffs.front().is_zero())
        throw Error("trailing coefficient p_0 is identically zero; reduce the order first");
    if (!any) return {{}, rec};
    const long s = shift_from.get_si() + 1;

    // Unroll the original sequence to u_0..u_{s+d-1}, consuming supplied
    // values where p_d vanishes.
    std::vector<Rat> u(rec.initial);
    std::size_t consumed = 0;
    for (long n = 0; n < s; ++n) {
        const Rat pd_n = eval(rec.coeffs.back(), Rat(n));
        Rat rhs(0);
        for (long i = 0; i < d; ++i) rhs += eval(rec.coeffs[i], Rat(n)) * u[n + i];
        if (pd_n == 0) {
            if (rhs != 0)
                throw Error("recurrence is inconsistent at n = " + std::to_string(n) +
                            " (p_d(n) = 0 but the lower-order terms do not cancel)");
            if (consumed >= prefix_values.size())
                throw InsufficientPrefix("p_d vanishes at n = " + std::to_string(n) +
                                         "; supply u_" + std::to_string(n + d) + " explicitly");
            u.push_back(prefix_values[consumed++]);
        } else {
            u.push_back(rhs / pd_n);
        }
    }

    Recurrence shifted;
    shifted.coeffs.reserve(rec.coeffs.size());
    for (const auto& p : rec.coeffs) shifted.coeffs.push_back(taylor_shift(p, Rat(s)));
    shifted.initial.assign(u.begin() + s, u.begin() + s + d);
    std::vector<Rat> prefix(u.begin(), u.begin() + s);
    return {std::move(prefix), std::move(shifted)};
}

Matrix<Rat> limit_matrix(const MatrixRecurrence& m) {
    Matrix<Rat> a(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const auto lim = m.entries()(i, j).limit();
            if (!lim)
                throw NotPoincareType(
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") diverges as n -> infinity; the recurrence is not of Poincare type "
                    "(a Newton-polygon substitution can rebalance it, which this tool does not do)");
            a(i, j) = *lim;
        }
    return a;
}

std::vector<std::vector<Rat>> unroll(const MatrixRecurrence& m, const std::vector<Rat>& u0,
                                     long n) {
    if (u0.size() != m.dim()) throw Error("initial vector dimension mismatch");
    if (n < 0) throw Error("unroll needs n >= 0");
    std::vector<std::vector<Rat>> orbit{u0};
    orbit.reserve(n + 1);
    for (long k = 0; k < n; ++k) {
        const Matrix<Rat> a = m.value_at(k);
        std::vector<Rat> next(m.dim(), Rat(0));
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) next[i] += a(i, j) * orbit.back()[j];
        orbit.push_back(std::move(next));
    }
    return orbit;
}

void unroll_scaled(const MatrixRecurrence& m, const std::vector<Rat>& u0, long n_max,
                   const std::function<bool(long, const std::vector<Int>&)>& visit) {
    if (u0.size() != m.dim()) throw Error("initial vector dimension mismatch");
    const std::size_t d = m.dim();
    // clear the initial vector to integers
    Int den(1);
    for (const auto& q : u0) den = lcm_int(den, q.get_den());
    std::vector<Int> w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = u0[i].get_num() * (den / u0[i].get_den());
    for (long k = 0;; ++k) {
        if (!visit(k, w)) return;
        if (k == n_max) return;
        const Matrix<Rat> a = m.value_at(k);
        Int dk(1);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) dk = lcm_int(dk, a(i, j).get_den());
        std::vector<Int> next(d, Int(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (a(i, j) == 0) continue;
                next[i] += a(i, j).get_num() * (dk / a(i, j).get_den()) * w[j];
            }
        w = std::move(next);
    }
}

namespace {

// Narrow a strict-interior isolating interval until it is short enough to
// contain at most one integer; returns an exact root point when bisection
// lands on the root.
std::pair<Rat, Rat> narrow_interval(const Poly<Rat>& s, Rat lo, Rat hi, const Rat& width) {
    while (hi - lo > width) {
        const Rat mid = (lo + hi) / 2;
        const Rat v = eval(s, mid);
        if (v == 0) return {mid, mid};
        if (sgn(v) == sgn(eval(s, lo)))
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace

std::vector<Int> integer_roots_geq0(const Poly<Rat>& p) {
    std::vector<Int> out;
    if (p.is_zero()) throw Error("integer_roots_geq0 of the zero polynomial");
    if (p.degree() == 0) return out;
    // Sturm guard: no real roots beyond -1/2 at all
    if (count_roots(p, make_rational(-1, 2), std::nullopt) == 0) return out;
    const Poly<Rat> s = squarefree_part(p);
    for (auto [lo, hi] : isolate_real_roots(s)) {
        if (hi < 0) continue;
        if (lo == hi) {
            if (lo >= 0 && is_integer(lo)) out.push_back(lo.get_num());
            continue;
        }
        auto [nlo, nhi] = narrow_interval(s, lo, hi, make_rational(1, 2));
        if (nlo == nhi) {
            if (nlo >= 0 && is_integer(nlo)) out.push_back(nlo.get_num());
            continue;
        }
        // width <= 1/2: at most one integer candidate in (nlo, nhi)
        const Int cand = ceil_rat(nlo);
        if (Rat(cand) < nhi && cand >= 0 && eval(p, Rat(cand)) == 0) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RationalFunction det_ratfun(const MatrixRecurrence& m) { return m.entries().determinant(); }

void check_invertible_on_naturals(const MatrixRecurrence& m) {
    const RationalFunction det = det_ratfun(m);
    if (det.is_zero())
        throw HypothesisViolation("A(n) is singular for every n (det identically zero)");
    const auto roots = integer_roots_geq0(det.num());
    if (!roots.empty())
        throw HypothesisViolation("A(n) is singular at n = " + roots.front().get_str() +
                                  "; the theorem requires invertibility for all n >= 0");
}

}  // namespace pfp
