#pragma once

// The cone B_r(v) = {x > 0 | x_i v_j <= r x_j v_i for all i, j}: its 2^d - 2
// generators, the membership predicate, image positivity through T^{-1},
// and Birkhoff's contraction data. All decisions are exact; logarithms
// never enter a decision path (the Hilbert distance is kept in ratio form).

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "pfp/algebraic.hpp"
#include "pfp/errors.hpp"
#include "pfp/matrix.hpp"
#include "pfp/rational.hpp"

namespace pfp {

template <class K>
struct Cone {
    std::vector<K> v;       // entrywise positive
    std::optional<Rat> r;   // radius, > 1 when finite; nullopt means infinity

    Cone(std::vector<K> axis, std::optional<Rat> radius) : v(std::move(axis)), r(std::move(radius)) {
        for (const auto& x : v)
            if (field_traits<K>::sign(x) <= 0) throw Error("cone axis must be positive");
        if (r && !(*r > 1)) throw Error("cone radius must exceed 1");
    }

    std::size_t dim() const { return v.size(); }
};

// rho(x, y) = max_i(x_i/y_i) / min_i(x_i/y_i) >= 1; d_H = log rho.
template <class K>
K projective_ratio(const std::vector<K>& x, const std::vector<K>& y) {
    if (x.size() != y.size() || x.empty()) throw Error("projective_ratio: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (field_traits<K>::sign(x[i]) <= 0 || field_traits<K>::sign(y[i]) <= 0)
            throw Error("projective_ratio needs positive vectors");
    K best_max = x[0] / y[0], best_min = best_max;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const K q = x[i] / y[i];
        if (field_traits<K>::sign(q - best_max) > 0) best_max = q;
        if (field_traits<K>::sign(q - best_min) < 0) best_min = q;
    }
    return best_max / best_min;
}

// The 2^d - 2 extreme rays: every pattern of coordinates in {v_i, r v_i}
// except all-v and all-rv. In dimension 1 the cone is the ray spanned by v
// itself (the pattern count formula degenerates to zero there, but an empty
// generator set would make every generator-based check pass vacuously).
template <class K>
std::vector<std::vector<K>> generators(const Cone<K>& c) {
    if (!c.r) throw InfiniteRadius();
    const std::size_t d = c.dim();
    if (d == 1) return {c.v};
    std::vector<std::vector<K>> out;
    out.reserve((std::size_t(1) << d) - 2);
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << d); ++mask) {
        std::vector<K> g(d);
        for (std::size_t i = 0; i < d; ++i)
            g[i] = (mask >> i) & 1 ? c.v[i] * (*c.r) : c.v[i];
        out.push_back(std::move(g));
    }
    return out;
}

// Non-strict membership per the defining inequalities (the cone is closed
// on its ratio boundary; positivity of the coordinates stays strict).
template <class K>
bool contains(const Cone<K>& c, const std::vector<K>& x) {
    if (x.size() != c.dim()) throw Error("contains: dimension mismatch");
    for (const auto& xi : x)
        if (field_traits<K>::sign(xi) <= 0) return false;
    if (!c.r) return true;
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j) {
            if (i == j) continue;
            // x_i v_j <= r x_j v_i
            if (field_traits<K>::sign(x[i] * c.v[j] - (*c.r) * x[j] * c.v[i]) > 0) return false;
        }
    return true;
}

// C_r(v) = T^{-1} B_r(v) lies in the open positive orthant: for finite r it
// suffices that T^{-1} g > 0 for every generator g; for r = infinity that
// T^{-1} is nonnegative with no zero row.
template <class K>
bool image_positive(const Matrix<Rat>& t_inv, const Cone<K>& c) {
    if (!c.r) {
        for (std::size_t i = 0; i < t_inv.rows(); ++i) {
            bool has_positive = false;
            for (std::size_t j = 0; j < t_inv.cols(); ++j) {
                if (sgn(t_inv(i, j)) < 0) return false;
                if (sgn(t_inv(i, j)) > 0) has_positive = true;
            }
            if (!has_positive) return false;
        }
        return true;
    }
    for (const auto& g : generators(c)) {
        for (std::size_t i = 0; i < t_inv.rows(); ++i) {
            K acc = field_traits<K>::zero();
            for (std::size_t j = 0; j < t_inv.cols(); ++j) acc = acc + K(t_inv(i, j)) * g[j];
            if (field_traits<K>::sign(acc) <= 0) return false;
        }
    }
    return true;
}

// Birkhoff: psi(A) = min over index quadruples of a_ik a_jl / (a_il a_jk),
// exact; the contraction coefficient L = (1 - sqrt psi)/(1 + sqrt psi) is a
// display value only.
inline std::pair<Rat, double> birkhoff(const Matrix<Rat>& a) {
    const std::size_t d = a.rows();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) > 0)) throw NotPositiveMatrix();
    Rat psi(1);
    bool first = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < a.cols(); ++k)
                for (std::size_t l = 0; l < a.cols(); ++l) {
                    const Rat q = (a(i, k) * a(j, l)) / (a(i, l) * a(j, k));
                    if (first || q < psi) psi = q;
                    first = false;
                }
    const double sq = std::sqrt(psi.get_d());
    return {psi, (1.0 - sq) / (1.0 + sq)};
}

// Rational vectors (and scaled-integer orbit vectors) lifted into the
// cone's coefficient field.
template <class K>
std::vector<K> lift_vector(const std::vector<Rat>& x) {
    std::vector<K> out;
    out.reserve(x.size());
    for (const auto& q : x) out.emplace_back(q);
    return out;
}

template <class K>
std::vector<K> lift_vector(const std::vector<Int>& x) {
    std::vector<K> out;
    out.reserve(x.size());
    for (const auto& q : x) out.emplace_back(Rat(q));
    return out;
}

}  // namespace pfp
