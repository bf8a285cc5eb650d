#pragma once

// Property suites shared between the unit tests and the acceptance binary.
// Each returns the number of violated cases (0 = pass).

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pfp/cone.hpp"
#include "pfp/matrix.hpp"
#include "pfp/poly.hpp"

namespace props {

using namespace pfp;

inline std::vector<Rat> random_positive_vector(std::mt19937& rng, std::size_t d, long height) {
    std::uniform_int_distribution<long> num(1, height), den(1, height);
    std::vector<Rat> x(d);
    for (auto& q : x) q = make_rational(num(rng), den(rng));
    return x;
}

// rho(x,y) = rho(y,x); rho(x,z) <= rho(x,y) rho(y,z); rho(mu x, x) = 1.
inline long pseudo_metric_axioms(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    long bad = 0;
    for (int it = 0; it < cases; ++it) {
        const std::size_t d = 2 + it % 3;
        const auto x = random_positive_vector(rng, d, 20);
        const auto y = random_positive_vector(rng, d, 20);
        const auto z = random_positive_vector(rng, d, 20);
        const Rat rxy = projective_ratio(x, y);
        if (rxy != projective_ratio(y, x)) ++bad;
        if (projective_ratio(x, x) != 1) ++bad;
        // multiplicative triangle inequality (log-subadditivity, exactly)
        if (projective_ratio(x, z) > rxy * projective_ratio(y, z)) ++bad;
        // scale invariance
        std::uniform_int_distribution<long> mu(1, 9);
        const Rat m = make_rational(mu(rng), mu(rng));
        std::vector<Rat> xs(d);
        for (std::size_t i = 0; i < d; ++i) xs[i] = m * x[i];
        if (projective_ratio(xs, x) != 1) ++bad;
    }
    return bad;
}

// every generator g of a finite-r cone satisfies rho(g, v) = r exactly
inline long generator_boundary_identity(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> rn(2, 30), rd(1, 20);
    long bad = 0;
    int it = 0;
    while (it < cases) {
        const std::size_t d = 2 + it % 3;
        Rat r = make_rational(rn(rng), rd(rng));
        if (!(r > 1)) continue;
        const Cone<Rat> c(random_positive_vector(rng, d, 12), r);
        for (const auto& g : generators(c))
            if (projective_ratio(g, c.v) != r) ++bad;
        ++it;
    }
    return bad;
}

// contains(c, x) == (projective_ratio(x, v) <= r) for positive x
inline long contains_iff_ratio(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> rn(2, 8), rd(1, 7);
    long bad = 0;
    int it = 0;
    while (it < cases) {
        const std::size_t d = 2 + it % 3;
        Rat r = make_rational(rn(rng), rd(rng));
        if (!(r > 1)) continue;
        const Cone<Rat> c(random_positive_vector(rng, d, 8), r);
        const auto x = random_positive_vector(rng, d, 8);
        const bool in = contains(c, x);
        const bool ratio_ok = !(projective_ratio(x, c.v) > r);
        if (in != ratio_ok) ++bad;
        ++it;
    }
    return bad;
}

// log rho(Ax, Ay) <= L(A) log rho(x, y) + 1e-9, sampled in floating point
inline long birkhoff_contraction_sampled(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    long bad = 0;
    int it = 0;
    while (it < cases) {
        Matrix<Rat> a(3, 3);
        std::uniform_int_distribution<long> entry(1, 20);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = Rat(entry(rng));
        const auto [psi, L] = birkhoff(a);
        (void)psi;
        const auto x = random_positive_vector(rng, 3, 15);
        const auto y = random_positive_vector(rng, 3, 15);
        const Rat rho_xy = projective_ratio(x, y);
        if (rho_xy == 1) continue;  // x proportional to y: d_H = 0
        const auto ax = a.apply(x), ay = a.apply(y);
        const double lhs = std::log(projective_ratio(ax, ay).get_d());
        const double rhs = L * std::log(rho_xy.get_d());
        if (lhs > rhs + 1e-9) ++bad;
        ++it;
    }
    return bad;
}

// Sturm root counts against the numeric oracle
inline long sturm_vs_numeric(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    long bad = 0;
    int it = 0;
    while (it < cases) {
        const auto p = oracle::random_poly(rng, 6, 100);
        if (p.degree() < 1) continue;
        if (count_roots(p, std::nullopt, std::nullopt) != oracle::count_distinct_real_roots(p))
            ++bad;
        ++it;
    }
    return bad;
}

inline long threshold_minimality(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    long bad = 0;
    int it = 0;
    while (it < cases) {
        const auto p = oracle::random_poly(rng, 5, 60);
        if (p.is_zero() || sgn(p.lc()) <= 0) continue;
        const Int k = positivity_threshold(p);
        if (!is_positive_from(p, Rat(k))) ++bad;
        if (k > 0 && is_positive_from(p, Rat(k - 1))) ++bad;
        ++it;
    }
    return bad;
}

inline long field_inverse_identity(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    const auto mk = [](std::initializer_list<long> c, long lo, long hi) {
        std::vector<Rat> v;
        for (long x : c) v.emplace_back(x);
        return std::make_shared<const AlgebraicReal>(Poly<Rat>(std::move(v)), Rat(lo), Rat(hi));
    };
    const AlgebraicPtr bases[] = {mk({-2, 0, 1}, 1, 2), mk({1, -34, 1}, 33, 34),
                                  mk({-2, 0, 0, 1}, 1, 2)};
    long bad = 0;
    int it = 0;
    while (it < cases) {
        const auto& b = bases[it % 3];
        std::vector<Rat> c(static_cast<std::size_t>(b->degree()));
        for (auto& q : c) q = oracle::random_rat(rng, 25);
        FieldElement x(b, std::move(c));
        if (x.is_zero()) continue;
        if (!(x * x.inverse() == FieldElement(Rat(1)))) ++bad;
        ++it;
    }
    return bad;
}

}  // namespace props
