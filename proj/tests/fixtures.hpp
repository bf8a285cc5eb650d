#pragma once

// The four named recurrences used across the test suite, plus their
// published certificates.

#include <initializer_list>
#include <vector>

#include "pfp/matrix.hpp"
#include "pfp/recurrence.hpp"

namespace fixtures {

using pfp::Int;
using pfp::make_rational;
using pfp::Matrix;
using pfp::Poly;
using pfp::Rat;
using pfp::Recurrence;

inline Poly<Rat> poly(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly<Rat>(std::move(c));
}

inline Poly<Rat> polyq(std::initializer_list<Rat> ascending) {
    return Poly<Rat>(std::vector<Rat>(ascending));
}

// 2(n+2)^2 s_{n+2} = (81n^2+243n+186) s_{n+1} - 81(3n+2)(3n+4) s_n,
// s_0 = 1, s_1 = 12
inline Recurrence straub() {
    Recurrence r;
    r.coeffs = {poly({-648, -1458, -729}), poly({186, 243, 81}), poly({8, 8, 2})};
    r.initial = {Rat(1), Rat(12)};
    return r;
}

// (n+2)^3 u_{n+2} = (2n+3)(17n^2+51n+39) u_{n+1} - (n+1)^3 u_n, u_0 = 1, u_1 = 5
inline Recurrence apery() {
    Recurrence r;
    r.coeffs = {poly({-1, -3, -3, -1}), poly({117, 231, 153, 34}), poly({8, 12, 6, 1})};
    r.initial = {Rat(1), Rat(5)};
    return r;
}

// The Gillis-Reznick-Zeilberger order-4 recurrence; initial terms from the
// defining binomial sum: 1, 0, 216, 18816.
inline Recurrence grz4() {
    Recurrence r;
    r.coeffs = {
        poly({-383201280, -1500622848, -2308829184, -1765380096, -701374464, -138018816, -10616832}),
        poly({-224985600, -640811520, -746896896, -453150720, -150073344, -25657344, -1769472}),
        poly({-30421440, -74657088, -75175488, -39696768, -11582208, -1769472, -110592}),
        poly({2708160, 5889032, 5258744, 2473952, 647744, 89600, 5120}),
        poly({24640, 51376, 43628, 19353, 4738, 608, 32})};
    r.initial = {Rat(1), Rat(0), Rat(216), Rat(18816)};
    return r;
}

// (n+1) u_{n+3} = (77n/30 + 2) u_{n+2} - (13n/6 - 3) u_{n+1} + (3n/5 + 2) u_n,
// u_0 = 1, u_1 = 15/14, u_2 = 8/7
inline Recurrence order3() {
    Recurrence r;
    r.coeffs = {polyq({Rat(2), make_rational(3, 5)}), polyq({Rat(3), make_rational(-13, 6)}),
                polyq({Rat(2), make_rational(77, 30)}), poly({1, 1})};
    r.initial = {Rat(1), make_rational(15, 14), make_rational(8, 7)};
    return r;
}

// u_{n+1} = -2 u_n, u_0 = 1
inline Recurrence neg2() {
    Recurrence r;
    r.coeffs = {poly({-2}), poly({1})};
    r.initial = {Rat(1)};
    return r;
}

// u_{n+2} = (5/2) u_{n+1} - u_n with the minimal solution u_n = 2^-n
inline Recurrence nongeneric_half() {
    Recurrence r;
    r.coeffs = {poly({-1}), polyq({make_rational(5, 2)}), poly({1})};
    r.initial = {Rat(1), make_rational(1, 2)};
    return r;
}

// Published certificate for the Straub sequence: T = (1/13) [[-14, 1], [1, 0]]
inline Matrix<Rat> straub_T() {
    Matrix<Rat> t(2, 2);
    t(0, 0) = make_rational(-14, 13);
    t(0, 1) = make_rational(1, 13);
    t(1, 0) = make_rational(1, 13);
    t(1, 1) = Rat(0);
    return t;
}

// Published certificate for GRZ: lower triangular T, r = infinity, N = 3, m = 1
inline Matrix<Rat> grz4_T() {
    Matrix<Rat> t(4, 4);
    const long rows[4][4] = {{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, -2, 1, 0}, {-3000, -1000, -40, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = Rat(rows[i][j]);
    return t;
}

// Published certificate for the order-3 example: r = 5/3, N = 3040, m = 1
inline Matrix<Rat> order3_T() {
    Matrix<Rat> t(3, 3);
    t(0, 0) = make_rational(-36, 7);
    t(0, 1) = make_rational(76, 7);
    t(0, 2) = make_rational(-33, 7);
    t(1, 0) = make_rational(162, 7);
    t(1, 1) = make_rational(-405, 7);
    t(1, 2) = make_rational(250, 7);
    t(2, 0) = make_rational(303, 14);
    t(2, 1) = make_rational(-4783, 84);
    t(2, 2) = make_rational(3049, 84);
    return t;
}

}  // namespace fixtures

namespace fixtures {

// Ten-recurrence corpus for the prover -> verifier round trip. All are
// positive sequences with a unique simple dominant eigenvalue and generic
// initial conditions.
struct CorpusEntry {
    const char* name;
    Recurrence rec;
};

inline std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;
    out.push_back({"straub", straub()});
    out.push_back({"apery", apery()});
    {
        // C-finite quartic with dominant root 3 (u_n = 3^n)
        Recurrence r;
        r.coeffs = {polyq({make_rational(3, 4)}), poly({-1}), polyq({make_rational(-11, 4)}),
                    poly({4}), poly({1})};
        r.initial = {Rat(1), Rat(3), Rat(9), Rat(27)};
        out.push_back({"quartic-3", r});
    }
    {
        // order-3 flavor with a wider spectral gap (limit roots 2, 1/2, 1/4)
        Recurrence r;
        r.coeffs = {polyq({Rat(1), make_rational(1, 2)}), polyq({Rat(-2), make_rational(-13, 4)}),
                    polyq({Rat(6), make_rational(11, 2)}), poly({2, 2})};
        r.initial = {Rat(1), Rat(2), Rat(4)};
        out.push_back({"order3-wide", r});
    }
    {
        Recurrence r;  // u_{n+1} = 2 u_n
        r.coeffs = {poly({2}), poly({1})};
        r.initial = {Rat(1)};
        out.push_back({"double", r});
    }
    {
        Recurrence r;  // Fibonacci: golden-ratio dominant, quadratic field
        r.coeffs = {poly({1}), poly({1}), poly({1})};
        r.initial = {Rat(1), Rat(1)};
        out.push_back({"fibonacci", r});
    }
    {
        Recurrence r;  // u_{n+2} = (5/2) u_{n+1} - u_n, generic start
        r.coeffs = {poly({-1}), polyq({make_rational(5, 2)}), poly({1})};
        r.initial = {Rat(1), Rat(2)};
        out.push_back({"halfgap-generic", r});
    }
    {
        Recurrence r;  // C-finite order 3: roots 2, 1/2, -1/2
        r.coeffs = {polyq({make_rational(-1, 2)}), polyq({make_rational(1, 4)}), poly({2}),
                    poly({1})};
        r.initial = {Rat(1), Rat(2), Rat(4)};
        out.push_back({"cubic-2", r});
    }
    {
        Recurrence r;  // P-finite order 2: limit roots 3 and 1
        r.coeffs = {poly({-2, -3}), poly({5, 4}), poly({1, 1})};
        r.initial = {Rat(1), Rat(3)};
        out.push_back({"limit31", r});
    }
    {
        Recurrence r;  // (n+1) u_{n+2} = (5n+6) u_{n+1} - (6n+5) u_n: limit roots 3, 2
        r.coeffs = {poly({-5, -6}), poly({6, 5}), poly({1, 1})};
        r.initial = {Rat(1), Rat(3)};
        out.push_back({"poincare-32", r});
    }
    return out;
}

}  // namespace fixtures
