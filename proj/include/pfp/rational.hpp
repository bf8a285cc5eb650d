#pragma once

// Exact integer and rational arithmetic. GMP supplies the bignum kernel;
// mpq_class values are kept canonical (reduced, positive denominator) by
// construction, which the rest of the code base relies on for exact
// comparisons.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "pfp/errors.hpp"

namespace pfp {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw ZeroDivision("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rational(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

// Accepts "a" or "a/b" with optional leading '-' on a (and on b, normalized away).
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw ParseError("bad rational literal '" + s + "'");
        return Rat(Int(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw ParseError("bad rational literal '" + s + "'");
    return make_rational(Int(num), Int(den));
}

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Rat pow_rat(const Rat& q, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), e);
    return r;  // powers of a canonical rational are canonical
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// 2^-e as an exact rational.
inline Rat pow2_neg(unsigned long e) {
    Rat r(1);
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(), e);
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace pfp
