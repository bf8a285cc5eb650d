#include "pfp/factor.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "pfp/errors.hpp"

namespace pfp {
namespace {

// ---------------------------------------------------------------------
// Polynomials over F_p, p an odd prime < 2^31. Coefficients in [0, p).
// ---------------------------------------------------------------------

using FpPoly = std::vector<std::int64_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long fp_deg(const FpPoly& a) { return static_cast<long>(a.size()) - 1; }

std::int64_t fp_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) { return fp_pow(a, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(c);
    return c;
}

// a mod b, b nonzero
FpPoly fp_rem(FpPoly a, const FpPoly& b, std::int64_t p) {
    const long db = fp_deg(b);
    const std::int64_t inv = fp_inv(b.back(), p);
    while (fp_deg(a) >= db) {
        const long da = fp_deg(a);
        const std::int64_t t = a.back() * inv % p;
        for (long j = 0; j <= db; ++j) {
            a[da - db + j] = (a[da - db + j] - t * b[j]) % p;
            if (a[da - db + j] < 0) a[da - db + j] += p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_divexact(FpPoly a, const FpPoly& b, std::int64_t p) {
    const long db = fp_deg(b);
    const std::int64_t inv = fp_inv(b.back(), p);
    FpPoly q(a.size() - b.size() + 1, 0);
    while (fp_deg(a) >= db) {
        const long da = fp_deg(a);
        const std::int64_t t = a.back() * inv % p;
        q[da - db] = t;
        for (long j = 0; j <= db; ++j) {
            a[da - db + j] = (a[da - db + j] - t * b[j]) % p;
            if (a[da - db + j] < 0) a[da - db + j] += p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    assert(a.empty());
    fp_trim(q);
    return q;
}

FpPoly fp_monic(FpPoly a, std::int64_t p) {
    if (a.empty()) return a;
    const std::int64_t inv = fp_inv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

FpPoly fp_deriv(const FpPoly& a, std::int64_t p) {
    FpPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<std::int64_t>(i % p) * a[i] % p);
    fp_trim(d);
    return d;
}

// Extended Euclid: s*a + t*b = 1 for coprime a, b.
void fp_bezout(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        FpPoly q(std::max<long>(fp_deg(r0) - fp_deg(r1) + 1, 0), 0);
        FpPoly rem = r0;
        const std::int64_t inv = fp_inv(r1.back(), p);
        while (fp_deg(rem) >= fp_deg(r1)) {
            const long k = fp_deg(rem) - fp_deg(r1);
            const std::int64_t c = rem.back() * inv % p;
            q[k] = c;
            for (long j = 0; j <= fp_deg(r1); ++j) {
                rem[k + j] = (rem[k + j] - c * r1[j]) % p;
                if (rem[k + j] < 0) rem[k + j] += p;
            }
            fp_trim(rem);
            if (rem.empty()) break;
        }
        fp_trim(q);
        auto step = [&](FpPoly& x0, FpPoly& x1) {
            FpPoly nx = x0;
            FpPoly qx1 = fp_mul(q, x1, p);
            if (nx.size() < qx1.size()) nx.resize(qx1.size(), 0);
            for (std::size_t i = 0; i < qx1.size(); ++i) {
                nx[i] = (nx[i] - qx1[i]) % p;
                if (nx[i] < 0) nx[i] += p;
            }
            fp_trim(nx);
            x0 = std::move(x1);
            x1 = std::move(nx);
        };
        r0 = std::move(r1);
        r1 = std::move(rem);
        step(s0, s1);
        step(t0, t1);
    }
    // r0 = gcd (constant for coprime inputs); scale Bezout pair by its inverse
    assert(fp_deg(r0) == 0);
    const std::int64_t inv = fp_inv(r0[0], p);
    for (auto& x : s0) x = x * inv % p;
    for (auto& x : t0) x = x * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

// x^p mod f by repeated squaring.
FpPoly fp_xpow_p(const FpPoly& f, std::int64_t p) {
    FpPoly acc = {1};
    FpPoly base = {0, 1};
    std::int64_t e = p;
    while (e > 0) {
        if (e & 1) acc = fp_rem(fp_mul(acc, base, p), f, p);
        base = fp_rem(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

// Berlekamp factorization of a monic squarefree f mod p into monic
// irreducibles.
std::vector<FpPoly> berlekamp(const FpPoly& f, std::int64_t p) {
    const long n = fp_deg(f);
    if (n == 1) return {f};
    // Q[i][j] = coeff_j of x^{ip} mod f
    std::vector<FpPoly> Q(n);
    Q[0] = {1};
    FpPoly xp = fp_xpow_p(f, p);
    FpPoly cur = {1};
    for (long i = 1; i < n; ++i) {
        cur = fp_rem(fp_mul(cur, xp, p), f, p);
        Q[i] = cur;
    }
    // kernel of (Q - I) acting on row vectors v: v*Q = v.
    // Build M[j][i] = Q[i][j] - delta(i,j) and find right-kernel of M.
    std::vector<std::vector<std::int64_t>> M(n, std::vector<std::int64_t>(n, 0));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            std::int64_t v = (j < static_cast<long>(Q[i].size())) ? Q[i][j] : 0;
            if (i == j) v = (v - 1 + p) % p;
            M[j][i] = v;
        }
    }
    // Gaussian elimination to RREF, extract kernel basis.
    std::vector<long> pivot_col(n, -1);
    long rank = 0;
    for (long col = 0; col < n && rank < n; ++col) {
        long piv = -1;
        for (long row = rank; row < n; ++row)
            if (M[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        const std::int64_t inv = fp_inv(M[rank][col], p);
        for (long j = 0; j < n; ++j) M[rank][j] = M[rank][j] * inv % p;
        for (long row = 0; row < n; ++row) {
            if (row == rank || M[row][col] == 0) continue;
            const std::int64_t c = M[row][col];
            for (long j = 0; j < n; ++j) {
                M[row][j] = (M[row][j] - c * M[rank][j]) % p;
                if (M[row][j] < 0) M[row][j] += p;
            }
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<FpPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (long r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (long col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        FpPoly v(n, 0);
        v[col] = 1;
        for (long r = 0; r < rank; ++r) {
            const std::int64_t val = M[r][col];
            if (val != 0) v[pivot_col[r]] = (p - val) % p;
        }
        fp_trim(v);
        basis.push_back(std::move(v));
    }
    const std::size_t r_factors = basis.size();
    std::vector<FpPoly> factors{f};
    if (r_factors == 1) return factors;
    for (const auto& v : basis) {
        if (fp_deg(v) < 1) continue;  // the constant kernel vector splits nothing
        std::vector<FpPoly> next;
        for (auto& h : factors) {
            if (fp_deg(h) <= 1) {
                next.push_back(std::move(h));
                continue;
            }
            FpPoly rem = h;
            FpPoly vr = fp_rem(v, h, p);
            for (std::int64_t c = 0; c < p && fp_deg(rem) > 0; ++c) {
                FpPoly shifted = vr;
                if (shifted.empty()) shifted = {0};
                shifted[0] = (shifted[0] - c % p + p) % p;
                fp_trim(shifted);
                if (shifted.empty()) continue;
                FpPoly g = fp_gcd(rem, shifted, p);
                if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(rem)) {
                    next.push_back(g);
                    rem = fp_divexact(rem, g, p);
                }
            }
            if (fp_deg(rem) > 0) next.push_back(std::move(rem));
        }
        factors = std::move(next);
        if (factors.size() == r_factors) break;
    }
    return factors;
}

// ---------------------------------------------------------------------
// Integer polynomials (monic) and Hensel lifting mod p^k.
// ---------------------------------------------------------------------

using ZPoly = std::vector<Int>;

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long z_deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly z_mod(ZPoly a, const Int& m) {
    for (auto& x : a) {
        x %= m;
        if (x < 0) x += m;
    }
    z_trim(a);
    return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return z_mod(std::move(c), m);
}

ZPoly z_add(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return z_mod(std::move(c), m);
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return z_mod(std::move(c), m);
}

// divmod by a monic divisor, all mod m
void z_divmod_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    assert(!b.empty() && b.back() == 1);
    r = a;
    const long db = z_deg(b);
    if (z_deg(a) < db) {
        q.clear();
        return;
    }
    q.assign(a.size() - b.size() + 1, Int(0));
    while (z_deg(r) >= db) {
        const long k = z_deg(r) - db;
        Int t = r.back();
        q[k] = t;
        for (long j = 0; j <= db; ++j) r[k + j] -= t * b[j];
        r = z_mod(std::move(r), m);
        if (z_deg(r) < db) break;
    }
    q = z_mod(std::move(q), m);
    r = z_mod(std::move(r), m);
}

struct HenselPair {
    ZPoly g, h, s, t;
};

// One quadratic Hensel step: modulus m -> m^2 (von zur Gathen & Gerhard,
// Alg. 15.10). Requires f = g*h mod m, s*g + t*h = 1 mod m, g and h monic.
HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Int& m) {
    const Int m2 = m * m;
    ZPoly e = z_sub(f, z_mul(in.g, in.h, m2), m2);
    ZPoly q, r;
    z_divmod_monic(z_mul(in.s, e, m2), in.h, m2, q, r);
    ZPoly g2 = z_add(in.g, z_add(z_mul(in.t, e, m2), z_mul(q, in.g, m2), m2), m2);
    ZPoly h2 = z_add(in.h, r, m2);
    ZPoly b = z_sub(z_add(z_mul(in.s, g2, m2), z_mul(in.t, h2, m2), m2), ZPoly{Int(1)}, m2);
    ZPoly c, d;
    z_divmod_monic(z_mul(in.s, b, m2), h2, m2, c, d);
    ZPoly s2 = z_sub(in.s, d, m2);
    ZPoly t2 = z_sub(in.t, z_add(z_mul(in.t, b, m2), z_mul(c, g2, m2), m2), m2);
    return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

ZPoly fp_to_z(const FpPoly& a) {
    ZPoly r;
    r.reserve(a.size());
    for (auto x : a) r.emplace_back(x);
    return r;
}

// Lift the factorization f = prod(parts) mod p to mod p^(2^j) >= target,
// recursively over a factor tree. f monic mod P; parts monic mod p.
std::vector<ZPoly> hensel_tree(const ZPoly& f, const std::vector<FpPoly>& parts, std::int64_t p,
                               const Int& target) {
    if (parts.size() == 1) return {z_mod(f, target)};
    const std::size_t half = parts.size() / 2;
    FpPoly g0 = {1}, h0 = {1};
    for (std::size_t i = 0; i < half; ++i) g0 = fp_mul(g0, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i) h0 = fp_mul(h0, parts[i], p);
    FpPoly s0, t0;
    fp_bezout(g0, h0, p, s0, t0);
    HenselPair cur{fp_to_z(g0), fp_to_z(h0), fp_to_z(s0), fp_to_z(t0)};
    Int m(p);
    while (m < target) {
        cur = hensel_step(z_mod(f, m * m), cur, m);
        m *= m;
    }
    // m is a power of p and m >= target (target a power of p), so reduction
    // mod target keeps the true lifted factors.
    ZPoly g = z_mod(cur.g, target), h = z_mod(cur.h, target);
    std::vector<FpPoly> left(parts.begin(), parts.begin() + half);
    std::vector<FpPoly> right(parts.begin() + half, parts.end());
    auto lifted_left = hensel_tree(g, left, p, target);
    auto lifted_right = hensel_tree(h, right, p, target);
    lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
    return lifted_left;
}

// ---------------------------------------------------------------------
// Zassenhaus driver
// ---------------------------------------------------------------------

ZPoly to_symmetric(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    const Int half = m / 2;
    for (auto& x : r)
        if (x > half) x -= m;
    return r;
}

// Exact division test of monic integer polynomials; quotient returned when
// divisible.
bool z_try_divide_exact(const ZPoly& f, const ZPoly& g, ZPoly& q_out) {
    if (g.empty() || z_deg(g) > z_deg(f)) return false;
    ZPoly r = f;
    ZPoly q(f.size() - g.size() + 1, Int(0));
    while (z_deg(r) >= z_deg(g)) {
        const long k = z_deg(r) - z_deg(g);
        Int t = r.back();  // g monic
        q[k] = t;
        for (long j = 0; j <= z_deg(g); ++j) r[k + j] -= t * g[j];
        z_trim(r);
    }
    if (!r.empty()) return false;
    q_out = std::move(q);
    return true;
}

// ||f||_2 rounded up, as an Int
Int l2_norm_ceil(const ZPoly& f) {
    Int s(0);
    for (const auto& c : f) s += c * c;
    Int r = sqrt(s);
    if (r * r < s) r += 1;
    return r;
}

const std::int64_t kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
                                47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103,
                                107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
                                179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241,
                                251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317};

// Factor a monic squarefree integer polynomial into monic irreducible
// integer factors.
std::vector<ZPoly> factor_squarefree_monic_int(const ZPoly& f) {
    const long n = z_deg(f);
    if (n <= 1) return {f};

    // Pick a prime where f stays squarefree; prefer one with few modular
    // factors to keep recombination small.
    std::vector<FpPoly> best_factors;
    std::int64_t best_p = 0;
    int tried = 0;
    for (std::int64_t p : kPrimes) {
        FpPoly fp;
        fp.reserve(f.size());
        for (const auto& c : f) {
            Int r = c % p;
            if (r < 0) r += p;
            fp.push_back(r.get_si());
        }
        fp_trim(fp);
        if (fp_deg(fp) != n) continue;  // cannot happen for monic f, kept as a guard
        if (fp_deg(fp_gcd(fp, fp_deriv(fp, p), p)) != 0) continue;
        auto factors = berlekamp(fp_monic(fp, p), p);
        if (factors.size() == 1) return {f};  // irreducible mod p => irreducible over Z
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (++tried >= 3 || best_factors.size() == 2) break;
    }
    if (best_p == 0) throw Error("no usable prime for factorization (unexpectedly many bad primes)");

    // Landau-Mignotte: coefficients of any monic factor are bounded by
    // 2^n * ||f||_2.
    const Int bound = (Int(1) << static_cast<unsigned long>(n)) * l2_norm_ceil(f);
    Int target(best_p);
    while (target < 2 * bound + 1) target *= target;

    auto lifted = hensel_tree(z_mod(f, target), best_factors, best_p, target);

    // Subset recombination.
    std::vector<ZPoly> result;
    ZPoly remaining_poly = f;
    std::vector<ZPoly> pool = std::move(lifted);
    std::size_t subset_size = 1;
    while (2 * subset_size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{Int(1)};
            for (std::size_t i : idx) cand = z_mul(cand, pool[i], target);
            cand = to_symmetric(cand, target);
            ZPoly q;
            if (z_try_divide_exact(remaining_poly, cand, q)) {
                result.push_back(cand);
                remaining_poly = std::move(q);
                std::vector<ZPoly> next_pool;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_pool.push_back(std::move(pool[i]));
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // next combination
            long i = static_cast<long>(subset_size) - 1;
            while (i >= 0 && idx[i] == pool.size() - subset_size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (z_deg(remaining_poly) > 0) result.push_back(std::move(remaining_poly));
    return result;
}

Poly<Rat> z_to_poly(const ZPoly& f) {
    std::vector<Rat> c;
    c.reserve(f.size());
    for (const auto& x : f) c.emplace_back(x);
    return Poly<Rat>(std::move(c));
}

}  // namespace

std::vector<std::pair<Poly<Rat>, int>> factor_monic(const Poly<Rat>& f) {
    if (f.is_zero() || f.degree() < 1) throw Error("factor_monic needs a monic polynomial of degree >= 1");
    if (field_traits<Rat>::sign(f.lc() - 1) != 0) throw Error("factor_monic needs a monic polynomial");

    const Poly<Rat> sf = squarefree_part(f);

    // Monic integer model: G(y) = D^n * sf(y/D) with D = lcm of denominators.
    Int den(1);
    for (const auto& q : sf.coeffs()) den = lcm_int(den, q.get_den());
    const long n = sf.degree();
    ZPoly g(n + 1, Int(0));
    for (long i = 0; i <= n; ++i) {
        const Rat c = sf[i] * pow_rat(Rat(den), static_cast<unsigned long>(n - i));
        assert(is_integer(c));
        g[i] = c.get_num();
    }

    auto int_factors = factor_squarefree_monic_int(g);

    std::vector<std::pair<Poly<Rat>, int>> result;
    Poly<Rat> rest = f;
    const Rat d_rat(den);
    for (const auto& gf : int_factors) {
        // map back through y = D x and make monic
        Poly<Rat> fac = monic(scale_arg(z_to_poly(gf), d_rat));
        int mult = 0;
        while (true) {
            auto [q, r] = divmod(rest, fac);
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        assert(mult >= 1);
        result.emplace_back(std::move(fac), mult);
    }
    assert(rest.degree() == 0);
    return result;
}

bool is_irreducible_monic(const Poly<Rat>& f) {
    auto fs = factor_monic(f);
    return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace pfp
