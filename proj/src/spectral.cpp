#include "pfp/spectral.hpp"

#include <algorithm>
#include <cassert>

#include "pfp/errors.hpp"
#include "pfp/factor.hpp"

namespace pfp {

Poly<Rat> char_poly(const Matrix<Rat>& a) {
    assert(a.rows() == a.cols());
    const std::size_t d = a.rows();
    std::vector<Rat> c(d + 1, Rat(0));
    c[d] = Rat(1);
    Matrix<Rat> m = a;
    c[d - 1] = -m.trace();
    for (std::size_t k = 2; k <= d; ++k) {
        Matrix<Rat> shifted = m;
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) += c[d - k + 1];
        m = a * shifted;
        c[d - k] = -m.trace() / Rat(static_cast<long>(k));
    }
    return Poly<Rat>(std::move(c));
}

Poly<Rat> squared_modulus_poly(const Poly<Rat>& p) {
    if (p.is_zero() || p.degree() < 1 || p.lc() != 1 || p[0] == 0)
        throw Error("squared_modulus_poly needs a monic polynomial with nonzero constant term");
    const long n = p.degree();
    const long big = n * n;
    // power sums s_k of the roots of p via Newton's identities
    std::vector<Rat> s(big + 1, Rat(0));
    for (long k = 1; k <= big; ++k) {
        Rat acc(0);
        for (long i = 1; i < k; ++i) {
            if (n - i >= 0 && k - i >= 1) acc += p[n - i] * s[k - i];
        }
        if (k <= n) acc += Rat(k) * p[n - k];
        s[k] = -acc;
    }
    // power sums of the product set {z_i z_j} are the squares
    // S_k = (sum z^k)^2; back to coefficients by Newton again
    std::vector<Rat> coeff(big + 1, Rat(0));
    coeff[big] = Rat(1);  // monic, ascending index big-k holds e_k sign-folded
    for (long k = 1; k <= big; ++k) {
        Rat acc(0);
        for (long i = 1; i <= k; ++i) acc += s[i] * s[i] * coeff[big - (k - i)];
        coeff[big - k] = -acc / Rat(k);
    }
    return Poly<Rat>(std::move(coeff));
}

namespace {

struct RealRoot {
    AlgebraicPtr value;
    int multiplicity;  // multiplicity in the characteristic polynomial
};

// All real roots of the characteristic polynomial with their factor data.
std::vector<RealRoot> real_roots_of(const std::vector<std::pair<Poly<Rat>, int>>& factors) {
    std::vector<RealRoot> out;
    for (const auto& [f, mult] : factors) {
        for (const auto& [lo, hi] : isolate_real_roots(f)) {
            AlgebraicPtr root;
            if (lo == hi)
                root = std::make_shared<const AlgebraicReal>(AlgebraicReal::from_rational(lo));
            else
                root = std::make_shared<const AlgebraicReal>(f, lo, hi);
            out.push_back({std::move(root), mult});
        }
    }
    return out;
}

// Does xi (an element of Q(lambda)) equal the algebraic number isolated by
// the pair (ilo, ihi) as produced by isolate_real_roots on squarefree p
// (exact point when ilo == ihi, strictly interior root otherwise)?
bool element_equals_root(const FieldElement& xi, const Poly<Rat>& p, const Rat& ilo,
                         const Rat& ihi) {
    if (!eval_at(p, xi).is_zero()) return false;
    if (ilo == ihi) return xi.is_rational() && !xi.is_zero() && xi.rational_value() == ilo;
    if (xi.is_rational()) {
        // a root of p inside the isolating interval is the isolated root
        const Rat v = xi.is_zero() ? Rat(0) : xi.rational_value();
        return ilo < v && v < ihi;
    }
    // shrink an enclosure of xi until it isolates a single root of p, then
    // compare the two isolating intervals
    Rat width = ihi - ilo;
    while (true) {
        auto [lo, hi] = xi.enclosure(width);
        if (lo < hi && count_roots(p, lo, hi) == 1) {
            const Rat a = std::max(lo, ilo), b = std::min(hi, ihi);
            if (!(a < b)) return false;
            return count_roots(p, a, b) == 1;
        }
        width /= 16;
    }
}

}  // namespace

DominantSpectrum dominant_eigenvalue(const Matrix<Rat>& a) {
    DominantSpectrum out;
    out.characteristic = char_poly(a);

    // strip zero eigenvalues
    Poly<Rat> p = out.characteristic;
    std::vector<Rat> c = p.coeffs();
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == 0) ++zeros;
    c.erase(c.begin(), c.begin() + zeros);
    const Poly<Rat> nonzero_part{std::move(c)};
    if (nonzero_part.degree() < 1)
        throw HypothesisViolation("the limit matrix is nilpotent (no nonzero eigenvalue)");

    const auto factors = factor_monic(nonzero_part);
    const auto reals = real_roots_of(factors);
    if (reals.empty())
        throw NoUniqueDominant("no real eigenvalue; the dominant eigenvalues form complex pairs");

    // real root of maximal modulus, with exact tie detection
    const RealRoot* best = &reals.front();
    for (const auto& r : reals) {
        if (&r == best) continue;
        const int cmp = AlgebraicReal::compare_abs(*r.value, *best->value);
        if (cmp > 0)
            best = &r;
        else if (cmp == 0)
            throw NoUniqueDominant("two real eigenvalues share the maximal modulus (opposite signs)");
    }

    // squared-modulus polynomial decides dominance over the complex roots
    Poly<Rat> sf(Rat(1));
    for (const auto& [f, mult] : factors) {
        (void)mult;
        sf = sf * f;
    }
    const Poly<Rat> gamma = squared_modulus_poly(sf);
    const Poly<Rat> gamma_sf = squarefree_part(gamma);
    const auto gamma_roots = isolate_real_roots(gamma_sf);
    assert(!gamma_roots.empty());
    const auto [glo, ghi] = gamma_roots.back();  // largest real root = max |z|^2

    const FieldElement lambda_elt = FieldElement::generator(best->value);
    const FieldElement lambda_sq = lambda_elt * lambda_elt;
    if (!element_equals_root(lambda_sq, gamma_sf, glo, ghi))
        throw NoUniqueDominant("a complex conjugate pair has maximal modulus");

    // multiplicity of lambda^2 in gamma is the number of ordered root pairs
    // with product lambda^2; it is 1 exactly when lambda is the only root of
    // maximal modulus
    if (eval_at(derivative(gamma), lambda_sq).is_zero())
        throw NoUniqueDominant("another eigenvalue shares the maximal modulus");

    if (best->multiplicity > 1)
        throw NotSimple("the dominant eigenvalue is a root of multiplicity " +
                        std::to_string(best->multiplicity) + " of the characteristic polynomial");

    // report an isolating interval containing no integer, so consumers can
    // read off the floor directly (e.g. (33, 34) for the Apery eigenvalue)
    if (!best->value->is_rational()) {
        AlgebraicReal lam = *best->value;
        Rat lo = lam.lo(), hi = lam.hi();
        while (floor_rat(lo) != floor_rat(hi) || is_integer(lo) || is_integer(hi))
            lam.bisect_once(lo, hi);
        out.lambda = std::make_shared<const AlgebraicReal>(lam.minpoly(), lo, hi);
    } else {
        out.lambda = best->value;
    }
    out.is_unique = true;
    out.is_simple = true;

    // modulus gap witness rho: the squared-modulus polynomial has no roots
    // in [rho^2, lambda^2), so no eigenvalue modulus lies in [rho, |lambda|)
    {
        // all other squared moduli are <= the second-largest real root of
        // gamma_sf, whose isolating interval ends strictly below lambda^2
        const Rat s2hi = gamma_roots.size() >= 2 ? gamma_roots[gamma_roots.size() - 2].second
                                                 : Rat(-1);
        const AlgebraicReal abs_lambda =
            best->value->sign() >= 0 ? *best->value : best->value->negated();
        if (abs_lambda.is_rational()) {
            const Rat big = abs_lambda.rational_value();
            Rat step = big / 2;
            while (!(big - step > 0 && (big - step) * (big - step) > s2hi)) step /= 2;
            out.modulus_gap_witness = big - step;
        } else {
            Rat lo = abs_lambda.lo(), hi = abs_lambda.hi();
            while (!(lo > 0 && lo * lo > s2hi)) abs_lambda.bisect_once(lo, hi);
            out.modulus_gap_witness = lo;
        }
    }
    return out;
}

std::vector<FieldElement> eigenvector(const Matrix<Rat>& a, const AlgebraicPtr& lambda,
                                      bool companion_flag) {
    const std::size_t d = a.rows();
    if (companion_flag) {
        std::vector<FieldElement> e;
        e.reserve(d);
        FieldElement power(Rat(1));
        const FieldElement gen = FieldElement::generator(lambda);
        for (std::size_t i = 0; i < d; ++i) {
            e.push_back(power);
            power = power * gen;
        }
        return e;
    }
    Matrix<FieldElement> m(d, d);
    const FieldElement gen = FieldElement::generator(lambda);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            m(i, j) = FieldElement(a(i, j));
            if (i == j) m(i, j) = m(i, j) - gen;
        }
    return kernel_vector(m);
}

HypothesisReport check_hypotheses(const Matrix<Rat>& a, bool companion_flag) {
    HypothesisReport rep;
    try {
        rep.spectrum = dominant_eigenvalue(a);
        rep.has_nonzero_eigenvalue = true;
        rep.unique_dominant = true;
        rep.simple_dominant = true;
    } catch (const HypothesisViolation& e) {
        rep.notes.push_back(e.what());
        return rep;
    } catch (const NoUniqueDominant& e) {
        rep.has_nonzero_eigenvalue = true;
        rep.notes.push_back(e.what());
        return rep;
    } catch (const NotSimple& e) {
        rep.has_nonzero_eigenvalue = true;
        rep.unique_dominant = true;
        rep.notes.push_back(e.what());
        return rep;
    }

    const auto& lambda = rep.spectrum->lambda;
    rep.lambda_sign = lambda->sign();
    if (rep.lambda_sign < 0) rep.notes.push_back("negative dominant eigenvalue");

    if (companion_flag) {
        // all eigenvector coordinates are powers of lambda
        rep.eigenvector_positive = rep.lambda_sign > 0;
        if (rep.eigenvector_positive || rep.lambda_sign > 0)
            rep.dominant_eigenvector = eigenvector(a, lambda, true);
        if (!rep.eigenvector_positive && rep.lambda_sign < 0)
            rep.notes.push_back("companion eigenvector (1, lambda, ...) is not positive");
        return rep;
    }

    auto e = eigenvector(a, lambda, false);
    bool all_pos = true, all_neg = true;
    for (const auto& x : e) {
        const int s = sign_of(x);
        all_pos = all_pos && s > 0;
        all_neg = all_neg && s < 0;
    }
    if (all_neg)
        for (auto& x : e) x = -x;
    rep.eigenvector_positive = all_pos || all_neg;
    rep.dominant_eigenvector = std::move(e);
    if (!rep.eigenvector_positive) rep.notes.push_back("dominant eigenvector is not positive");
    return rep;
}

}  // namespace pfp
