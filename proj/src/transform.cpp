#include "pfp/transform.hpp"

#include <cassert>

#include "pfp/errors.hpp"
#include "pfp/spectral.hpp"

namespace pfp {

namespace {

bool all_rational(const Matrix<FieldElement>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_rational()) return false;
    return true;
}

// least m <= m_cap with T A^m T^{-1} > 0, or -1
long find_power(const Matrix<Rat>& t, const Matrix<Rat>& t_inv, const Matrix<Rat>& a,
                long m_cap) {
    Matrix<Rat> power = a;
    for (long m = 1; m <= m_cap; ++m) {
        const Matrix<Rat> conj = t * power * t_inv;
        bool positive = true;
        for (std::size_t i = 0; positive && i < conj.rows(); ++i)
            for (std::size_t j = 0; positive && j < conj.cols(); ++j)
                if (!(conj(i, j) > 0)) positive = false;
        if (positive) return m;
        if (m < m_cap) power = power * a;
    }
    return -1;
}

}  // namespace

Matrix<FieldElement> block_split(const Matrix<Rat>& a, const AlgebraicPtr& lambda) {
    const std::size_t d = a.rows();
    if (d == 1) return Matrix<FieldElement>::identity(1);
    const FieldElement lam = FieldElement::generator(lambda);

    // right and left eigenvectors over Q(lambda)
    const std::vector<FieldElement> e = eigenvector(a, lambda, false);
    Matrix<FieldElement> mt(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            mt(i, j) = FieldElement(a(j, i));
            if (i == j) mt(i, j) = mt(i, j) - lam;
        }
    const std::vector<FieldElement> f = kernel_vector(mt);

    // Q^{-1} = (e | basis of f-orthogonal); the f-orthogonal complement is
    // A-invariant, so Q A Q^{-1} is block diagonal with the 1x1 block lambda.
    std::size_t pivot = 0;
    while (pivot < d && f[pivot].is_zero()) ++pivot;
    assert(pivot < d);
    Matrix<FieldElement> q_inv(d, d);
    for (std::size_t i = 0; i < d; ++i) q_inv(i, 0) = e[i];
    std::size_t col = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (i == pivot) continue;
        // u_i - (f_i / f_pivot) u_pivot is orthogonal to f
        q_inv(i, col) = FieldElement(Rat(1));
        q_inv(pivot, col) = -(f[i] / f[pivot]);
        ++col;
    }
    return q_inv.inverse();
}

Matrix<FieldElement> build_T_exact(const Matrix<Rat>& a, const AlgebraicPtr& lambda) {
    const std::size_t d = a.rows();
    const Matrix<FieldElement> q = block_split(a, lambda);
    Matrix<FieldElement> s(d, d);
    for (std::size_t i = 0; i < d; ++i) s(i, 0) = FieldElement(Rat(1));
    for (std::size_t c = 1; c < d; ++c) {
        s(0, c) = FieldElement(Rat(1));
        s(c, c) = FieldElement(Rat(-1));
    }
    return s * q;
}

TransformResult rationalize(const Matrix<FieldElement>& t_alg, const Matrix<Rat>& a,
                            const std::vector<FieldElement>& e, unsigned tolerance_exponent,
                            long m_cap) {
    const std::size_t d = t_alg.rows();
    Matrix<Rat> t(d, d);
    const Rat tol = pow2_neg(tolerance_exponent);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t(i, j) = rational_convergent(t_alg(i, j), tol);

    Matrix<Rat> t_inv;
    try {
        t_inv = t.inverse();
    } catch (const SingularMatrix&) {
        throw PowerCapExceeded(m_cap);  // perturbation collapsed T; retry tighter
    }

    // v = T e, sign-fixed: flip T when v < 0
    std::vector<FieldElement> v(d);
    for (std::size_t i = 0; i < d; ++i) {
        FieldElement acc;
        for (std::size_t j = 0; j < d; ++j) acc = acc + FieldElement(t(i, j)) * e[j];
        v[i] = acc;
    }
    int pos = 0, neg = 0;
    for (const auto& x : v) {
        const int sg = sign_of(x);
        pos += sg > 0;
        neg += sg < 0;
    }
    if (neg == static_cast<int>(d)) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                t(i, j) = -t(i, j);
                t_inv(i, j) = -t_inv(i, j);
            }
        }
        for (auto& x : v) x = -x;
    } else if (pos != static_cast<int>(d)) {
        throw PowerCapExceeded(m_cap);  // v not one-signed; tolerance too coarse
    }

    const long m = find_power(t, t_inv, a, m_cap);
    if (m < 0) throw PowerCapExceeded(m_cap);
    return {std::move(t), std::move(t_inv), m, std::move(v), tolerance_exponent};
}

TransformResult find_transform(const Matrix<Rat>& a, const AlgebraicPtr& lambda,
                               const std::vector<FieldElement>& e, long m_cap,
                               unsigned start_exponent) {
    const Matrix<FieldElement> t_alg = build_T_exact(a, lambda);
    if (all_rational(t_alg)) {
        const Matrix<Rat> t =
            t_alg.template map<Rat>([](const FieldElement& x) {
                return x.is_zero() ? Rat(0) : x.rational_value();
            });
        TransformResult res = validate_transform(t, a, e, m_cap);
        res.tolerance_exponent = 0;  // exact
        return res;
    }
    unsigned exponent = start_exponent;
    for (int attempt = 0; attempt < 8; ++attempt, exponent *= 2) {
        try {
            return rationalize(t_alg, a, e, exponent, m_cap);
        } catch (const PowerCapExceeded&) {
            continue;
        }
    }
    throw PowerCapExceeded(m_cap);
}

TransformResult validate_transform(const Matrix<Rat>& t_in, const Matrix<Rat>& a,
                                   const std::vector<FieldElement>& e, long m_cap) {
    const std::size_t d = t_in.rows();
    Matrix<Rat> t = t_in;
    Matrix<Rat> t_inv = t.inverse();  // SingularMatrix propagates to the caller
    std::vector<FieldElement> v(d);
    for (std::size_t i = 0; i < d; ++i) {
        FieldElement acc;
        for (std::size_t j = 0; j < d; ++j) acc = acc + FieldElement(t(i, j)) * e[j];
        v[i] = acc;
    }
    int pos = 0, neg = 0;
    for (const auto& x : v) {
        const int sg = sign_of(x);
        pos += sg > 0;
        neg += sg < 0;
    }
    if (neg == static_cast<int>(d)) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                t(i, j) = -t(i, j);
                t_inv(i, j) = -t_inv(i, j);
            }
        for (auto& x : v) x = -x;
    } else if (pos != static_cast<int>(d)) {
        throw HypothesisViolation("T e is not one-signed; T is unusable for this recurrence");
    }
    const long m = find_power(t, t_inv, a, m_cap);
    if (m < 0) throw PowerCapExceeded(m_cap);
    return {std::move(t), std::move(t_inv), m, std::move(v), 0};
}

}  // namespace pfp
