#include "pfp/verifier.hpp"

#include "pfp/cone.hpp"
#include "pfp/errors.hpp"
#include "pfp/induction.hpp"
#include "pfp/spectral.hpp"

namespace pfp {

VerifyReport verify(const MatrixRecurrence& m_rec, const std::vector<Rat>& u0,
                    const Certificate& cert, bool strict) {
    cert.validate();
    if (cert.T.rows() != m_rec.dim())
        throw MalformedCertificate("T dimension does not match the recurrence");
    if (u0.size() != m_rec.dim())
        throw MalformedCertificate("initial vector dimension does not match the recurrence");

    VerifyReport rep;

    // recompute the spectral data; the certificate carries neither lambda
    // nor the eigenvector
    Matrix<Rat> limit;
    DominantSpectrum spectrum;
    try {
        limit = limit_matrix(m_rec);
        check_invertible_on_naturals(m_rec);
        spectrum = dominant_eigenvalue(limit);
    } catch (const NoUniqueDominant& e) {
        throw HypothesisViolation(e.what());
    } catch (const NotSimple& e) {
        throw HypothesisViolation(e.what());
    }
    rep.lambda_used = spectrum.lambda;
    const auto e = eigenvector(limit, spectrum.lambda, m_rec.is_companion());

    const Matrix<Rat> t_inv = cert.T.inverse();
    std::vector<FieldElement> v(m_rec.dim());
    for (std::size_t i = 0; i < m_rec.dim(); ++i) {
        FieldElement acc;
        for (std::size_t j = 0; j < m_rec.dim(); ++j)
            acc = acc + FieldElement(cert.T(i, j)) * e[j];
        v[i] = acc;
    }

    // --- sanity: lambda > 0, v > 0, C_r(v) inside the positive orthant ---
    do {
        if (spectrum.lambda->sign() <= 0) {
            rep.failure_detail = "sanity: dominant eigenvalue is not positive";
            break;
        }
        bool v_positive = true;
        for (const auto& x : v) v_positive = v_positive && sign_of(x) > 0;
        if (!v_positive) {
            rep.failure_detail = "sanity: v = T e is not positive";
            break;
        }
        const Cone<FieldElement> cone(v, cert.r);
        if (!image_positive(t_inv, cone)) {
            rep.failure_detail = "sanity: T^{-1} B_r(v) is not contained in the positive orthant";
            break;
        }
        rep.sanity_ok = true;
    } while (false);
    if (!rep.sanity_ok) return rep;

    const Cone<FieldElement> cone(v, cert.r);

    // --- initialization: U_n >= 0 for n <= N, then U_N..U_{N+m-1} in C_r(v) ---
    {
        long first_bad = -1;
        std::size_t bad_coord = 0;
        bool membership_ok = true;
        long bad_member = -1;
        unroll_scaled(m_rec, u0, cert.N + cert.m - 1, [&](long k, const std::vector<Int>& w) {
            if (k <= cert.N) {
                for (std::size_t c = 0; c < w.size(); ++c) {
                    const int s = sgn(w[c]);
                    if (s < 0 || (strict && s == 0)) {
                        first_bad = k;
                        bad_coord = c;
                        return false;
                    }
                }
            }
            if (k >= cert.N) {
                std::vector<FieldElement> tx(m_rec.dim());
                for (std::size_t row = 0; row < m_rec.dim(); ++row) {
                    Rat acc(0);
                    for (std::size_t col = 0; col < m_rec.dim(); ++col)
                        acc += cert.T(row, col) * Rat(w[col]);
                    tx[row] = FieldElement(acc);
                }
                if (!contains(cone, tx)) {
                    membership_ok = false;
                    bad_member = k;
                    return false;
                }
            }
            return true;
        });
        if (first_bad >= 0) {
            rep.failure_detail =
                "initialization: coordinate " + std::to_string(bad_coord) + " of U_" +
                std::to_string(first_bad) + (strict ? " is not positive" : " is negative");
            return rep;
        }
        if (!membership_ok) {
            rep.failure_detail = "initialization: T U_" + std::to_string(bad_member) +
                                 " does not lie in B_r(v)";
            return rep;
        }
        rep.initialization_ok = true;
    }

    // --- induction: the cleared polynomial system holds from N on ---
    {
        const auto sys = induction_system(m_rec, cert.T, t_inv, cone, cert.m);
        rep.polynomials_checked = sys.polynomial_count();
        std::string detail;
        if (!induction_holds_from(sys, Rat(cert.N), &detail)) {
            rep.failure_detail = "induction: " + detail;
            return rep;
        }
        rep.induction_ok = true;
    }

    rep.accepted = rep.sanity_ok && rep.initialization_ok && rep.induction_ok;
    return rep;
}

}  // namespace pfp
