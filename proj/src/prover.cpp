#include "pfp/prover.hpp"

#include <cassert>

#include "pfp/errors.hpp"
#include "pfp/induction.hpp"
#include "pfp/transform.hpp"

namespace pfp {

void Certificate::validate() const {
    if (T.rows() == 0 || T.rows() != T.cols())
        throw MalformedCertificate("T must be square and nonempty");
    if (m < 1) throw MalformedCertificate("m must be a positive integer");
    if (N < 0) throw MalformedCertificate("N must be a nonnegative integer");
    if (r && !(*r > 1)) throw MalformedCertificate("finite r must exceed 1");
    if (sgn(T.determinant()) == 0) throw MalformedCertificate("T is singular");
}

std::optional<Rat> find_radius(const Matrix<Rat>& t_inv, const std::vector<FieldElement>& v) {
    {
        const Cone<FieldElement> full(v, std::nullopt);
        if (image_positive(t_inv, full)) return std::nullopt;  // r = infinity works
    }
    Rat r(2);
    for (int step = 0; step < 256; ++step) {
        const Cone<FieldElement> cone(v, r);
        if (image_positive(t_inv, cone)) return r;
        r = (r + 1) / 2;  // dichotomy toward 1
    }
    // unreachable when T^{-1} v > 0, which the caller guarantees
    throw Error("find_radius failed to converge; is T^{-1} v positive?");
}

std::optional<Int> find_K(const MatrixRecurrence& m_rec, const Matrix<Rat>& t,
                          const Matrix<Rat>& t_inv, const Cone<FieldElement>& cone, long m) {
    return least_induction_threshold(induction_system(m_rec, t, t_inv, cone, m));
}

namespace {

bool vector_is_zero(const std::vector<Rat>& u) {
    for (const auto& q : u)
        if (q != 0) return false;
    return true;
}

long witness_index(const MatrixRecurrence& m_rec, long vec_index, std::size_t coord) {
    return m_rec.is_companion() ? vec_index + static_cast<long>(coord) : vec_index;
}

// first orbit position with a negative (strict: nonpositive) coordinate
std::optional<Witness> search_sign_witness(const MatrixRecurrence& m_rec,
                                           const std::vector<Rat>& u0, long budget, bool strict) {
    std::optional<Witness> found;
    unroll_scaled(m_rec, u0, budget, [&](long k, const std::vector<Int>& w) {
        for (std::size_t c = 0; c < w.size(); ++c) {
            const int s = sgn(w[c]);
            if (s < 0 || (strict && s == 0)) {
                found = Witness{witness_index(m_rec, k, c), c};
                return false;
            }
        }
        return true;
    });
    return found;
}

}  // namespace

Outcome positivity_proof(const MatrixRecurrence& m_rec, const std::vector<Rat>& u0,
                         const ProverOptions& opts) {
    Outcome out;

    // the identically-zero orbit never enters any cone; decide it directly
    if (vector_is_zero(u0)) {
        if (opts.strict) {
            out.tag = Outcome::Tag::NonPositive;
            out.witness = Witness{0, 0};
        } else {
            out.tag = Outcome::Tag::Positive;
            out.trivially_zero = true;
        }
        return out;
    }

    Matrix<Rat> limit;
    HypothesisReport report;
    try {
        limit = limit_matrix(m_rec);
        check_invertible_on_naturals(m_rec);
        report = check_hypotheses(limit, m_rec.is_companion());
    } catch (const Error& e) {
        out.tag = Outcome::Tag::HypothesisFailure;
        HypothesisReport rep;
        rep.notes.push_back(e.what());
        out.report = std::move(rep);
        return out;
    }

    if (report.spectrum && report.unique_dominant && report.simple_dominant &&
        report.lambda_sign < 0) {
        // negative dominant eigenvalue: the orbit must eventually leave the
        // nonnegative orthant; locate a concrete witness so the outcome is
        // independently checkable
        if (auto w = search_sign_witness(m_rec, u0, opts.budget, opts.strict)) {
            out.tag = Outcome::Tag::NonPositive;
            out.witness = *w;
        } else {
            out.tag = Outcome::Tag::Inconclusive;
            out.budget_used = opts.budget;
        }
        out.report = std::move(report);
        return out;
    }

    if (!report.ok()) {
        out.tag = Outcome::Tag::HypothesisFailure;
        out.report = std::move(report);
        return out;
    }

    const auto& lambda = report.spectrum->lambda;
    const auto e = report.dominant_eigenvector;

    // transform quality loop: a coarse rational T inflates the contraction
    // index K, so tighten the tolerance until K is workable (exact and
    // caller-fixed transforms cannot be improved)
    TransformResult trans;
    std::optional<Rat> radius;
    long m_cert = 0;
    long k_start = 0;
    unsigned exponent = 16;
    for (int quality = 0;; ++quality) {
        try {
            trans = opts.transform_override
                        ? validate_transform(*opts.transform_override, limit, e, opts.m_cap)
                        : find_transform(limit, lambda, e, opts.m_cap, exponent);
        } catch (const Error& err) {
            out.tag = Outcome::Tag::HypothesisFailure;
            HypothesisReport rep = report;
            rep.notes.push_back(std::string("transform construction failed: ") + err.what());
            out.report = std::move(rep);
            return out;
        }
        radius = find_radius(trans.T_inv, trans.v);
        const Cone<FieldElement> cone(trans.v, radius);

        // least block length m whose induction system contracts, growing the
        // symbolic product incrementally; guaranteed at the strict power
        auto to_rf = [](const Rat& q) { return RationalFunction(q); };
        const Matrix<RationalFunction> t_rf = trans.T.map<RationalFunction>(to_rf);
        const Matrix<RationalFunction> t_inv_rf = trans.T_inv.map<RationalFunction>(to_rf);
        Matrix<RationalFunction> product = t_rf * m_rec.entries() * t_inv_rf;
        m_cert = 0;
        for (long m = 1; m <= trans.m; ++m) {
            if (auto k = least_induction_threshold(induction_system_from_product(product, cone))) {
                m_cert = m;
                assert(k->fits_slong_p());
                k_start = k->get_si();
                break;
            }
            if (m < trans.m)
                product = t_rf * m_rec.shifted(m).entries() * t_inv_rf * product;
        }
        if (m_cert == 0) {
            out.tag = Outcome::Tag::HypothesisFailure;
            HypothesisReport rep = report;
            rep.notes.push_back("no block length up to the strict transform power contracts the cone");
            out.report = std::move(rep);
            return out;
        }
        const bool improvable =
            !opts.transform_override && trans.tolerance_exponent > 0 && quality < 5;
        if (k_start <= opts.k_cap || !improvable) break;
        exponent = trans.tolerance_exponent * 2;
    }
    out.transform_power = trans.m;
    out.tolerance_exponent = trans.tolerance_exponent;
    out.contraction_index = k_start;
    const Cone<FieldElement> cone(trans.v, radius);

    // main loop: reject on a sign violation, accept after m consecutive
    // cone memberships starting at some i >= K
    std::optional<Witness> bad;
    long run_start = -1, run_len = 0;
    std::optional<long> accepted_n;
    unroll_scaled(m_rec, u0, opts.budget, [&](long i, const std::vector<Int>& w) {
        for (std::size_t c = 0; c < w.size(); ++c) {
            const int s = sgn(w[c]);
            if (s < 0 || (opts.strict && s == 0)) {
                bad = Witness{witness_index(m_rec, i, c), c};
                return false;
            }
        }
        if (i >= k_start) {
            // T U_i in B_r(v)?
            std::vector<FieldElement> tx(m_rec.dim());
            for (std::size_t row = 0; row < m_rec.dim(); ++row) {
                Rat acc(0);
                for (std::size_t col = 0; col < m_rec.dim(); ++col)
                    acc += trans.T(row, col) * Rat(w[col]);
                tx[row] = FieldElement(acc);
            }
            if (contains(cone, tx)) {
                if (run_len == 0) run_start = i;
                ++run_len;
                if (run_len >= m_cert) {
                    accepted_n = run_start;
                    return false;
                }
            } else {
                run_len = 0;
            }
        }
        return true;
    });

    if (bad) {
        out.tag = Outcome::Tag::NonPositive;
        out.witness = *bad;
        out.report = std::move(report);
        return out;
    }
    if (accepted_n) {
        out.tag = Outcome::Tag::Positive;
        out.certificate = Certificate{trans.T, radius, *accepted_n, m_cert};
        out.report = std::move(report);
        return out;
    }
    out.tag = Outcome::Tag::Inconclusive;
    out.budget_used = opts.budget;
    out.report = std::move(report);
    return out;
}

}  // namespace pfp
