#include "pfp/induction.hpp"

#include <cassert>

#include "pfp/errors.hpp"
#include "pfp/ratfun.hpp"

namespace pfp {

namespace {

Poly<Rat> poly_lcm(const Poly<Rat>& a, const Poly<Rat>& b) {
    const Poly<Rat> g = gcd_poly(a, b);
    return monic(a * divmod(b, g).first);
}

Poly<FieldElement> lift_poly(const Poly<Rat>& p) {
    std::vector<FieldElement> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(q);
    return Poly<FieldElement>(std::move(c));
}

}  // namespace

InductionSystem induction_system(const MatrixRecurrence& m_rec, const Matrix<Rat>& t,
                                 const Matrix<Rat>& t_inv, const Cone<FieldElement>& cone,
                                 long m) {
    if (m < 1) throw Error("induction_system needs m >= 1");
    auto to_rf = [](const Rat& q) { return RationalFunction(q); };
    Matrix<RationalFunction> p = t.map<RationalFunction>(to_rf);
    for (long k = m - 1; k >= 0; --k) p = p * m_rec.shifted(k).entries();
    p = p * t_inv.map<RationalFunction>(to_rf);
    return induction_system_from_product(p, cone);
}

InductionSystem induction_system_from_product(const Matrix<RationalFunction>& p,
                                              const Cone<FieldElement>& cone) {
    const std::size_t d = p.rows();
    InductionSystem sys;
    sys.infinite_radius = !cone.r.has_value();
    sys.denominator = Poly<Rat>(Rat(1));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sys.denominator = poly_lcm(sys.denominator, p(i, j).den());

    // cleared numerators N_ij = P_ij * D
    std::vector<std::vector<Poly<Rat>>> cleared(d, std::vector<Poly<Rat>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto q = divmod(sys.denominator, p(i, j).den());
            assert(q.second.is_zero());
            cleared[i][j] = p(i, j).num() * q.first;
        }

    if (sys.infinite_radius) {
        // image of the standard basis: block k holds column k
        sys.blocks.resize(d);
        for (std::size_t k = 0; k < d; ++k) {
            sys.blocks[k].entries.reserve(d);
            for (std::size_t i = 0; i < d; ++i)
                sys.blocks[k].entries.push_back(lift_poly(cleared[i][k]));
        }
        return sys;
    }

    const Rat r = *cone.r;
    for (const auto& g : generators(cone)) {
        InductionSystem::Block block;
        std::vector<Poly<FieldElement>> w(d);
        for (std::size_t i = 0; i < d; ++i) {
            Poly<FieldElement> acc;
            for (std::size_t j = 0; j < d; ++j) acc = acc + g[j] * lift_poly(cleared[i][j]);
            w[i] = std::move(acc);
        }
        block.entries = w;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (i == j) continue;
                // w_i v_j <= r w_j v_i, cleared: r w_j v_i - w_i v_j >= 0
                block.ratios.push_back((cone.v[i] * r) * w[j] - cone.v[j] * w[i]);
            }
        sys.blocks.push_back(std::move(block));
    }
    return sys;
}

namespace {

// threshold for "strictly positive from K on"; nullopt when eventually <= 0
std::optional<Int> strict_threshold(const Poly<FieldElement>& q) {
    if (q.is_zero()) return std::nullopt;
    try {
        return positivity_threshold(q);
    } catch (const NonPositiveLeadingCoeff&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<Int> least_induction_threshold(const InductionSystem& sys) {
    Int k = positivity_threshold(sys.denominator);
    if (sys.infinite_radius) {
        // entries: zero or eventually positive; every row needs a positive one
        const std::size_t d = sys.blocks.size();
        std::vector<bool> row_covered(d, false);
        for (const auto& block : sys.blocks) {
            for (std::size_t i = 0; i < block.entries.size(); ++i) {
                const auto& q = block.entries[i];
                if (q.is_zero()) continue;
                const auto t = strict_threshold(q);
                if (!t) return std::nullopt;
                k = std::max(k, *t);
                row_covered[i] = true;
            }
        }
        for (bool covered : row_covered)
            if (!covered) return std::nullopt;
        return k;
    }
    for (const auto& block : sys.blocks) {
        for (const auto& q : block.entries) {
            const auto t = strict_threshold(q);  // coordinates must be strictly positive
            if (!t) return std::nullopt;
            k = std::max(k, *t);
        }
        for (const auto& q : block.ratios) {
            if (q.is_zero()) continue;  // generator image sits on the ratio boundary
            const auto t = strict_threshold(q);
            if (!t) return std::nullopt;
            k = std::max(k, *t);
        }
    }
    return k;
}

bool induction_holds_from(const InductionSystem& sys, const Rat& from, std::string* detail) {
    auto fail = [&](const std::string& what) {
        if (detail) *detail = what;
        return false;
    };
    if (!is_positive_from(sys.denominator, from))
        return fail("cleared denominator is not positive from N on");
    if (sys.infinite_radius) {
        const std::size_t d = sys.blocks.size();
        std::vector<bool> row_covered(d, false);
        for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
            const auto& block = sys.blocks[b];
            for (std::size_t i = 0; i < block.entries.size(); ++i) {
                const auto& q = block.entries[i];
                if (q.is_zero()) continue;
                if (!is_positive_from(q, from))
                    return fail("image coordinate " + std::to_string(i) + " of basis vector " +
                                std::to_string(b) + " is not positive from N on");
                row_covered[i] = true;
            }
        }
        for (std::size_t i = 0; i < d; ++i)
            if (!row_covered[i])
                return fail("row " + std::to_string(i) + " of the conjugated matrix vanishes");
        return true;
    }
    for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
        const auto& block = sys.blocks[b];
        for (std::size_t i = 0; i < block.entries.size(); ++i)
            if (!is_positive_from(block.entries[i], from))
                return fail("image coordinate " + std::to_string(i) + " of generator " +
                            std::to_string(b) + " is not positive from N on");
        for (std::size_t i = 0; i < block.ratios.size(); ++i) {
            const auto& q = block.ratios[i];
            if (q.is_zero()) continue;
            if (!is_positive_from(q, from))
                return fail("ratio inequality " + std::to_string(i) + " of generator " +
                            std::to_string(b) + " fails from N on");
        }
    }
    return true;
}

}  // namespace pfp
