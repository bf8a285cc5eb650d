#pragma once

// Independent certificate checker: the three verification steps (sanity,
// initialization, induction), including the m > 1 variant. Recomputes
// lambda and the eigenvector from the recurrence; trusts nothing from the
// prover beyond the quadruple (T, r, N, m).

#include <map>
#include <optional>
#include <string>

#include "pfp/algebraic.hpp"
#include "pfp/prover.hpp"
#include "pfp/recurrence.hpp"

namespace pfp {

struct VerifyReport {
    bool accepted = false;
    bool sanity_ok = false;
    bool initialization_ok = false;
    bool induction_ok = false;
    AlgebraicPtr lambda_used;
    long polynomials_checked = 0;
    std::string failure_detail;  // which step, which inequality or index

    std::map<std::string, bool> step_results() const {
        return {{"sanity", sanity_ok},
                {"initialization", initialization_ok},
                {"induction", induction_ok}};
    }
};

// Throws MalformedCertificate for r <= 1, m < 1, N < 0 or singular T, and
// HypothesisViolation when the recurrence lacks a unique simple dominant
// eigenvalue (or is not of Poincare type / not invertible on N).
VerifyReport verify(const MatrixRecurrence& m_rec, const std::vector<Rat>& u0,
                    const Certificate& cert, bool strict = false);

}  // namespace pfp
