// pfp: prove and verify positivity of P-finite sequences with
// cone-contraction certificates.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfp/errors.hpp"
#include "pfp/io.hpp"
#include "pfp/prover.hpp"
#include "pfp/spectral.hpp"
#include "pfp/verifier.hpp"

namespace {

using nlohmann::json;
using namespace pfp;

constexpr const char* kVersion = "pfp 1.0.0";

constexpr int kExitPositive = 0;
constexpr int kExitNonPositive = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitParse = 64;

std::string lambda_text(const AlgebraicPtr& lambda) {
    if (!lambda) return "(none)";
    if (lambda->is_rational()) return to_string(lambda->rational_value());
    return poly_to_string(lambda->minpoly(), "x") + " = 0 on [" + to_string(lambda->lo()) + ", " +
           to_string(lambda->hi()) + "]";
}

json lambda_json(const AlgebraicPtr& lambda) {
    json j;
    if (!lambda) return j;
    j["minpoly"] = poly_to_string(lambda->minpoly(), "x");
    j["interval"] = {to_string(lambda->lo()), to_string(lambda->hi())};
    j["approx"] = lambda->approx();
    return j;
}

// scalar witness indices are reported in the original (unshifted) indexing
long original_witness(const LoadedProblem& lp, const Witness& w) {
    return lp.companion ? lp.shift + w.term_index : w.term_index;
}

int cmd_prove(const std::string& problem_path, long budget, bool strict, bool as_json,
              const std::string& output_path, const std::string& transform_path) {
    const auto pf = parse_problem(read_file(problem_path));
    const auto lp = instantiate(pf);

    // terms split off by normalization are checked directly
    for (std::size_t k = 0; k < lp.prefix_terms.size(); ++k) {
        const int s = sgn(lp.prefix_terms[k]);
        if (s < 0 || (strict && s == 0)) {
            if (as_json)
                std::cout << json{{"outcome", "non-positive"}, {"witness", k}}.dump(2) << "\n";
            else
                std::cout << "non-positive: u_" << k << " = " << to_string(lp.prefix_terms[k])
                          << "\n";
            return kExitNonPositive;
        }
    }

    ProverOptions opts;
    opts.budget = budget;
    opts.strict = strict;
    if (!transform_path.empty()) {
        const auto tj = parse_certificate(read_file(transform_path));
        opts.transform_override = tj.cert.T;
    }

    const auto out = positivity_proof(lp.rec, lp.u0, opts);
    switch (out.tag) {
        case Outcome::Tag::Positive: {
            if (!out.certificate) {
                if (as_json)
                    std::cout << json{{"outcome", "positive"}, {"trivially_zero", true}}.dump(2)
                              << "\n";
                else
                    std::cout << "positive (the orbit is identically zero)\n";
                return kExitPositive;
            }
            CertificateFile cf;
            cf.cert = *out.certificate;
            json meta{{"tool", kVersion},
                      {"shift", lp.shift},
                      {"contraction_index", out.contraction_index},
                      {"transform_power", out.transform_power},
                      {"tolerance_exponent", out.tolerance_exponent},
                      {"budget", budget},
                      {"strict", strict}};
            cf.metadata_json = meta.dump();
            const std::string text = emit_certificate(cf);
            if (!output_path.empty()) {
                write_file(output_path, text);
                if (!as_json)
                    std::cout << "positive: certificate written to " << output_path << "\n";
                else
                    std::cout << json{{"outcome", "positive"}, {"certificate_path", output_path}}
                                     .dump(2)
                              << "\n";
            } else {
                std::cout << text;
            }
            return kExitPositive;
        }
        case Outcome::Tag::NonPositive: {
            const long idx = original_witness(lp, *out.witness);
            if (as_json)
                std::cout << json{{"outcome", "non-positive"}, {"witness", idx}}.dump(2) << "\n";
            else
                std::cout << "non-positive: witness at index " << idx << "\n";
            return kExitNonPositive;
        }
        case Outcome::Tag::Inconclusive: {
            std::string hint = "positive so far; raise --budget, or the initial vector may be "
                               "non-generic";
            if (out.contraction_index > out.budget_used)
                hint = "the contraction index K = " + std::to_string(out.contraction_index) +
                       " exceeds the budget, so cone membership was never tested; raise --budget "
                       "past K or supply a better change of basis via --transform";
            if (as_json)
                std::cout << json{{"outcome", "inconclusive"},
                                  {"budget", out.budget_used},
                                  {"contraction_index", out.contraction_index},
                                  {"hint", hint}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "inconclusive after " << out.budget_used << " terms (" << hint
                          << ")\n";
            return kExitInconclusive;
        }
        default: {
            json notes = json::array();
            if (out.report)
                for (const auto& n : out.report->notes) notes.push_back(n);
            if (as_json)
                std::cout << json{{"outcome", "hypothesis-failure"}, {"notes", notes}}.dump(2)
                          << "\n";
            else {
                std::cout << "hypothesis failure:\n";
                if (out.report)
                    for (const auto& n : out.report->notes) std::cout << "  - " << n << "\n";
            }
            return kExitHypothesis;
        }
    }
}

int cmd_verify(const std::string& problem_path, const std::string& cert_path, bool strict,
               bool as_json) {
    const auto pf = parse_problem(read_file(problem_path));
    const auto lp = instantiate(pf);
    const auto cf = parse_certificate(read_file(cert_path));

    auto reject = [&](const std::string& why) {
        if (as_json)
            std::cout << json{{"accepted", false}, {"detail", why}}.dump(2) << "\n";
        else
            std::cout << "REJECT: " << why << "\n";
        return kExitNonPositive;
    };

    for (std::size_t k = 0; k < lp.prefix_terms.size(); ++k) {
        const int s = sgn(lp.prefix_terms[k]);
        if (s < 0 || (strict && s == 0))
            return reject("prefix term u_" + std::to_string(k) + " = " +
                          to_string(lp.prefix_terms[k]) + " fails the sign check");
    }

    VerifyReport rep;
    try {
        rep = verify(lp.rec, lp.u0, cf.cert, strict);
    } catch (const MalformedCertificate& e) {
        return reject(std::string("malformed certificate: ") + e.what());
    } catch (const HypothesisViolation& e) {
        return reject(std::string("hypothesis failure: ") + e.what());
    }

    if (as_json) {
        json j{{"accepted", rep.accepted},
               {"steps",
                {{"sanity", rep.sanity_ok},
                 {"initialization", rep.initialization_ok},
                 {"induction", rep.induction_ok}}},
               {"lambda", lambda_json(rep.lambda_used)},
               {"polynomials_checked", rep.polynomials_checked}};
        if (!rep.accepted) j["detail"] = rep.failure_detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (rep.accepted ? "ACCEPT" : "REJECT") << "\n"
                  << "  sanity:         " << (rep.sanity_ok ? "pass" : "fail") << "\n"
                  << "  initialization: " << (rep.initialization_ok ? "pass" : "fail") << "\n"
                  << "  induction:      " << (rep.induction_ok ? "pass" : "fail") << " ("
                  << rep.polynomials_checked << " polynomials)\n"
                  << "  lambda:         " << lambda_text(rep.lambda_used) << "\n";
        if (!rep.accepted) std::cout << "  detail: " << rep.failure_detail << "\n";
    }
    return rep.accepted ? kExitPositive : kExitNonPositive;
}

int cmd_eval(const std::string& problem_path, long n, bool as_json) {
    const auto pf = parse_problem(read_file(problem_path));
    const auto lp = instantiate(pf);
    if (n < 0) throw ParseError("n must be nonnegative");

    if (lp.companion) {
        std::vector<Rat> terms(lp.prefix_terms);
        const long need = n - lp.shift;
        if (need >= 0) {
            const auto orbit = unroll(lp.rec, lp.u0, need);
            for (long k = 0; k <= need; ++k) terms.push_back(orbit[k][0]);
        } else {
            terms.resize(n + 1);  // n falls inside the prefix
        }
        if (as_json) {
            json j = json::array();
            for (const auto& t : terms) j.push_back(to_string(t));
            std::cout << json{{"terms", j}}.dump(2) << "\n";
        } else {
            for (long k = 0; k <= n; ++k)
                std::cout << "u_" << k << " = " << to_string(terms[k]) << "\n";
        }
        return 0;
    }
    const auto orbit = unroll(lp.rec, lp.u0, n);
    if (as_json) {
        json rows = json::array();
        for (const auto& u : orbit) {
            json row = json::array();
            for (const auto& q : u) row.push_back(to_string(q));
            rows.push_back(std::move(row));
        }
        std::cout << json{{"vectors", rows}}.dump(2) << "\n";
    } else {
        for (long k = 0; k <= n; ++k) {
            std::cout << "U_" << k << " = (";
            for (std::size_t c = 0; c < orbit[k].size(); ++c)
                std::cout << (c ? ", " : "") << to_string(orbit[k][c]);
            std::cout << ")\n";
        }
    }
    return 0;
}

int cmd_inspect(const std::string& problem_path, bool as_json) {
    const auto pf = parse_problem(read_file(problem_path));
    const auto lp = instantiate(pf);

    json j;
    std::ostringstream text;
    if (lp.shift > 0) {
        j["shift"] = lp.shift;
        text << "normalization shift: " << lp.shift << " (terms u_0..u_" << lp.shift - 1
             << " checked directly)\n";
    }
    try {
        const auto lim = limit_matrix(lp.rec);
        json lim_rows = json::array();
        text << "limit matrix:\n";
        for (std::size_t i = 0; i < lim.rows(); ++i) {
            json row = json::array();
            text << "  [";
            for (std::size_t k = 0; k < lim.cols(); ++k) {
                row.push_back(to_string(lim(i, k)));
                text << (k ? ", " : "") << to_string(lim(i, k));
            }
            text << "]\n";
            lim_rows.push_back(std::move(row));
        }
        j["limit_matrix"] = std::move(lim_rows);
        const auto cp = char_poly(lim);
        j["char_poly"] = poly_to_string(cp, "x");
        text << "characteristic polynomial: " << poly_to_string(cp, "x") << "\n";

        const auto rep = check_hypotheses(lim, lp.rec.is_companion());
        bool invertible = true;
        std::string invert_note;
        try {
            check_invertible_on_naturals(lp.rec);
        } catch (const HypothesisViolation& e) {
            invertible = false;
            invert_note = e.what();
        }
        j["hypotheses"] = {{"nonzero_eigenvalue", rep.has_nonzero_eigenvalue},
                           {"unique_dominant", rep.unique_dominant},
                           {"simple_dominant", rep.simple_dominant},
                           {"lambda_sign", rep.lambda_sign},
                           {"eigenvector_positive", rep.eigenvector_positive},
                           {"invertible_on_naturals", invertible},
                           {"satisfied", rep.ok() && invertible}};
        if (rep.spectrum) {
            j["lambda"] = lambda_json(rep.spectrum->lambda);
            j["modulus_gap_witness"] = to_string(rep.spectrum->modulus_gap_witness);
            text << "dominant eigenvalue: " << lambda_text(rep.spectrum->lambda)
                 << "  (approx " << rep.spectrum->lambda->approx() << ")\n";
            text << "modulus gap witness: " << to_string(rep.spectrum->modulus_gap_witness)
                 << "\n";
        }
        if (!rep.dominant_eigenvector.empty()) {
            json ev = json::array();
            text << "dominant eigenvector: (";
            for (std::size_t i = 0; i < rep.dominant_eigenvector.size(); ++i) {
                const auto& x = rep.dominant_eigenvector[i];
                const std::string s =
                    x.is_rational() ? (x.is_zero() ? "0" : to_string(x.rational_value()))
                                    : "approx " + std::to_string(x.approx());
                ev.push_back(s);
                text << (i ? ", " : "") << s;
            }
            text << ")\n";
            j["eigenvector"] = std::move(ev);
        }
        text << "hypotheses of the positivity theorem: "
             << ((rep.ok() && invertible) ? "satisfied" : "NOT satisfied") << "\n";
        json notes = json::array();
        for (const auto& nmsg : rep.notes) {
            notes.push_back(nmsg);
            text << "  - " << nmsg << "\n";
        }
        if (!invertible) {
            notes.push_back(invert_note);
            text << "  - " << invert_note << "\n";
        }
        j["notes"] = std::move(notes);
    } catch (const NotPoincareType& e) {
        j["notes"] = json::array({e.what()});
        j["hypotheses"] = {{"satisfied", false}};
        text << "not of Poincare type: " << e.what() << "\n";
    }
    std::cout << (as_json ? j.dump(2) + "\n" : text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact positivity prover and certificate verifier for P-finite sequences"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string problem_path, cert_path, output_path, transform_path;
    long budget = 100000, eval_n = 10;
    bool strict = false, as_json = false;

    auto* prove = app.add_subcommand("prove", "synthesize a positivity certificate");
    prove->add_option("problem", problem_path, "problem file (JSON)")->required();
    prove->add_option("--budget", budget, "maximum number of terms to unroll");
    prove->add_flag("--strict", strict, "require strict positivity (> 0)");
    prove->add_flag("--json", as_json, "structured output");
    prove->add_option("--output", output_path, "write the certificate here");
    prove->add_option("--transform", transform_path, "fix T from this file instead of searching");

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate independently");
    verify_cmd->add_option("problem", problem_path, "problem file (JSON)")->required();
    verify_cmd->add_option("certificate", cert_path, "certificate file (JSON)")->required();
    verify_cmd->add_flag("--strict", strict, "require strict positivity (> 0)");
    verify_cmd->add_flag("--json", as_json, "structured output");

    auto* eval_cmd = app.add_subcommand("eval", "print exact terms of the sequence");
    eval_cmd->add_option("problem", problem_path, "problem file (JSON)")->required();
    eval_cmd->add_option("n", eval_n, "last index to print")->required();
    eval_cmd->add_flag("--json", as_json, "structured output");

    auto* inspect = app.add_subcommand("inspect", "limit matrix, spectrum, hypothesis report");
    inspect->add_option("problem", problem_path, "problem file (JSON)")->required();
    inspect->add_flag("--json", as_json, "structured output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (prove->parsed())
            return cmd_prove(problem_path, budget, strict, as_json, output_path, transform_path);
        if (verify_cmd->parsed()) return cmd_verify(problem_path, cert_path, strict, as_json);
        if (eval_cmd->parsed()) return cmd_eval(problem_path, eval_n, as_json);
        if (inspect->parsed()) return cmd_inspect(problem_path, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InsufficientPrefix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DenominatorZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotPoincareType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
