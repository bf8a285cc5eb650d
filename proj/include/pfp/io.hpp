#pragma once

// Problem and certificate file formats (JSON with rationals as strings,
// never floating point), and the glue that turns a parsed problem into a
// runnable matrix recurrence.

#include <optional>
#include <string>
#include <vector>

#include "pfp/prover.hpp"
#include "pfp/ratfun.hpp"
#include "pfp/recurrence.hpp"

namespace pfp {

struct ProblemFile {
    enum class Kind { Scalar, MatrixForm };
    Kind kind = Kind::Scalar;
    // scalar form: p_0..p_d and u_0..u_{d-1}, plus optional extra values for
    // indices where p_d vanishes
    std::vector<Poly<Rat>> coefficients;
    std::vector<Rat> initial;
    std::vector<Rat> prefix;
    // matrix form
    std::size_t dimension = 0;
    std::vector<std::vector<RationalFunction>> entries;
};

struct LoadedProblem {
    MatrixRecurrence rec;
    std::vector<Rat> u0;
    // scalar terms u_0..u_{s-1} that precede the normalized recurrence and
    // must be sign-checked directly; empty for matrix problems
    std::vector<Rat> prefix_terms;
    long shift = 0;
    bool companion = false;
};

struct CertificateFile {
    Certificate cert;
    std::string metadata_json;  // free-form, round-tripped verbatim
};

ProblemFile parse_problem(const std::string& json_text);
std::string emit_problem(const ProblemFile& p);

CertificateFile parse_certificate(const std::string& json_text);
std::string emit_certificate(const CertificateFile& c);

// Normalizes scalar problems (shifting away integer roots of p_d and p_0)
// and builds the companion matrix; matrix problems pass through.
LoadedProblem instantiate(const ProblemFile& p);

std::string read_file(const std::string& path);   // ParseError on I/O failure
void write_file(const std::string& path, const std::string& text);

}  // namespace pfp
