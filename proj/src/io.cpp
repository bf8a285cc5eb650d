#include "pfp/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pfp/errors.hpp"

namespace pfp {

using nlohmann::json;

namespace {

std::vector<Rat> parse_rat_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of rational strings");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_string()) throw ParseError(what + " entries must be strings like \"a/b\"");
        out.push_back(parse_rational(x.get<std::string>()));
    }
    return out;
}

json emit_rat_list(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

Poly<Rat> parse_poly(const json& j, const std::string& what) {
    return Poly<Rat>(parse_rat_list(j, what));
}

json emit_poly(const Poly<Rat>& p) { return emit_rat_list(p.coeffs()); }

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("kind")) throw ParseError("problem file needs a \"kind\"");
    ProblemFile p;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "scalar") {
        p.kind = ProblemFile::Kind::Scalar;
        if (!j.contains("coefficients") || !j.at("coefficients").is_array())
            throw ParseError("scalar problem needs \"coefficients\" (p_0..p_d, ascending each)");
        for (const auto& c : j.at("coefficients"))
            p.coefficients.push_back(parse_poly(c, "coefficient"));
        if (p.coefficients.size() < 2)
            throw ParseError("scalar problem needs at least p_0 and p_1");
        const long order = static_cast<long>(p.coefficients.size()) - 1;
        if (j.contains("order") && j.at("order").get<long>() != order)
            throw ParseError("\"order\" disagrees with the number of coefficients");
        p.initial = parse_rat_list(j.at("initial"), "initial");
        if (static_cast<long>(p.initial.size()) != order)
            throw ParseError("scalar problem of order " + std::to_string(order) + " needs " +
                             std::to_string(order) + " initial values");
        if (j.contains("prefix")) p.prefix = parse_rat_list(j.at("prefix"), "prefix");
        return p;
    }
    if (kind == "matrix") {
        p.kind = ProblemFile::Kind::MatrixForm;
        p.dimension = j.at("dimension").get<std::size_t>();
        if (p.dimension == 0) throw ParseError("matrix problem needs dimension >= 1");
        const auto& rows = j.at("entries");
        if (!rows.is_array() || rows.size() != p.dimension)
            throw ParseError("\"entries\" must be a dimension x dimension array");
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != p.dimension)
                throw ParseError("\"entries\" must be a dimension x dimension array");
            std::vector<RationalFunction> r;
            for (const auto& cell : row) {
                if (!cell.is_object() || !cell.contains("num") || !cell.contains("den"))
                    throw ParseError("matrix entries are {\"num\": [...], \"den\": [...]}");
                r.emplace_back(parse_poly(cell.at("num"), "num"), parse_poly(cell.at("den"), "den"));
            }
            p.entries.push_back(std::move(r));
        }
        p.initial = parse_rat_list(j.at("initial"), "initial");
        if (p.initial.size() != p.dimension)
            throw ParseError("matrix problem needs exactly dimension initial values");
        return p;
    }
    throw ParseError("unknown problem kind '" + kind + "' (expected \"scalar\" or \"matrix\")");
}

std::string emit_problem(const ProblemFile& p) {
    json j;
    if (p.kind == ProblemFile::Kind::Scalar) {
        j["kind"] = "scalar";
        j["order"] = p.coefficients.size() - 1;
        json cs = json::array();
        for (const auto& c : p.coefficients) cs.push_back(emit_poly(c));
        j["coefficients"] = std::move(cs);
        j["initial"] = emit_rat_list(p.initial);
        if (!p.prefix.empty()) j["prefix"] = emit_rat_list(p.prefix);
    } else {
        j["kind"] = "matrix";
        j["dimension"] = p.dimension;
        json rows = json::array();
        for (const auto& row : p.entries) {
            json r = json::array();
            for (const auto& cell : row)
                r.push_back(json{{"num", emit_poly(cell.num())}, {"den", emit_poly(cell.den())}});
            rows.push_back(std::move(r));
        }
        j["entries"] = std::move(rows);
        j["initial"] = emit_rat_list(p.initial);
    }
    return j.dump(2) + "\n";
}

CertificateFile parse_certificate(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("T")) throw ParseError("certificate file needs \"T\"");
    CertificateFile c;
    const auto& t = j.at("T");
    const std::size_t d = t.size();
    if (!t.is_array() || d == 0) throw ParseError("\"T\" must be a nonempty square matrix");
    c.cert.T = Matrix<Rat>(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto row = parse_rat_list(t.at(i), "T row");
        if (row.size() != d) throw ParseError("\"T\" must be square");
        for (std::size_t k = 0; k < d; ++k) c.cert.T(i, k) = row[k];
    }
    const auto& r = j.at("r");
    if (!r.is_string()) throw ParseError("\"r\" must be \"inf\" or a rational string");
    const std::string rs = r.get<std::string>();
    c.cert.r = (rs == "inf") ? std::nullopt : std::optional<Rat>(parse_rational(rs));
    c.cert.N = j.at("N").get<long>();
    c.cert.m = j.at("m").get<long>();
    if (j.contains("metadata")) c.metadata_json = j.at("metadata").dump();
    return c;
}

std::string emit_certificate(const CertificateFile& c) {
    json j;
    json t = json::array();
    for (std::size_t i = 0; i < c.cert.T.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < c.cert.T.cols(); ++k) row.push_back(to_string(c.cert.T(i, k)));
        t.push_back(std::move(row));
    }
    j["T"] = std::move(t);
    j["r"] = c.cert.r ? to_string(*c.cert.r) : "inf";
    j["N"] = c.cert.N;
    j["m"] = c.cert.m;
    if (!c.metadata_json.empty()) {
        json meta = json::parse(c.metadata_json, nullptr, false);
        if (!meta.is_discarded()) j["metadata"] = std::move(meta);
    }
    return j.dump(2) + "\n";
}

LoadedProblem instantiate(const ProblemFile& p) {
    if (p.kind == ProblemFile::Kind::Scalar) {
        Recurrence rec;
        rec.coeffs = p.coefficients;
        rec.initial = p.initial;
        auto [prefix, shifted] = normalize(rec, p.prefix);
        LoadedProblem out{companion(shifted), shifted.initial, std::move(prefix),
                          static_cast<long>(0), true};
        out.shift = static_cast<long>(out.prefix_terms.size());
        return out;
    }
    Matrix<RationalFunction> entries(p.dimension, p.dimension);
    for (std::size_t i = 0; i < p.dimension; ++i)
        for (std::size_t j = 0; j < p.dimension; ++j) entries(i, j) = p.entries[i][j];
    return {MatrixRecurrence(std::move(entries)), p.initial, {}, 0, false};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

}  // namespace pfp
