// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "simsim/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace simsim {

namespace {

using nlohmann::json;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

/// Parses "a" or "a/b" with optional leading sign; advances pos.
Rational parse_rational_part(std::string_view s, std::size_t& pos) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    std::size_t num_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == num_begin) throw ParseError("expected digits in scalar literal");
    mpz_class num(std::string(s.substr(num_begin, pos - num_begin)), 10);
    if (negative) num = -num;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t den_begin = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        std::string_view den_text = s.substr(den_begin, pos - den_begin);
        if (!all_digits(den_text)) throw ParseError("expected positive denominator");
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw ParseError("zero denominator");
        return Rational(num, den);
    }
    return Rational(num, mpz_class(1));
}

GaussianRational scalar_from_json(const json& v) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return GaussianRational(Rational(v.get<long>()));
    throw ParseError("scalar entries must be strings (or plain integers)");
}

Vector vector_from_json(const json& v, std::size_t n) {
    if (!v.is_array() || v.size() != n) throw ParseError("vector of wrong length");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = scalar_from_json(v[i]);
    return out;
}

Matrix matrix_from_json(const json& rows, std::size_t n) {
    if (!rows.is_array() || rows.size() != n) throw ParseError("matrix with wrong row count");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n) throw ParseError("matrix row of wrong length");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar_from_json(row[j]);
    }
    return m;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

GaussianRational parse_scalar(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar literal");
    std::size_t pos = 0;

    // Bare imaginary unit, optionally signed.
    if (text == "i") return GaussianRational::i();
    if (text == "-i") return -GaussianRational::i();
    if (text == "+i") return GaussianRational::i();

    Rational first = parse_rational_part(text, pos);
    if (pos == text.size()) return GaussianRational(first);
    if (text[pos] == 'i') {
        if (pos + 1 != text.size()) throw ParseError("trailing characters after scalar literal");
        return GaussianRational(Rational(0), first);
    }
    if (text[pos] != '+' && text[pos] != '-')
        throw ParseError("unexpected character in scalar literal");
    std::string_view rest = text.substr(pos);
    if (rest == "+i") return GaussianRational(first, Rational(1));
    if (rest == "-i") return GaussianRational(first, Rational(-1));
    Rational second = parse_rational_part(text, pos);
    if (pos >= text.size() || text[pos] != 'i') throw ParseError("expected 'i' after imaginary part");
    if (pos + 1 != text.size()) throw ParseError("trailing characters after scalar literal");
    return GaussianRational(first, second);
}

std::string format_rational(const Rational& r) {
    return r.to_string();
}

std::string format_scalar(const GaussianRational& z) {
    if (z.im.is_zero()) return format_rational(z.re);
    if (z.re.is_zero()) return format_rational(z.im) + "i";
    std::string out = format_rational(z.re);
    out += z.im.sign() < 0 ? "-" : "+";
    out += format_rational(z.im.abs()) + "i";
    return out;
}

std::string format_monomial(const Monomial& m) {
    if (m.is_constant()) return "1";
    std::string out;
    for (std::size_t v = 0; v < m.vars(); ++v) {
        unsigned e = m.exponents[v];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "z";
        if (m.vars() > 1) out += std::to_string(v + 1);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

std::string format_term(const Monomial& mono, const GaussianRational& c) {
    if (mono.is_constant()) return format_scalar(c);
    std::string mono_text = format_monomial(mono);
    if (c.is_one()) return mono_text;
    if ((-c).is_one()) return "-" + mono_text;
    std::string coeff = format_scalar(c);
    bool needs_parens = !c.im.is_zero();
    if (needs_parens) coeff = "(" + coeff + ")";
    return coeff + "*" + mono_text;
}

} // namespace

std::string format_poly_vector(const PolyVector& p) {
    std::string out = "(";
    for (std::size_t j = 0; j < p.k(); ++j) {
        if (j) out += ", ";
        const TermMap& terms = p.component(j);
        if (terms.empty()) {
            out += "0";
            continue;
        }
        bool first = true;
        for (const auto& [mono, c] : terms) {
            std::string t = format_term(mono, c);
            if (first) {
                out += t;
                first = false;
            } else if (!t.empty() && t[0] == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
    }
    out += ")";
    return out;
}

TupleFile parse_tuple_file_text(const std::string& json_text) {
    json j = parse_json_text(json_text);
    if (!j.is_object()) throw ParseError("tuple file must be a JSON object");
    if (!j.contains("n") || !j.contains("m") || !j.contains("matrices"))
        throw ParseError("tuple file needs fields n, m, matrices");
    if (!j["n"].is_number_integer() || !j["m"].is_number_integer())
        throw ParseError("n and m must be integers");
    TupleFile f;
    long n = j["n"].get<long>();
    long m = j["m"].get<long>();
    if (n < 1 || m < 1) throw ParseError("n and m must be at least 1");
    f.n = static_cast<std::size_t>(n);
    f.m = static_cast<std::size_t>(m);
    const json& mats = j["matrices"];
    if (!mats.is_array() || mats.size() != f.m) throw ParseError("matrices array must have m entries");
    for (const json& mat : mats) f.matrices.push_back(matrix_from_json(mat, f.n));
    if (j.contains("vectors")) {
        const json& vecs = j["vectors"];
        if (!vecs.is_array() || vecs.empty()) throw ParseError("vectors must be a nonempty array");
        if (j.contains("k") && (!j["k"].is_number_integer() ||
                                j["k"].get<long>() != static_cast<long>(vecs.size())))
            throw ParseError("declared k does not match vectors array");
        std::vector<Vector> vs;
        for (const json& v : vecs) vs.push_back(vector_from_json(v, f.n));
        f.vectors = std::move(vs);
    }
    return f;
}

TupleFile read_tuple_file(const std::string& path) {
    return parse_tuple_file_text(slurp(path));
}

std::vector<Vector> parse_vectors_file_text(const std::string& json_text) {
    json j = parse_json_text(json_text);
    const json* vecs = nullptr;
    if (j.is_array()) {
        vecs = &j;
    } else if (j.is_object() && j.contains("vectors")) {
        vecs = &j["vectors"];
    } else {
        throw ParseError("vectors file must be an array or an object with a vectors field");
    }
    if (!vecs->is_array() || vecs->empty()) throw ParseError("vectors must be a nonempty array");
    std::size_t n = (*vecs)[0].is_array() ? (*vecs)[0].size() : 0;
    if (n == 0) throw ParseError("vectors must be nonempty arrays");
    std::vector<Vector> out;
    for (const json& v : *vecs) out.push_back(vector_from_json(v, n));
    if (j.is_object() && j.contains("k") &&
        (!j["k"].is_number_integer() || j["k"].get<long>() != static_cast<long>(out.size())))
        throw ParseError("declared k does not match vectors array");
    return out;
}

std::vector<Vector> read_vectors_file(const std::string& path) {
    return parse_vectors_file_text(slurp(path));
}

Matrix parse_matrix_file_text(const std::string& json_text) {
    json j = parse_json_text(json_text);
    const json* rows = nullptr;
    if (j.is_array()) {
        rows = &j;
    } else if (j.is_object() && j.contains("matrix")) {
        rows = &j["matrix"];
    } else {
        throw ParseError("matrix file must be an array or an object with a matrix field");
    }
    if (!rows->is_array() || rows->empty()) throw ParseError("matrix must be a nonempty array");
    return matrix_from_json(*rows, rows->size());
}

Matrix read_matrix_file(const std::string& path) {
    return parse_matrix_file_text(slurp(path));
}

std::vector<std::vector<std::string>> matrix_to_strings(const Matrix& m) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = format_scalar(m(i, j));
    return out;
}

std::vector<std::string> vector_to_strings(const Vector& v) {
    std::vector<std::string> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = format_scalar(v[i]);
    return out;
}

} // namespace simsim
