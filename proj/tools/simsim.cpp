// Copyright (c) 2026 The simsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// simsim — exact decision of simultaneous similarity for commuting tuples
// of matrices over the Gaussian rationals, with verifiable certificates.
//
// Exit codes: 0 affirmative, 1 negative, 2 usage or input error,
// 3 inconclusive (sampled negative from `decide`).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "simsim/annihilator.hpp"
#include "simsim/io.hpp"
#include "simsim/krylov.hpp"
#include "simsim/norms.hpp"
#include "simsim/similarity.hpp"

namespace {

using nlohmann::ordered_json;
using namespace simsim;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_vector(const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_scalar(v[i]);
    }
    return out + "]";
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : matrix_to_strings(m)) rows.push_back(row);
    return rows;
}

ordered_json vectors_json(const std::vector<Vector>& vs) {
    ordered_json out = ordered_json::array();
    for (const Vector& v : vs) out.push_back(vector_to_strings(v));
    return out;
}

ordered_json poly_vector_json(const PolyVector& p) {
    ordered_json comps = ordered_json::array();
    for (std::size_t j = 0; j < p.k(); ++j) {
        ordered_json terms = ordered_json::array();
        for (const auto& [mono, c] : p.component(j))
            terms.push_back({{"exponents", mono.exponents}, {"coeff", format_scalar(c)}});
        comps.push_back(std::move(terms));
    }
    return ordered_json{{"text", format_poly_vector(p)}, {"components", std::move(comps)}};
}

/// Collects the per-command payload; flushed once as text or as one JSON
/// document so output stays byte-identical for identical inputs.
struct Report {
    bool json_mode = false;
    std::string command;
    std::string result;
    ordered_json payload = ordered_json::object();
    std::string text;

    void line(const std::string& s) { text += s + "\n"; }

    int finish(int exit_code) {
        if (json_mode) {
            ordered_json doc;
            doc["command"] = command;
            doc["result"] = result;
            doc["exit_code"] = exit_code;
            for (auto& [key, value] : payload.items()) doc[key] = value;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << text;
        }
        return exit_code;
    }
};

CommutingTuple tuple_from_file(const TupleFile& f) {
    return CommutingTuple(f.matrices);
}

VectorTuple vectors_or(const TupleFile& f, const std::string& flag_path,
                       std::optional<VectorTuple> fallback) {
    if (!flag_path.empty()) return VectorTuple(read_vectors_file(flag_path));
    if (f.vectors) return VectorTuple(*f.vectors);
    if (fallback) return *fallback;
    throw ParseError("no vectors given (pass a vectors file or embed \"vectors\" in the tuple file)");
}

// ---------------------------------------------------------------- commute

int run_commute(const std::string& file, Report& rep) {
    TupleFile f = read_tuple_file(file);
    rep.payload["n"] = f.n;
    rep.payload["m"] = f.m;
    for (std::size_t i = 0; i + 1 < f.matrices.size(); ++i)
        for (std::size_t j = i + 1; j < f.matrices.size(); ++j)
            if (f.matrices[i] * f.matrices[j] != f.matrices[j] * f.matrices[i]) {
                rep.result = "not-commuting";
                rep.payload["failing_pair"] = {i, j};
                rep.line("commuting: no");
                rep.line("failing pair: (" + std::to_string(i) + ", " + std::to_string(j) + ")");
                return rep.finish(kExitNo);
            }
    rep.result = "commuting";
    rep.line("commuting: yes");
    rep.line("n: " + std::to_string(f.n) + ", m: " + std::to_string(f.m));
    return rep.finish(kExitYes);
}

// ----------------------------------------------------------------- cyclic

int run_cyclic(const std::string& file, const std::string& vectors_path, bool greedy, bool random,
               std::size_t trials, std::uint64_t seed, Report& rep) {
    TupleFile f = read_tuple_file(file);
    CommutingTuple t = tuple_from_file(f);

    bool have_vectors = !vectors_path.empty() || f.vectors.has_value();
    if (have_vectors && !greedy && !random) {
        VectorTuple u = vectors_or(f, vectors_path, std::nullopt);
        bool cyclic = is_cyclic(t, u);
        rep.result = cyclic ? "cyclic" : "not-cyclic";
        rep.payload["k"] = u.k();
        rep.payload["dim"] = generated_subspace(t, u).dim();
        rep.line(std::string("cyclic: ") + (cyclic ? "yes" : "no"));
        rep.line("k: " + std::to_string(u.k()));
        return rep.finish(cyclic ? kExitYes : kExitNo);
    }

    CyclicSearch strategy = random ? CyclicSearch::Random : CyclicSearch::Greedy;
    VectorTuple u = find_cyclic_tuple(t, strategy, seed, trials);
    rep.result = "found";
    rep.payload["strategy"] = random ? "random" : "greedy";
    rep.payload["k"] = u.k();
    rep.payload["vectors"] = vectors_json(u.vectors());
    rep.line(std::string("cyclic tuple found (") + (random ? "random" : "greedy") + ")");
    rep.line("k: " + std::to_string(u.k()));
    for (std::size_t j = 0; j < u.k(); ++j)
        rep.line("u[" + std::to_string(j) + "]: " + fmt_vector(u[j]));
    return rep.finish(kExitYes);
}

// ------------------------------------------------------------ annihilator

int run_annihilator(const std::string& file, const std::string& vectors_path, unsigned max_degree,
                    Report& rep) {
    TupleFile f = read_tuple_file(file);
    CommutingTuple t = tuple_from_file(f);
    VectorTuple u = vectors_or(f, vectors_path, std::nullopt);
    std::vector<PolyVector> basis = annihilator_basis(t, u, max_degree);
    rep.result = "ok";
    rep.payload["max_degree"] = max_degree;
    rep.payload["dimension"] = basis.size();
    ordered_json list = ordered_json::array();
    for (const PolyVector& p : basis) list.push_back(poly_vector_json(p));
    rep.payload["basis"] = std::move(list);
    rep.line("annihilator basis up to degree " + std::to_string(max_degree) + ":");
    rep.line("dimension: " + std::to_string(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        rep.line("[" + std::to_string(i) + "] " + format_poly_vector(basis[i]));
    return rep.finish(kExitYes);
}

// ------------------------------------------------------------ condition-c

int run_condition_c(const std::string& file_a, const std::string& file_b,
                    const std::string& va_path, const std::string& vb_path, Report& rep) {
    TupleFile fa = read_tuple_file(file_a);
    TupleFile fb = read_tuple_file(file_b);
    CommutingTuple ta = tuple_from_file(fa);
    CommutingTuple tb = tuple_from_file(fb);
    VectorTuple u = vectors_or(fa, va_path, VectorTuple::standard_basis(ta.dim()));
    VectorTuple v = vectors_or(fb, vb_path, VectorTuple::standard_basis(tb.dim()));

    ConditionCReport r = condition_c_check(ta, u, tb, v);
    rep.result = r.holds ? "holds" : "fails";
    rep.payload["holds"] = r.holds;
    rep.payload["dims"] = {{"a", r.dim_a}, {"b", r.dim_b}, {"stacked", r.dim_stacked}};
    rep.line(std::string("condition (c): ") + (r.holds ? "holds" : "fails"));
    rep.line("dims: dA = " + std::to_string(r.dim_a) + ", dB = " + std::to_string(r.dim_b) +
             ", dC = " + std::to_string(r.dim_stacked));
    if (r.witness) {
        bool kills_a = is_annihilating(ta, u, *r.witness);
        rep.payload["witness"] = poly_vector_json(*r.witness);
        rep.payload["witness_annihilates"] = kills_a ? "a" : "b";
        rep.line("witness: " + format_poly_vector(*r.witness));
        rep.line(std::string("witness annihilates: side ") + (kills_a ? "A" : "B") + " only");
    }
    return rep.finish(r.holds ? kExitYes : kExitNo);
}

// ------------------------------------------------------------- synthesize

int run_synthesize(const std::string& file_a, const std::string& file_b,
                   const std::string& va_path, const std::string& vb_path, Report& rep) {
    TupleFile fa = read_tuple_file(file_a);
    TupleFile fb = read_tuple_file(file_b);
    CommutingTuple ta = tuple_from_file(fa);
    CommutingTuple tb = tuple_from_file(fb);
    VectorTuple u = vectors_or(fa, va_path, std::nullopt);
    VectorTuple v = vectors_or(fb, vb_path, std::nullopt);
    try {
        SimilarityCertificate cert = synthesize_from_pair(ta, u, tb, v);
        rep.result = "verified";
        rep.payload["S"] = matrix_json(cert.S);
        rep.payload["S_inverse"] = matrix_json(cert.S_inverse);
        rep.payload["verified"] = cert.checked;
        rep.line("synthesized intertwiner S:");
        for (std::size_t i = 0; i < cert.S.rows(); ++i) rep.line(fmt_vector(cert.S.row(i)));
        rep.line("verified: true");
        return rep.finish(kExitYes);
    } catch (const PreconditionFailedError& e) {
        rep.result = "precondition-failed";
        rep.payload["reason"] = e.what();
        rep.line(std::string("precondition failed: ") + e.what());
        if (e.witness) {
            rep.payload["witness"] = poly_vector_json(*e.witness);
            rep.line("witness: " + format_poly_vector(*e.witness));
        }
        return rep.finish(kExitNo);
    }
}

// ----------------------------------------------------------------- verify

int run_verify(const std::string& file_a, const std::string& file_b, const std::string& s_path,
               Report& rep) {
    CommutingTuple ta = tuple_from_file(read_tuple_file(file_a));
    CommutingTuple tb = tuple_from_file(read_tuple_file(file_b));
    Matrix s = read_matrix_file(s_path);
    bool ok = verify_similarity(ta, tb, s);
    rep.result = ok ? "true" : "false";
    rep.payload["verified"] = ok;
    rep.line(std::string("verify: ") + (ok ? "true" : "false"));
    return rep.finish(ok ? kExitYes : kExitNo);
}

// ----------------------------------------------------------------- decide

int run_decide(const std::string& file_a, const std::string& file_b, std::size_t trials,
               std::int64_t grid, std::uint64_t seed, Report& rep) {
    CommutingTuple ta = tuple_from_file(read_tuple_file(file_a));
    CommutingTuple tb = tuple_from_file(read_tuple_file(file_b));
    Verdict v = decide_similarity(ta, tb, trials, grid, seed);
    switch (v.kind) {
        case Verdict::Kind::Similar:
            rep.result = "SIMILAR";
            rep.payload["S"] = matrix_json(v.certificate->S);
            rep.payload["verified"] = v.certificate->checked;
            rep.line("verdict: SIMILAR");
            rep.line("S:");
            for (std::size_t i = 0; i < v.certificate->S.rows(); ++i)
                rep.line(fmt_vector(v.certificate->S.row(i)));
            return rep.finish(kExitYes);
        case Verdict::Kind::NotSimilarExact:
            rep.result = "NOT_SIMILAR_EXACT";
            rep.payload["reason"] = v.reason;
            rep.line("verdict: NOT_SIMILAR_EXACT");
            rep.line("reason: " + v.reason);
            return rep.finish(kExitNo);
        case Verdict::Kind::NotSimilarSampled:
            rep.result = "NOT_SIMILAR_SAMPLED";
            rep.payload["failure_probability_bound"] = v.failure_probability_bound;
            rep.line("verdict: NOT_SIMILAR_SAMPLED");
            rep.line("error bound: " + fmt_double(v.failure_probability_bound));
            return rep.finish(kExitInconclusive);
        case Verdict::Kind::Inconclusive:
            break;
    }
    rep.result = "INCONCLUSIVE";
    rep.line("verdict: INCONCLUSIVE");
    return rep.finish(kExitInconclusive);
}

// --------------------------------------------------------------- constant

int run_constant(const std::string& file_a, const std::string& file_b, const std::string& va_path,
                 const std::string& vb_path, std::size_t samples, unsigned max_degree,
                 std::uint64_t seed, Report& rep) {
    TupleFile fa = read_tuple_file(file_a);
    TupleFile fb = read_tuple_file(file_b);
    CommutingTuple ta = tuple_from_file(fa);
    CommutingTuple tb = tuple_from_file(fb);
    VectorTuple u = vectors_or(fa, va_path, std::nullopt);
    VectorTuple v = vectors_or(fb, vb_path, std::nullopt);
    try {
        NormReport norm = optimal_constant(ta, u, tb, v);
        InequalitySampleResult ineq =
            inequality_sample_test(ta, u, tb, v, norm.c, samples, max_degree, seed);
        norm.sampled_ratio_range = {ineq.ratio_min, ineq.ratio_max};
        rep.result = ineq.passed ? "passed" : "failed";
        rep.payload["c"] = norm.c;
        rep.payload["norm_S"] = norm.norm_S;
        rep.payload["norm_S_inverse"] = norm.norm_S_inverse;
        rep.payload["sampled_ratio_range"] = {ineq.ratio_min, ineq.ratio_max};
        rep.payload["samples"] = ineq.evaluated;
        rep.payload["max_degree"] = max_degree;
        rep.payload["worst_ratio"] = ineq.worst_ratio;
        rep.payload["passed"] = ineq.passed;
        rep.line("c: " + fmt_double(norm.c));
        rep.line("norm S: " + fmt_double(norm.norm_S));
        rep.line("norm S inverse: " + fmt_double(norm.norm_S_inverse));
        rep.line("sampled ratio range: [" + fmt_double(ineq.ratio_min) + ", " +
                 fmt_double(ineq.ratio_max) + "]");
        rep.line("samples: " + std::to_string(ineq.evaluated) +
                 ", max degree: " + std::to_string(max_degree));
        rep.line(std::string("inequality passed: ") + (ineq.passed ? "true" : "false"));
        return rep.finish(ineq.passed ? kExitYes : kExitNo);
    } catch (const PreconditionFailedError& e) {
        rep.result = "precondition-failed";
        rep.payload["reason"] = e.what();
        rep.line(std::string("precondition failed: ") + e.what());
        if (e.witness) {
            rep.payload["witness"] = poly_vector_json(*e.witness);
            rep.line("witness: " + format_poly_vector(*e.witness));
        }
        return rep.finish(kExitNo);
    }
}

// ------------------------------------------------------------- hardy-demo

int run_hardy(std::size_t n_max, Report& rep) {
    std::vector<HardyRow> rows = hardy_truncation_demo(n_max);
    bool all_ok = true;
    ordered_json table = ordered_json::array();
    rep.line("truncated Hardy shift: J_n vs 2 J_n from the constant function");
    rep.line(" n   condition-c   c_n            lower bound");
    for (const HardyRow& row : rows) {
        all_ok = all_ok && row.condition_c_holds && row.c_n >= row.lower_bound * (1.0 - 1e-9);
        table.push_back({{"n", row.n},
                         {"condition_c_holds", row.condition_c_holds},
                         {"c_n", row.c_n},
                         {"lower_bound", row.lower_bound}});
        char buf[96];
        std::snprintf(buf, sizeof buf, "%2zu   %-11s   %-12s   %s", row.n,
                      row.condition_c_holds ? "holds" : "fails", fmt_double(row.c_n).c_str(),
                      fmt_double(row.lower_bound).c_str());
        rep.line(buf);
    }
    rep.result = all_ok ? "ok" : "violated";
    rep.payload["rows"] = std::move(table);
    return rep.finish(all_ok ? kExitYes : kExitNo);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simultaneous-similarity decisions for commuting matrix tuples"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit one JSON document instead of text");

    std::string file_a, file_b, s_file;
    std::string vectors_path, va_path, vb_path;
    bool greedy = false, random = false;
    std::size_t trials = 20, samples = 1000, cyclic_trials = 16;
    std::int64_t grid = 1000000;
    std::uint64_t seed = 0;
    unsigned max_degree = 6;
    std::size_t n_max = 12;

    CLI::App* commute = app.add_subcommand("commute", "check pairwise commutativity");
    commute->add_option("FILE", file_a, "tuple file")->required();
    commute->add_flag("--json", json_mode, "emit JSON");

    CLI::App* cyclic = app.add_subcommand("cyclic", "test cyclicity or search for a cyclic tuple");
    cyclic->add_option("FILE", file_a, "tuple file")->required();
    auto* vec_opt = cyclic->add_option("--vectors", vectors_path, "vectors file to test");
    cyclic->add_flag("--greedy", greedy, "greedy standard-basis search")->excludes(vec_opt);
    cyclic->add_flag("--random", random, "random integer-grid search")->excludes(vec_opt);
    cyclic->add_option("--trials", cyclic_trials, "random samples per k (default 16)");
    cyclic->add_option("--seed", seed, "random seed (default 0)");
    cyclic->add_flag("--json", json_mode, "emit JSON");

    CLI::App* annihilator = app.add_subcommand("annihilator", "basis of low-degree annihilators");
    annihilator->add_option("FILE", file_a, "tuple file")->required();
    annihilator->add_option("--vectors", vectors_path, "vectors file");
    annihilator->add_option("--max-degree", max_degree, "degree cap")->required();
    annihilator->add_flag("--json", json_mode, "emit JSON");

    CLI::App* condc = app.add_subcommand("condition-c", "compare the two annihilators");
    condc->add_option("FILEA", file_a, "first tuple file")->required();
    condc->add_option("FILEB", file_b, "second tuple file")->required();
    condc->add_option("--vectors-a", va_path, "vectors for side A (default: standard basis)");
    condc->add_option("--vectors-b", vb_path, "vectors for side B (default: standard basis)");
    condc->add_flag("--json", json_mode, "emit JSON");

    CLI::App* synth = app.add_subcommand("synthesize", "construct the intertwiner from matched cyclic tuples");
    synth->add_option("FILEA", file_a, "first tuple file")->required();
    synth->add_option("FILEB", file_b, "second tuple file")->required();
    synth->add_option("--vectors-a", va_path, "vectors for side A");
    synth->add_option("--vectors-b", vb_path, "vectors for side B");
    synth->add_flag("--json", json_mode, "emit JSON");

    CLI::App* verify = app.add_subcommand("verify", "check a similarity certificate");
    verify->add_option("FILEA", file_a, "first tuple file")->required();
    verify->add_option("FILEB", file_b, "second tuple file")->required();
    verify->add_option("SFILE", s_file, "matrix file with the candidate S")->required();
    verify->add_flag("--json", json_mode, "emit JSON");

    CLI::App* decide = app.add_subcommand("decide", "decide simultaneous similarity");
    decide->alias("similar");
    decide->add_option("FILEA", file_a, "first tuple file")->required();
    decide->add_option("FILEB", file_b, "second tuple file")->required();
    decide->add_option("--trials", trials, "sampling trials (default 20)");
    decide->add_option("--grid", grid, "sampling grid size (default 1000000)");
    decide->add_option("--seed", seed, "random seed (default 0)");
    decide->add_flag("--json", json_mode, "emit JSON");

    CLI::App* constant = app.add_subcommand("constant", "norm constant and sampled inequality");
    constant->add_option("FILEA", file_a, "first tuple file")->required();
    constant->add_option("FILEB", file_b, "second tuple file")->required();
    constant->add_option("--vectors-a", va_path, "vectors for side A");
    constant->add_option("--vectors-b", vb_path, "vectors for side B");
    constant->add_option("--samples", samples, "sample count (default 1000)");
    constant->add_option("--max-degree", max_degree, "degree cap for samples (default 6)");
    constant->add_option("--seed", seed, "random seed (default 0)");
    constant->add_flag("--json", json_mode, "emit JSON");

    CLI::App* hardy = app.add_subcommand("hardy-demo", "truncated Hardy shift table");
    hardy->add_option("--n-max", n_max, "largest truncation (default 12)");
    hardy->add_flag("--json", json_mode, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Report rep;
    rep.json_mode = json_mode;
    try {
        if (commute->parsed()) {
            rep.command = "commute";
            return run_commute(file_a, rep);
        }
        if (cyclic->parsed()) {
            rep.command = "cyclic";
            return run_cyclic(file_a, vectors_path, greedy, random, cyclic_trials, seed, rep);
        }
        if (annihilator->parsed()) {
            rep.command = "annihilator";
            return run_annihilator(file_a, vectors_path, max_degree, rep);
        }
        if (condc->parsed()) {
            rep.command = "condition-c";
            return run_condition_c(file_a, file_b, va_path, vb_path, rep);
        }
        if (synth->parsed()) {
            rep.command = "synthesize";
            return run_synthesize(file_a, file_b, va_path, vb_path, rep);
        }
        if (verify->parsed()) {
            rep.command = "verify";
            return run_verify(file_a, file_b, s_file, rep);
        }
        if (decide->parsed()) {
            rep.command = "decide";
            return run_decide(file_a, file_b, trials, grid, seed, rep);
        }
        if (constant->parsed()) {
            rep.command = "constant";
            return run_constant(file_a, file_b, va_path, vb_path, samples, max_degree, seed, rep);
        }
        if (hardy->parsed()) {
            rep.command = "hardy-demo";
            return run_hardy(n_max, rep);
        }
    } catch (const ParseError& e) {
        std::cerr << "simsim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ShapeMismatchError& e) {
        std::cerr << "simsim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotCommutingError& e) {
        std::cerr << "simsim: input is not a commuting tuple: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "simsim: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
