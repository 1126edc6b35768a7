/*
   Copyright 2026 The harrison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algebra.hpp"
#include "center.hpp"
#include "decompose.hpp"
#include "errors.hpp"
#include "form.hpp"
#include "identity.hpp"
#include "io.hpp"

namespace harrison::cli {

enum ExitCode : int { ok = 0, input_error = 1, computation_error = 2 };

struct Options {
    std::string command;
    std::string input;
    std::string expr;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string params;
    unsigned n = 0, d = 0, r = 0;
    std::string a;
};

/// 64-bit FNV-1a of the canonical input, as "fnv1a64:<hex>".
inline std::string digest(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
}

/// Polynomial from --expr or a FormDocument given with --input.
inline Polynomial input_polynomial(const Options& o) {
    if (!o.expr.empty() && !o.input.empty()) throw InputError("give either --expr or --input, not both");
    if (!o.expr.empty()) return parse_polynomial(o.expr);
    if (!o.input.empty()) return polynomial_from_json(read_json_file(o.input));
    throw InputError("this command needs --expr or --input");
}

inline std::string matrix_text(const RationalMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).get_str();
        s += "]\n";
    }
    return s;
}

inline std::string poly_matrix_text(const PolyMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
        s += "]\n";
    }
    return s;
}

struct Outcome {
    std::string digest_source;
    json result;
    std::string text;
};

inline Outcome cmd_center(const Options& o) {
    Polynomial p = input_polynomial(o);
    Outcome out;
    out.digest_source = to_json(p).dump();
    std::ostringstream t;
    if (!o.params.empty()) {
        auto params = split_list(o.params);
        out.digest_source += "|params=" + o.params;
        ParametricForm f = ParametricForm::make(p, params);
        ParametricCenterBasis z = center_over_polycoeffs(f);
        json basis = json::array();
        for (const auto& b : z.basis) basis.push_back(to_json(b));
        std::vector<std::string> main;
        for (auto i : f.main_variables()) main.push_back(p.variables()[i]);
        out.result = {{"n", z.n}, {"dim", z.dim()}, {"parameters", z.parameters}, {"variables", main}, {"basis", basis}};
        t << "center over the fraction field of Q[" << o.params << "]\n";
        t << "dim = " << z.dim() << "\n";
        for (std::size_t k = 0; k < z.basis.size(); ++k) t << "basis " << k + 1 << ":\n" << poly_matrix_text(z.basis[k]);
    } else {
        Form f = Form::from_polynomial(p);
        CenterBasis z = center_basis(f);
        json basis = json::array();
        for (const auto& b : z.basis) basis.push_back(to_json(b));
        out.result = {{"n", z.n}, {"dim", z.dim()}, {"variables", p.variables()}, {"basis", basis}};
        t << "dim = " << z.dim() << "\n";
        for (std::size_t k = 0; k < z.basis.size(); ++k) t << "basis " << k + 1 << ":\n" << matrix_text(z.basis[k]);
    }
    out.text = t.str();
    return out;
}

inline Outcome cmd_decompose(const Options& o) {
    Polynomial p = input_polynomial(o);
    Form f = Form::from_polynomial(p);
    Decomposition d = decompose(f, o.seed);
    Outcome out;
    out.digest_source = to_json(p).dump();
    json blocks = json::array();
    std::ostringstream t;
    t << "block_count = " << d.block_count() << "\nP =\n" << matrix_text(d.P);
    for (const auto& b : d.blocks) {
        blocks.push_back({{"offset", b.first}, {"size", b.size}, {"form", to_json(b.form.poly())}});
        t << "block [" << b.first + 1 << ".." << b.first + b.size << "]: " << to_string(b.form.poly()) << "\n";
    }
    out.result = {{"block_count", d.block_count()}, {"P", to_json(d.P)}, {"blocks", blocks},
                  {"verified", verify_decomposition(f, d)}};
    out.text = t.str();
    return out;
}

inline Outcome cmd_diagonalize(const Options& o) {
    Polynomial p = input_polynomial(o);
    Form f = Form::from_polynomial(p);
    auto diag = diagonalize(f, o.seed);
    Outcome out;
    out.digest_source = to_json(p).dump();
    std::ostringstream t;
    if (diag) {
        json coeffs = json::array();
        for (const auto& c : diag->coefficients) coeffs.push_back(c.get_str());
        out.result = {{"diagonalizable", true}, {"P", to_json(diag->P)}, {"coefficients", coeffs}};
        t << "diagonalizable\nP =\n" << matrix_text(diag->P) << "coefficients:";
        for (const auto& c : diag->coefficients) t << " " << c.get_str();
        t << "\n";
    } else {
        out.result = {{"diagonalizable", false}, {"P", nullptr}, {"coefficients", nullptr}};
        t << "not diagonalizable\n";
    }
    out.text = t.str();
    return out;
}

inline Outcome cmd_idempotents(const Options& o) {
    Polynomial p = input_polynomial(o);
    Form f = Form::from_polynomial(p);
    CommAlgebra a = CommAlgebra::from_matrix_span(center_basis(f).basis);
    IdempotentSet s = split_idempotents(a, o.seed);
    Outcome out;
    out.digest_source = to_json(p).dump();
    json list = json::array();
    std::ostringstream t;
    t << "center_dim = " << a.dim() << "\ncount = " << s.size() << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        list.push_back(to_json(s.idempotents[i]));
        t << "e" << i + 1 << " (corner dim " << s.corner_dims[i] << "):\n" << matrix_text(s.idempotents[i]);
    }
    out.result = {{"center_dim", a.dim()}, {"count", s.size()}, {"idempotents", list},
                  {"corner_dims", s.corner_dims}, {"local", s.size() == 1}};
    out.text = t.str();
    return out;
}

inline Outcome cmd_check_identity(const Options& o) {
    ZSpec spec;
    if (!o.input.empty()) {
        spec = zspec_from_json(read_json_file(o.input));
    } else {
        if (o.d == 0 || o.n == 0) throw InputError("check-identity needs --input, or -d and -n for the built-in witness");
        spec = corollary33_witness(o.d, o.n);
    }
    IdentityCheck c = verify_power_identity(spec);
    Outcome out;
    json js = to_json(spec);
    out.digest_source = js.dump();
    out.result = {{"holds", c.holds}, {"residual", to_string(c.residual)}, {"residual_terms", c.residual.size()},
                  {"spec", js}};
    out.text = std::string(c.holds ? "identity holds" : "identity fails") + "\nresidual = " + to_string(c.residual) + "\n";
    return out;
}

inline Outcome cmd_refute(const Options& o) {
    if (o.r == 0 || o.d == 0) throw InputError("refute needs -r and -d");
    RefutationCertificate cert = refute_composition(o.r, o.d);
    auto xs = numbered_variables(o.r, "x");
    Form target = Form::from_polynomial(power_sum(xs, 0, o.r, o.d));
    Outcome out;
    out.digest_source = "r=" + std::to_string(o.r) + ";d=" + std::to_string(o.d);
    json eqs = json::array();
    std::ostringstream t;
    t << "x1^" << o.d << " + ... + x" << o.r << "^" << o.d << " is not l^" << o.d << " for any linear form l\n";
    t << "kind: " << to_string(cert.kind) << "\n";
    for (const auto& e : cert.equations) {
        eqs.push_back({{"x_monomial", e.x_monomial}, {"lhs", to_string(e.lhs)}, {"rhs", e.rhs.get_str()}});
        t << "  " << to_string(e.lhs) << " = " << e.rhs.get_str() << "\n";
    }
    bool replayed = replay_certificate(cert);
    bool power = is_dth_power(target).has_value();
    out.result = {{"r", cert.r}, {"d", cert.d}, {"kind", to_string(cert.kind)}, {"equations", eqs},
                  {"replayed", replayed}, {"is_dth_power", power}};
    t << "replayed: " << (replayed ? "inconsistent (refuted)" : "FAILED") << "\n";
    out.text = t.str();
    return out;
}

inline Outcome cmd_thm32(const Options& o) {
    if (o.n == 0 || o.d == 0 || o.a.empty()) throw InputError("thm32 needs -n, -d and -a");
    std::vector<Rational> a;
    for (const auto& s : split_list(o.a)) a.push_back(parse_rational(s));
    Form g = thm32_form(o.n, o.d, a);
    std::size_t dim = center_dim(g);
    bool open_case = o.n == 2 && o.d == 3;
    Outcome out;
    json ja = json::array();
    for (const auto& c : a) ja.push_back(c.get_str());
    out.digest_source = "n=" + std::to_string(o.n) + ";d=" + std::to_string(o.d) + ";a=" + ja.dump();
    out.result = {{"n", o.n}, {"d", o.d}, {"a", ja}, {"form", to_json(g.poly())}, {"center_dim", dim},
                  {"open_case", open_case}};
    std::ostringstream t;
    t << "g = " << to_string(g.poly()) << "\ncenter_dim = " << dim << "\n";
    if (open_case) t << "(n, d) = (2, 3) is the open case; no expected value\n";
    out.text = t.str();
    return out;
}

inline Outcome cmd_symtensor(const Options& o) {
    Polynomial p = input_polynomial(o);
    Form f = Form::from_polynomial(p);
    const SymmetricTensor& st = f.tensor();
    Outcome out;
    out.digest_source = to_json(p).dump();
    json entries = json::array();
    std::ostringstream t;
    t << "order = " << st.order << ", dim = " << st.dim << "\n";
    for (const auto& [idx, val] : st.entries) {
        std::vector<std::uint32_t> one_based;
        for (auto i : idx) one_based.push_back(i + 1);
        entries.push_back({{"index", one_based}, {"value", val.get_str()}});
        t << "  a(";
        for (std::size_t k = 0; k < one_based.size(); ++k) t << (k ? "," : "") << one_based[k];
        t << ") = " << val.get_str() << "\n";
    }
    out.result = {{"order", st.order}, {"dim", st.dim}, {"variables", p.variables()}, {"entries", entries}};
    out.text = t.str();
    return out;
}

/// Runs fn, mapping library exceptions to exit codes and messages on err.
template <class F>
int guarded(F&& fn, std::ostream& err) {
    try {
        fn();
        return ok;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const Error& e) {
        err << "computation failed: " << e.what() << "\n";
        return computation_error;
    }
}

/// Runs one CLI invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harrison centers, direct-sum decomposition and sums-of-powers identities"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", o.input, "input file (FormDocument or ZSpec JSON)");
        sub->add_option("--expr", o.expr, "polynomial expression");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", o.seed, "seed for random element sampling");
    };
    struct Entry {
        const char* name;
        const char* help;
        Outcome (*fn)(const Options&);
    };
    const Entry entries[] = {
        {"center", "center Z(f) of a form", cmd_center},
        {"decompose", "direct-sum decomposition into indecomposable blocks", cmd_decompose},
        {"diagonalize", "diagonalizing change of variables, if one exists", cmd_diagonalize},
        {"idempotents", "primitive orthogonal idempotents of Z(f)", cmd_idempotents},
        {"check-identity", "verify a sums-of-powers composition identity", cmd_check_identity},
        {"refute", "certificate that x1^d+...+xr^d is not a d-th power", cmd_refute},
        {"thm32", "center dimension of y1^d+...+yn^d+(a.y)^d", cmd_thm32},
        {"symtensor", "symmetric coefficient tensor of a form", cmd_symtensor},
    };
    std::vector<std::pair<CLI::App*, const Entry*>> subs;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_common(sub);
        std::string name = e.name;
        if (name == "center") sub->add_option("--params", o.params, "comma-separated parameter variables");
        if (name == "check-identity" || name == "thm32") sub->add_option("-n", o.n, "n");
        if (name == "check-identity" || name == "refute" || name == "thm32") sub->add_option("-d", o.d, "degree d");
        if (name == "refute") sub->add_option("-r", o.r, "number of x variables r");
        if (name == "thm32") sub->add_option("-a", o.a, "comma-separated nonzero rationals a1,...,an");
        subs.emplace_back(sub, &e);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    for (const auto& [sub, entry] : subs) {
        if (!sub->parsed()) continue;
        o.command = entry->name;
        return guarded(
            [&] {
                Outcome res = entry->fn(o);
                if (o.format == "json") {
                    json doc = {{"command", o.command}, {"input_digest", digest(res.digest_source)}, {"result", res.result}};
                    out << doc.dump(2) << "\n";
                } else {
                    out << res.text;
                }
            },
            err);
    }
    return input_error;
}

}  // namespace harrison::cli
