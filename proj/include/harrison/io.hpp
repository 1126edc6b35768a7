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

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "identity.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace harrison {

using json = nlohmann::json;

/// Largest exponent accepted by the expression parser.
inline constexpr std::uint32_t kMaxExponent = 10000;

/// Natural order on names: digit runs compare numerically, so x2 < x10.
inline bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            std::string_view ra = a.substr(i, ie - i), rb = b.substr(j, je - j);
            while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
            while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            if (ra != rb) return ra < rb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
    return a < b;
}

namespace parse_detail {

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;  // 0-based
};

inline std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::number, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Kind::ident, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::plus; break;
            case '-': k = Token::Kind::minus; break;
            case '*': k = Token::Kind::star; break;
            case '/': k = Token::Kind::slash; break;
            case '^': k = Token::Kind::caret; break;
            case '(': k = Token::Kind::lparen; break;
            case ')': k = Token::Kind::rparen; break;
            default:
                throw ParseError(ParseError::Kind::lexical, i + 1, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::Kind::end, "", s.size()});
    return out;
}

class Parser {
   public:
    Parser(std::vector<Token> tokens, std::vector<std::string> vars) : toks_(std::move(tokens)), vars_(std::move(vars)) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (peek().kind != Token::Kind::end) fail(peek(), "unexpected token '" + peek().text + "'");
        return p;
    }

   private:
    using K = Token::Kind;

    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    [[noreturn]] static void fail(const Token& t, const std::string& what) {
        throw ParseError(ParseError::Kind::syntax, t.pos + 1, t.kind == K::end ? "unexpected end of input" : what);
    }

    // Expr := ('+'|'-')? Term (('+'|'-') Term)*
    Polynomial expr() {
        bool negate_first = false;
        if (peek().kind == K::minus || peek().kind == K::plus) negate_first = take().kind == K::minus;
        Polynomial acc = term();
        if (negate_first) acc = -acc;
        while (peek().kind == K::plus || peek().kind == K::minus) {
            bool minus = take().kind == K::minus;
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    // Term := Factor ('*' Factor)*
    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == K::star) {
            take();
            acc = acc * factor();
        }
        return acc;
    }

    // Factor := Base ('^' UInt)?
    Polynomial factor() {
        Polynomial b = base();
        if (peek().kind != K::caret) return b;
        take();
        const Token& t = peek();
        if (t.kind != K::number) fail(t, "expected a non-negative integer exponent");
        take();
        if (t.text.size() > 9 || std::stoul(t.text) > kMaxExponent)
            throw ParseError(ParseError::Kind::exponent_overflow, t.pos + 1,
                             "exponent exceeds " + std::to_string(kMaxExponent));
        return pow(b, static_cast<unsigned>(std::stoul(t.text)));
    }

    // Base := Int ('/' UInt)? | Identifier | '(' Expr ')'
    Polynomial base() {
        const Token& t = peek();
        switch (t.kind) {
            case K::number: {
                take();
                Integer num(t.text), den(1);
                if (peek().kind == K::slash) {
                    take();
                    const Token& d = peek();
                    if (d.kind != K::number) fail(d, "expected a denominator");
                    take();
                    den = Integer(d.text);
                    if (den == 0) throw ParseError(ParseError::Kind::syntax, d.pos + 1, "zero denominator");
                }
                Rational q(num, den);
                q.canonicalize();
                return Polynomial::constant(vars_, q);
            }
            case K::ident: {
                take();
                auto it = std::find(vars_.begin(), vars_.end(), t.text);
                if (it == vars_.end())
                    throw ParseError(ParseError::Kind::undeclared_variable, t.pos + 1, "'" + t.text + "' is not declared");
                return Polynomial::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
            }
            case K::lparen: {
                take();
                Polynomial inner = expr();
                if (peek().kind != K::rparen) fail(peek(), "expected ')'");
                take();
                return inner;
            }
            default:
                fail(t, "unexpected token '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace parse_detail

/// Identifiers in first-occurrence order.
inline std::vector<std::string> collect_identifiers(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& t : parse_detail::lex(text))
        if (t.kind == parse_detail::Token::Kind::ident && std::find(out.begin(), out.end(), t.text) == out.end())
            out.push_back(t.text);
    return out;
}

/// Parses and expands an expression. Without a declared list the variables
/// are the identifiers that occur, in natural order.
inline Polynomial parse_polynomial(std::string_view text, std::optional<std::vector<std::string>> variables = std::nullopt) {
    auto tokens = parse_detail::lex(text);
    std::vector<std::string> vars;
    if (variables) {
        vars = *variables;
        std::set<std::string> seen(vars.begin(), vars.end());
        if (seen.size() != vars.size()) throw ValidationError("declared variable list has duplicates");
    } else {
        vars = collect_identifiers(text);
        std::sort(vars.begin(), vars.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
    }
    return parse_detail::Parser(std::move(tokens), std::move(vars)).parse();
}

// ---------------------------------------------------------------------------
// JSON documents
// ---------------------------------------------------------------------------

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    throw ValidationError("rational must be a string \"p/q\" or an integer");
}

/// {"variables":[...],"terms":[{"coefficient":"p/q","exponents":[...]}...]}
/// with terms in descending graded-lex order.
inline json to_json(const Polynomial& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"coefficient", it->second.get_str()}, {"exponents", it->first}});
    return {{"variables", p.variables()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("terms"))
        throw ValidationError("FormDocument needs \"variables\" and \"terms\"");
    const json& jv = j.at("variables");
    if (!jv.is_array()) throw ValidationError("\"variables\" must be an array of strings");
    std::vector<std::string> vars;
    for (const auto& v : jv) {
        if (!v.is_string()) throw ValidationError("\"variables\" must be an array of strings");
        vars.push_back(v.get<std::string>());
    }
    if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size())
        throw ValidationError("duplicate variable name");
    const json& jt = j.at("terms");
    if (!jt.is_array()) throw ValidationError("\"terms\" must be an array");
    Polynomial p(vars);
    std::set<Monomial> seen;
    for (const auto& t : jt) {
        if (!t.is_object() || !t.contains("coefficient") || !t.contains("exponents"))
            throw ValidationError("each term needs \"coefficient\" and \"exponents\"");
        const json& je = t.at("exponents");
        if (!je.is_array() || je.size() != vars.size())
            throw ValidationError("exponent list length must equal the variable count");
        Monomial m;
        for (const auto& e : je) {
            if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0))
                throw ValidationError("exponents must be non-negative integers");
            auto v = e.get<unsigned long long>();
            if (v > kMaxExponent) throw ValidationError("exponent too large");
            m.push_back(static_cast<std::uint32_t>(v));
        }
        if (!seen.insert(m).second) throw ValidationError("exponent vector listed twice");
        p.add_term(m, rational_from_json(t.at("coefficient")));
    }
    return p;
}

inline json to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("matrix must be an array of rows");
    std::vector<RationalVector> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw ValidationError("matrix rows must be arrays");
        RationalVector row;
        for (const auto& x : r) row.push_back(rational_from_json(x));
        rows.push_back(std::move(row));
    }
    return RationalMatrix::from_rows(rows);
}

/// {"r":..,"n":..,"d":..,"q":FormDocument,"numerators":[[FormDocument...]...]}
inline json to_json(const ZSpec& s) {
    json rows = json::array();
    for (const auto& row : s.numerators) {
        json jr = json::array();
        for (const auto& p : row) jr.push_back(to_json(p));
        rows.push_back(jr);
    }
    return {{"r", s.r}, {"n", s.n}, {"d", s.d}, {"q", to_json(s.q)}, {"numerators", rows}};
}

inline ZSpec zspec_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("ZSpec must be a JSON object");
    for (const char* key : {"r", "n", "d", "q", "numerators"})
        if (!j.contains(key)) throw ValidationError(std::string("ZSpec is missing \"") + key + "\"");
    auto uint_field = [&](const char* key) {
        const json& v = j.at(key);
        if (!v.is_number_unsigned()) throw ValidationError(std::string("ZSpec \"") + key + "\" must be a non-negative integer");
        return v.get<unsigned>();
    };
    ZSpec s;
    s.r = uint_field("r");
    s.n = uint_field("n");
    s.d = uint_field("d");
    s.q = polynomial_from_json(j.at("q"));
    const json& rows = j.at("numerators");
    if (!rows.is_array()) throw ValidationError("\"numerators\" must be an array of rows");
    for (const auto& r : rows) {
        if (!r.is_array()) throw ValidationError("each numerator row must be an array");
        std::vector<Polynomial> row;
        for (const auto& p : r) row.push_back(polynomial_from_json(p));
        s.numerators.push_back(std::move(row));
    }
    validate(s);
    return s;
}

}  // namespace harrison
