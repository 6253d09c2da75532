#include "powstruct/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "powstruct/errors.hpp"

namespace powstruct {

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < s.size() && is_digit(s[i])) ++i;
            out.push_back({Tok::Integer, start, std::string(s.substr(start, i - start))});
            continue;
        }
        if (is_alpha(c)) {
            while (i < s.size() && (is_alpha(s[i]) || is_digit(s[i]) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, start, std::string(s.substr(start, i - start))});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: throw ParseError(std::string("unknown character '") + c + "'", start);
        }
        out.push_back({kind, start, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, s.size(), ""});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, Ring ring) : toks_(std::move(tokens)), ring_(std::move(ring)) {}

    Polynomial parse() {
        if (peek().kind == Tok::End) throw ParseError("empty expression", peek().offset);
        Polynomial p = expr();
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    Polynomial expr() {
        bool negate = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            Polynomial rhs = term();
            if (minus) acc -= rhs;
            else acc += rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == Tok::Star) {
            next();
            acc *= factor();
        }
        return acc;
    }

    Polynomial factor() {
        const Token& tok = next();
        switch (tok.kind) {
            case Tok::Integer: return Polynomial(ring_, Integer(tok.text));
            case Tok::Ident: {
                Polynomial v = variable(tok);
                if (peek().kind == Tok::Caret) {
                    next();
                    const Token& e = next();
                    if (e.kind != Tok::Integer) throw ParseError("expected a nonnegative integer exponent", e.offset);
                    if (e.text.size() > 9) throw ParseError("exponent too large", e.offset);
                    v = v.pow(static_cast<std::uint32_t>(std::stoul(e.text)));
                }
                return v;
            }
            case Tok::LParen: {
                Polynomial inner = expr();
                const Token& close = next();
                if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.offset);
                return inner;
            }
            case Tok::End: throw ParseError("unexpected end of input", tok.offset);
            default: throw ParseError("expected a term, got '" + tok.text + "'", tok.offset);
        }
    }

    Polynomial variable(const Token& tok) const {
        if (!ring_.index_of(tok.text))
            throw ParseError("variable '" + tok.text + "' is not in ring " + ring_.name(), tok.offset);
        return Polynomial::variable(ring_, tok.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Ring ring_;
};

void reject_series_variable(const std::vector<Token>& toks) {
    for (const auto& t : toks)
        if (t.kind == Tok::Ident && t.text == kSeriesVariable)
            throw ParseError("'t' is reserved for series", t.offset);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    auto toks = lex(text);
    reject_series_variable(toks);
    std::set<std::string> names;
    for (const auto& t : toks)
        if (t.kind == Tok::Ident) names.insert(t.text);
    return Parser(std::move(toks), Ring(std::vector<std::string>(names.begin(), names.end()))).parse();
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
    auto toks = lex(text);
    reject_series_variable(toks);
    return Parser(std::move(toks), ring).parse();
}

Series parse_series(std::string_view text, const Ring& ring, std::size_t order, std::ostream* diagnostics) {
    if (ring.index_of(kSeriesVariable)) throw Error("ring " + ring.name() + " may not use the series variable t");
    auto vars = ring.variables();
    vars.emplace_back(kSeriesVariable);
    const Ring extended(vars);
    const Polynomial p = Parser(lex(text), extended).parse();

    const std::size_t tpos = ring.arity();
    std::vector<Polynomial::TermMap> buckets(order + 1);
    std::uint32_t dropped_degree = 0;
    for (const auto& [e, c] : p.terms()) {
        const std::uint32_t d = e[tpos];
        if (d > order) {
            dropped_degree = std::max(dropped_degree, d);
            continue;
        }
        ExponentVector base(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(tpos));
        buckets[d].emplace(std::move(base), c);
    }
    if (dropped_degree && diagnostics)
        *diagnostics << "warning: terms up to t^" << dropped_degree << " dropped beyond order " << order << '\n';
    std::vector<Polynomial> cs;
    cs.reserve(order + 1);
    for (auto& b : buckets) cs.emplace_back(ring, std::move(b));
    return Series(ring, order, std::move(cs));
}

Ring parse_ring(std::string_view text) {
    if (text == "Z") return Ring::integers();
    if (text.size() < 4 || text.substr(0, 2) != "Z[" || text.back() != ']')
        throw ParseError("ring must be Z or Z[x,y,...], got '" + std::string(text) + "'", 0);
    std::vector<std::string> vars;
    std::string_view body = text.substr(2, text.size() - 3);
    std::size_t start = 0;
    while (true) {
        const auto comma = body.find(',', start);
        std::string name(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
        if (!is_identifier(name)) throw ParseError("bad ring variable '" + name + "'", 2 + start);
        if (name == kSeriesVariable) throw ParseError("'t' is reserved for series", 2 + start);
        if (std::find(vars.begin(), vars.end(), name) != vars.end())
            throw ParseError("duplicate ring variable '" + name + "'", 2 + start);
        vars.push_back(std::move(name));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Ring(std::move(vars));
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Ring& ring) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            out.push_back(parse_polynomial(piece, ring));
        } catch (const ParseError& e) {
            throw ParseError(e.detail(), start + e.offset());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_series(const Series& a) {
    std::string out;
    for (std::size_t j = 0; j < a.order() + 1; ++j) {
        const Polynomial& c = a[j];
        if (c.is_zero()) continue;
        std::string text = c.to_string();
        if (j == 0) {
            out = text;
            continue;
        }
        std::string power(kSeriesVariable);
        if (j > 1) power += "^" + std::to_string(j);
        bool negative = false;
        if (c.term_count() > 1) {
            text = "(" + text + ")*" + power;
        } else {
            negative = text.front() == '-';
            if (negative) text.erase(0, 1);
            text = text == "1" ? power : text + "*" + power;
        }
        if (out.empty()) out = negative ? "-" + text : text;
        else out += (negative ? " - " : " + ") + text;
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> format_coefficients(const Series& a) {
    std::vector<std::string> out;
    out.reserve(a.order() + 1);
    for (const auto& c : a.coefficients()) out.push_back(c.to_string());
    return out;
}

}  // namespace powstruct
