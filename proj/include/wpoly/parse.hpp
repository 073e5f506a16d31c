#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpoly/ideal.hpp"
#include "wpoly/monomial.hpp"
#include "wpoly/order.hpp"
#include "wpoly/polynomial.hpp"
#include "wpoly/ring.hpp"

namespace wpoly {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail_parse {

inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    std::string name() {
        skip_space();
        if (pos >= text.size() || !is_name_start(text[pos]))
            throw ParseError("expected a variable name", pos);
        std::size_t start = pos;
        while (pos < text.size() && is_name_char(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }
    long long integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw ParseError("number out of range", start);
        }
    }
};

struct PolyParser {
    Lexer& lex;
    const RingDescriptor& ring;

    Polynomial parse() {
        Polynomial p = expression();
        return p;
    }

    Polynomial expression() {
        bool negative = false;
        if (lex.accept('-'))
            negative = true;
        else
            lex.accept('+');
        Polynomial acc = term();
        if (negative) acc = -acc;
        for (;;) {
            if (lex.accept('+'))
                acc += term();
            else if (lex.accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex.accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        if (lex.accept('-')) return -factor();
        Polynomial base = atom();
        if (lex.accept('^')) {
            std::size_t at = lex.pos;
            long long e = lex.integer();
            if (e < 0 || e > 10000) throw ParseError("exponent out of range", at);
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial atom() {
        lex.skip_space();
        std::size_t at = lex.pos;
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            Polynomial inner = expression();
            lex.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long num = lex.integer();
            if (lex.accept('/')) {
                std::size_t dat = lex.pos;
                long long den = lex.integer();
                if (den == 0) throw ParseError("zero denominator", dat);
                return Polynomial::constant(ring.variable_count(), rational(static_cast<long>(num), static_cast<long>(den)));
            }
            return Polynomial::constant(ring.variable_count(), rational_of(num));
        }
        if (is_name_start(c)) {
            std::string id = lex.name();
            int v = ring.index_of(id);
            if (v < 0) throw ParseError("unknown variable '" + id + "'", at);
            return Polynomial(Monomial::unit(ring.variable_count()).times(v, 1));
        }
        throw ParseError("expected a coefficient, variable or '('", at);
    }
};

}  // namespace detail_parse

// Ring spec: comma-separated name:weight pairs, e.g. "x:2,y:4,z:5".
// Variables are stably sorted by increasing weight and grouped.
inline RingDescriptor parse_ring(const std::string& text) {
    detail_parse::Lexer lex{text};
    std::vector<std::string> names;
    std::vector<int> weights;
    for (;;) {
        std::string id = lex.name();
        lex.expect(':');
        std::size_t at = lex.pos;
        long long w = lex.integer();
        if (w <= 0 || w > 1000000) throw ParseError("weight out of range", at);
        for (const auto& prev : names)
            if (prev == id) throw ParseError("duplicate variable '" + id + "'", at);
        names.push_back(id);
        weights.push_back(static_cast<int>(w));
        if (!lex.accept(',')) break;
    }
    if (!lex.done()) throw ParseError("unexpected trailing input", lex.pos);
    return RingDescriptor::from_weights(weights, names);
}

inline Polynomial parse_polynomial(const RingDescriptor& ring, const std::string& text) {
    detail_parse::Lexer lex{text};
    detail_parse::PolyParser parser{lex, ring};
    Polynomial p = parser.parse();
    if (!lex.done()) throw ParseError("unexpected trailing input", lex.pos);
    return p;
}

// Ideal spec: generators separated by ';' (or ','). Every generator must be
// homogeneous for the ring's weights; the error names the offending degrees.
inline Ideal parse_ideal(const RingDescriptor& ring, const std::string& text) {
    detail_parse::Lexer lex{text};
    std::vector<Polynomial> gens;
    if (!lex.done()) {
        for (;;) {
            std::size_t at = lex.pos;
            detail_parse::PolyParser parser{lex, ring};
            Polynomial p = parser.expression();
            if (p.is_zero()) throw ParseError("zero generator", at);
            if (!p.is_homogeneous(ring)) {
                std::ostringstream msg;
                msg << "generator is not homogeneous: degrees";
                for (const auto& [m, c] : p.terms()) msg << ' ' << weighted_degree(m, ring);
                throw ParseError(msg.str(), at);
            }
            gens.push_back(std::move(p));
            if (!(lex.accept(';') || lex.accept(','))) break;
        }
        if (!lex.done()) throw ParseError("unexpected trailing input", lex.pos);
    }
    return Ideal(ring, std::move(gens));
}

inline std::string format_monomial(const RingDescriptor& ring, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int v = 0; v < ring.variable_count(); ++v) {
        int e = m.exponent(v);
        if (e == 0) continue;
        if (!first) out << '*';
        out << ring.name(v);
        if (e > 1) out << '^' << e;
        first = false;
    }
    return out.str();
}

// Terms in descending order under `order`; stable for fixed input, so the
// printed form is canonical.
inline std::string format_polynomial(const RingDescriptor& ring, const Polynomial& f,
                                     const TermOrder& order) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                out << '-';
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        if (m.is_unit())
            out << to_string(coeff);
        else if (coeff == 1)
            out << format_monomial(ring, m);
        else
            out << to_string(coeff) << '*' << format_monomial(ring, m);
        first = false;
    }
    return out.str();
}

inline std::string format_polynomial(const RingDescriptor& ring, const Polynomial& f) {
    return format_polynomial(ring, f, TermOrder::wdeglex(ring));
}

}  // namespace wpoly
