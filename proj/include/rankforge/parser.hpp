#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/expr.hpp"

namespace rankforge {

/// Recursive-descent parser for the expression language:
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := atom ['^' sint]
///   atom     := 'J' int | 'j(' cyc ',' int ',' int ')' | 'g(' cyc ',' int ',' int ')'
///             | 'phi(' int ')' | 'psi(' int ')' | 'pw' | 'q' | rational | 'z8'
///             | 'sub(' expr ',' int ')' | 'dis(' expr ',' int ',' int ')'
///             | 'shift(' expr ',' sint ')' | '(' expr ')'
///   cyc      := ['-'] (rational ['*' 'z8' ['^' sint]] | 'z8' ['^' sint])
///   rational := int ['/' int]
///   sint     := ['-'] int
///
/// i is written z8^2. Powers of literal constants fold at parse time, so
/// z8^-1 and 2^-3 are exact constants rather than series inversions.
class ExprParser {
public:
    explicit ExprParser(std::string text) : _text(std::move(text)) { tokenize(); }

    ExprPtr parse() {
        ExprPtr e = parse_expr_rule();
        if (!at_end()) fail("trailing input after expression");
        return e;
    }

private:
    enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

    struct Token {
        Tok kind;
        std::string text;
        long line;
        long col;
    };

    void tokenize() {
        long line = 1;
        long col = 1;
        size_t i = 0;
        auto push = [&](Tok k, std::string t, long l, long c) {
            _toks.push_back(Token{k, std::move(t), l, c});
        };
        while (i < _text.size()) {
            char ch = _text[i];
            if (ch == '\n') {
                ++line;
                col = 1;
                ++i;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++col;
                ++i;
                continue;
            }
            long tl = line;
            long tc = col;
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t j = i;
                while (j < _text.size() && std::isdigit(static_cast<unsigned char>(_text[j]))) {
                    ++j;
                }
                push(Tok::Int, _text.substr(i, j - i), tl, tc);
                col += static_cast<long>(j - i);
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                size_t j = i;
                while (j < _text.size() &&
                       std::isalnum(static_cast<unsigned char>(_text[j]))) {
                    ++j;
                }
                push(Tok::Ident, _text.substr(i, j - i), tl, tc);
                col += static_cast<long>(j - i);
                i = j;
                continue;
            }
            Tok k;
            switch (ch) {
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '/': k = Tok::Slash; break;
                case '^': k = Tok::Caret; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case ',': k = Tok::Comma; break;
                default:
                    throw ParseError(std::string("unexpected character '") + ch + "'", tl, tc);
            }
            push(k, std::string(1, ch), tl, tc);
            ++col;
            ++i;
        }
        push(Tok::End, "<end>", line, col);
    }

    const Token& peek(size_t ahead = 0) const {
        size_t idx = std::min(_pos + ahead, _toks.size() - 1);
        return _toks[idx];
    }
    const Token& advance() { return _toks[std::min(_pos++, _toks.size() - 1)]; }
    bool at_end() const { return peek().kind == Tok::End; }
    bool match(Tok k) {
        if (peek().kind != k) return false;
        ++_pos;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!match(k)) fail(std::string("expected ") + what);
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg + ", found '" + t.text + "'", t.line, t.col);
    }

    long parse_uint() {
        if (peek().kind != Tok::Int) fail("expected integer");
        const std::string& s = advance().text;
        if (s.size() > 12) fail("integer literal too large");
        return std::stol(s);
    }
    long parse_sint() {
        bool neg = match(Tok::Minus);
        long v = parse_uint();
        return neg ? -v : v;
    }
    BigRat parse_rational() {
        long num = parse_uint();
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
            advance();
            long den = parse_uint();
            if (den == 0) fail("rational with zero denominator");
            return BigRat(num, den);
        }
        return BigRat(num);
    }

    // cyc := ['-'] (rational ['*' 'z8' ['^' sint]] | 'z8' ['^' sint])
    CycRat parse_cyc() {
        bool neg = match(Tok::Minus);
        CycRat value;
        if (peek().kind == Tok::Ident && peek().text == "z8") {
            advance();
            long zp = match(Tok::Caret) ? parse_sint() : 1;
            value = CycRat::zeta8_pow(zp);
        } else {
            value = CycRat(parse_rational());
            if (peek().kind == Tok::Star && peek(1).kind == Tok::Ident &&
                peek(1).text == "z8") {
                advance();
                advance();
                long zp = match(Tok::Caret) ? parse_sint() : 1;
                value *= CycRat::zeta8_pow(zp);
            }
        }
        return neg ? -value : value;
    }

    // An atom plus the constant value when the atom is a literal, so that
    // factor exponents on constants fold instead of becoming series powers.
    struct Atom {
        ExprPtr node;
        bool literal = false;
        CycRat value;
    };

    Atom parse_atom() {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            CycRat v(parse_rational());
            return Atom{Expr::lit(v), true, v};
        }
        if (t.kind == Tok::LParen) {
            advance();
            ExprPtr e = parse_expr_rule();
            expect(Tok::RParen, "')'");
            return Atom{std::move(e), false, CycRat()};
        }
        if (t.kind != Tok::Ident) fail("expected expression atom");
        Token id = advance();
        const std::string& name = id.text;
        if (name == "q") return Atom{Expr::q(), false, CycRat()};
        if (name == "pw") return Atom{Expr::pw(), false, CycRat()};
        if (name == "z8") {
            // The caret is handled by the factor rule so z8^k folds there.
            return Atom{Expr::lit(CycRat::zeta8()), true, CycRat::zeta8()};
        }
        if (name.size() > 1 && name[0] == 'J') {
            bool digits = true;
            for (size_t k = 1; k < name.size(); ++k) {
                if (!std::isdigit(static_cast<unsigned char>(name[k]))) digits = false;
            }
            if (!digits) throw ParseError("unknown name '" + name + "'", id.line, id.col);
            long m = std::stol(name.substr(1));
            if (m < 1) throw ParseError("J subscript must be positive", id.line, id.col);
            return Atom{Expr::jm(m), false, CycRat()};
        }
        if (name == "j" || name == "g") {
            expect(Tok::LParen, "'('");
            CycRat c = parse_cyc();
            expect(Tok::Comma, "','");
            long a = parse_sint();
            expect(Tok::Comma, "','");
            long m = parse_uint();
            expect(Tok::RParen, "')'");
            ExprPtr e = (name == "j") ? Expr::j(c, a, m) : Expr::g(c, a, m);
            return Atom{std::move(e), false, CycRat()};
        }
        if (name == "phi" || name == "psi") {
            expect(Tok::LParen, "'('");
            long m = parse_uint();
            expect(Tok::RParen, "')'");
            ExprPtr e = (name == "phi") ? Expr::phi_of(m) : Expr::psi_of(m);
            return Atom{std::move(e), false, CycRat()};
        }
        if (name == "sub") {
            expect(Tok::LParen, "'('");
            ExprPtr inner = parse_expr_rule();
            expect(Tok::Comma, "','");
            long k = parse_uint();
            if (k < 1) fail("sub power must be positive");
            expect(Tok::RParen, "')'");
            return Atom{substitute_power(std::move(inner), k), false, CycRat()};
        }
        if (name == "dis") {
            expect(Tok::LParen, "'('");
            ExprPtr inner = parse_expr_rule();
            expect(Tok::Comma, "','");
            long ell = parse_uint();
            if (ell < 1) fail("dis modulus must be positive");
            expect(Tok::Comma, "','");
            long r = parse_uint();
            if (r < 0 || r >= ell) fail("dis needs 0 <= r < ell");
            expect(Tok::RParen, "')'");
            return Atom{dissect(std::move(inner), ell, r), false, CycRat()};
        }
        if (name == "shift") {
            expect(Tok::LParen, "'('");
            ExprPtr inner = parse_expr_rule();
            expect(Tok::Comma, "','");
            long d = parse_sint();
            expect(Tok::RParen, "')'");
            return Atom{shift(std::move(inner), d), false, CycRat()};
        }
        throw ParseError("unknown name '" + name + "'", id.line, id.col);
    }

    ExprPtr parse_factor() {
        Atom a = parse_atom();
        if (!match(Tok::Caret)) return a.node;
        long e = parse_sint();
        if (a.literal) {
            if (a.value.is_zero() && e < 0) fail("negative power of zero");
            return Expr::lit(a.value.pow(e));
        }
        return pow(a.node, e);
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (true) {
            if (match(Tok::Star)) {
                e = mul(std::move(e), parse_factor());
            } else if (match(Tok::Slash)) {
                e = divide(std::move(e), parse_factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_expr_rule() {
        bool neg = match(Tok::Minus);
        ExprPtr e = parse_term();
        if (neg) e = scale(std::move(e), CycRat(-1));
        while (true) {
            if (match(Tok::Plus)) {
                e = add(std::move(e), parse_term());
            } else if (match(Tok::Minus)) {
                e = sub(std::move(e), parse_term());
            } else {
                return e;
            }
        }
    }

    std::string _text;
    std::vector<Token> _toks;
    size_t _pos = 0;
};

inline ExprPtr parse_expr(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace rankforge
