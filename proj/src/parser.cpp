#include <cctype>
#include <string>
#include <vector>

#include "mfdlog/syntax.hpp"

namespace mfdlog {
namespace {

enum class Tok { Ident, Variable, Number, Quoted, Dot, Comma, Pipe, ColonDash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (c == '.') return take(Tok::Dot, 1);
        if (c == ',') return take(Tok::Comma, 1);
        if (c == '|') return take(Tok::Pipe, 1);
        if (c == '(') return take(Tok::LParen, 1);
        if (c == ')') return take(Tok::RParen, 1);
        if (c == ':') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') return take(Tok::ColonDash, 2);
            throw ParseError("expected ':-'", line, col);
        }
        if (c == '"') {
            std::size_t end = pos_ + 1;
            while (end < text_.size() && text_[end] != '"' && text_[end] != '\n') ++end;
            if (end >= text_.size() || text_[end] != '"')
                throw ParseError("unterminated quoted constant", line, col);
            std::string lexeme = text_.substr(pos_, end - pos_ + 1);
            advance(end - pos_ + 1);
            return {Tok::Quoted, lexeme, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            std::string lexeme = text_.substr(pos_, end - pos_);
            advance(end - pos_);
            return {Tok::Number, lexeme, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            std::string lexeme = text_.substr(pos_, end - pos_);
            advance(end - pos_);
            bool variable = std::isupper(static_cast<unsigned char>(lexeme[0])) || lexeme[0] == '_';
            return {variable ? Tok::Variable : Tok::Ident, lexeme, line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance(1);
            } else {
                break;
            }
        }
    }

    Token take(Tok kind, std::size_t len) {
        Token t{kind, text_.substr(pos_, len), line_, col_};
        advance(len);
        return t;
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

    Program program() {
        Program p;
        while (cur_.kind != Tok::End) {
            p.rules.push_back(rule());
            expect(Tok::Dot, "'.'");
        }
        return p;
    }

    Atom ground_atom() {
        Atom a = atom();
        if (!a.ground()) throw ParseError("atom is not ground", cur_.line, cur_.col);
        expect(Tok::End, "end of input");
        return a;
    }

    Literal goal() {
        Literal l;
        if (cur_.kind == Tok::Ident && cur_.text == "not") {
            advance();
            l.negative = true;
        }
        l.atom = atom();
        if (!l.atom.ground()) throw ParseError("goal is not ground", cur_.line, cur_.col);
        expect(Tok::End, "end of input");
        return l;
    }

private:
    Rule rule() {
        Rule r;
        if (cur_.kind == Tok::ColonDash) {
            advance();
            body(r);
            return r;
        }
        r.head.push_back(atom());
        while (cur_.kind == Tok::Pipe) {
            advance();
            r.head.push_back(atom());
        }
        if (cur_.kind == Tok::ColonDash) {
            advance();
            body(r);
        }
        return r;
    }

    void body(Rule& r) {
        literal(r);
        while (cur_.kind == Tok::Comma) {
            advance();
            literal(r);
        }
    }

    void literal(Rule& r) {
        if (cur_.kind == Tok::Ident && cur_.text == "not") {
            advance();
            r.body_neg.push_back(atom());
        } else {
            r.body_pos.push_back(atom());
        }
    }

    Atom atom() {
        if (cur_.kind != Tok::Ident)
            throw ParseError("expected predicate name, got '" + cur_.text + "'", cur_.line,
                             cur_.col);
        if (cur_.text == "not")
            throw ParseError("'not' is reserved and cannot name a predicate", cur_.line, cur_.col);
        Atom a;
        a.predicate = cur_.text;
        advance();
        if (cur_.kind == Tok::LParen) {
            advance();
            a.args.push_back(term());
            while (cur_.kind == Tok::Comma) {
                advance();
                a.args.push_back(term());
            }
            expect(Tok::RParen, "')'");
        }
        return a;
    }

    Term term() {
        switch (cur_.kind) {
            case Tok::Ident: {
                if (cur_.text == "not")
                    throw ParseError("'not' is reserved and cannot name a constant", cur_.line,
                                     cur_.col);
                Term t = Term::constant(cur_.text);
                advance();
                return t;
            }
            case Tok::Number:
            case Tok::Quoted: {
                Term t = Term::constant(cur_.text);
                advance();
                return t;
            }
            case Tok::Variable: {
                Term t = Term::variable(cur_.text);
                advance();
                return t;
            }
            default:
                throw ParseError("expected term, got '" + cur_.text + "'", cur_.line, cur_.col);
        }
    }

    void expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError("expected " + what + ", got '" +
                                 (cur_.kind == Tok::End ? "end of input" : cur_.text) + "'",
                             cur_.line, cur_.col);
        advance();
    }

    void advance() { cur_ = lex_.next(); }

    Lexer lex_;
    Token cur_;
};

}  // namespace

Program parse_program_raw(const std::string& text) { return Parser(text).program(); }

Program parse_program(const std::string& text) {
    Program p = parse_program_raw(text);
    auto diags = validate(p);
    if (!diags.empty()) throw ValidationError(std::move(diags));
    return p;
}

Atom parse_ground_atom(const std::string& text) { return Parser(text).ground_atom(); }

Literal parse_goal(const std::string& text) { return Parser(text).goal(); }

}  // namespace mfdlog
