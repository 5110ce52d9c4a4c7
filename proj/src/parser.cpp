#include "germ/parser.hpp"

#include <cctype>

namespace germ {

namespace {

struct Token {
    enum Type { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, End } type;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_ + 1;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '\''))
                ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_ + 1;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Int, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; return;
            case '-': tok_ = {Token::Minus, "-", start}; return;
            case '*': tok_ = {Token::Star, "*", start}; return;
            case '^': tok_ = {Token::Caret, "^", start}; return;
            case '(': tok_ = {Token::LParen, "(", start}; return;
            case ')': tok_ = {Token::RParen, ")", start}; return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : lex_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = sum();
        if (lex_.peek().type != Token::End)
            throw parse_error("unexpected token '" + lex_.peek().text + "'", lex_.peek().pos);
        return p;
    }

private:
    Polynomial sum() {
        bool neg = false;
        if (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus)
            neg = lex_.take().type == Token::Minus;
        Polynomial p = product();
        if (neg) p = -p;
        while (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus) {
            bool minus = lex_.take().type == Token::Minus;
            Polynomial q = product();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Polynomial product() {
        Polynomial p = power();
        while (lex_.peek().type == Token::Star) {
            lex_.take();
            p = p * power();
        }
        return p;
    }

    Polynomial power() {
        Polynomial p = atom();
        if (lex_.peek().type == Token::Caret) {
            std::size_t pos = lex_.take().pos;
            Token e = lex_.take();
            if (e.type != Token::Int)
                throw parse_error("expected integer exponent after '^'", pos);
            p = p.pow(static_cast<unsigned>(std::stoul(e.text)));
        }
        return p;
    }

    Polynomial atom() {
        Token t = lex_.take();
        switch (t.type) {
            case Token::Ident: {
                int idx = ring_->index_of(t.text);
                if (idx < 0)
                    throw parse_error("unknown variable '" + t.text + "'", t.pos);
                return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
            }
            case Token::Int:
                return Polynomial::constant(ring_, mpq_class(t.text));
            case Token::LParen: {
                Polynomial p = sum();
                Token close = lex_.take();
                if (close.type != Token::RParen)
                    throw parse_error("expected ')'", close.pos);
                return p;
            }
            default:
                throw parse_error("expected variable, number or '('", t.pos);
        }
    }

    Lexer lex_;
    RingPtr ring_;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

}  // namespace germ
