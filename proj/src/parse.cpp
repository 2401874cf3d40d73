#include "conevanish/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace conevanish {

namespace {

enum class Tok { ident, number, sym, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, col;
};

class Lexer {
public:
    Lexer(const std::string& src, std::size_t line0 = 1) : s_(src), line_(line0) {}

    Token next() {
        skip_ws();
        std::size_t line = line_, col = col_;
        if (pos_ >= s_.size()) return {Tok::end, "", line, col};
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                t += advance();
            return {Tok::ident, t, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                t += advance();
            return {Tok::number, t, line, col};
        }
        static const std::string syms = "+-*^()[],=;";
        if (syms.find(c) != std::string::npos) {
            advance();
            return {Tok::sym, std::string(1, c), line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    char advance() {
        char c = s_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }
    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

class TokenStream {
public:
    TokenStream(const std::string& src, std::size_t line0 = 1) : lex_(src, line0) {
        cur_ = lex_.next();
    }
    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }
    Token expect_sym(const std::string& s) {
        if (cur_.kind != Tok::sym || cur_.text != s)
            throw ParseError("expected '" + s + "', got '" + cur_.text + "'", cur_.line, cur_.col);
        return take();
    }
    Token expect_ident() {
        if (cur_.kind != Tok::ident)
            throw ParseError("expected identifier, got '" + cur_.text + "'", cur_.line, cur_.col);
        return take();
    }
    Token expect_number() {
        if (cur_.kind != Tok::number)
            throw ParseError("expected number, got '" + cur_.text + "'", cur_.line, cur_.col);
        return take();
    }
    bool at_sym(const std::string& s) const { return cur_.kind == Tok::sym && cur_.text == s; }
    bool at_end() const { return cur_.kind == Tok::end; }
    void expect_end() {
        if (!at_end())
            throw ParseError("trailing input '" + cur_.text + "'", cur_.line, cur_.col);
    }

private:
    Lexer lex_;
    Token cur_;
};

Field parse_field_name(const Token& t) {
    if (t.text == "Q") return Field::rationals();
    if (t.text.size() > 1 && t.text[0] == 'F') {
        for (std::size_t i = 1; i < t.text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
                throw ParseError("bad field name '" + t.text + "'", t.line, t.col);
        unsigned long p = std::stoul(t.text.substr(1));
        if (p >= (1ul << 31))
            throw ParseError("field characteristic out of range in '" + t.text + "'", t.line, t.col);
        if (!Field::is_prime(static_cast<std::uint32_t>(p)))
            throw ParseError(std::to_string(p) + " not prime", t.line, t.col);
        return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw ParseError("expected field (Q or F<p>), got '" + t.text + "'", t.line, t.col);
}

PolyRing parse_ring_stmt(TokenStream& ts) {
    Token kw = ts.expect_ident();
    if (kw.text != "ring")
        throw ParseError("expected 'ring', got '" + kw.text + "'", kw.line, kw.col);
    Field field = parse_field_name(ts.expect_ident());
    ts.expect_sym("[");
    std::vector<std::string> vars;
    vars.push_back(ts.expect_ident().text);
    while (ts.at_sym(",")) {
        ts.take();
        vars.push_back(ts.expect_ident().text);
    }
    ts.expect_sym("]");
    Token ord = ts.expect_ident();
    MonomialOrder order;
    if (ord.text == "grevlex") {
        order = MonomialOrder::grevlex();
    } else if (ord.text == "lex") {
        order = MonomialOrder::lex();
    } else if (ord.text == "block") {
        ts.expect_sym("(");
        Token k = ts.expect_number();
        ts.expect_sym(")");
        order = MonomialOrder::block(static_cast<std::uint32_t>(std::stoul(k.text)));
    } else {
        throw ParseError("unknown order '" + ord.text + "'", ord.line, ord.col);
    }
    try {
        return PolyRing(field, std::move(vars), order);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), kw.line, kw.col);
    }
}

// term := factor ('*' factor)*, factor := NAT | IDENT ['^' NAT]
Polynomial parse_term(TokenStream& ts, const PolyRing& ring) {
    const Field& F = ring.field();
    Scalar coeff = F.one();
    Monomial mono(ring.nvars());
    bool any = false;
    for (;;) {
        if (ts.peek().kind == Tok::number) {
            Token t = ts.take();
            coeff = F.mul(coeff, F.from_mpz(mpz_class(t.text)));
            any = true;
        } else if (ts.peek().kind == Tok::ident) {
            Token t = ts.take();
            int vi = ring.var_index(t.text);
            if (vi < 0)
                throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
            std::uint32_t e = 1;
            if (ts.at_sym("^")) {
                ts.take();
                Token num = ts.expect_number();
                unsigned long v = std::stoul(num.text);
                if (v > (1ul << 20))
                    throw ParseError("exponent too large", num.line, num.col);
                e = static_cast<std::uint32_t>(v);
            }
            std::vector<std::uint32_t> exps(mono.exponents());
            exps[static_cast<std::size_t>(vi)] += e;
            mono = Monomial(std::move(exps));
            any = true;
        } else {
            break;
        }
        if (ts.at_sym("*"))
            ts.take();
        else
            break;
    }
    if (!any) {
        const Token& t = ts.peek();
        throw ParseError("expected term, got '" + t.text + "'", t.line, t.col);
    }
    return Polynomial::monomial_term(ring, std::move(mono), std::move(coeff));
}

Polynomial parse_poly_expr(TokenStream& ts, const PolyRing& ring) {
    const Field& F = ring.field();
    bool neg = false;
    if (ts.at_sym("+") || ts.at_sym("-")) neg = ts.take().text == "-";
    Polynomial acc = parse_term(ts, ring);
    if (neg) acc = acc.scaled(F.neg(F.one()));
    while (ts.at_sym("+") || ts.at_sym("-")) {
        bool minus = ts.take().text == "-";
        Polynomial t = parse_term(ts, ring);
        acc = minus ? acc - t : acc + t;
    }
    return acc;
}

} // namespace

PolyRing parse_ring(const std::string& decl) {
    TokenStream ts(decl);
    PolyRing r = parse_ring_stmt(ts);
    ts.expect_end();
    return r;
}

Polynomial parse_polynomial(const PolyRing& ring, const std::string& src) {
    TokenStream ts(src);
    Polynomial p = parse_poly_expr(ts, ring);
    ts.expect_end();
    return p;
}

const NamedIdeal* Declarations::find(const std::string& name) const {
    for (const auto& id : ideals)
        if (id.name == name) return &id;
    return nullptr;
}

const PolyRing& Declarations::current_ring() const {
    if (rings.empty()) throw DomainError("no ring declared");
    return rings.back();
}

Declarations parse_declarations(const std::string& text) {
    Declarations decls;
    TokenStream ts(text);
    while (!ts.at_end()) {
        const Token& t = ts.peek();
        if (t.kind != Tok::ident)
            throw ParseError("expected statement, got '" + t.text + "'", t.line, t.col);
        if (t.text == "ring") {
            decls.rings.push_back(parse_ring_stmt(ts));
        } else if (t.text == "ideal") {
            Token kw = ts.take();
            if (decls.rings.empty())
                throw ParseError("ideal declared before any ring", kw.line, kw.col);
            Token name = ts.expect_ident();
            for (const auto& id : decls.ideals)
                if (id.name == name.text)
                    throw ParseError("ideal '" + name.text + "' redeclared", name.line, name.col);
            ts.expect_sym("=");
            const PolyRing& ring = decls.rings.back();
            std::vector<Polynomial> gens;
            gens.push_back(parse_poly_expr(ts, ring));
            while (ts.at_sym(",")) {
                ts.take();
                gens.push_back(parse_poly_expr(ts, ring));
            }
            ts.expect_sym(";");
            decls.ideals.push_back({name.text, ring, std::move(gens)});
        } else {
            throw ParseError("unknown statement '" + t.text + "'", t.line, t.col);
        }
    }
    return decls;
}

Declarations parse_declarations_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_declarations(ss.str());
}

} // namespace conevanish
