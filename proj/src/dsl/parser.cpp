#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>

#include "dsl/ast.hpp"

namespace geo::dsl {

namespace {

struct Token {
    enum Kind { Ident, Number, LParen, RParen, Comma, Eq, EqEq, Str, End } kind;
    std::string text;
    double num = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : s_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= s_.size()) {
            t.kind = Token::End;
            return t;
        }
        char c = s_[pos_];
        if (c == '(') { advance(); t.kind = Token::LParen; t.text = "("; return t; }
        if (c == ')') { advance(); t.kind = Token::RParen; t.text = ")"; return t; }
        if (c == ',') { advance(); t.kind = Token::Comma; t.text = ","; return t; }
        if (c == '=') {
            advance();
            if (pos_ < s_.size() && s_[pos_] == '=') { advance(); t.kind = Token::EqEq; t.text = "=="; }
            else { t.kind = Token::Eq; t.text = "="; }
            return t;
        }
        if (c == '"') {
            advance();
            std::string out;
            while (pos_ < s_.size() && s_[pos_] != '"') { out += s_[pos_]; advance(); }
            if (pos_ < s_.size()) advance();
            t.kind = Token::Str;
            t.text = out;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            size_t start = pos_;
            if (c == '-' || c == '+') advance();
            bool any = false;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
                any = true;
                advance();
            }
            if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
                advance();
                if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) advance();
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    advance();
            }
            if (!any) throw ParseError(t.line, t.col, "number", std::string(1, c));
            t.kind = Token::Number;
            t.text = s_.substr(start, pos_ - start);
            t.num = std::strtod(t.text.c_str(), nullptr);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_' || s_[pos_] == '\''))
                advance();
            t.kind = Token::Ident;
            t.text = s_.substr(start, pos_ - start);
            return t;
        }
        throw ParseError(line_, col_, "token", std::string(1, c));
    }

private:
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
    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) { bump(); }

    Script run() {
        Script out;
        while (cur_.kind != Token::End) out.stmts.push_back(stmt());
        validate(out);
        return out;
    }

private:
    void bump() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(cur_.line, cur_.col, expected,
                         cur_.kind == Token::End ? "<end>" : cur_.text);
    }

    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k) fail(what);
        bump();
    }

    std::string ident(const std::string& what) {
        if (cur_.kind != Token::Ident) fail(what);
        std::string s = cur_.text;
        bump();
        return s;
    }

    double number(const std::string& what) {
        if (cur_.kind != Token::Number) fail(what);
        double v = cur_.num;
        bump();
        return v;
    }

    Stmt stmt() {
        Stmt st;
        st.line = cur_.line;
        if (cur_.kind != Token::Ident) fail("statement");
        if (cur_.text == "free") {
            bump();
            st.kind = Stmt::Free;
            st.free = free_decl();
            return st;
        }
        if (cur_.text == "solve") {
            bump();
            st.kind = Stmt::Solve;
            st.solve.name = ident("parameter name");
            if (cur_.kind != Token::Ident || cur_.text != "in") fail("'in'");
            bump();
            expect(Token::LParen, "'('");
            st.solve.lo = number("interval low");
            expect(Token::Comma, "','");
            st.solve.hi = number("interval high");
            expect(Token::RParen, "')'");
            if (cur_.kind != Token::Ident || cur_.text != "st") fail("'st'");
            bump();
            st.solve.cond = expr();
            expect(Token::EqEq, "'=='");
            double z = number("0");
            if (z != 0) throw ParseError(st.line, cur_.col, "'0'", "nonzero");
            return st;
        }
        if (cur_.text == "assert") {
            bump();
            st.kind = Stmt::Assert;
            Expr e = expr();
            if (e.kind != Expr::Call)
                throw ParseError(st.line, 1, "predicate call", e.name);
            st.assertion.pred = e;
            if (cur_.kind == Token::Str) {
                st.assertion.label = cur_.text;
                bump();
            }
            return st;
        }
        // binding
        st.kind = Stmt::Let;
        st.let.name = ident("name");
        expect(Token::Eq, "'='");
        st.let.expr = expr();
        return st;
    }

    FreeDecl free_decl() {
        FreeDecl d;
        std::string kind = ident("free kind");
        if (kind == "point") {
            d.kind = FreeDecl::Point;
            d.names.push_back(ident("name"));
            if (cur_.kind != Token::Ident || cur_.text != "in") fail("'in'");
            bump();
            if (cur_.kind != Token::Ident || cur_.text != "box") fail("'box'");
            bump();
            expect(Token::LParen, "'('");
            d.lo = number("low");
            expect(Token::Comma, "','");
            d.hi = number("high");
            expect(Token::RParen, "')'");
        } else if (kind == "scalar") {
            d.kind = FreeDecl::Scalar;
            d.names.push_back(ident("name"));
            if (cur_.kind != Token::Ident || cur_.text != "in") fail("'in'");
            bump();
            expect(Token::LParen, "'('");
            d.lo = number("low");
            expect(Token::Comma, "','");
            d.hi = number("high");
            expect(Token::RParen, "')'");
        } else if (kind == "triangle") {
            d.kind = FreeDecl::Triangle;
            for (int i = 0; i < 3; ++i) d.names.push_back(ident("vertex name"));
            if (cur_.kind == Token::Ident && cur_.text == "min_angle") {
                bump();
                d.min_angle = number("angle");
            }
        } else if (kind == "cyclic_quad" || kind == "tangential_quad" ||
                   kind == "bicentric_quad") {
            d.kind = kind == "cyclic_quad" ? FreeDecl::CyclicQuad
                     : kind == "tangential_quad" ? FreeDecl::TangentialQuad
                                                 : FreeDecl::BicentricQuad;
            for (int i = 0; i < 4; ++i) d.names.push_back(ident("vertex name"));
        } else {
            throw ParseError(cur_.line, cur_.col,
                             "point|scalar|triangle|cyclic_quad|tangential_quad|bicentric_quad",
                             kind);
        }
        return d;
    }

    Expr expr() {
        Expr e;
        if (cur_.kind == Token::LParen) {
            // point literal
            bump();
            e.kind = Expr::PointLit;
            e.px = number("x coordinate");
            expect(Token::Comma, "','");
            e.py = number("y coordinate");
            expect(Token::RParen, "')'");
            return e;
        }
        if (cur_.kind == Token::Number) {
            e.kind = Expr::Num;
            e.num = cur_.num;
            bump();
            return e;
        }
        if (cur_.kind != Token::Ident) fail("expression");
        std::string name = cur_.text;
        bump();
        if (cur_.kind == Token::LParen) {
            bump();
            e.kind = Expr::Call;
            e.name = name;
            if (cur_.kind != Token::RParen) {
                e.args.push_back(expr());
                while (cur_.kind == Token::Comma) {
                    bump();
                    e.args.push_back(expr());
                }
            }
            expect(Token::RParen, "')'");
            return e;
        }
        e.kind = Expr::Ref;
        e.name = name;
        return e;
    }

    // ---- static validation ----
    void validate(const Script& s) {
        std::set<std::string> all_names;
        int solves = 0;
        for (const auto& st : s.stmts) {
            std::vector<std::string> introduced;
            if (st.kind == Stmt::Free) introduced = st.free.names;
            if (st.kind == Stmt::Let) introduced = {st.let.name};
            if (st.kind == Stmt::Solve) { introduced = {st.solve.name}; ++solves; }
            for (const auto& n : introduced) {
                if (is_reserved_word(n) || find_builtin(n))
                    throw ParseError(st.line, 1, "unreserved name", n);
                if (!all_names.insert(n).second)
                    throw ParseError(st.line, 1, "unique name", n);
            }
        }
        if (solves > 1) throw ParseError(1, 1, "at most one solve clause", "second solve");

        std::set<std::string> defined;
        for (const auto& st : s.stmts) {
            switch (st.kind) {
                case Stmt::Free:
                    for (const auto& n : st.free.names) defined.insert(n);
                    break;
                case Stmt::Let:
                    check_expr(st.let.expr, defined, st.line);
                    defined.insert(st.let.name);
                    break;
                case Stmt::Solve: {
                    // the condition may reference any script name (it is
                    // evaluated with the parameter bound)
                    defined.insert(st.solve.name);
                    check_expr(st.solve.cond, all_names, st.line);
                    break;
                }
                case Stmt::Assert:
                    check_expr(st.assertion.pred, all_names, st.line);
                    if (st.assertion.pred.kind != Expr::Call)
                        throw ParseError(st.line, 1, "predicate call", "expression");
                    break;
            }
        }
    }

    void check_expr(const Expr& e, const std::set<std::string>& defined, int line) {
        if (e.kind == Expr::Ref) {
            if (!defined.count(e.name))
                throw ParseError(line, 1, "defined name (UseBeforeDefinition)", e.name);
            return;
        }
        if (e.kind != Expr::Call) return;
        const BuiltinSig* sig = find_builtin(e.name);
        if (!sig) throw ParseError(line, 1, "known builtin (UnknownBuiltin)", e.name);
        int n = static_cast<int>(e.args.size());
        if (n < sig->min_arity || (sig->max_arity >= 0 && n > sig->max_arity))
            throw ParseError(line, 1,
                             "arity " + std::to_string(sig->min_arity) +
                                 (sig->max_arity < 0 ? "+"
                                  : sig->max_arity != sig->min_arity
                                      ? ".." + std::to_string(sig->max_arity)
                                      : "") +
                                 " for " + e.name + " (ArityMismatch)",
                             std::to_string(n) + " args");
        for (int i = 0; i < n; ++i) {
            const Expr& a = e.args[i];
            bool enum_pos = i < 32 && (sig->enum_mask >> i) & 1u;
            if (enum_pos) {
                if (a.kind != Expr::Ref || !is_enum_word(a.name))
                    throw ParseError(line, 1, "selector keyword for " + e.name,
                                     a.kind == Expr::Ref ? a.name : "expression");
                continue;
            }
            if (a.kind == Expr::Ref && is_enum_word(a.name))
                throw ParseError(line, 1, "value argument for " + e.name, a.name);
            check_expr(a, defined, line);
        }
    }

    Lexer lex_;
    Token cur_;
};

}  // namespace

Script parse(const std::string& source) { return Parser(source).run(); }

}  // namespace geo::dsl
