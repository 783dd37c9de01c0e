// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/parser.hpp"

#include <cctype>
#include <cfenv>
#include <cstdlib>
#include <map>
#include <sstream>

namespace boxsol {

namespace {

// Tightest enclosure of a decimal literal: strtod is correctly rounded and
// honors the dynamic rounding direction.
Interval tight_decimal(const std::string& text) {
    const int saved = std::fegetround();
    std::fesetround(FE_DOWNWARD);
    const double lo = std::strtod(text.c_str(), nullptr);
    std::fesetround(FE_UPWARD);
    const double hi = std::strtod(text.c_str(), nullptr);
    std::fesetround(saved);
    return Interval(lo, hi);
}

double directed_value(const std::string& text, bool downward) {
    const int saved = std::fegetround();
    std::fesetround(downward ? FE_DOWNWARD : FE_UPWARD);
    const double v = std::strtod(text.c_str(), nullptr);
    std::fesetround(saved);
    return v;
}

enum class Tok { end, ident, number, integer, sym };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    char sym = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    bool accept_sym(char c) {
        if (tok_.kind == Tok::sym && tok_.sym == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect_sym(char c, const char* what) {
        if (!accept_sym(c)) fail(std::string("expected '") + c + "' " + what);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col);
    }

private:
    void advance() {
        skip_space();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Tok::end;
            return;
        }
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            tok_.kind = Tok::ident;
            tok_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            std::size_t start = pos_;
            bool has_dot = false, has_exp = false;
            while (pos_ < src_.size()) {
                const char d = src_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    bump();
                } else if (d == '.' && !has_dot && !has_exp) {
                    has_dot = true;
                    bump();
                } else if ((d == 'e' || d == 'E') && !has_exp) {
                    has_exp = true;
                    bump();
                    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) bump();
                } else {
                    break;
                }
            }
            tok_.kind = (has_dot || has_exp) ? Tok::number : Tok::integer;
            tok_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        tok_.kind = Tok::sym;
        tok_.sym = c;
        bump();
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

const std::map<std::string, OpKind, std::less<>>& function_table() {
    static const std::map<std::string, OpKind, std::less<>> table = {
        {"sin", OpKind::sin},   {"cos", OpKind::cos},   {"tan", OpKind::tan},
        {"exp", OpKind::exp},   {"log", OpKind::log},   {"sinh", OpKind::sinh},
        {"cosh", OpKind::cosh}, {"tanh", OpKind::tanh}, {"sqrt", OpKind::sqrt},
    };
    return table;
}

class ExprParser {
public:
    ExprParser(Lexer& lex, Expr::Builder& b, const std::vector<std::string>& vars)
        : lex_(lex), b_(b), vars_(vars) {}

    std::int32_t parse_expr() {
        std::int32_t lhs = parse_term();
        while (true) {
            if (lex_.accept_sym('+')) {
                lhs = b_.binary(OpKind::add, lhs, parse_term());
            } else if (lex_.accept_sym('-')) {
                lhs = b_.binary(OpKind::sub, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

private:
    std::int32_t parse_term() {
        std::int32_t lhs = parse_factor();
        while (true) {
            if (lex_.accept_sym('*')) {
                lhs = b_.binary(OpKind::mul, lhs, parse_factor());
            } else if (lex_.accept_sym('/')) {
                lhs = b_.binary(OpKind::div, lhs, parse_factor());
            } else {
                return lhs;
            }
        }
    }

    std::int32_t parse_factor() {
        if (lex_.accept_sym('-')) return b_.unary(OpKind::neg, parse_factor());
        return parse_power();
    }

    std::int32_t parse_power() {
        const std::int32_t base = parse_primary();
        if (!lex_.accept_sym('^')) return base;
        const Token t = lex_.peek();
        if (t.kind != Tok::integer)
            lex_.fail("exponent must be a nonnegative integer literal");
        lex_.take();
        const long n = std::strtol(t.text.c_str(), nullptr, 10);
        if (n < 0 || n > 1000) lex_.fail("exponent out of range");
        return b_.pow(base, static_cast<std::int32_t>(n));
    }

    std::int32_t parse_primary() {
        const Token t = lex_.peek();
        if (t.kind == Tok::number || t.kind == Tok::integer) {
            lex_.take();
            return b_.constant(tight_decimal(t.text), t.text);
        }
        if (t.kind == Tok::ident) {
            lex_.take();
            if (lex_.accept_sym('(')) {
                const auto& fns = function_table();
                const auto it = fns.find(t.text);
                if (it == fns.end())
                    throw ParseError("unknown function '" + t.text + "'", t.line, t.col);
                const std::int32_t arg = parse_expr();
                lex_.expect_sym(')', "to close function argument");
                return b_.unary(it->second, arg);
            }
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == t.text) return b_.variable(static_cast<std::int32_t>(i));
            throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
        }
        if (t.kind == Tok::sym && t.sym == '(') {
            lex_.take();
            const std::int32_t e = parse_expr();
            lex_.expect_sym(')', "to close parenthesis");
            return e;
        }
        lex_.fail("expected a number, variable, function call or '('");
    }

    Lexer& lex_;
    Expr::Builder& b_;
    const std::vector<std::string>& vars_;
};

// domain bound: [-]number, or [-]inf
double parse_bound(Lexer& lex, bool is_lower) {
    bool negated = lex.accept_sym('-');
    const Token t = lex.peek();
    if (t.kind == Tok::ident && t.text == "inf") {
        lex.take();
        return negated ? -kInf : kInf;
    }
    if (t.kind != Tok::number && t.kind != Tok::integer) lex.fail("expected a numeric bound");
    lex.take();
    // round so the declared box is enclosed
    const bool downward = is_lower;
    const double v = directed_value((negated ? "-" : "") + t.text, downward);
    return v;
}

}  // namespace

Expr parse_expression(std::string_view text, const std::vector<std::string>& vars) {
    Lexer lex(text);
    Expr::Builder b;
    ExprParser p(lex, b, vars);
    const std::int32_t root = p.parse_expr();
    if (lex.peek().kind != Tok::end) lex.fail("unexpected trailing input");
    return b.finish(root);
}

ProblemFile parse_problem(std::string_view text) {
    Lexer lex(text);
    ProblemFile pf;
    std::vector<Expr> equations;
    std::vector<Interval> domains;

    while (lex.peek().kind != Tok::end) {
        const Token t = lex.peek();
        if (t.kind != Tok::ident) lex.fail("expected a statement keyword");
        if (t.text == "problem") {
            lex.take();
            const Token n = lex.take();
            if (n.kind != Tok::ident) throw ParseError("expected a problem name", n.line, n.col);
            pf.name = n.text;
            lex.expect_sym(';', "after problem name");
        } else if (t.text == "var") {
            lex.take();
            const Token n = lex.take();
            if (n.kind != Tok::ident)
                throw ParseError("expected a variable name", n.line, n.col);
            for (const auto& existing : pf.var_names)
                if (existing == n.text)
                    throw ParseError("duplicate variable '" + n.text + "'", n.line, n.col);
            const Token kw = lex.take();
            if (kw.kind != Tok::ident || kw.text != "in")
                throw ParseError("expected 'in'", kw.line, kw.col);
            lex.expect_sym('[', "to open the domain");
            const double lo = parse_bound(lex, true);
            lex.expect_sym(',', "between domain bounds");
            const double hi = parse_bound(lex, false);
            lex.expect_sym(']', "to close the domain");
            lex.expect_sym(';', "after variable declaration");
            if (!(lo <= hi))
                throw ParseError("empty initial domain for '" + n.text + "'", n.line, n.col);
            pf.var_names.push_back(n.text);
            domains.push_back(Interval(lo, hi));
        } else if (t.text == "eq") {
            lex.take();
            Expr::Builder b;
            ExprParser p(lex, b, pf.var_names);
            const std::int32_t lhs = p.parse_expr();
            lex.expect_sym('=', "in equation");
            const std::int32_t rhs = p.parse_expr();
            lex.expect_sym(';', "after equation");
            // keep `expr = 0` trees verbatim; fold other right-hand sides in
            Expr eq = b.is_zero(rhs) ? b.finish(lhs)
                                     : b.finish(b.binary(OpKind::sub, lhs, rhs));
            equations.push_back(std::move(eq));
        } else if (t.text == "meta") {
            lex.take();
            const Token key = lex.take();
            if (key.kind != Tok::ident) throw ParseError("expected a meta key", key.line, key.col);
            const Token val = lex.take();
            if (val.kind != Tok::integer)
                throw ParseError("expected an integer meta value", val.line, val.col);
            const long v = std::strtol(val.text.c_str(), nullptr, 10);
            if (key.text == "solutions") {
                pf.expected_solutions = v;
            } else if (key.text == "n") {
                pf.scale = v;
            } else {
                throw ParseError("unknown meta key '" + key.text + "'", key.line, key.col);
            }
            lex.expect_sym(';', "after meta value");
        } else {
            lex.fail("unknown statement '" + t.text + "'");
        }
    }

    if (equations.empty()) {
        ParseError err("problem has no equations", 1, 1);
        throw err;
    }
    if (equations.size() != pf.var_names.size()) {
        throw ParseError("system is not square: " + std::to_string(equations.size()) +
                             " equations over " + std::to_string(pf.var_names.size()) +
                             " variables",
                         1, 1);
    }
    for (std::size_t e = 0; e < equations.size(); ++e) {
        if (equations[e].max_var() >= static_cast<std::int32_t>(pf.var_names.size()))
            throw ParseError("equation references an undeclared variable", 1, 1);
    }
    pf.initial.domains = std::move(domains);
    pf.system = ExprSystem(pf.var_names.size(), pf.var_names, std::move(equations));
    return pf;
}

// --- unparse -----------------------------------------------------------------

namespace {

int precedence(OpKind k) {
    switch (k) {
        case OpKind::add:
        case OpKind::sub:
            return 1;
        case OpKind::mul:
        case OpKind::div:
            return 2;
        case OpKind::neg:
            return 3;
        case OpKind::pow_int:
            return 4;
        default:
            return 5;  // atoms and function calls
    }
}

void emit(std::ostream& os, const Expr& e, std::int32_t idx,
          const std::vector<std::string>& vars) {
    const ExprNode& n = e.node(idx);
    const int prec = precedence(n.kind);
    auto child = [&](std::int32_t c, bool strict) {
        const bool parens =
            strict ? precedence(e.node(c).kind) <= prec : precedence(e.node(c).kind) < prec;
        if (parens) os << '(';
        emit(os, e, c, vars);
        if (parens) os << ')';
    };
    switch (n.kind) {
        case OpKind::constant:
            os << n.text;
            return;
        case OpKind::variable:
            os << vars[static_cast<std::size_t>(n.var)];
            return;
        case OpKind::add:
        case OpKind::sub:
        case OpKind::mul:
        case OpKind::div:
            child(n.a, false);
            os << ' ' << op_name(n.kind) << ' ';
            child(n.b, true);
            return;
        case OpKind::neg:
            os << '-';
            child(n.a, false);
            return;
        case OpKind::pow_int:
            child(n.a, true);
            os << '^' << n.exponent;
            return;
        default:
            os << op_name(n.kind) << '(';
            emit(os, e, n.a, vars);
            os << ')';
            return;
    }
}

void emit_bound(std::ostream& os, double v) {
    if (v == kInf) {
        os << "inf";
        return;
    }
    if (v == -kInf) {
        os << "-inf";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

}  // namespace

std::string unparse(const Expr& e, const std::vector<std::string>& vars) {
    std::ostringstream os;
    emit(os, e, e.root(), vars);
    return os.str();
}

std::string unparse_problem(const ProblemFile& p) {
    std::ostringstream os;
    if (!p.name.empty()) os << "problem " << p.name << ";\n";
    if (p.scale) os << "meta n " << *p.scale << ";\n";
    if (p.expected_solutions) os << "meta solutions " << *p.expected_solutions << ";\n";
    for (std::size_t i = 0; i < p.var_names.size(); ++i) {
        os << "var " << p.var_names[i] << " in [";
        emit_bound(os, p.initial[i].lo());
        os << ", ";
        emit_bound(os, p.initial[i].hi());
        os << "];\n";
    }
    for (std::size_t e = 0; e < p.system.equation_count(); ++e)
        os << "eq " << unparse(p.system.equation(e), p.var_names) << " = 0;\n";
    return os.str();
}

}  // namespace boxsol
