#pragma once

#include "folia/plane.hpp"

#include <memory>
#include <set>
#include <variant>

namespace folia {

struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& what, size_t p)
        : Error(what + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

/// Expression AST for the CLI surface language.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Num, Sym, Diff, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Rational num;       // Num
    std::string name;   // Sym / Diff
    ExprPtr lhs, rhs;   // binary; Neg/Pow use lhs
    int exp = 0;        // Pow

    static ExprPtr number(Rational v) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Num;
        e->num = std::move(v);
        return e;
    }
    static ExprPtr sym(std::string n) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Sym;
        e->name = std::move(n);
        return e;
    }
    static ExprPtr diff(std::string n) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Diff;
        e->name = std::move(n);
        return e;
    }
    static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static ExprPtr neg(ExprPtr a) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Neg;
        e->lhs = std::move(a);
        return e;
    }
    static ExprPtr pow(ExprPtr a, int k) {
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Pow;
        e->lhs = std::move(a);
        e->exp = k;
        return e;
    }
};

/// Canonical printer; print . parse . print is the identity.
inline std::string print_expr(const ExprPtr& e, int level = 0) {
    using K = Expr::Kind;
    auto wrap = [&](const std::string& s, int prec) { return prec < level ? "(" + s + ")" : s; };
    switch (e->kind) {
        case K::Num: {
            std::string s = e->num.str();
            bool atomic = e->num.sign() >= 0 && e->num.is_integer();
            return wrap(s, atomic ? 4 : (e->num.sign() < 0 ? 1 : 2));
        }
        case K::Sym:
        case K::Diff:
            return e->name;
        case K::Add:
            return wrap(print_expr(e->lhs, 1) + " + " + print_expr(e->rhs, 2), 1);
        case K::Sub:
            return wrap(print_expr(e->lhs, 1) + " - " + print_expr(e->rhs, 2), 1);
        case K::Mul:
            return wrap(print_expr(e->lhs, 2) + "*" + print_expr(e->rhs, 3), 2);
        case K::Div:
            return wrap(print_expr(e->lhs, 2) + "/" + print_expr(e->rhs, 3), 2);
        case K::Neg:
            return wrap("-" + print_expr(e->lhs, 3), 2);
        case K::Pow:
            return wrap(print_expr(e->lhs, 4) + "^" + std::to_string(e->exp), 3);
    }
    throw Error("print_expr: bad node");
}

namespace detail {

struct Token {
    enum class T { Num, Ident, Op, End } type;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    std::string s_;
    size_t i_ = 0;
    Token tok_;

    void advance() {
        while (i_ < s_.size() && isspace((unsigned char)s_[i_])) ++i_;
        if (i_ >= s_.size()) { tok_ = {Token::T::End, "", i_}; return; }
        char c = s_[i_];
        size_t start = i_;
        if (isdigit((unsigned char)c)) {
            while (i_ < s_.size() && isdigit((unsigned char)s_[i_])) ++i_;
            tok_ = {Token::T::Num, s_.substr(start, i_ - start), start};
        } else if (isalpha((unsigned char)c) || c == '_') {
            while (i_ < s_.size() && (isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) ++i_;
            tok_ = {Token::T::Ident, s_.substr(start, i_ - start), start};
        } else if (std::string("+-*/^()[]:,").find(c) != std::string::npos) {
            ++i_;
            tok_ = {Token::T::Op, std::string(1, c), start};
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
        }
    }
};

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : lex_(s) {}

    ExprPtr parse_full() {
        ExprPtr e = expr();
        expect_end();
        return e;
    }
    ExprPtr expr() {
        ExprPtr e = term();
        while (is_op("+") || is_op("-")) {
            std::string op = lex_.next().text;
            e = Expr::binary(op == "+" ? Expr::Kind::Add : Expr::Kind::Sub, e, term());
        }
        return e;
    }
    std::vector<ExprPtr> map_components(bool* projective) {
        if (is_op("[")) {
            lex_.next();
            std::vector<ExprPtr> comps{expr()};
            while (is_op(":")) {
                lex_.next();
                comps.push_back(expr());
            }
            expect_op("]");
            expect_end();
            *projective = true;
            return comps;
        }
        expect_op("(");
        std::vector<ExprPtr> comps{expr()};
        expect_op(",");
        comps.push_back(expr());
        expect_op(")");
        expect_end();
        *projective = false;
        return comps;
    }

private:
    Lexer lex_;

    bool is_op(const std::string& o) const {
        return lex_.peek().type == Token::T::Op && lex_.peek().text == o;
    }
    void expect_op(const std::string& o) {
        if (!is_op(o)) throw ParseError("expected '" + o + "'", lex_.peek().pos);
        lex_.next();
    }
    void expect_end() {
        if (lex_.peek().type != Token::T::End)
            throw ParseError("trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (is_op("*") || is_op("/")) {
            std::string op = lex_.next().text;
            e = Expr::binary(op == "*" ? Expr::Kind::Mul : Expr::Kind::Div, e, factor());
        }
        return e;
    }
    ExprPtr factor() {
        if (is_op("-")) {
            lex_.next();
            return Expr::neg(factor());
        }
        ExprPtr a = atom();
        if (is_op("^")) {
            lex_.next();
            bool neg = false;
            if (is_op("-")) { lex_.next(); neg = true; }
            Token t = lex_.next();
            if (t.type != Token::T::Num) throw ParseError("expected integer exponent", t.pos);
            int e = std::stoi(t.text);
            return Expr::pow(a, neg ? -e : e);
        }
        return a;
    }
    ExprPtr atom() {
        Token t = lex_.peek();
        if (t.type == Token::T::Num) {
            lex_.next();
            return Expr::number(Rational(BigInt(t.text)));
        }
        if (t.type == Token::T::Ident) {
            lex_.next();
            if (t.text == "dx" || t.text == "dy" || t.text == "dz") return Expr::diff(t.text);
            return Expr::sym(t.text);
        }
        if (is_op("(")) {
            lex_.next();
            ExprPtr e = expr();
            expect_op(")");
            return e;
        }
        throw ParseError("expected a value", t.pos);
    }
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) {
    return detail::ExprParser(text).parse_full();
}

/// Evaluated expression: scalar part plus dx/dy/dz coefficients, all exact
/// rational functions.
struct FormValue {
    RatFunc s;
    std::array<RatFunc, 3> d;

    bool is_scalar() const { return d[0].is_zero() && d[1].is_zero() && d[2].is_zero(); }
    bool is_form() const { return s.is_zero() && !is_scalar(); }
};

/// Declared-parameter environment for evaluation. Coordinates x, y, z are
/// always in scope; any other identifier must be declared.
class EvalEnv {
public:
    EvalEnv() = default;
    explicit EvalEnv(const std::vector<std::string>& params) {
        for (auto& p : params) declare(p);
    }
    void declare(const std::string& name) {
        if (name == "x" || name == "y" || name == "z" || name == "dx" || name == "dy" || name == "dz")
            throw Error("parameter name '" + name + "' is reserved");
        params_.insert(name);
        param(name);  // fix the registration order now
    }
    bool declared(const std::string& name) const { return params_.count(name) > 0; }
    std::vector<std::string> names() const { return {params_.begin(), params_.end()}; }

    FormValue eval(const ExprPtr& e) const {
        using K = Expr::Kind;
        switch (e->kind) {
            case K::Num: return scalar(RatFunc(Poly::constant(scalar_rat(e->num))));
            case K::Sym: {
                if (e->name == "x") return scalar(RatFunc(poly_x()));
                if (e->name == "y") return scalar(RatFunc(poly_y()));
                if (e->name == "z") return scalar(RatFunc(poly_z()));
                if (!declared(e->name)) throw Error("undeclared identifier '" + e->name + "' (declare with --params)");
                return scalar(RatFunc(poly_param(e->name)));
            }
            case K::Diff: {
                FormValue v;
                v.d[e->name == "dx" ? 0 : e->name == "dy" ? 1 : 2] = RatFunc(poly_int(1));
                return v;
            }
            case K::Add: return combine(eval(e->lhs), eval(e->rhs), +1);
            case K::Sub: return combine(eval(e->lhs), eval(e->rhs), -1);
            case K::Neg: {
                FormValue a = eval(e->lhs);
                a.s = -a.s;
                for (auto& c : a.d) c = -c;
                return a;
            }
            case K::Mul: {
                FormValue a = eval(e->lhs), b = eval(e->rhs);
                if (!a.is_scalar() && !b.is_scalar())
                    throw Error("cannot multiply two differential forms");
                const FormValue& f = a.is_scalar() ? b : a;
                const RatFunc& c = a.is_scalar() ? a.s : b.s;
                FormValue r;
                r.s = f.s * c;
                for (int i = 0; i < 3; ++i) r.d[i] = f.d[i] * c;
                return r;
            }
            case K::Div: {
                FormValue a = eval(e->lhs), b = eval(e->rhs);
                if (!b.is_scalar()) throw Error("cannot divide by a differential form");
                if (b.s.is_zero()) throw Error("division by zero");
                FormValue r;
                r.s = a.s / b.s;
                for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] / b.s;
                return r;
            }
            case K::Pow: {
                FormValue a = eval(e->lhs);
                if (!a.is_scalar()) throw Error("cannot raise a differential form to a power");
                return scalar(a.s.pow(e->exp));
            }
        }
        throw Error("eval: bad node");
    }

private:
    std::set<std::string> params_;

    static FormValue scalar(RatFunc f) {
        FormValue v;
        v.s = std::move(f);
        return v;
    }
    static FormValue combine(FormValue a, const FormValue& b, int sg) {
        RatFunc s = sg > 0 ? a.s + b.s : a.s - b.s;
        FormValue r;
        r.s = s;
        for (int i = 0; i < 3; ++i) r.d[i] = sg > 0 ? a.d[i] + b.d[i] : a.d[i] - b.d[i];
        return r;
    }
};

inline Poly parse_poly(const std::string& text, const EvalEnv& env = EvalEnv()) {
    FormValue v = env.eval(parse_expr(text));
    if (!v.is_scalar()) throw Error("parse_poly: expression contains differentials");
    if (!v.s.is_polynomial()) throw Error("parse_poly: expression is not polynomial");
    return v.s.num();
}

inline RatFunc parse_ratfunc(const std::string& text, const EvalEnv& env = EvalEnv()) {
    FormValue v = env.eval(parse_expr(text));
    if (!v.is_scalar()) throw Error("parse_ratfunc: expression contains differentials");
    return v.s;
}

inline PPoly parse_constraint(const std::string& text, const EvalEnv& env) {
    Poly p = parse_poly(text, env);
    if (!p.is_constant()) throw Error("constraint must involve parameters only");
    Scalar s = p.is_zero() ? Scalar() : p.constant_value();
    if (!s.is_polynomial()) throw Error("constraint must be polynomial in the parameters");
    return s.num();
}

/// Projective 1-form from text: denominators cleared, content extracted,
/// Euler relation enforced.
inline ProjForm parse_proj_form(const std::string& text, const EvalEnv& env = EvalEnv()) {
    FormValue v = env.eval(parse_expr(text));
    if (!v.s.is_zero()) throw Error("parse_form: expression has a non-form scalar part");
    if (v.is_scalar()) throw Error("parse_form: no differentials present");
    Poly l = poly_int(1);
    for (auto& c : v.d) l = Poly::lcm(l, c.den());
    std::array<Poly, 3> num;
    for (int i = 0; i < 3; ++i) num[i] = v.d[i].num() * *Poly::div_exact(l, v.d[i].den());
    auto cs = content_and_primitive({num[0], num[1], num[2]});
    ProjForm w(cs.primitives[0], cs.primitives[1], cs.primitives[2]);
    w.canonicalize();
    return w;
}

inline AffineForm parse_affine_form(const std::string& text, const EvalEnv& env = EvalEnv()) {
    FormValue v = env.eval(parse_expr(text));
    if (!v.s.is_zero()) throw Error("parse_form: expression has a non-form scalar part");
    if (!v.d[2].is_zero()) throw Error("parse_form: affine form cannot carry dz");
    return AffineForm::from_rational(v.d[0], v.d[1]);
}

/// Map literal: "[P : Q : R]" (projective, exactly three components) or
/// "(f, g)" (affine).
inline std::variant<ProjMap, AffineMap> parse_map(const std::string& text,
                                                  const EvalEnv& env = EvalEnv()) {
    detail::ExprParser p(text);
    bool projective = false;
    std::vector<ExprPtr> comps = p.map_components(&projective);
    if (projective) {
        if (comps.size() != 3)
            throw Error("projective map needs exactly 3 components, got " + std::to_string(comps.size()));
        std::array<RatFunc, 3> f;
        for (int i = 0; i < 3; ++i) {
            FormValue v = env.eval(comps[i]);
            if (!v.is_scalar()) throw Error("parse_map: differentials in map component");
            f[i] = v.s;
        }
        Poly l = poly_int(1);
        for (auto& c : f) l = Poly::lcm(l, c.den());
        std::array<Poly, 3> num;
        for (int i = 0; i < 3; ++i) num[i] = f[i].num() * *Poly::div_exact(l, f[i].den());
        return ProjMap(num[0], num[1], num[2]);
    }
    FormValue v1 = env.eval(comps[0]), v2 = env.eval(comps[1]);
    if (!v1.is_scalar() || !v2.is_scalar()) throw Error("parse_map: differentials in map component");
    return AffineMap(v1.s, v2.s);
}

}  // namespace folia
