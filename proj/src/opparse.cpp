#include "mhlab/opparse.hpp"

#include <cctype>
#include <memory>

namespace mhlab {

namespace {

struct Node {
    enum Kind { Num, Ident, Add, Sub, Mul, Div, Neg, Pow } kind;
    Rational num;
    std::string ident;
    std::unique_ptr<Node> lhs, rhs;
    long exp = 0;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw StructuralError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr e = term();
        while (true) {
            if (eat('+')) {
                NodePtr n = std::make_unique<Node>();
                n->kind = Node::Add;
                n->lhs = std::move(e);
                n->rhs = term();
                e = std::move(n);
            } else if (eat('-')) {
                NodePtr n = std::make_unique<Node>();
                n->kind = Node::Sub;
                n->lhs = std::move(e);
                n->rhs = term();
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    NodePtr term() {
        NodePtr e = factor();
        while (true) {
            if (eat('*')) {
                NodePtr n = std::make_unique<Node>();
                n->kind = Node::Mul;
                n->lhs = std::move(e);
                n->rhs = factor();
                e = std::move(n);
            } else if (eat('/')) {
                NodePtr n = std::make_unique<Node>();
                n->kind = Node::Div;
                n->lhs = std::move(e);
                n->rhs = factor();
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    NodePtr factor() {
        if (eat('-')) {
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Neg;
            n->lhs = factor();
            return n;
        }
        if (eat('+')) return factor();
        NodePtr e = atom();
        skip_ws();
        if (eat('^')) {
            bool neg = eat('-');
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("exponent expected");
            long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Pow;
            n->lhs = std::move(e);
            n->exp = neg ? -v : v;
            return n;
        }
        return e;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Num;
            n->num = Rational::parse(s_.substr(start, pos_ - start));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Ident;
            n->ident = s_.substr(start, pos_ - start);
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

RatFun eval_ratfun(const Node& n, const VarSetPtr& vars) {
    switch (n.kind) {
        case Node::Num:
            return RatFun::constant(vars, n.num);
        case Node::Ident: {
            if (vars->index_of(n.ident) < 0) throw StructuralError("unknown variable: " + n.ident);
            return RatFun::var(vars, n.ident);
        }
        case Node::Add:
            return eval_ratfun(*n.lhs, vars) + eval_ratfun(*n.rhs, vars);
        case Node::Sub:
            return eval_ratfun(*n.lhs, vars) - eval_ratfun(*n.rhs, vars);
        case Node::Mul:
            return eval_ratfun(*n.lhs, vars) * eval_ratfun(*n.rhs, vars);
        case Node::Div:
            return eval_ratfun(*n.lhs, vars) / eval_ratfun(*n.rhs, vars);
        case Node::Neg:
            return -eval_ratfun(*n.lhs, vars);
        case Node::Pow:
            return eval_ratfun(*n.lhs, vars).pow(n.exp);
    }
    throw InternalError("unreachable");
}

WeylOp eval_weylop(const Node& n, int m) {
    switch (n.kind) {
        case Node::Num:
            return WeylOp::constant(m, CoeffMode::Rational, n.num);
        case Node::Ident: {
            const std::string& id = n.ident;
            if (id.size() >= 2 && id[0] == 'd') {
                bool digits = true;
                for (size_t i = 1; i < id.size(); ++i)
                    digits = digits && std::isdigit(static_cast<unsigned char>(id[i]));
                if (digits) {
                    int idx = std::stoi(id.substr(1));
                    if (idx < 1 || idx > m) throw StructuralError("derivative index out of range: " + id);
                    return WeylOp::d(m, CoeffMode::Rational, idx - 1);
                }
            }
            VarSetPtr cv = VarSet::x_params(m);
            if (cv->index_of(id) < 0) throw StructuralError("unknown variable: " + id);
            return WeylOp::from_fun(RatFun::var(cv, id), m);
        }
        case Node::Add:
            return eval_weylop(*n.lhs, m) + eval_weylop(*n.rhs, m);
        case Node::Sub:
            return eval_weylop(*n.lhs, m) - eval_weylop(*n.rhs, m);
        case Node::Mul:
            return weyl_mul(eval_weylop(*n.lhs, m), eval_weylop(*n.rhs, m));
        case Node::Div: {
            WeylOp rhs = eval_weylop(*n.rhs, m);
            if (rhs.order() != 0)
                throw StructuralError("cannot divide by an operator with derivatives");
            auto it = rhs.terms().begin();
            RatFun f = it->second;
            return eval_weylop(*n.lhs, m).left_mul_fun(f.inv());
        }
        case Node::Neg:
            return -eval_weylop(*n.lhs, m);
        case Node::Pow: {
            WeylOp base = eval_weylop(*n.lhs, m);
            if (n.exp >= 0) return base.pow(n.exp);
            if (base.order() != 0)
                throw StructuralError("negative power of an operator with derivatives");
            RatFun f = base.terms().begin()->second;
            return WeylOp::from_fun(f.pow(n.exp), base.m());
        }
    }
    throw InternalError("unreachable");
}

}  // namespace

RatFun parse_ratfun(const std::string& text, const VarSetPtr& vars) {
    Parser p(text);
    NodePtr ast = p.parse();
    return eval_ratfun(*ast, vars);
}

MPoly parse_mpoly(const std::string& text, const VarSetPtr& vars) {
    RatFun r = parse_ratfun(text, vars);
    if (!r.is_polynomial()) throw StructuralError("expected a polynomial, got " + r.str());
    return r.num();
}

WeylOp parse_weylop(const std::string& text, int m) {
    Parser p(text);
    NodePtr ast = p.parse();
    return eval_weylop(*ast, m);
}

}  // namespace mhlab
