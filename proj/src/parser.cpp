#include "lumbral/parser.hpp"

#include <cctype>
#include <sstream>

namespace lumbral {

namespace {

ExprPtr make(Expr::Kind k, ExprPtr l = nullptr, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
  public:
    Parser(const std::string& text, char var) : text_(text), var_(var) {}

    ExprPtr run() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    const std::string& text_;
    char var_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprPtr sum() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = make(Expr::Kind::Add, e, term());
            else if (eat('-'))
                e = make(Expr::Kind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (eat('*'))
                e = make(Expr::Kind::Mul, e, unary());
            else if (eat('/'))
                e = make(Expr::Kind::Div, e, unary());
            else
                return e;
        }
    }

    ExprPtr unary() {
        if (eat('-')) return make(Expr::Kind::Neg, unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr e = atom();
        if (!eat('^')) return e;
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("exponent must be a nonnegative integer literal", at);
        long exp = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            exp = exp * 10 + (text_[pos_] - '0');
            if (exp > 1000000) throw ParseError("exponent too large", at);
            ++pos_;
        }
        auto p = make(Expr::Kind::Pow, e);
        const_cast<Expr*>(p.get())->exponent = static_cast<int>(exp);
        return p;
    }

    ExprPtr atom() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", at);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                n = n * 10 + (text_[pos_++] - '0');
            auto e = make(Expr::Kind::Number);
            const_cast<Expr*>(e.get())->value = Rational(n);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "exp" || name == "log") {
                if (!eat('(')) throw ParseError("expected '(' after '" + name + "'", pos_);
                ExprPtr arg = sum();
                if (!eat(')')) throw ParseError("expected ')'", pos_);
                return make(name == "exp" ? Expr::Kind::Exp : Expr::Kind::Log, arg);
            }
            if (name.size() == 1 && name[0] == var_) {
                auto e = make(Expr::Kind::Var);
                const_cast<Expr*>(e.get())->var = var_;
                return e;
            }
            throw ParseError("unknown identifier '" + name + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
};

}  // namespace

ExprPtr expr_parse(const std::string& text, char var) { return Parser(text, var).run(); }

Series expr_eval(const Expr& e, char var, int order) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return series_constant(var, order, e.value);
        case Expr::Kind::Var:
            return series_monomial(var, order, 1);
        case Expr::Kind::Neg:
            return series_neg(expr_eval(*e.lhs, var, order));
        case Expr::Kind::Add:
            return series_add(expr_eval(*e.lhs, var, order), expr_eval(*e.rhs, var, order));
        case Expr::Kind::Sub:
            return series_sub(expr_eval(*e.lhs, var, order), expr_eval(*e.rhs, var, order));
        case Expr::Kind::Mul:
            return series_mul(expr_eval(*e.lhs, var, order), expr_eval(*e.rhs, var, order));
        case Expr::Kind::Div:
            return series_mul(expr_eval(*e.lhs, var, order),
                              series_reciprocal(expr_eval(*e.rhs, var, order)));
        case Expr::Kind::Pow:
            return series_pow(expr_eval(*e.lhs, var, order), e.exponent);
        case Expr::Kind::Exp:
            return series_exp(expr_eval(*e.lhs, var, order));
        case Expr::Kind::Log:
            return series_log(expr_eval(*e.lhs, var, order));
    }
    throw std::logic_error("expr_eval: bad node");
}

std::string expr_str(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return rat_str(e.value);
        case Expr::Kind::Var:
            return std::string(1, e.var);
        case Expr::Kind::Neg:
            return "(-" + expr_str(*e.lhs) + ")";
        case Expr::Kind::Add:
            return "(" + expr_str(*e.lhs) + " + " + expr_str(*e.rhs) + ")";
        case Expr::Kind::Sub:
            return "(" + expr_str(*e.lhs) + " - " + expr_str(*e.rhs) + ")";
        case Expr::Kind::Mul:
            return "(" + expr_str(*e.lhs) + " * " + expr_str(*e.rhs) + ")";
        case Expr::Kind::Div:
            return "(" + expr_str(*e.lhs) + " / " + expr_str(*e.rhs) + ")";
        case Expr::Kind::Pow:
            return "(" + expr_str(*e.lhs) + "^" + std::to_string(e.exponent) + ")";
        case Expr::Kind::Exp:
            return "exp(" + expr_str(*e.lhs) + ")";
        case Expr::Kind::Log:
            return "log(" + expr_str(*e.lhs) + ")";
    }
    throw std::logic_error("expr_str: bad node");
}

Series series_parse(const std::string& text, char var, int order) {
    return expr_eval(*expr_parse(text, var), var, order);
}

}  // namespace lumbral
