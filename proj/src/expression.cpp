#include "cledger/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace cledger {

ExprPtr Expr::reference(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::reference;
    e->name = std::move(name);
    return e;
}

ExprPtr Expr::literal_value(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::literal;
    e->literal = v;
    return e;
}

ExprPtr Expr::product(std::vector<ExprPtr> children) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::product;
    e->children = std::move(children);
    return e;
}

ExprPtr Expr::power(ExprPtr child, Rational r) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::power;
    e->children = {std::move(child)};
    e->exponent = r;
    return e;
}

ExprPtr Expr::sum(std::vector<ExprPtr> children) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::sum;
    e->children = std::move(children);
    return e;
}

ExprPtr Expr::negate(ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::negate;
    e->children = {std::move(child)};
    return e;
}

ExprPtr Expr::sqrt_of(ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::sqrt_fn;
    e->children = {std::move(child)};
    return e;
}

ExprPtr Expr::log10_of(ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::log10_fn;
    e->children = {std::move(child)};
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            throw Error("trailing characters in expression at offset " + std::to_string(pos_));
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    ExprPtr parse_sum() {
        std::vector<ExprPtr> terms;
        bool negate_first = consume('-');
        ExprPtr first = parse_term();
        terms.push_back(negate_first ? Expr::negate(first) : first);
        while (true) {
            if (consume('+')) terms.push_back(parse_term());
            else if (consume('-')) terms.push_back(Expr::negate(parse_term()));
            else break;
        }
        if (terms.size() == 1) return terms[0];
        return Expr::sum(std::move(terms));
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (true) {
            if (consume('*')) factors.push_back(parse_factor());
            else if (consume('/')) factors.push_back(Expr::power(parse_factor(), Rational(-1)));
            else break;
        }
        if (factors.size() == 1) return factors[0];
        return Expr::product(std::move(factors));
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_primary();
        if (consume('^')) return Expr::power(base, parse_rational());
        return base;
    }

    Rational parse_rational() {
        skip_ws();
        const bool parenthesized = consume('(');
        skip_ws();
        std::int64_t sign = 1;
        if (consume('-')) sign = -1;
        const std::int64_t num = sign * parse_integer();
        std::int64_t den = 1;
        // Only read a denominator when a digit follows the slash; otherwise
        // the slash is a division operator belonging to the enclosing term.
        if (peek() == '/') {
            const std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                den = parse_integer();
            else
                pos_ = save;
        }
        if (parenthesized && !consume(')'))
            throw Error("unbalanced parenthesis in exponent");
        return Rational(num, den);
    }

    std::int64_t parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw Error("expected integer at offset " + std::to_string(start));
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw Error("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            if (!consume(')')) throw Error("unbalanced parenthesis");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::string name = parse_name();
            if (name == "sqrt" || name == "log10") {
                if (!consume('(')) throw Error(name + " requires parentheses");
                ExprPtr arg = parse_sum();
                if (!consume(')')) throw Error("unbalanced parenthesis");
                return name == "sqrt" ? Expr::sqrt_of(arg) : Expr::log10_of(arg);
            }
            return Expr::reference(name);
        }
        throw Error(std::string("unexpected character '") + c + "' in expression");
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    ExprPtr parse_number() {
        const std::string rest(text_.substr(pos_));
        std::size_t used = 0;
        const double v = std::stod(rest, &used);
        pos_ += used;
        return Expr::literal_value(v);
    }
};

Quantity eval_node(const ExprPtr& expr, const ConstantsTable& table, int depth) {
    if (!expr) throw Error("empty expression");
    if (depth > kMaxExpressionDepth) throw Error("expression depth exceeds limit");
    switch (expr->kind) {
    case Expr::Kind::reference: {
        const Quantity* q = table.find(expr->name);
        if (!q) throw Error("unresolved reference: " + expr->name);
        return *q;
    }
    case Expr::Kind::literal:
        return Quantity(expr->literal);
    case Expr::Kind::product: {
        Quantity acc(1.0);
        for (const auto& c : expr->children) acc = acc * eval_node(c, table, depth + 1);
        return acc;
    }
    case Expr::Kind::power:
        return eval_node(expr->children[0], table, depth + 1).pow(expr->exponent);
    case Expr::Kind::sum: {
        Quantity acc = eval_node(expr->children[0], table, depth + 1);
        for (std::size_t i = 1; i < expr->children.size(); ++i)
            acc = acc + eval_node(expr->children[i], table, depth + 1);
        return acc;
    }
    case Expr::Kind::negate: {
        Quantity q = eval_node(expr->children[0], table, depth + 1);
        return Quantity(-q.magnitude(), q.dim());
    }
    case Expr::Kind::sqrt_fn:
        return eval_node(expr->children[0], table, depth + 1).sqrt();
    case Expr::Kind::log10_fn: {
        Quantity q = eval_node(expr->children[0], table, depth + 1);
        if (!q.dim().is_dimensionless())
            throw Error("log10 of a dimensional quantity: " + q.dim().str());
        if (q.magnitude() <= 0.0) throw Error("log10 of a non-positive magnitude");
        return Quantity(std::log10(q.magnitude()));
    }
    }
    throw Error("corrupt expression node");
}

void collect_references(const ExprPtr& expr, std::vector<std::string>& out) {
    if (!expr) return;
    if (expr->kind == Expr::Kind::reference) {
        for (const auto& n : out)
            if (n == expr->name) return;
        out.push_back(expr->name);
        return;
    }
    for (const auto& c : expr->children) collect_references(c, out);
}

} // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

Quantity eval_expression(const ExprPtr& expr, const ConstantsTable& table) {
    return eval_node(expr, table, 0);
}

std::vector<std::string> expression_references(const ExprPtr& expr) {
    std::vector<std::string> out;
    collect_references(expr, out);
    return out;
}

} // namespace cledger
