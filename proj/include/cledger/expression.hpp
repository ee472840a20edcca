#pragma once

#include "cledger/constants.hpp"
#include "cledger/quantity.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cledger {

/// Expression tree over constant references, literals, products, rational
/// powers, sums and the unary functions sqrt and log10.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { reference, literal, product, power, sum, negate, sqrt_fn, log10_fn };

    Kind kind;
    std::string name;            // reference
    double literal = 0.0;        // literal
    std::vector<ExprPtr> children;
    Rational exponent;           // power

    static ExprPtr reference(std::string name);
    static ExprPtr literal_value(double v);
    static ExprPtr product(std::vector<ExprPtr> children);
    static ExprPtr power(ExprPtr child, Rational r);
    static ExprPtr sum(std::vector<ExprPtr> children);
    static ExprPtr negate(ExprPtr child);
    static ExprPtr sqrt_of(ExprPtr child);
    static ExprPtr log10_of(ExprPtr child);
};

/// Maximum tree depth accepted at evaluation (guards malformed registries).
inline constexpr int kMaxExpressionDepth = 32;

/// Parses the infix grammar: `*`, `/`, `^` with rational exponents,
/// `+`/`-`, `sqrt()`, `log10()`, parentheses, constant names, literals.
ExprPtr parse_expression(std::string_view text);

/// Bottom-up evaluation against a constants table. Throws Error for
/// unresolved references, dimension mismatches inside sums, non-real
/// powers and excessive depth.
Quantity eval_expression(const ExprPtr& expr, const ConstantsTable& table);

/// Names referenced anywhere in the tree, in first-appearance order.
std::vector<std::string> expression_references(const ExprPtr& expr);

} // namespace cledger
