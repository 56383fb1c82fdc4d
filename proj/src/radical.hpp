#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace romanus {

// Immutable expression tree over exact rationals closed under +, -, *, /, and
// square roots.  Nodes are shared_ptr-shared and never mutated, so towers can
// reuse subtrees freely and evaluation is thread-safe.
//
// Canonical-form invariants (maintained by the factory functions and relied
// on by the printer so that parse(print(e)) reproduces the tree exactly):
//   * Sum and Product have at least two children, Quotient exactly two.
//   * A Sum carries one sign (+1/-1) per child and the first sign is +1;
//     "negative" expressions are a negative Literal, a Quotient/Sum that
//     absorbed the sign, or Product(Literal(-1), x).
//   * Quotient(Literal, Literal) with a nonzero denominator is folded into a
//     single rational Literal (the printed form "a/b" lexes as one literal).
enum class RadKind { Literal, Sqrt, Sum, Product, Quotient };

class RadicalExpr;
using RadicalPtr = std::shared_ptr<const RadicalExpr>;

class RadicalExpr {
  public:
    RadKind kind() const { return kind_; }
    // Literal only.
    const mpq_class& literal() const { return literal_; }
    // Sqrt: 1 child; Quotient: {numerator, denominator}; Sum/Product: >= 2.
    const std::vector<RadicalPtr>& children() const { return children_; }
    // Sum only: +1 or -1 per child, signs[0] == +1.
    const std::vector<int>& signs() const { return signs_; }
    // Longest root-to-leaf path length (a Literal has depth 1); used to pick
    // guard digits for evaluation.
    unsigned depth() const { return depth_; }

    static RadicalPtr make_literal(const mpq_class& v);
    static RadicalPtr make_sqrt(RadicalPtr radicand);
    static RadicalPtr make_sum(std::vector<RadicalPtr> children, std::vector<int> signs);
    static RadicalPtr make_product(std::vector<RadicalPtr> children);
    static RadicalPtr make_quotient(RadicalPtr num, RadicalPtr den);

  private:
    RadicalExpr() = default;
    RadKind kind_ = RadKind::Literal;
    mpq_class literal_;
    std::vector<RadicalPtr> children_;
    std::vector<int> signs_;
    unsigned depth_ = 1;
};

// Recursive-descent parser for the surface syntax
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := RATIONAL | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
//   RATIONAL := INTEGER ['/' INTEGER]        (folded to one Literal)
// The Unicode radical sign U+221A is accepted as an input alias for 'sqrt'.
// Throws Error(Syntax) carrying the byte offset and the expected tokens.
RadicalPtr parse_radical(std::string_view text);

// Canonical printer: '+'/'-' spaced, '*', '/' and 'sqrt' tight, parentheses
// only where the grammar requires them.  parse_radical(print_radical(e))
// is structurally identical to e.
std::string print_radical(const RadicalPtr& e);

bool structurally_equal(const RadicalPtr& a, const RadicalPtr& b);

// Structural negation: fold the sign into a Literal, push it through a Sum
// (flip the non-leading signs, rotating a positive term to the front) or a
// Quotient's numerator, and fall back to Product(Literal(-1), e).
RadicalPtr negate(const RadicalPtr& e);

// e / 2 in the shape the reference tables use: halving a Literal or a
// Quotient-with-literal-denominator folds exactly; a Sum halves each term;
// anything else becomes Quotient(e, 2).  Used to turn 2cos/2sin values into
// cos/sin values.
RadicalPtr halve(const RadicalPtr& e);

}  // namespace romanus
