#include "radical.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <utility>

#include "error.hpp"

namespace romanus {

namespace {

unsigned max_child_depth(const std::vector<RadicalPtr>& ch) {
    unsigned d = 0;
    for (const auto& c : ch) d = std::max(d, c->depth());
    return d;
}

}  // namespace

RadicalPtr RadicalExpr::make_literal(const mpq_class& v) {
    RadicalExpr* e = new RadicalExpr();
    e->kind_ = RadKind::Literal;
    e->literal_ = v;
    e->literal_.canonicalize();
    e->depth_ = 1;
    return RadicalPtr(e);
}

RadicalPtr RadicalExpr::make_sqrt(RadicalPtr radicand) {
    assert(radicand);
    RadicalExpr* e = new RadicalExpr();
    e->kind_ = RadKind::Sqrt;
    e->depth_ = radicand->depth() + 1;
    e->children_.push_back(std::move(radicand));
    return RadicalPtr(e);
}

RadicalPtr RadicalExpr::make_sum(std::vector<RadicalPtr> children, std::vector<int> signs) {
    assert(children.size() >= 2);
    assert(children.size() == signs.size());
    assert(signs[0] == +1);
    for (int s : signs) assert(s == +1 || s == -1), (void)s;
    // Subtracting a negative literal reads (and reparses) better as adding
    // the positive one: both spellings land on this canonical tree.
    for (std::size_t i = 1; i < children.size(); ++i) {
        if (signs[i] == -1 && children[i]->kind() == RadKind::Literal &&
            sgn(children[i]->literal()) < 0) {
            signs[i] = +1;
            children[i] = make_literal(-children[i]->literal());
        }
    }
    RadicalExpr* e = new RadicalExpr();
    e->kind_ = RadKind::Sum;
    e->depth_ = max_child_depth(children) + 1;
    e->children_ = std::move(children);
    e->signs_ = std::move(signs);
    return RadicalPtr(e);
}

RadicalPtr RadicalExpr::make_product(std::vector<RadicalPtr> children) {
    assert(children.size() >= 2);
    RadicalExpr* e = new RadicalExpr();
    e->kind_ = RadKind::Product;
    e->depth_ = max_child_depth(children) + 1;
    e->children_ = std::move(children);
    return RadicalPtr(e);
}

RadicalPtr RadicalExpr::make_quotient(RadicalPtr num, RadicalPtr den) {
    assert(num && den);
    // Literal/Literal collapses to one rational Literal (the printed "a/b"
    // lexes back as a single literal, so keeping the node would break the
    // print/parse round trip).  A zero denominator stays symbolic and fails
    // at evaluation time instead.
    if (num->kind() == RadKind::Literal && den->kind() == RadKind::Literal &&
        sgn(den->literal()) != 0) {
        return make_literal(num->literal() / den->literal());
    }
    RadicalExpr* e = new RadicalExpr();
    e->kind_ = RadKind::Quotient;
    e->depth_ = std::max(num->depth(), den->depth()) + 1;
    e->children_.push_back(std::move(num));
    e->children_.push_back(std::move(den));
    return RadicalPtr(e);
}

bool structurally_equal(const RadicalPtr& a, const RadicalPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case RadKind::Literal:
            return a->literal() == b->literal();
        case RadKind::Sum:
            if (a->signs() != b->signs()) return false;
            [[fallthrough]];
        default: {
            if (a->children().size() != b->children().size()) return false;
            for (std::size_t i = 0; i < a->children().size(); ++i) {
                if (!structurally_equal(a->children()[i], b->children()[i])) return false;
            }
            return true;
        }
    }
}

RadicalPtr negate(const RadicalPtr& e) {
    switch (e->kind()) {
        case RadKind::Literal:
            return RadicalExpr::make_literal(-e->literal());
        case RadKind::Sum: {
            std::vector<RadicalPtr> ch = e->children();
            std::vector<int> sg = e->signs();
            for (int& s : sg) s = -s;
            // Restore the leading-plus invariant: rotate a positive term to
            // the front, or push the sign into the first child.
            auto it = std::find(sg.begin(), sg.end(), +1);
            if (it != sg.end()) {
                std::size_t i = static_cast<std::size_t>(it - sg.begin());
                std::rotate(ch.begin(), ch.begin() + i, ch.end());
                std::rotate(sg.begin(), sg.begin() + i, sg.end());
            } else {
                ch[0] = negate(ch[0]);
                sg[0] = +1;
            }
            return RadicalExpr::make_sum(std::move(ch), std::move(sg));
        }
        case RadKind::Quotient:
            return RadicalExpr::make_quotient(negate(e->children()[0]), e->children()[1]);
        case RadKind::Product: {
            std::vector<RadicalPtr> ch = e->children();
            if (ch[0]->kind() == RadKind::Literal) {
                mpq_class c = -ch[0]->literal();
                if (c == 1 && ch.size() == 2) return ch[1];
                if (c == 1) return RadicalExpr::make_product({ch.begin() + 1, ch.end()});
                ch[0] = RadicalExpr::make_literal(c);
                return RadicalExpr::make_product(std::move(ch));
            }
            std::vector<RadicalPtr> flat;
            flat.push_back(RadicalExpr::make_literal(-1));
            flat.insert(flat.end(), ch.begin(), ch.end());
            return RadicalExpr::make_product(std::move(flat));
        }
        case RadKind::Sqrt:
            return RadicalExpr::make_product({RadicalExpr::make_literal(-1), e});
    }
    return e;  // unreachable
}

RadicalPtr halve(const RadicalPtr& e) {
    const auto two = RadicalExpr::make_literal(2);
    switch (e->kind()) {
        case RadKind::Literal:
            return RadicalExpr::make_literal(e->literal() / 2);
        case RadKind::Sum: {
            std::vector<RadicalPtr> ch;
            ch.reserve(e->children().size());
            for (const auto& c : e->children()) ch.push_back(halve(c));
            return RadicalExpr::make_sum(std::move(ch), e->signs());
        }
        case RadKind::Quotient:
            if (e->children()[1]->kind() == RadKind::Literal) {
                return RadicalExpr::make_quotient(
                    e->children()[0],
                    RadicalExpr::make_literal(e->children()[1]->literal() * 2));
            }
            return RadicalExpr::make_quotient(e, two);
        case RadKind::Product:
            if (e->children()[0]->kind() == RadKind::Literal) {
                std::vector<RadicalPtr> ch = e->children();
                ch[0] = RadicalExpr::make_literal(ch[0]->literal() / 2);
                return RadicalExpr::make_product(std::move(ch));
            }
            return RadicalExpr::make_quotient(e, two);
        case RadKind::Sqrt:
            return RadicalExpr::make_quotient(e, two);
    }
    return e;  // unreachable
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Integer, SqrtKw, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;  // Integer only
    std::size_t offset;
};

const char* token_label(Tok t) {
    switch (t) {
        case Tok::Integer: return "INTEGER";
        case Tok::SqrtKw: return "'sqrt'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Integer, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (text.substr(i, 4) == "sqrt") {
            out.push_back({Tok::SqrtKw, "", i});
            i += 4;
            continue;
        }
        // U+221A SQUARE ROOT, an input-only alias for 'sqrt'.
        if (text.substr(i, 3) == "\xE2\x88\x9A") {
            out.push_back({Tok::SqrtKw, "", i});
            i += 3;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw Error(ErrorCode::Syntax,
                            "unexpected character '" + std::string(1, c) + "'")
                    .with_offset(static_cast<long long>(i))
                    .with_expected({"INTEGER", "'sqrt'", "'('", "')'", "'+'", "'-'", "'*'",
                                    "'/'"});
        }
        out.push_back({k, "", i});
        ++i;
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    RadicalPtr parse() {
        RadicalPtr e = parse_expr(0);
        if (peek().kind != Tok::End) {
            fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
        }
        return e;
    }

  private:
    static constexpr int kMaxDepth = 10000;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }

    const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string msg = "unexpected ";
        msg += token_label(t.kind);
        throw Error(ErrorCode::Syntax, std::move(msg))
            .with_offset(static_cast<long long>(t.offset))
            .with_expected(std::move(expected));
    }

    RadicalPtr parse_expr(int depth) {
        std::vector<RadicalPtr> terms;
        std::vector<int> signs;
        terms.push_back(parse_term(depth));
        signs.push_back(+1);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            signs.push_back(take().kind == Tok::Plus ? +1 : -1);
            terms.push_back(parse_term(depth));
        }
        if (terms.size() == 1) return terms[0];
        return RadicalExpr::make_sum(std::move(terms), std::move(signs));
    }

    RadicalPtr parse_term(int depth) {
        RadicalPtr cur = parse_factor(depth);
        bool flat_run = false;  // cur is a Product opened at this level
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            bool star = take().kind == Tok::Star;
            RadicalPtr rhs = parse_factor(depth);
            if (star) {
                if (flat_run) {
                    std::vector<RadicalPtr> ch = cur->children();
                    ch.push_back(std::move(rhs));
                    cur = RadicalExpr::make_product(std::move(ch));
                } else {
                    cur = RadicalExpr::make_product({std::move(cur), std::move(rhs)});
                    flat_run = true;
                }
            } else {
                cur = RadicalExpr::make_quotient(std::move(cur), std::move(rhs));
                flat_run = false;
            }
        }
        return cur;
    }

    RadicalPtr parse_factor(int depth) {
        if (depth > kMaxDepth) {
            throw Error(ErrorCode::Syntax, "expression nested too deeply")
                .with_offset(static_cast<long long>(peek().offset));
        }
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Integer: {
                // INTEGER ['/' INTEGER] folds to a single rational literal.
                mpz_class num(take().text, 10);
                if (peek().kind == Tok::Slash && peek(1).kind == Tok::Integer) {
                    take();
                    mpz_class den(take().text, 10);
                    if (sgn(den) == 0) {
                        // Keep 1/0 symbolic; evaluation reports the zero division.
                        return RadicalExpr::make_quotient(RadicalExpr::make_literal(mpq_class(num)),
                                                          RadicalExpr::make_literal(0));
                    }
                    mpq_class q(num, den);
                    q.canonicalize();
                    return RadicalExpr::make_literal(q);
                }
                return RadicalExpr::make_literal(mpq_class(num));
            }
            case Tok::SqrtKw: {
                take();
                if (peek().kind != Tok::LParen) fail({"'('"});
                take();
                RadicalPtr inner = parse_expr(depth + 1);
                if (peek().kind != Tok::RParen) {
                    fail({"')'", "'+'", "'-'", "'*'", "'/'"});
                }
                take();
                return RadicalExpr::make_sqrt(std::move(inner));
            }
            case Tok::LParen: {
                take();
                RadicalPtr inner = parse_expr(depth + 1);
                if (peek().kind != Tok::RParen) {
                    fail({"')'", "'+'", "'-'", "'*'", "'/'"});
                }
                take();
                return inner;
            }
            case Tok::Minus: {
                take();
                return negate(parse_factor(depth + 1));
            }
            default:
                fail({"INTEGER", "'sqrt'", "'('", "'-'"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

RadicalPtr parse_radical(std::string_view text) {
    return Parser(text).parse();
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

enum class Ctx { Top, SumOperand, ProductFirst, ProductRest, QuotNum, QuotDen };

bool needs_parens(const RadicalExpr& e, Ctx ctx) {
    switch (e.kind()) {
        case RadKind::Literal:
        case RadKind::Sqrt:
            return false;
        case RadKind::Sum:
            return ctx != Ctx::Top;
        case RadKind::Product:
            return ctx == Ctx::ProductFirst || ctx == Ctx::ProductRest || ctx == Ctx::QuotDen;
        case RadKind::Quotient:
            return ctx == Ctx::ProductRest || ctx == Ctx::QuotDen;
    }
    return false;
}

void print_node(const RadicalExpr& e, Ctx ctx, std::string& out) {
    bool paren = needs_parens(e, ctx);
    if (paren) out += '(';
    switch (e.kind()) {
        case RadKind::Literal:
            out += e.literal().get_str();
            break;
        case RadKind::Sqrt:
            out += "sqrt(";
            print_node(*e.children()[0], Ctx::Top, out);
            out += ')';
            break;
        case RadKind::Sum:
            for (std::size_t i = 0; i < e.children().size(); ++i) {
                if (i > 0) out += e.signs()[i] > 0 ? " + " : " - ";
                print_node(*e.children()[i], Ctx::SumOperand, out);
            }
            break;
        case RadKind::Product:
            for (std::size_t i = 0; i < e.children().size(); ++i) {
                if (i > 0) out += '*';
                print_node(*e.children()[i], i == 0 ? Ctx::ProductFirst : Ctx::ProductRest, out);
            }
            break;
        case RadKind::Quotient:
            print_node(*e.children()[0], Ctx::QuotNum, out);
            out += '/';
            print_node(*e.children()[1], Ctx::QuotDen, out);
            break;
    }
    if (paren) out += ')';
}

}  // namespace

std::string print_radical(const RadicalPtr& e) {
    assert(e);
    std::string out;
    print_node(*e, Ctx::Top, out);
    return out;
}

}  // namespace romanus
