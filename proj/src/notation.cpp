#include "notation.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"

namespace romanus {
namespace {

constexpr unsigned long kMaxExponent = 100000;

[[noreturn]] void fail(std::string msg, std::size_t offset, std::vector<std::string> expected) {
    throw Error(ErrorCode::Syntax, std::move(msg))
        .with_offset(static_cast<long long>(offset))
        .with_expected(std::move(expected));
}

// Character-level scanner shared by the three dialect parsers.
class Scanner {
  public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    std::size_t pos() const { return pos_; }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit() {
        skip_ws();
        return std::isdigit(static_cast<unsigned char>(peek()));
    }

    // Nonempty digit run as an arbitrary-precision integer.
    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number", start, {"integer"});
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    // Digit run constrained to the exponent range.
    unsigned long long exponent() {
        skip_ws();
        std::size_t start = pos_;
        mpz_class e = integer();
        if (e > kMaxExponent)
            throw Error(ErrorCode::Range,
                        "exponent exceeds " + std::to_string(kMaxExponent))
                .with_offset(static_cast<long long>(start));
        return e.get_ui();
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Accumulates coefficient-exponent pairs and normalizes into a Polynomial.
class Builder {
  public:
    void add(const mpz_class& coeff, unsigned long long exp) {
        if (exp >= c_.size()) c_.resize(exp + 1, mpz_class(0));
        c_[exp] += coeff;
    }
    Polynomial take() { return Polynomial(std::move(c_)); }

  private:
    std::vector<mpz_class> c_;
};

// sign := '+' | '-'; the first term's '+' is optional.
bool read_sign(Scanner& s, bool first, bool& negative) {
    s.skip_ws();
    if (s.eat('-')) {
        negative = true;
        return true;
    }
    if (s.eat('+')) {
        negative = false;
        return true;
    }
    if (first) {
        negative = false;
        return true;
    }
    return false;
}

Polynomial parse_modern(Scanner& s) {
    Builder b;
    bool first = true;
    while (true) {
        if (s.at_end()) {
            if (first) fail("empty polynomial", s.pos(), {"term"});
            break;
        }
        bool neg = false;
        if (!read_sign(s, first, neg))
            fail("expected '+' or '-' between terms", s.pos(), {"'+'", "'-'"});
        first = false;

        mpz_class coeff;
        bool have_coeff = s.at_digit();
        if (have_coeff) coeff = s.integer();
        bool star = s.eat('*');  // optional explicit product
        bool have_x = s.eat('x');
        if (star && !have_x) fail("expected 'x' after '*'", s.pos(), {"'x'"});
        if (!have_x && !have_coeff)
            fail("expected a coefficient or 'x'", s.pos(), {"integer", "'x'"});
        if (!have_coeff) coeff = 1;
        unsigned long long exp = 0;
        if (have_x) exp = s.eat('^') ? s.exponent() : 1;
        if (neg) coeff = -coeff;
        b.add(coeff, exp);
    }
    return b.take();
}

Polynomial parse_stevin(Scanner& s) {
    Builder b;
    bool first = true;
    while (true) {
        if (s.at_end()) {
            if (first) fail("empty polynomial", s.pos(), {"term"});
            break;
        }
        bool neg = false;
        if (!read_sign(s, first, neg))
            fail("expected '+' or '-' between terms", s.pos(), {"'+'", "'-'"});
        first = false;

        mpz_class coeff = s.integer();
        unsigned long long exp = 0;
        if (s.eat('(')) {
            exp = s.exponent();
            if (!s.eat(')')) fail("unclosed exponent marker", s.pos(), {"')'"});
        }
        if (neg) coeff = -coeff;
        b.add(coeff, exp);
    }
    return b.take();
}

Polynomial parse_viete(Scanner& s) {
    // Special case: the zero polynomial has no expressible term.
    s.skip_ws();
    Builder b;
    bool first = true;
    while (true) {
        if (s.at_end()) {
            if (first) fail("empty polynomial", s.pos(), {"term"});
            break;
        }
        bool neg = false;
        if (!read_sign(s, first, neg))
            fail("expected '+' or '-' between terms", s.pos(), {"'+'", "'-'"});

        mpz_class coeff = s.integer();
        if (first && coeff == 0 && s.at_end()) return Polynomial();  // bare "0"
        first = false;

        s.skip_ws();
        std::size_t letters_at = s.pos();
        unsigned long long q = 0, c = 0;
        bool saw_n = false;
        while (true) {
            if (s.eat('N')) {
                saw_n = true;
                continue;
            }
            if (s.eat('Q')) {
                ++q;
                continue;
            }
            if (s.eat('C')) {
                ++c;
                continue;
            }
            break;
        }
        if (saw_n && (q || c))
            fail("'N' stands alone; higher powers combine only 'Q' and 'C'", letters_at,
                 {"'Q'", "'C'"});
        if (!saw_n && q == 0 && c == 0)
            fail("expected a power (N, or a product of Q and C)", s.pos(), {"'N'", "'Q'", "'C'"});
        unsigned long long exp = saw_n ? 1 : 2 * q + 3 * c;
        if (exp > kMaxExponent)
            throw Error(ErrorCode::Range, "exponent exceeds " + std::to_string(kMaxExponent))
                .with_offset(static_cast<long long>(letters_at));
        if (neg) coeff = -coeff;
        b.add(coeff, exp);
    }
    return b.take();
}

// Canonical power spelling: e >= 1 only.
std::string viete_power(unsigned long long e) {
    if (e == 1) return "N";
    std::string out;
    unsigned long long r = e % 3;
    if (r == 2) {
        out += 'Q';
        e -= 2;
    } else if (r == 1) {
        out += "QQ";
        e -= 4;  // e == 1 handled above, so e >= 4 here
    }
    out.append(e / 3, 'C');
    return out;
}

std::string print_terms(const Polynomial& p, Dialect d) {
    std::string out;
    bool first = true;
    for (std::size_t e = 0; e <= p.degree(); ++e) {
        const mpz_class& c = p.coeff(e);
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        switch (d) {
            case Dialect::Modern:
                if (e == 0) {
                    out += mag.get_str();
                } else {
                    if (mag != 1) out += mag.get_str();
                    out += 'x';
                    if (e > 1) out += '^' + std::to_string(e);
                }
                break;
            case Dialect::Stevin:
                out += mag.get_str();
                if (e > 0) out += '(' + std::to_string(e) + ')';
                break;
            case Dialect::Viete:
                if (e == 0)
                    throw Error(ErrorCode::UnsupportedDialect,
                                "the Viete dialect has no spelling for a constant term");
                out += mag.get_str();
                out += viete_power(e);
                break;
        }
    }
    return first ? "0" : out;
}

}  // namespace

const char* dialect_name(Dialect d) {
    switch (d) {
        case Dialect::Modern: return "modern";
        case Dialect::Stevin: return "stevin";
        case Dialect::Viete: return "viete";
    }
    return "unknown";
}

Dialect dialect_from_name(std::string_view name) {
    if (name == "modern") return Dialect::Modern;
    if (name == "stevin") return Dialect::Stevin;
    if (name == "viete") return Dialect::Viete;
    throw Error(ErrorCode::Invalid,
                "unknown dialect \"" + std::string(name) + "\"; expected modern, stevin, or viete");
}

Polynomial parse_poly(std::string_view text, Dialect d) {
    Scanner s(text);
    switch (d) {
        case Dialect::Modern: return parse_modern(s);
        case Dialect::Stevin: return parse_stevin(s);
        case Dialect::Viete: return parse_viete(s);
    }
    throw Error(ErrorCode::Invalid, "bad dialect");
}

std::string print_poly(const Polynomial& p, Dialect d) { return print_terms(p, d); }

std::string convert(std::string_view text, Dialect from, Dialect to) {
    return print_poly(parse_poly(text, from), to);
}

}  // namespace romanus
