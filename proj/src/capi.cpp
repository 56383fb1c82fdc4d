#include "romanus.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "angles.hpp"
#include "decimal.hpp"
#include "error.hpp"
#include "evaluate.hpp"
#include "notation.hpp"
#include "poly.hpp"
#include "radical.hpp"
#include "solver.hpp"

using romanus::Error;
using romanus::ErrorCode;

/* Opaque handle definitions.  Borrowed-string getters hand out pointers into
 * these caches, so every printable field is rendered once at construction and
 * stays put for the life of the handle. */
struct rmn_poly {
    romanus::Polynomial v;
};

struct rmn_radical {
    romanus::RadicalPtr v;
};

struct rmn_solutions {
    romanus::SolutionSet v;
    std::vector<std::string> values;
    std::vector<std::string> radicals;  // "" when the root has none
};

struct rmn_audit {
    romanus::AuditReport v;
    std::string rhs_value, claimed_value, solution_value, lhs_at_claimed, alternative_value;
};

struct rmn_gift {
    romanus::GiftSolution v;
    std::vector<std::string> radicals;  // "" for E
    std::vector<std::string> values;
};

namespace {

thread_local std::string t_message;
thread_local long long t_offset = -1;
thread_local std::string t_path;

void clear_error() {
    t_message.clear();
    t_offset = -1;
    t_path.clear();
}

rmn_status map_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::Syntax: return RMN_ERR_SYNTAX;
        case ErrorCode::Domain: return RMN_ERR_DOMAIN;
        case ErrorCode::DivisionByZero: return RMN_ERR_DIVISION_BY_ZERO;
        case ErrorCode::UndecidableSign: return RMN_ERR_UNDECIDABLE_SIGN;
        case ErrorCode::Range: return RMN_ERR_RANGE;
        case ErrorCode::Recognition: return RMN_ERR_RECOGNITION;
        case ErrorCode::Unsupported: return RMN_ERR_UNSUPPORTED;
        case ErrorCode::UnsupportedDialect: return RMN_ERR_UNSUPPORTED_DIALECT;
        case ErrorCode::Invalid: return RMN_ERR_INVALID;
        case ErrorCode::Internal: return RMN_ERR_INTERNAL;
    }
    return RMN_ERR_INTERNAL;
}

rmn_status fail_invalid(const char* what) {
    t_message = what;
    t_offset = -1;
    t_path.clear();
    return RMN_ERR_INVALID;
}

template <typename F>
rmn_status guarded(F&& f) noexcept {
    clear_error();
    try {
        f();
        return RMN_OK;
    } catch (const Error& e) {
        t_message = e.what();
        if (!e.expected().empty()) {
            t_message += "; expected ";
            for (std::size_t i = 0; i < e.expected().size(); ++i) {
                if (i) t_message += " or ";
                t_message += e.expected()[i];
            }
        }
        t_offset = e.offset();
        t_path = e.node_path();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        t_message = "out of memory";
        return RMN_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_message = e.what();
        return RMN_ERR_INTERNAL;
    } catch (...) {
        t_message = "unknown failure";
        return RMN_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/* Parse "p" or "p/q" into an exact rational; the denominator must be nonzero. */
mpq_class parse_rational(const char* text) {
    std::string s(text);
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return mpq_class(mpz_class(s, 10));
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::Syntax, "malformed rational \"" + s + "\"").with_offset(0);
    }
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

rmn_solutions* wrap_solutions(romanus::SolutionSet&& set) {
    auto* h = new rmn_solutions{std::move(set), {}, {}};
    h->values.reserve(h->v.solutions.size());
    h->radicals.reserve(h->v.solutions.size());
    for (const romanus::Solution& s : h->v.solutions) {
        h->values.push_back(s.value.str());
        h->radicals.push_back(s.radical ? romanus::print_radical(s.radical) : std::string());
    }
    return h;
}

romanus::Dialect to_dialect(rmn_dialect d) {
    switch (d) {
        case RMN_DIALECT_MODERN: return romanus::Dialect::Modern;
        case RMN_DIALECT_STEVIN: return romanus::Dialect::Stevin;
        case RMN_DIALECT_VIETE: return romanus::Dialect::Viete;
    }
    throw Error(ErrorCode::Invalid, "unknown dialect code");
}

constexpr unsigned kMaxChebDegree = 2048;
constexpr unsigned long long kMaxComposeDegree = 100000;

}  // namespace

/* ------------------------------------------------------------------ meta */

const char* rmn_version(void) { return "1.0.0"; }

const char* rmn_status_name(rmn_status s) {
    switch (s) {
        case RMN_OK: return "ok";
        case RMN_ERR_SYNTAX: return "syntax";
        case RMN_ERR_DOMAIN: return "domain";
        case RMN_ERR_DIVISION_BY_ZERO: return "division-by-zero";
        case RMN_ERR_UNDECIDABLE_SIGN: return "undecidable-sign";
        case RMN_ERR_RANGE: return "range";
        case RMN_ERR_RECOGNITION: return "recognition";
        case RMN_ERR_UNSUPPORTED: return "unsupported";
        case RMN_ERR_UNSUPPORTED_DIALECT: return "unsupported-dialect";
        case RMN_ERR_INVALID: return "invalid";
        case RMN_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* rmn_last_error_message(void) { return t_message.c_str(); }
long long rmn_last_error_offset(void) { return t_offset; }
const char* rmn_last_error_path(void) { return t_path.c_str(); }

void rmn_string_free(char* s) { std::free(s); }

/* ----------------------------------------------------------- polynomials */

rmn_status rmn_poly_chebyshev(unsigned n, int monic, rmn_poly** out) {
    if (!out) return fail_invalid("null output pointer");
    *out = nullptr;
    return guarded([&] {
        if (n > kMaxChebDegree)
            throw Error(ErrorCode::Invalid,
                        "degree must be at most " + std::to_string(kMaxChebDegree));
        *out = new rmn_poly{monic ? romanus::monic_cheb(n) : romanus::chebyshev_t(n)};
    });
}

rmn_status rmn_poly_parse(const char* text, rmn_dialect d, rmn_poly** out) {
    if (!text || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new rmn_poly{romanus::parse_poly(text, to_dialect(d))};
    });
}

rmn_status rmn_poly_print(const rmn_poly* p, rmn_dialect d, char** out) {
    if (!p || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(romanus::print_poly(p->v, to_dialect(d)));
    });
}

rmn_status rmn_poly_degree(const rmn_poly* p, unsigned long long* out) {
    if (!p || !out) return fail_invalid("null argument");
    *out = p->v.degree();
    return RMN_OK;
}

rmn_status rmn_poly_coeff(const rmn_poly* p, unsigned long long i, char** out) {
    if (!p || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(p->v.coeff(static_cast<std::size_t>(i)).get_str()); });
}

rmn_status rmn_poly_compose(const rmn_poly* p, const rmn_poly* q, rmn_poly** out) {
    if (!p || !q || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        unsigned long long dp = p->v.degree(), dq = q->v.degree();
        if (dp * dq > kMaxComposeDegree)
            throw Error(ErrorCode::Invalid, "composition degree exceeds " +
                                                std::to_string(kMaxComposeDegree));
        *out = new rmn_poly{romanus::compose(p->v, q->v)};
    });
}

rmn_status rmn_poly_eval(const rmn_poly* p, const char* rational, char** out) {
    if (!p || !rational || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        mpq_class x = parse_rational(rational);
        *out = dup_string(rational_str(romanus::eval_exact(p->v, x)));
    });
}

void rmn_poly_free(rmn_poly* p) { delete p; }

/* --------------------------------------------------------------- radicals */

rmn_status rmn_radical_parse(const char* text, rmn_radical** out) {
    if (!text || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = new rmn_radical{romanus::parse_radical(text)}; });
}

rmn_status rmn_radical_print(const rmn_radical* e, char** out) {
    if (!e || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(romanus::print_radical(e->v)); });
}

rmn_status rmn_radical_eval(const rmn_radical* e, int digits, char** out) {
    if (!e || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        if (digits < 1 || digits > 1000)
            throw Error(ErrorCode::Range, "digits must be between 1 and 1000");
        *out = dup_string(romanus::evaluate(e->v, digits).str());
    });
}

rmn_status rmn_radical_equal(const rmn_radical* a, const rmn_radical* b, int digits, int* out) {
    if (!a || !b || !out) return fail_invalid("null argument");
    *out = 0;
    return guarded([&] {
        if (digits < 1 || digits > 1000)
            throw Error(ErrorCode::Range, "digits must be between 1 and 1000");
        *out = romanus::numeric_equal(a->v, b->v, digits) ? 1 : 0;
    });
}

void rmn_radical_free(rmn_radical* e) { delete e; }

/* ----------------------------------------------------------------- angles */

rmn_status rmn_classify(long long num, long long den, const char** name_out) {
    if (!name_out) return fail_invalid("null output pointer");
    *name_out = nullptr;
    return guarded([&] {
        *name_out = romanus::constructibility_name(
            romanus::classify(romanus::make_angle(num, den)));
    });
}

rmn_status rmn_tower(long long num, long long den, rmn_trig f, rmn_radical** out) {
    if (!out) return fail_invalid("null output pointer");
    *out = nullptr;
    return guarded([&] {
        romanus::TrigFunc tf =
            (f == RMN_TRIG_SIN) ? romanus::TrigFunc::Sin : romanus::TrigFunc::Cos;
        *out = new rmn_radical{romanus::tower(romanus::make_angle(num, den), tf)};
    });
}

rmn_status rmn_exact_value(long long num, long long den, rmn_trig f, rmn_radical** out) {
    if (!out) return fail_invalid("null output pointer");
    *out = nullptr;
    return guarded([&] {
        romanus::TrigFunc tf =
            (f == RMN_TRIG_SIN) ? romanus::TrigFunc::Sin : romanus::TrigFunc::Cos;
        auto got = romanus::exact_value(romanus::make_angle(num, den), tf);
        if (got) *out = new rmn_radical{*got};
    });
}

rmn_status rmn_factor_chain(unsigned long long n, char** out) {
    if (!out) return fail_invalid("null output pointer");
    *out = nullptr;
    return guarded([&] {
        std::string joined;
        for (unsigned long long f : romanus::factor_chain(n)) {
            if (!joined.empty()) joined += ',';
            joined += std::to_string(f);
        }
        *out = dup_string(joined);
    });
}

rmn_status rmn_polygon_perimeter(unsigned long long n, int digits, char** out) {
    if (!out) return fail_invalid("null output pointer");
    *out = nullptr;
    return guarded([&] { *out = dup_string(romanus::polygon_perimeter(n, digits).str()); });
}

rmn_status rmn_pi_approx(unsigned long long n, int digits, char** out) {
    if (!out) return fail_invalid("null output pointer");
    *out = nullptr;
    return guarded([&] { *out = dup_string(romanus::pi_approximation(n, digits).str()); });
}

/* ---------------------------------------------------------------- solving */

rmn_status rmn_solve(unsigned n, const rmn_radical* rhs, int digits, long long max_q,
                     rmn_solutions** out) {
    if (!rhs || !out) return fail_invalid("null argument");
    *out = nullptr;
    if (max_q == 0) max_q = 4096;
    if (max_q < 2) return fail_invalid("max_q must be at least 2 (or 0 for the default)");
    return guarded([&] { *out = wrap_solutions(romanus::solve(n, rhs->v, digits, max_q)); });
}

rmn_status rmn_solve_numeric(unsigned n, const char* rhs_decimal, int digits,
                             rmn_solutions** out) {
    if (!rhs_decimal || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        romanus::PrecisionDecimal rhs = romanus::PrecisionDecimal::parse(rhs_decimal);
        *out = wrap_solutions(romanus::solve_numeric(n, rhs, digits));
    });
}

rmn_status rmn_solutions_count(const rmn_solutions* s, unsigned* out) {
    if (!s || !out) return fail_invalid("null argument");
    *out = static_cast<unsigned>(s->v.solutions.size());
    return RMN_OK;
}

rmn_status rmn_solutions_sign_counts(const rmn_solutions* s, unsigned* positive, unsigned* zero,
                                     unsigned* negative) {
    if (!s || !positive || !zero || !negative) return fail_invalid("null argument");
    *positive = static_cast<unsigned>(s->v.positive_count);
    *zero = static_cast<unsigned>(s->v.zero_count);
    *negative = static_cast<unsigned>(s->v.negative_count);
    return RMN_OK;
}

rmn_status rmn_solutions_smallest_positive(const rmn_solutions* s, int* index) {
    if (!s || !index) return fail_invalid("null argument");
    *index = s->v.smallest_positive_index;
    return RMN_OK;
}

rmn_status rmn_solutions_rhs_angle(const rmn_solutions* s, int* has, long long* num,
                                   long long* den) {
    if (!s || !has || !num || !den) return fail_invalid("null argument");
    if (s->v.rhs_angle) {
        *has = 1;
        *num = s->v.rhs_angle->num;
        *den = s->v.rhs_angle->den;
    } else {
        *has = 0;
        *num = 0;
        *den = 1;
    }
    return RMN_OK;
}

static rmn_status check_index(const rmn_solutions* s, unsigned i) {
    if (!s) return fail_invalid("null handle");
    if (i >= s->v.solutions.size()) return fail_invalid("solution index out of range");
    return RMN_OK;
}

rmn_status rmn_solution_value(const rmn_solutions* s, unsigned i, const char** out) {
    if (!out) return fail_invalid("null output pointer");
    rmn_status st = check_index(s, i);
    if (st != RMN_OK) return st;
    *out = s->values[i].c_str();
    return RMN_OK;
}

rmn_status rmn_solution_radical(const rmn_solutions* s, unsigned i, const char** out) {
    if (!out) return fail_invalid("null output pointer");
    rmn_status st = check_index(s, i);
    if (st != RMN_OK) return st;
    *out = s->v.solutions[i].radical ? s->radicals[i].c_str() : nullptr;
    return RMN_OK;
}

rmn_status rmn_solution_angle(const rmn_solutions* s, unsigned i, int* has, long long* num,
                              long long* den) {
    if (!has || !num || !den) return fail_invalid("null output pointer");
    rmn_status st = check_index(s, i);
    if (st != RMN_OK) return st;
    const auto& a = s->v.solutions[i].angle;
    *has = a ? 1 : 0;
    *num = a ? a->num : 0;
    *den = a ? a->den : 1;
    return RMN_OK;
}

rmn_status rmn_solution_multiplicity(const rmn_solutions* s, unsigned i, int* out) {
    if (!out) return fail_invalid("null output pointer");
    rmn_status st = check_index(s, i);
    if (st != RMN_OK) return st;
    *out = s->v.solutions[i].multiplicity;
    return RMN_OK;
}

void rmn_solutions_free(rmn_solutions* s) { delete s; }

/* ------------------------------------------------------------------ audit */

rmn_status rmn_verify_romanus(const char* example, int digits, rmn_audit** out) {
    if (!example || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        auto* h = new rmn_audit{romanus::verify_romanus(example, digits), {}, {}, {}, {}, {}};
        h->rhs_value = h->v.rhs_value.str();
        h->claimed_value = h->v.claimed_text.empty() ? "" : h->v.claimed_value.str();
        h->solution_value = h->v.solution_value.str();
        if (h->v.lhs_at_claimed) h->lhs_at_claimed = h->v.lhs_at_claimed->str();
        if (h->v.alternative_value) h->alternative_value = h->v.alternative_value->str();
        *out = h;
    });
}

rmn_status rmn_audit_pass(const rmn_audit* a, int* out) {
    if (!a || !out) return fail_invalid("null argument");
    *out = a->v.pass ? 1 : 0;
    return RMN_OK;
}

rmn_status rmn_audit_equation(const rmn_audit* a, const char** out) {
    if (!a || !out) return fail_invalid("null argument");
    *out = a->v.equation.c_str();
    return RMN_OK;
}

rmn_status rmn_audit_rhs(const rmn_audit* a, const char** text, const char** value) {
    if (!a || !text || !value) return fail_invalid("null argument");
    *text = a->v.rhs_text.c_str();
    *value = a->rhs_value.c_str();
    return RMN_OK;
}

rmn_status rmn_audit_claimed(const rmn_audit* a, const char** text, const char** value) {
    if (!a || !text || !value) return fail_invalid("null argument");
    *text = a->v.claimed_text.c_str();
    *value = a->claimed_value.c_str();
    return RMN_OK;
}

rmn_status rmn_audit_solution(const rmn_audit* a, const char** radical, const char** value,
                              long long* angle_num, long long* angle_den) {
    if (!a || !radical || !value || !angle_num || !angle_den)
        return fail_invalid("null argument");
    *radical = a->v.solution_radical.c_str();
    *value = a->solution_value.c_str();
    *angle_num = a->v.solution_angle ? a->v.solution_angle->num : 0;
    *angle_den = a->v.solution_angle ? a->v.solution_angle->den : 1;
    return RMN_OK;
}

rmn_status rmn_audit_classification(const rmn_audit* a, const char** name,
                                    unsigned long long* polygon_sides) {
    if (!a || !name || !polygon_sides) return fail_invalid("null argument");
    *name = a->v.classification.c_str();
    *polygon_sides = a->v.polygon_sides;
    return RMN_OK;
}

rmn_status rmn_audit_mismatch(const rmn_audit* a, int* has, const char** lhs_at_claimed,
                              const char** alternative_text, const char** alternative_value,
                              int* alternative_matches, const char** corrected_text,
                              long long* corrected_num, long long* corrected_den,
                              int* corrected_confirmed) {
    if (!a || !has || !lhs_at_claimed || !alternative_text || !alternative_value ||
        !alternative_matches || !corrected_text || !corrected_num || !corrected_den ||
        !corrected_confirmed)
        return fail_invalid("null argument");
    *has = a->v.lhs_at_claimed.has_value() ? 1 : 0;
    *lhs_at_claimed = a->lhs_at_claimed.c_str();
    *alternative_text = a->v.alternative_text.c_str();
    *alternative_value = a->alternative_value.c_str();
    *alternative_matches = a->v.alternative_matches.value_or(false) ? 1 : 0;
    *corrected_text = a->v.corrected_text.c_str();
    *corrected_num = a->v.corrected_angle ? a->v.corrected_angle->num : 0;
    *corrected_den = a->v.corrected_angle ? a->v.corrected_angle->den : 1;
    *corrected_confirmed = a->v.corrected_confirmed.value_or(false) ? 1 : 0;
    return RMN_OK;
}

rmn_status rmn_audit_notes(const rmn_audit* a, unsigned* count) {
    if (!a || !count) return fail_invalid("null argument");
    *count = static_cast<unsigned>(a->v.notes.size());
    return RMN_OK;
}

rmn_status rmn_audit_note(const rmn_audit* a, unsigned i, const char** out) {
    if (!a || !out) return fail_invalid("null argument");
    if (i >= a->v.notes.size()) return fail_invalid("note index out of range");
    *out = a->v.notes[i].c_str();
    return RMN_OK;
}

void rmn_audit_free(rmn_audit* a) { delete a; }

/* ------------------------------------------------------------------- gift */

rmn_status rmn_solve_gift(int digits, rmn_gift** out) {
    if (!out) return fail_invalid("null output pointer");
    *out = nullptr;
    return guarded([&] {
        auto* h = new rmn_gift{romanus::solve_gift(digits), {}, {}};
        for (const romanus::GiftComponent& c : h->v.components) {
            h->radicals.push_back(c.radical ? romanus::print_radical(c.radical) : std::string());
            h->values.push_back(c.value.str());
        }
        *out = h;
    });
}

rmn_status rmn_gift_counts(const rmn_gift* g, unsigned* components, unsigned* equations) {
    if (!g || !components || !equations) return fail_invalid("null argument");
    *components = static_cast<unsigned>(g->v.components.size());
    *equations = static_cast<unsigned>(g->v.equations.size());
    return RMN_OK;
}

rmn_status rmn_gift_component(const rmn_gift* g, unsigned i, char* name, long long* angle_num,
                              long long* angle_den, const char** radical, const char** value) {
    if (!g || !name || !angle_num || !angle_den || !radical || !value)
        return fail_invalid("null argument");
    if (i >= g->v.components.size()) return fail_invalid("component index out of range");
    const romanus::GiftComponent& c = g->v.components[i];
    *name = c.name;
    *angle_num = c.angle.num;
    *angle_den = c.angle.den;
    *radical = c.radical ? g->radicals[i].c_str() : nullptr;
    *value = g->values[i].c_str();
    return RMN_OK;
}

rmn_status rmn_gift_equation(const rmn_gift* g, unsigned i, const char** equation,
                             const char** residual_bound) {
    if (!g || !equation || !residual_bound) return fail_invalid("null argument");
    if (i >= g->v.equations.size()) return fail_invalid("equation index out of range");
    *equation = g->v.equations[i].c_str();
    *residual_bound = g->v.residual_bounds[i].c_str();
    return RMN_OK;
}

void rmn_gift_free(rmn_gift* g) { delete g; }

/* --------------------------------------------------------------- notation */

rmn_status rmn_notation_convert(const char* text, rmn_dialect from, rmn_dialect to, char** out) {
    if (!text || !out) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(romanus::convert(text, to_dialect(from), to_dialect(to)));
    });
}
