// romanus: chord polynomials, nested radicals, and certified decimals.
//
// Thin shell over the C library: arguments in, rmn_* calls, text or JSON out.
// Exit codes: 0 success, 1 mathematical/domain failure, 2 usage or syntax.

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "romanus.h"

using nlohmann::json;

namespace {

// Owned C string from the library.
struct CStr {
    char* p = nullptr;
    ~CStr() { rmn_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { Free(p); }
    T** out() { return &p; }
    operator T*() const { return p; }
};

using PolyH = Handle<rmn_poly, rmn_poly_free>;
using RadicalH = Handle<rmn_radical, rmn_radical_free>;
using SolutionsH = Handle<rmn_solutions, rmn_solutions_free>;
using AuditH = Handle<rmn_audit, rmn_audit_free>;
using GiftH = Handle<rmn_gift, rmn_gift_free>;

struct CliFailure {
    rmn_status status;
    std::string message;
    long long offset;
    std::string path;
};

void check(rmn_status st) {
    if (st == RMN_OK) return;
    throw CliFailure{st, rmn_last_error_message(), rmn_last_error_offset(),
                     rmn_last_error_path()};
}

int exit_code_for(rmn_status st) {
    switch (st) {
        case RMN_OK: return 0;
        case RMN_ERR_SYNTAX:
        case RMN_ERR_INVALID: return 2;
        default: return 1;
    }
}

// "p/q" or "p" -> angle numerator/denominator (the angle is (p/q)*pi).
void parse_angle_text(const std::string& text, long long& num, long long& den) {
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            num = std::stoll(text, &used);
            den = 1;
            if (used != text.size()) throw std::invalid_argument("trailing characters");
        } else {
            num = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw std::invalid_argument("trailing characters");
            std::string tail = text.substr(slash + 1);
            den = std::stoll(tail, &used);
            if (used != tail.size()) throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception&) {
        throw CliFailure{RMN_ERR_SYNTAX, "malformed angle \"" + text + "\"; expected p/q", -1,
                         ""};
    }
}

rmn_dialect dialect_of(const std::string& name) {
    if (name == "modern") return RMN_DIALECT_MODERN;
    if (name == "stevin") return RMN_DIALECT_STEVIN;
    if (name == "viete") return RMN_DIALECT_VIETE;
    throw CliFailure{RMN_ERR_INVALID,
                     "unknown dialect \"" + name + "\"; expected modern, stevin, or viete", -1,
                     ""};
}

std::string angle_text(long long num, long long den) {
    if (num == 0) return "0";
    return std::to_string(num) + "/" + std::to_string(den);
}

// Global output state.
bool g_json = false;
bool g_quiet = false;

// The JSON envelope every command emits in --json mode.
void emit_json(const std::string& command, json inputs, json result,
               std::optional<int> certified_digits) {
    json env;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["result"] = std::move(result);
    env["certified_digits"] = certified_digits ? json(*certified_digits) : json(nullptr);
    std::cout << env.dump(2) << "\n";
}

void say(const std::string& line) { std::cout << line << "\n"; }

// ----------------------------------------------------------------- commands

int run_gen(unsigned n, bool monic, const std::string& dialect, bool coeffs) {
    PolyH p;
    check(rmn_poly_chebyshev(n, monic ? 1 : 0, p.out()));
    CStr text;
    check(rmn_poly_print(p, dialect_of(dialect), &text.p));
    unsigned long long deg = 0;
    check(rmn_poly_degree(p, &deg));

    if (g_json) {
        json coeff_list = json::array();
        for (unsigned long long i = 0; i <= deg; ++i) {
            CStr c;
            check(rmn_poly_coeff(p, i, &c.p));
            coeff_list.push_back(c.str());
        }
        json result = {{"degree", deg}, {"text", text.str()}};
        if (coeffs) result["coefficients"] = std::move(coeff_list);
        emit_json("gen", {{"n", n}, {"monic", monic}, {"dialect", dialect}}, std::move(result),
                  std::nullopt);
        return 0;
    }
    if (g_quiet)
        say(text.str());
    else
        say((monic ? "p" : "T") + std::to_string(n) + "(x) = " + text.str());
    if (coeffs && !g_quiet) {
        for (unsigned long long i = 0; i <= deg; ++i) {
            CStr c;
            check(rmn_poly_coeff(p, i, &c.p));
            if (c.str() != "0") say("  x^" + std::to_string(i) + ": " + c.str());
        }
    }
    return 0;
}

json solutions_to_json(const SolutionsH& s) {
    unsigned count = 0;
    check(rmn_solutions_count(s, &count));
    unsigned pos = 0, zero = 0, neg = 0;
    check(rmn_solutions_sign_counts(s, &pos, &zero, &neg));
    int smallest = -1;
    check(rmn_solutions_smallest_positive(s, &smallest));
    int has_angle = 0;
    long long rn = 0, rd = 1;
    check(rmn_solutions_rhs_angle(s, &has_angle, &rn, &rd));

    json roots = json::array();
    for (unsigned i = 0; i < count; ++i) {
        const char* value = nullptr;
        const char* radical = nullptr;
        int has = 0, mult = 1;
        long long an = 0, ad = 1;
        check(rmn_solution_value(s, i, &value));
        check(rmn_solution_radical(s, i, &radical));
        check(rmn_solution_angle(s, i, &has, &an, &ad));
        check(rmn_solution_multiplicity(s, i, &mult));
        json r = {{"value", value}, {"multiplicity", mult}};
        r["radical"] = radical ? json(radical) : json(nullptr);
        r["angle"] = has ? json(angle_text(an, ad)) : json(nullptr);
        roots.push_back(std::move(r));
    }
    json out = {{"counts", {{"positive", pos}, {"zero", zero}, {"negative", neg}}},
                {"smallest_positive_index", smallest},
                {"roots", std::move(roots)}};
    out["rhs_angle"] = has_angle ? json(angle_text(rn, rd)) : json(nullptr);
    return out;
}

void print_solutions_text(const SolutionsH& s) {
    unsigned count = 0;
    check(rmn_solutions_count(s, &count));
    unsigned pos = 0, zero = 0, neg = 0;
    check(rmn_solutions_sign_counts(s, &pos, &zero, &neg));
    int smallest = -1;
    check(rmn_solutions_smallest_positive(s, &smallest));
    int has_angle = 0;
    long long rn = 0, rd = 1;
    check(rmn_solutions_rhs_angle(s, &has_angle, &rn, &rd));

    if (!g_quiet) {
        if (has_angle) say("recognized b = 2*sin(pi*" + angle_text(rn, rd) + ")");
        say(std::to_string(count) + " distinct roots: " + std::to_string(pos) + " positive, " +
            std::to_string(zero) + " zero, " + std::to_string(neg) +
            " negative (with multiplicity)");
    }
    for (unsigned i = 0; i < count; ++i) {
        const char* value = nullptr;
        const char* radical = nullptr;
        int has = 0, mult = 1;
        long long an = 0, ad = 1;
        check(rmn_solution_value(s, i, &value));
        check(rmn_solution_radical(s, i, &radical));
        check(rmn_solution_angle(s, i, &has, &an, &ad));
        check(rmn_solution_multiplicity(s, i, &mult));
        if (g_quiet) {
            say(value);
            continue;
        }
        std::string line = "x = " + std::string(value);
        if (mult > 1) line += "  (multiplicity " + std::to_string(mult) + ")";
        if (has) line += "  [angle " + angle_text(an, ad) + "]";
        if (radical) line += "  = " + std::string(radical);
        if (static_cast<int>(i) == smallest) line += "  <- smallest positive";
        say(line);
    }
}

int run_solve(unsigned n, const std::string& rhs, int digits, long long max_q) {
    RadicalH r;
    check(rmn_radical_parse(rhs.c_str(), r.out()));
    SolutionsH s;
    check(rmn_solve(n, r, digits, max_q, s.out()));
    if (g_json) {
        emit_json("solve", {{"n", n}, {"rhs", rhs}, {"digits", digits}, {"max_q", max_q}},
                  solutions_to_json(s), digits);
        return 0;
    }
    print_solutions_text(s);
    return 0;
}

int run_solve_numeric(unsigned n, const std::string& rhs, int digits) {
    SolutionsH s;
    check(rmn_solve_numeric(n, rhs.c_str(), digits, s.out()));
    if (g_json) {
        emit_json("solve-numeric", {{"n", n}, {"rhs_decimal", rhs}, {"digits", digits}},
                  solutions_to_json(s), digits);
        return 0;
    }
    print_solutions_text(s);
    return 0;
}

int run_tower(const std::string& angle, const std::string& func, int digits) {
    long long num = 0, den = 1;
    parse_angle_text(angle, num, den);
    rmn_trig f = (func == "cos") ? RMN_TRIG_COS : RMN_TRIG_SIN;
    RadicalH r;
    check(rmn_tower(num, den, f, r.out()));
    CStr text, value;
    check(rmn_radical_print(r, &text.p));
    check(rmn_radical_eval(r, digits, &value.p));
    std::string lhs = "2*" + func + "(pi*" + angle_text(num, den) + ")";
    if (g_json) {
        emit_json("tower", {{"angle", angle}, {"func", func}, {"digits", digits}},
                  {{"chord", lhs}, {"radical", text.str()}, {"value", value.str()}}, digits);
        return 0;
    }
    if (g_quiet) {
        say(text.str());
    } else {
        say(lhs + " = " + text.str());
        say("      = " + value.str());
    }
    return 0;
}

int run_eval(const std::string& text, int digits) {
    RadicalH r;
    check(rmn_radical_parse(text.c_str(), r.out()));
    CStr canon, value;
    check(rmn_radical_print(r, &canon.p));
    check(rmn_radical_eval(r, digits, &value.p));
    if (g_json) {
        emit_json("eval", {{"expression", text}, {"digits", digits}},
                  {{"canonical", canon.str()}, {"value", value.str()}}, digits);
        return 0;
    }
    say(g_quiet ? value.str() : canon.str() + " = " + value.str());
    return 0;
}

int run_classify(const std::string& angle) {
    long long num = 0, den = 1;
    parse_angle_text(angle, num, den);
    const char* name = nullptr;
    check(rmn_classify(num, den, &name));
    if (g_json) {
        emit_json("classify", {{"angle", angle}}, {{"classification", name}}, std::nullopt);
        return 0;
    }
    say(g_quiet ? std::string(name)
                : "angle pi*" + angle_text(num, den) + ": " + std::string(name));
    return 0;
}

int run_chain(unsigned long long n) {
    CStr chain;
    check(rmn_factor_chain(n, &chain.p));
    if (g_json) {
        json factors = json::array();
        std::string cur;
        for (char ch : chain.str()) {
            if (ch == ',') {
                factors.push_back(std::stoull(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) factors.push_back(std::stoull(cur));
        emit_json("chain", {{"n", n}}, {{"factors", std::move(factors)}}, std::nullopt);
        return 0;
    }
    if (g_quiet || chain.str().empty()) {
        say(chain.str());
        return 0;
    }
    std::string pretty;
    for (char ch : chain.str()) pretty += (ch == ',') ? std::string(" . T") : std::string(1, ch);
    say("T" + std::to_string(n) + " = T" + pretty);
    return 0;
}

int run_pi(unsigned long long sides, int digits, bool perimeter) {
    CStr value;
    if (perimeter)
        check(rmn_polygon_perimeter(sides, digits, &value.p));
    else
        check(rmn_pi_approx(sides, digits, &value.p));
    if (g_json) {
        emit_json("pi", {{"sides", sides}, {"digits", digits}, {"perimeter", perimeter}},
                  {{"value", value.str()}}, digits);
        return 0;
    }
    if (g_quiet)
        say(value.str());
    else if (perimeter)
        say("perimeter of the inscribed " + std::to_string(sides) + "-gon = " + value.str());
    else
        say(std::to_string(sides) + "*sin(pi/" + std::to_string(sides) + ") = " + value.str());
    return 0;
}

int run_verify(const std::string& example, int digits) {
    AuditH a;
    check(rmn_verify_romanus(example.c_str(), digits, a.out()));

    int pass = 0;
    check(rmn_audit_pass(a, &pass));
    const char* equation = nullptr;
    check(rmn_audit_equation(a, &equation));
    const char *rhs_text = nullptr, *rhs_value = nullptr;
    check(rmn_audit_rhs(a, &rhs_text, &rhs_value));
    const char *claimed_text = nullptr, *claimed_value = nullptr;
    check(rmn_audit_claimed(a, &claimed_text, &claimed_value));
    const char *sol_radical = nullptr, *sol_value = nullptr;
    long long an = 0, ad = 1;
    check(rmn_audit_solution(a, &sol_radical, &sol_value, &an, &ad));
    const char* cls = nullptr;
    unsigned long long sides = 0;
    check(rmn_audit_classification(a, &cls, &sides));
    int has_mismatch = 0, alt_matches = 0, corr_confirmed = 0;
    const char *lhs = nullptr, *alt_text = nullptr, *alt_value = nullptr, *corr_text = nullptr;
    long long cn = 0, cd = 1;
    check(rmn_audit_mismatch(a, &has_mismatch, &lhs, &alt_text, &alt_value, &alt_matches,
                             &corr_text, &cn, &cd, &corr_confirmed));
    unsigned note_count = 0;
    check(rmn_audit_notes(a, &note_count));
    std::vector<std::string> notes;
    for (unsigned i = 0; i < note_count; ++i) {
        const char* note = nullptr;
        check(rmn_audit_note(a, i, &note));
        notes.emplace_back(note);
    }

    if (g_json) {
        json result = {
            {"example", example},
            {"pass", pass != 0},
            {"equation", equation},
            {"rhs", {{"text", rhs_text}, {"value", rhs_value}}},
            {"solution",
             {{"radical", *sol_radical ? json(sol_radical) : json(nullptr)},
              {"value", sol_value},
              {"angle", angle_text(an, ad)},
              {"classification", cls},
              {"polygon_sides", sides}}},
            {"notes", notes},
        };
        result["claimed"] = *claimed_text
                                ? json({{"text", claimed_text}, {"value", claimed_value}})
                                : json(nullptr);
        result["mismatch"] =
            has_mismatch ? json({{"lhs_at_claimed", lhs},
                                 {"alternative",
                                  {{"text", alt_text},
                                   {"value", alt_value},
                                   {"matches", alt_matches != 0}}},
                                 {"corrected",
                                  {{"text", corr_text},
                                   {"angle", angle_text(cn, cd)},
                                   {"confirmed", corr_confirmed != 0}}}})
                         : json(nullptr);
        emit_json("verify-romanus", {{"example", example}, {"digits", digits}},
                  std::move(result), digits);
        return 0;
    }

    if (g_quiet) {
        say(pass ? "pass" : "fail");
        return 0;
    }
    say("example " + example + ": " + (pass ? "PASS" : "FAIL"));
    say("  equation: " + std::string(equation));
    say("  rhs value      = " + std::string(rhs_value));
    if (*claimed_text) {
        say("  claimed chord  = " + std::string(claimed_text));
        say("  claimed value  = " + std::string(claimed_value));
    }
    if (has_mismatch) {
        say("  p45(claimed)   = " + std::string(lhs) + "  (reference precision)");
        say("  alternative reading = " + std::string(alt_text));
        say("    its value    = " + std::string(alt_value) +
            (alt_matches ? "  (matches)" : "  (does not match either)"));
        say("  corrected rhs  = " + std::string(corr_text) + "  [angle " + angle_text(cn, cd) +
            "]" + (corr_confirmed ? "  -> solved exactly by the claimed chord" : ""));
    }
    say("  smallest positive root [angle " + angle_text(an, ad) + "], " + std::string(cls) +
        (sides ? ", side of the regular " + std::to_string(sides) + "-gon" : ""));
    if (*sol_radical) say("    = " + std::string(sol_radical));
    say("    = " + std::string(sol_value));
    for (const std::string& note : notes) say("  note: " + note);
    return 0;
}

int run_gift(int digits) {
    GiftH g;
    check(rmn_solve_gift(digits, g.out()));
    unsigned nc = 0, ne = 0;
    check(rmn_gift_counts(g, &nc, &ne));

    json comps = json::array();
    for (unsigned i = 0; i < nc; ++i) {
        char name = 0;
        long long an = 0, ad = 1;
        const char *radical = nullptr, *value = nullptr;
        check(rmn_gift_component(g, i, &name, &an, &ad, &radical, &value));
        if (g_json) {
            json c = {{"name", std::string(1, name)},
                      {"angle", angle_text(an, ad)},
                      {"value", value}};
            c["radical"] = radical ? json(radical) : json(nullptr);
            comps.push_back(std::move(c));
        } else if (g_quiet) {
            say(value);
        } else {
            std::string line = std::string(1, name) + " = 2*sin(pi*" + angle_text(an, ad) + ")";
            if (radical) line += " = " + std::string(radical);
            say(line);
            say("  = " + std::string(value));
        }
    }
    json eqs = json::array();
    for (unsigned i = 0; i < ne; ++i) {
        const char *eq = nullptr, *bound = nullptr;
        check(rmn_gift_equation(g, i, &eq, &bound));
        if (g_json)
            eqs.push_back({{"equation", eq}, {"residual_bound", bound}});
        else if (!g_quiet)
            say(std::string(eq) + "   residual " + std::string(bound));
    }
    if (g_json)
        emit_json("gift", {{"digits", digits}},
                  {{"components", std::move(comps)}, {"equations", std::move(eqs)}}, digits);
    return 0;
}

int run_convert(const std::string& text, const std::string& from, const std::string& to) {
    CStr out;
    check(rmn_notation_convert(text.c_str(), dialect_of(from), dialect_of(to), &out.p));
    if (g_json) {
        emit_json("convert", {{"text", text}, {"from", from}, {"to", to}},
                  {{"text", out.str()}}, std::nullopt);
        return 0;
    }
    say(out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chord polynomials, nested radicals, and certified decimals"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after the subcommand too
    app.add_flag("--json", g_json, "emit a JSON envelope on stdout");
    app.add_flag("--quiet", g_quiet, "print only the essential result");
    app.set_version_flag("--version", std::string(rmn_version()));

    std::function<int()> action;
    auto digits_opt = [](CLI::App* cmd, std::shared_ptr<int> digits, int def) {
        cmd->add_option("-d,--digits", *digits, "certified fractional digits")
            ->default_val(def)
            ->check(CLI::Range(1, 1000));
    };

    // gen
    auto gen_n = std::make_shared<unsigned>(45);
    auto gen_monic = std::make_shared<bool>(false);
    auto gen_dialect = std::make_shared<std::string>("modern");
    auto gen_coeffs = std::make_shared<bool>(false);
    CLI::App* gen = app.add_subcommand("gen", "exact Chebyshev polynomial of degree n");
    gen->add_option("n", *gen_n, "degree")->required()->check(CLI::Range(0u, 2048u));
    gen->add_flag("--monic", *gen_monic, "monic chord form p_n = 2T_n(x/2) instead of T_n");
    gen->add_option("--dialect", *gen_dialect, "modern|stevin|viete")->default_val("modern");
    gen->add_flag("--coeffs", *gen_coeffs, "list the nonzero coefficients");
    gen->callback([=, &action] {
        action = [=] { return run_gen(*gen_n, *gen_monic, *gen_dialect, *gen_coeffs); };
    });

    // solve
    auto sv_n = std::make_shared<unsigned>(45);
    auto sv_rhs = std::make_shared<std::string>();
    auto sv_digits = std::make_shared<int>(30);
    auto sv_max_q = std::make_shared<long long>(4096);
    CLI::App* solve = app.add_subcommand("solve", "all roots of p_n(x) = b for a radical b");
    solve->add_option("n", *sv_n, "degree (1..512)")->required();
    solve->add_option("--rhs", *sv_rhs, "right-hand side radical expression")->required();
    digits_opt(solve, sv_digits, 30);
    solve->add_option("--max-q", *sv_max_q, "largest angle denominator tried in recognition")
        ->default_val(4096)
        ->check(CLI::Range(2ll, 1000000ll));
    solve->callback([=, &action] {
        action = [=] { return run_solve(*sv_n, *sv_rhs, *sv_digits, *sv_max_q); };
    });

    // solve-numeric
    auto nv_n = std::make_shared<unsigned>(45);
    auto nv_rhs = std::make_shared<std::string>();
    auto nv_digits = std::make_shared<int>(30);
    CLI::App* solven =
        app.add_subcommand("solve-numeric", "all roots of p_n(x) = b for a decimal b");
    solven->add_option("n", *nv_n, "degree (1..512)")->required();
    solven->add_option("--rhs-decimal", *nv_rhs, "right-hand side decimal")->required();
    digits_opt(solven, nv_digits, 30);
    solven->callback([=, &action] {
        action = [=] { return run_solve_numeric(*nv_n, *nv_rhs, *nv_digits); };
    });

    // tower
    auto tw_angle = std::make_shared<std::string>();
    auto tw_func = std::make_shared<std::string>("sin");
    auto tw_digits = std::make_shared<int>(30);
    CLI::App* tower =
        app.add_subcommand("tower", "nested-radical chord 2sin/2cos of (p/q)*pi");
    tower->add_option("--angle", *tw_angle, "angle as p/q (of pi), in (0, 1/2]")->required();
    tower->add_option("--func", *tw_func, "sin|cos")
        ->default_val("sin")
        ->check(CLI::IsMember({"sin", "cos"}));
    digits_opt(tower, tw_digits, 30);
    tower->callback([=, &action] {
        action = [=] { return run_tower(*tw_angle, *tw_func, *tw_digits); };
    });

    // eval
    auto ev_text = std::make_shared<std::string>();
    auto ev_digits = std::make_shared<int>(30);
    CLI::App* eval = app.add_subcommand("eval", "certified decimal value of a radical");
    eval->add_option("expression", *ev_text, "radical expression")->required();
    digits_opt(eval, ev_digits, 30);
    eval->callback(
        [=, &action] { action = [=] { return run_eval(*ev_text, *ev_digits); }; });

    // classify
    auto cl_angle = std::make_shared<std::string>();
    CLI::App* classify =
        app.add_subcommand("classify", "constructibility class of the angle (p/q)*pi");
    classify->add_option("--angle", *cl_angle, "angle as p/q (of pi)")->required();
    classify->callback([=, &action] { action = [=] { return run_classify(*cl_angle); }; });

    // chain
    auto ch_n = std::make_shared<unsigned long long>(45);
    CLI::App* chain = app.add_subcommand("chain", "prime composition chain of T_n");
    chain->add_option("n", *ch_n, "index")->required();
    chain->callback([=, &action] { action = [=] { return run_chain(*ch_n); }; });

    // pi
    auto pi_sides = std::make_shared<unsigned long long>(96);
    auto pi_digits = std::make_shared<int>(30);
    auto pi_perim = std::make_shared<bool>(false);
    CLI::App* pi = app.add_subcommand("pi", "inscribed n-gon approximation n*sin(pi/n)");
    pi->add_option("--sides", *pi_sides, "number of sides (odd part over {3,5} only)")
        ->required();
    digits_opt(pi, pi_digits, 30);
    pi->add_flag("--perimeter", *pi_perim, "print the full perimeter 2n*sin(pi/n) instead");
    pi->callback([=, &action] {
        action = [=] { return run_pi(*pi_sides, *pi_digits, *pi_perim); };
    });

    // verify-romanus
    auto vr_example = std::make_shared<std::string>();
    auto vr_digits = std::make_shared<int>(30);
    CLI::App* verify =
        app.add_subcommand("verify-romanus", "audit one 1593 challenge example");
    verify->add_option("--example", *vr_example, "1|2|3|main")->required();
    digits_opt(verify, vr_digits, 30);
    verify->callback([=, &action] {
        action = [=] { return run_verify(*vr_example, *vr_digits); };
    });

    // gift
    auto gf_digits = std::make_shared<int>(18);
    CLI::App* gift = app.add_subcommand("gift", "the five-chord New Year system");
    gift->add_option("-d,--digits", *gf_digits, "certified fractional digits (>= 18)")
        ->default_val(18)
        ->check(CLI::Range(18, 1000));
    gift->callback([=, &action] { action = [=] { return run_gift(*gf_digits); }; });

    // convert
    auto cv_text = std::make_shared<std::string>();
    auto cv_from = std::make_shared<std::string>("modern");
    auto cv_to = std::make_shared<std::string>("modern");
    CLI::App* convert = app.add_subcommand("convert", "re-spell a polynomial between dialects");
    convert->add_option("text", *cv_text, "polynomial text")->required();
    convert->add_option("--from", *cv_from, "source dialect")->required();
    convert->add_option("--to", *cv_to, "target dialect")->required();
    convert->callback([=, &action] {
        action = [=] { return run_convert(*cv_text, *cv_from, *cv_to); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const CliFailure& f) {
        if (g_json) {
            json err = {{"status", rmn_status_name(f.status)}, {"message", f.message}};
            if (f.offset >= 0) err["offset"] = f.offset;
            if (!f.path.empty()) err["path"] = f.path;
            json env = {{"error", std::move(err)}};
            std::cerr << env.dump(2) << "\n";
        } else {
            std::cerr << "error (" << rmn_status_name(f.status) << "): " << f.message;
            if (f.offset >= 0) std::cerr << " [byte " << f.offset << "]";
            if (!f.path.empty()) std::cerr << " [node " << f.path << "]";
            std::cerr << "\n";
        }
        return exit_code_for(f.status);
    }
}
