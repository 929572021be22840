#pragma once

// Command-line front end. run() is the whole program minus process plumbing,
// so tests drive it in-process with string streams.
//
// Exit codes: 0 the property holds (or the command succeeded), 1 it fails,
// 2 malformed input or usage error.

#include "meadow/check.hpp"
#include "meadow/decide.hpp"
#include "meadow/emit.hpp"
#include "meadow/eval.hpp"
#include "meadow/nf.hpp"
#include "meadow/term.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace meadow::cli {

using json = nlohmann::ordered_json;

enum class Output { Text, Json };

struct CliConfig {
    Model model = Model::Rat;
    Output output = Output::Text;
    bool dump_nf = false;
    std::optional<std::uint64_t> seed;
};

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

/// `@path` reads the expression from a file; anything else is the expression.
inline std::string read_expr(std::string const& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("cannot read " + arg.substr(1));
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

inline Term parse_arg(std::string const& arg) { return parse(read_expr(arg)); }

/// Ascending coefficient strings: index i holds the coefficient of x^i.
inline json coeffs_json(Poly const& p) {
    json a = json::array();
    for (auto const& c : p.coeffs()) a.push_back(c.str());
    return a;
}

inline json mixed_json(MixedFraction const& mf) {
    json nums = json::array();
    for (auto const& r : mf.poly.numerators) nums.push_back(r.get_str());
    return json{{"model", model_name(mf.model)},
                {"g", {{"numerators", nums}, {"denominator", mf.poly.denominator.get_str()}}},
                {"f", {{"num", coeffs_json(mf.frac_num)}, {"den", coeffs_json(mf.frac_den)}}},
                {"witness_n", mf.witness_n.get_str()},
                {"term", print(to_term(mf))}};
}

inline json nf_json(NormalForm const& nf, MixedFraction const& mf) {
    json j{{"num", coeffs_json(nf.num())}, {"den", coeffs_json(nf.den())}};
    if (nf.model() == Model::Rat) {
        json ex = json::array();
        for (auto const& [pt, v] : nf.pointwise().exceptions) ex.push_back({{"point", pt.str()}, {"value", v.str()}});
        j["exceptions"] = ex;
    } else {
        json cs = json::array();
        for (auto const& c : nf.algebraic().corrections)
            cs.push_back({{"locus", coeffs_json(c.locus)}, {"value", coeffs_json(c.value)}});
        j["corrections"] = cs;
    }
    json nodes = json::array();
    for (auto const& n : mf.nodes) {
        json node{{"locus", coeffs_json(n.locus)}, {"target", coeffs_json(n.target)}, {"weight", coeffs_json(n.weight)}};
        if (mf.model == Model::Rat) node["point"] = (-n.locus.coeff(0)).str();
        nodes.push_back(node);
    }
    j["nodes"] = nodes;
    return j;
}

inline std::string poly_text(Poly const& p) { return p.is_zero() ? "0" : p.str(); }

inline void emit_json(std::ostream& out, json const& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// Commands

inline int cmd_parse(std::string const& expr, CliConfig const& cfg, std::ostream& out) {
    Term t = parse_arg(expr);
    if (cfg.output == Output::Json) {
        emit_json(out, {{"term", print(t)}, {"class", to_string(classify(t))}, {"size", term_size(t)}, {"depth", term_depth(t)}});
    } else {
        out << print(t) << '\n' << "class: " << to_string(classify(t)) << '\n';
    }
    return kHolds;
}

inline int cmd_eval(std::string const& expr, std::string const& point, CliConfig const& cfg, std::ostream& out) {
    Term t = parse_arg(expr);
    Rat a = parse_rat(point);
    Rat v = eval_term(t, a);
    if (cfg.output == Output::Json)
        emit_json(out, {{"point", a.str()}, {"value", v.str()}});
    else
        out << v.str() << '\n';
    return kHolds;
}

inline int cmd_normalize(std::string const& expr, CliConfig const& cfg, std::ostream& out) {
    Term t = parse_arg(expr);
    NormalForm nf = normalize(t, cfg.model);
    MixedFraction mf = emit_mixed(nf);
    if (cfg.output == Output::Json) {
        json j = mixed_json(mf);
        if (cfg.dump_nf) j["nf"] = nf_json(nf, mf);
        emit_json(out, j);
        return kHolds;
    }
    out << print(to_term(mf)) << '\n';
    out << "g = " << mf.poly.str() << '\n';
    out << "l = " << mf.poly.denominator.get_str() << '\n';
    out << "f = (" << poly_text(mf.frac_num) << ")/(" << poly_text(mf.frac_den) << ")\n";
    out << "witness_n = " << mf.witness_n.get_str() << '\n';
    if (cfg.dump_nf) {
        out << "nf.num = " << poly_text(nf.num()) << '\n' << "nf.den = " << poly_text(nf.den()) << '\n';
        if (nf.model() == Model::Rat) {
            for (auto const& [pt, v] : nf.pointwise().exceptions)
                out << "exception at " << pt.str() << ": " << v.str() << '\n';
        } else {
            for (auto const& c : nf.algebraic().corrections)
                out << "correction on " << c.locus.str() << ": " << poly_text(c.value) << '\n';
        }
        for (auto const& n : mf.nodes) {
            out << "node ";
            if (mf.model == Model::Rat)
                out << "at " << (-n.locus.coeff(0)).str();
            else
                out << "on " << n.locus.str();
            out << ": target " << poly_text(n.target) << ", weight " << poly_text(n.weight) << '\n';
        }
    }
    return kHolds;
}

inline int cmd_eq(std::string const& lhs, std::string const& rhs, CliConfig const& cfg, std::ostream& out) {
    NormalForm a = normalize(parse_arg(lhs), cfg.model);
    NormalForm b = normalize(parse_arg(rhs), cfg.model);
    auto d = distinguish(a, b);
    json j{{"result", !d.has_value()}};
    std::string text = d ? "false" : "true";
    if (d) {
        json w;
        if (d->point) {
            w = {{"point", d->point->str()}, {"lhs", d->lhs_value.coeff(0).str()}, {"rhs", d->rhs_value.coeff(0).str()}};
            text += "\ndiffer at " + d->point->str() + ": " + d->lhs_value.coeff(0).str() + " vs " + d->rhs_value.coeff(0).str();
        } else {
            w = {{"locus", coeffs_json(*d->locus)}, {"lhs", coeffs_json(d->lhs_value)}, {"rhs", coeffs_json(d->rhs_value)}};
            text += "\ndiffer on the roots of " + d->locus->str() + ": " + poly_text(d->lhs_value) + " vs " +
                    poly_text(d->rhs_value) + " (mod " + d->locus->str() + ")";
        }
        j["witness"] = w;
    }
    if (cfg.output == Output::Json)
        emit_json(out, j);
    else
        out << text << '\n';
    return d ? kFails : kHolds;
}

inline int cmd_simple(std::string const& expr, CliConfig const& cfg, std::ostream& out) {
    SimpleReport r = simple_report(parse_arg(expr));
    bool ok = r.fraction.has_value();
    json j{{"result", ok}};
    std::string text;
    if (ok) {
        j["witness"] = {{"fraction", print(*r.fraction)}};
        text = "true\n" + print(*r.fraction);
    } else {
        auto const& [pt, v] = *r.obstruction;
        std::string reason = "nonzero value " + v.str() + " at discontinuity " + pt.str();
        j["witness"] = {{"point", pt.str()}, {"value", v.str()}};
        j["reason"] = reason;
        text = "false\n" + reason;
    }
    if (cfg.output == Output::Json)
        emit_json(out, j);
    else
        out << text << '\n';
    return ok ? kHolds : kFails;
}

inline int cmd_sumstar(std::string const& expr, std::string const& closed, CliConfig const& cfg, std::ostream& out) {
    Term t = parse_arg(expr);
    Term c = parse_arg(closed);
    if (contains_var(c)) throw std::invalid_argument("comparison term must be closed");
    SumStarResult s = sum_star(t, cfg.model);
    Rat expected = eval_closed(c);
    bool ok = s.value == expected;
    if (cfg.output == Output::Json) {
        emit_json(out, {{"result", ok},
                        {"witness", {{"value", s.value.str()}, {"support_finite", s.support_finite}}},
                        {"expected", expected.str()}});
    } else {
        out << (ok ? "true" : "false") << '\n'
            << "sum* = " << s.value.str() << (s.support_finite ? "" : " (infinite support)") << '\n';
    }
    return ok ? kHolds : kFails;
}

inline int cmd_check(std::size_t count, CliConfig const& cfg, std::ostream& out) {
    std::uint64_t seed = cfg.seed.value_or(1);
    auto results = run_checks(seed, count);
    bool ok = std::all_of(results.begin(), results.end(), [](CheckOutcome const& o) { return o.passed; });
    if (cfg.output == Output::Json) {
        json suites = json::array();
        for (auto const& o : results) {
            json s{{"name", o.name}, {"passed", o.passed}, {"cases", o.cases}};
            if (!o.passed) s["counterexample"] = o.detail;
            suites.push_back(s);
        }
        emit_json(out, {{"result", ok}, {"seed", seed}, {"suites", suites}});
    } else {
        for (auto const& o : results) {
            out << (o.passed ? "PASS " : "FAIL ") << o.name << " (" << o.cases << " cases)";
            if (!o.passed) out << ": " << o.detail;
            out << '\n';
        }
    }
    return ok ? kHolds : kFails;
}

// ---------------------------------------------------------------------------

/// args excludes the program name.
inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms and decision procedures for univariate meadow terms", "meadow"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string model = "q", output = "text";
    std::uint64_t seed = 0;
    app.add_option("--model", model, "q (rationals) or c (complex numbers)")
        ->check(CLI::IsMember({"q", "c"}, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_flag("--dump-nf", cfg.dump_nf, "also print the normal form and interpolation nodes");
    auto* seed_opt = app.add_option("--seed", seed, "seed for the check subcommand");

    std::string e1, e2, point;
    std::size_t count = 100;

    auto* parse_cmd = app.add_subcommand("parse", "parse and print a term with its syntactic class");
    parse_cmd->add_option("expr", e1, "term, or @file")->required();
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term at a rational point");
    eval_cmd->add_option("expr", e1, "term, or @file")->required();
    eval_cmd->add_option("point", point, "rational p or p/q")->required();
    auto* norm_cmd = app.add_subcommand("normalize", "emit an equivalent mixed fraction");
    norm_cmd->add_option("expr", e1, "term, or @file")->required();
    auto* eq_cmd = app.add_subcommand("eq", "decide semantic equality in the chosen model");
    eq_cmd->add_option("lhs", e1, "term, or @file")->required();
    eq_cmd->add_option("rhs", e2, "term, or @file")->required();
    auto* simple_cmd = app.add_subcommand("simple", "decide whether a term equals a simple fraction over Q");
    simple_cmd->add_option("expr", e1, "term, or @file")->required();
    auto* sum_cmd = app.add_subcommand("sumstar", "decide whether sum* of a term equals a closed term");
    sum_cmd->add_option("expr", e1, "term, or @file")->required();
    sum_cmd->add_option("closed", e2, "closed term, or @file")->required();
    auto* check_cmd = app.add_subcommand("check", "run the seeded invariant suites");
    check_cmd->add_option("--count", count, "cases per suite")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kHolds;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kHolds;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    cfg.model = (model == "c" || model == "C") ? Model::Complex : Model::Rat;
    cfg.output = output == "json" ? Output::Json : Output::Text;
    if (seed_opt->count() > 0) cfg.seed = seed;

    try {
        if (*parse_cmd) return cmd_parse(e1, cfg, out);
        if (*eval_cmd) return cmd_eval(e1, point, cfg, out);
        if (*norm_cmd) return cmd_normalize(e1, cfg, out);
        if (*eq_cmd) return cmd_eq(e1, e2, cfg, out);
        if (*simple_cmd) return cmd_simple(e1, cfg, out);
        if (*sum_cmd) return cmd_sumstar(e1, e2, cfg, out);
        if (*check_cmd) return cmd_check(count, cfg, out);
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace meadow::cli
