// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// All comparisons are exact.

#include "meadow/check.hpp"
#include "meadow/cli.hpp"
#include "meadow/decide.hpp"
#include "meadow/emit.hpp"
#include "meadow/eval.hpp"
#include "meadow/interp.hpp"
#include "meadow/random.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace meadow;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, std::string const& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Rat q(long n, long d = 1) { return Rat(Integer(n), Integer(d)); }

char const* const kThreeFractions = "1/(x^2+3*x) + (2*x+5)/(x^5+1) + (x^3+2)/(3*x^2-7)";
char const* const kTwoQuadratics = "1/(x^2+1) + 1/(x^2+2)";

cli::json cli_json(std::vector<std::string> args, int& code) {
    std::ostringstream out, err;
    args.insert(args.begin(), {"--output", "json"});
    code = cli::run(args, out, err);
    return cli::json::parse(out.str());
}

Verdict three_fraction_golden() {
    Verdict v;
    int code = 0;
    auto j = cli_json({"--model", "q", "normalize", "--dump-nf", kThreeFractions}, code);
    v.require(code == 0, "exit code " + std::to_string(code));
    std::map<std::string, std::string> weights;
    for (auto const& n : j["nf"]["nodes"]) weights[n["point"]] = n["weight"][0];
    v.require(weights == std::map<std::string, std::string>{{"-3", "-201/968"}, {"0", "11/7"}, {"-1", "3/8"}},
              "b-values " + j["nf"]["nodes"].dump());
    v.require(j["g"]["numerators"] == cli::json::parse(R"(["15972","24404","5891"])"), "numerators " + j["g"].dump());
    v.require(j["g"]["denominator"] == "3388", "l " + j["g"]["denominator"].dump());
    if (v.ok) v.detail = "b = -201/968, 11/7, 3/8; g = (5891x^2 + 24404x + 15972)/3388";
    return v;
}

Verdict two_quadratic_golden() {
    Verdict v;
    MixedFraction mf = emit_mixed_c(normalize_c(parse(kTwoQuadratics)));
    v.require(mf.nodes.size() == 2, "node count");
    for (auto const& n : mf.nodes) v.require(n.weight == Poly::constant(q(1)), "s on " + n.locus.str() + " is " + n.weight.str());
    v.require(mf.g() == Poly{q(3), q(0), q(2)}, "g = " + mf.g().str());
    int code = 0;
    auto j = cli_json({"--model", "c", "normalize", kTwoQuadratics}, code);
    v.require(code == 0 && j["g"]["numerators"] == cli::json::parse(R"(["3","0","2"])"), "CLI g " + j["g"].dump());
    if (v.ok) v.detail = "s1 = s2 = 1, g = 2x^2 + 3";
    return v;
}

Verdict model_separation() {
    Verdict v;
    Term t = parse("1/(x^2-2)+1/1"), u = parse("(x^2-1)/(x^2-2)");
    v.require(decide_eq(t, u, Model::Rat), "not equal in Q");
    v.require(!decide_eq(t, u, Model::Complex), "equal in C");
    if (v.ok) v.detail = "Q: equal, C: differ on x^2 - 2";
    return v;
}

Verdict total_division() {
    Verdict v;
    v.require(eval_closed(parse("1/0")) == q(0), "1/0");
    v.require(eval_term(parse(kThreeFractions), q(0)) == q(33, 7), "t(0)");
    if (v.ok) v.detail = "1/0 = 0, t(0) = 33/7";
    return v;
}

Verdict shape_and_fidelity() {
    Verdict v;
    std::size_t points = 0, loci = 0;
    for (Model m : {Model::Rat, Model::Complex}) {
        TermGenerator gen(m == Model::Rat ? 20240 : 20241);
        for (int i = 0; i < 500 && v.ok; ++i) {
            Term t = gen.term();
            NormalForm nf = normalize(t, m);
            Term out = to_term(emit_mixed(nf));
            v.require(classify(out) == TermClass::MixedFraction, "shape of " + print(out));
            for (int k = 0; k < 25 && v.ok; ++k, ++points) {
                Rat a = gen.point();
                v.require(eval_term(out, a) == eval_term(t, a), print(t) + " at " + a.str());
            }
            if (m == Model::Complex)
                for (auto const& c : nf.algebraic().corrections) {
                    v.require(eval_term_mod(out, c.locus) == eval_term_mod(t, c.locus), print(t) + " mod " + c.locus.str());
                    ++loci;
                }
        }
    }
    if (v.ok) v.detail = "1000 terms, " + std::to_string(points) + " points, " + std::to_string(loci) + " loci";
    return v;
}

Verdict appendix() {
    Verdict v;
    TermGenerator gen(20242);
    for (int i = 0; i < 100 && v.ok; ++i) {
        std::set<Rat> xs;
        auto k = static_cast<std::size_t>(gen.range(1, 5));
        while (xs.size() < k) xs.insert(gen.point());
        std::vector<Rat> a(xs.begin(), xs.end()), b;
        for (std::size_t j = 0; j < k; ++j) b.push_back(gen.point());
        v.require(appendix_oracle(b, a).reduced() == standardize(oracle::naive_expansion(b, a)), "instance " + std::to_string(i));
    }
    if (v.ok) v.detail = "100 instances, k <= 5";
    return v;
}

Verdict sum_star_suite() {
    Verdict v;
    TermGenerator gen(20243);
    for (int i = 0; i < 100 && v.ok; ++i) {
        std::set<Rat> roots;
        Poly qp = Poly::constant(1);
        for (int k = static_cast<int>(gen.range(1, 4)); k > 0; --k) {
            Rat a(Integer(gen.range(-5, 5)), Integer(gen.range(1, 3)));
            roots.insert(a);
            qp *= primitive_part(Poly::linear_root(a));
        }
        Poly g = gen.int_poly(static_cast<int>(gen.range(0, 3)), 9);
        Rat want;
        for (auto const& a : roots) want += g.eval(a);
        Term qt = integer_poly_term(qp);
        Term t = Term::mul(Term::add(Term::one(), Term::neg(Term::div(qt, qt))), integer_poly_term(g));
        SumStarResult r = sum_star(t, Model::Complex);
        v.require(r.support_finite && r.value == want, print(t) + " gives " + r.value.str() + ", want " + want.str());
    }
    v.require(sum_star(parse("1 - x/x"), Model::Complex) == SumStarResult{q(1), true}, "1 - x/x");
    v.require(sum_star(parse("3*x^2 - x + 4"), Model::Complex) == SumStarResult{q(0), false}, "nonzero polynomial");
    v.require(sum_star_equals(parse("1 - x/x"), parse("1"), Model::Complex), "sum* = 1");
    if (v.ok) v.detail = "100 random + 2 fixed cases";
    return v;
}

Verdict axioms() {
    Verdict v;
    TermGenConfig cfg;
    cfg.max_depth = 3;
    TermGenerator gen(20244, cfg);
    auto closed = [&]() {
        Term c = Term::div(Term::lit(gen.range(-4, 4)), Term::lit(gen.range(0, 3)));
        return oracle::substitute(gen.term(), c);
    };
    using Ax = std::function<std::pair<Term, Term>(Term, Term, Term)>;
    std::vector<std::pair<char const*, Ax>> table = {
        {"(x+y)+z = x+(y+z)", [](Term x, Term y, Term z) { return std::pair{Term::add(Term::add(x, y), z), Term::add(x, Term::add(y, z))}; }},
        {"x+y = y+x", [](Term x, Term y, Term) { return std::pair{Term::add(x, y), Term::add(y, x)}; }},
        {"x+0 = x", [](Term x, Term, Term) { return std::pair{Term::add(x, Term::zero()), x}; }},
        {"x+(-x) = 0", [](Term x, Term, Term) { return std::pair{Term::add(x, Term::neg(x)), Term::zero()}; }},
        {"(x*y)*z = x*(y*z)", [](Term x, Term y, Term z) { return std::pair{Term::mul(Term::mul(x, y), z), Term::mul(x, Term::mul(y, z))}; }},
        {"x*y = y*x", [](Term x, Term y, Term) { return std::pair{Term::mul(x, y), Term::mul(y, x)}; }},
        {"1*x = x", [](Term x, Term, Term) { return std::pair{Term::mul(Term::one(), x), x}; }},
        {"x*(y+z) = x*y+x*z", [](Term x, Term y, Term z) { return std::pair{Term::mul(x, Term::add(y, z)), Term::add(Term::mul(x, y), Term::mul(x, z))}; }},
        {"1/(1/x) = x", [](Term x, Term, Term) { return std::pair{Term::div(Term::one(), Term::div(Term::one(), x)), x}; }},
        {"(x*x)/x = x", [](Term x, Term, Term) { return std::pair{Term::div(Term::mul(x, x), x), x}; }},
        {"x/y = x*(1/y)", [](Term x, Term y, Term) { return std::pair{Term::div(x, y), Term::mul(x, Term::div(Term::one(), y))}; }},
    };
    for (auto const& [name, ax] : table)
        for (int i = 0; i < 500 && v.ok; ++i) {
            auto [lhs, rhs] = ax(closed(), closed(), closed());
            v.require(eval_closed(lhs) == eval_closed(rhs), std::string(name) + " fails for " + print(lhs));
        }
    int cancelled = 0;
    while (cancelled < 100 && v.ok) {
        Term l = closed();
        if (eval_closed(l).is_zero()) continue;
        v.require(eval_closed(Term::div(l, l)) == q(1), "cancellation fails for " + print(l));
        ++cancelled;
    }
    if (v.ok) v.detail = "11 axioms x 500, cancellation x 100";
    return v;
}

Verdict witness() {
    Verdict v;
    TermGenerator gen(20245);
    Integer largest = 1;
    for (int i = 0; i < 100 && v.ok; ++i) {
        Term t = gen.term();
        WitnessedEmission w = emit_with_witness(t);
        v.require(w.n > 0 && w.n % w.mf.poly.denominator == 0, "n = " + w.n.get_str() + " for " + print(t));
        Term diff = Term::mul(Term::lit(w.n), Term::add(t, Term::neg(to_term(w.mf))));
        for (int k = 0; k < 100 && v.ok; ++k) {
            Rat a = gen.point();
            v.require(eval_term(diff, a).is_zero(), print(t) + " at " + a.str());
        }
        if (w.n > largest) largest = w.n;
    }
    v.require(emit_with_witness(parse(kThreeFractions)).n % 3388 == 0, "three-fraction witness");
    if (v.ok) v.detail = "100 terms x 100 points, largest n = " + largest.get_str();
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        char const* name;
        std::function<Verdict()> run;
        double limit_seconds;
    };
    std::vector<Criterion> criteria = {
        {"three-fraction golden test (Q)", three_fraction_golden, 1.0},
        {"two-quadratic golden test (C)", two_quadratic_golden, 1.0},
        {"model separation", model_separation, 0},
        {"total-division semantics", total_division, 0},
        {"mixed-fraction shape and fidelity", shape_and_fidelity, 60.0},
        {"closed-form interpolation", appendix, 0},
        {"finite-support sum suite", sum_star_suite, 0},
        {"axiom suite", axioms, 0},
        {"cancellation witness", witness, 0},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto const& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (std::exception const& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            v.ok = false;
            v.detail += " (took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s)";
        }
        failures += !v.ok;
        std::printf("%s  %zu. %-36s %s [%.3f s]\n", v.ok ? "PASS" : "FAIL", i + 1, c.name, v.detail.c_str(), secs);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
