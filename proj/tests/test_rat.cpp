#include "meadow/eval.hpp"
#include "meadow/random.hpp"
#include "meadow/rat.hpp"
#include "meadow/term.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace meadow;

namespace {

Rat q(long n, long d = 1) { return Rat(Integer(n), Integer(d)); }

}  // namespace

TEST(Rat, CanonicalForm) {
    Rat a(Integer(6), Integer(-4));
    EXPECT_EQ(a.numerator(), -3);
    EXPECT_EQ(a.denominator(), 2);
    EXPECT_EQ(Rat(Integer(0), Integer(-7)).denominator(), 1);
    EXPECT_THROW(Rat(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rat, Examples) {
    EXPECT_EQ(rat_add(q(1, 242), q(-5, 4)), q(-603, 484));
    EXPECT_EQ(rat_mul(q(17, 3), q(0)), q(0));
    EXPECT_EQ(rat_add(q(5), q(-2, 7)), q(33, 7));
    EXPECT_EQ(rat_neg(q(3, 8)), q(-3, 8));
    // cross-check with the first interpolation weight: 6 * (-201/968)
    EXPECT_EQ(q(-603, 484), q(6) * q(-201, 968));
}

TEST(Rat, MeadowInverse) {
    EXPECT_EQ(meadow_inv(q(0)), q(0));
    EXPECT_EQ(meadow_inv(q(3, 8)), q(8, 3));
    EXPECT_EQ(meadow_inv(meadow_inv(q(-5, 4))), q(-5, 4));
    EXPECT_EQ(q(7) / q(0), q(0));
}

TEST(Rat, TextForm) {
    EXPECT_EQ(q(-603, 484).str(), "-603/484");
    EXPECT_EQ(q(12).str(), "12");
    EXPECT_EQ(parse_rat("-603/484"), q(-603, 484));
    EXPECT_EQ(parse_rat("10/4"), q(5, 2));
    EXPECT_EQ(parse_rat("7"), q(7));
    for (auto const* bad : {"", "1/0", "a", "1/", "/2", "1.5", "--1"}) EXPECT_ANY_THROW(parse_rat(bad)) << bad;
}

TEST(EvalClosed, Examples) {
    EXPECT_EQ(eval_closed(parse("1/0")), q(0));
    EXPECT_EQ(eval_closed(parse("(1+1)/(1+1+1)")), q(2, 3));
    EXPECT_EQ(eval_closed(parse("1/(1/0)")), q(0));
    EXPECT_THROW(eval_closed(parse("x + 1")), std::invalid_argument);
}

TEST(RatProperty, InverseIsInvolution) {
    TermGenerator gen(7);
    for (int i = 0; i < 1000; ++i) {
        Rat a = gen.point();
        EXPECT_EQ(meadow_inv(meadow_inv(a)), a);
        if (!a.is_zero()) EXPECT_EQ(a * meadow_inv(a), q(1));
    }
}

// The eleven equations of the divisive meadow axiomatization, instantiated
// with random closed terms and checked under evaluation.
TEST(RatProperty, DivisiveMeadowAxioms) {
    TermGenConfig cfg;
    cfg.max_depth = 3;
    TermGenerator gen(11, cfg);
    // closed instances: generated terms with the variable replaced by a
    // closed fraction, so divisions by zero occur regularly
    auto closed = [&]() {
        Term c = Term::div(Term::lit(gen.range(-4, 4)), Term::lit(gen.range(0, 3)));
        return oracle::substitute(gen.term(), c);
    };
    using Ax = std::function<std::pair<Term, Term>(Term, Term, Term)>;
    std::vector<std::pair<char const*, Ax>> axioms = {
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
    for (auto const& [name, ax] : axioms) {
        for (int i = 0; i < 500; ++i) {
            Term a = gen.pick(4) == 0 ? Term::zero() : closed();
            auto [lhs, rhs] = ax(a, closed(), closed());
            ASSERT_EQ(eval_closed(lhs), eval_closed(rhs)) << name << ": " << print(lhs);
        }
    }
}
