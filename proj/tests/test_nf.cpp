#include "meadow/check.hpp"
#include "meadow/eval.hpp"
#include "meadow/nf.hpp"
#include "meadow/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace meadow;

namespace {

Rat q(long n, long d = 1) { return Rat(Integer(n), Integer(d)); }
Poly P(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly(c);
}

char const* const kThreeFractions = "1/(x^2+3*x) + (2*x+5)/(x^5+1) + (x^3+2)/(3*x^2-7)";

void expect_minimal(PointwiseNF const& nf) {
    for (auto const& [pt, v] : nf.exceptions) {
        Rat generic = nf.den.eval(pt).is_zero() ? Rat(0) : nf.generic(pt);
        EXPECT_NE(v, generic) << "redundant exception at " << pt.str();
    }
}

void expect_minimal(AlgebraicNF const& nf) {
    for (auto const& c : nf.corrections) {
        EXPECT_NE(c.value, nf.generic_mod(c.locus)) << "redundant correction on " << c.locus.str();
        EXPECT_EQ(irreducible_factors(c.locus), std::vector<Poly>{c.locus});
        EXPECT_LT(c.value.degree(), c.locus.degree());
    }
    EXPECT_TRUE(std::is_sorted(nf.corrections.begin(), nf.corrections.end(),
                               [](Correction const& a, Correction const& b) { return a.locus < b.locus; }));
}

template <class NF>
void expect_reduced(NF const& nf) {
    EXPECT_FALSE(nf.den.is_zero());
    if (!nf.num.is_zero()) EXPECT_EQ(poly_gcd(nf.num, nf.den), P({1}));
    EXPECT_EQ(primitive_part(nf.den), nf.den);
}

}  // namespace

TEST(EvalTerm, Examples) {
    EXPECT_EQ(eval_term(parse(kThreeFractions), q(0)), q(33, 7));
    EXPECT_EQ(eval_term(parse(kThreeFractions), q(-3)), q(-603, 484));
    EXPECT_EQ(eval_term(parse(kThreeFractions), q(-1)), q(-3, 4));
    EXPECT_EQ(eval_term(parse("x/x"), q(0)), q(0));
    EXPECT_EQ(eval_term(parse("x/x"), q(5)), q(1));
}

TEST(EvalTermMod, Examples) {
    EXPECT_EQ(eval_term_mod(parse("1/(x^2+2)"), P({1, 0, 1})), P({1}));
    EXPECT_TRUE(eval_term_mod(parse("1/x"), P({0, 1})).is_zero());
    EXPECT_EQ(eval_term_mod(parse("x^3"), P({2, 0, 1})), P({0, -2}));
    EXPECT_EQ(eval_term_mod(parse("1/(x^2-2) + 1/1"), P({-2, 0, 1})), P({1}));
}

TEST(EvalTermMod, ReducibleLocusReported) {
    try {
        eval_term_mod(parse("1/(x-1)"), P({-1, 0, 1}));
        FAIL() << "expected an error";
    } catch (std::domain_error const& e) {
        EXPECT_NE(std::string(e.what()).find("locus must be split"), std::string::npos);
    }
    EXPECT_THROW(eval_term_mod(parse("x"), P({3})), std::domain_error);
}

TEST(EvalTermMod, AgreesWithNumericRoots) {
    TermGenConfig cfg;
    cfg.max_depth = 4;
    TermGenerator gen(5, cfg);
    std::vector<Poly> loci = {P({1, 0, 1}), P({2, 0, 1}), P({-2, 0, 1}), P({1, 1, 1}), P({-2, 0, 0, 1})};
    int compared = 0;
    for (int i = 0; i < 300; ++i) {
        Term t = gen.term();
        for (auto const& r : loci) {
            Poly s = eval_term_mod(t, r);
            for (auto const& z : oracle::durand_kerner(r)) {
                auto v = oracle::eval_numeric(t, z);
                if (!v) continue;
                oracle::cplx want = oracle::eval_c(s, z);
                ASSERT_LT(std::abs(*v - want), 1e-6 * std::max(1.0, std::abs(want))) << print(t) << " mod " << r.str();
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 3000);
}

TEST(Normalize, Examples) {
    PointwiseNF a = normalize_q(parse("x/x"));
    EXPECT_EQ(a.num, P({1}));
    EXPECT_EQ(a.den, P({1}));
    EXPECT_EQ(a.exceptions, (std::map<Rat, Rat>{{q(0), q(0)}}));

    PointwiseNF b = normalize_q(parse("1/x + 1/1"));
    EXPECT_EQ(b.num, P({1, 1}));
    EXPECT_EQ(b.den, P({0, 1}));
    EXPECT_EQ(b.exceptions, (std::map<Rat, Rat>{{q(0), q(1)}}));

    Term t = parse("1/(x^2-2) + 1/1");
    PointwiseNF c = normalize_q(t);
    EXPECT_EQ(c.num, P({-1, 0, 1}));
    EXPECT_EQ(c.den, P({-2, 0, 1}));
    EXPECT_TRUE(c.exceptions.empty());
    AlgebraicNF d = normalize_c(t);
    EXPECT_EQ(d.num, P({-1, 0, 1}));
    EXPECT_EQ(d.den, P({-2, 0, 1}));
    ASSERT_EQ(d.corrections.size(), 1u);
    EXPECT_EQ(d.corrections[0].locus, P({-2, 0, 1}));
    EXPECT_EQ(d.corrections[0].value, P({1}));
}

TEST(Normalize, ThreeFractions) {
    PointwiseNF nf = normalize_q(parse(kThreeFractions));
    EXPECT_EQ(nf.exceptions, (std::map<Rat, Rat>{{q(-3), q(-603, 484)}, {q(-1), q(-3, 4)}, {q(0), q(33, 7)}}));
    EXPECT_EQ(nf_eval(nf, q(0)), q(33, 7));
    EXPECT_EQ(nf.den, P({0, 3, 1}) * P({1, 0, 0, 0, 0, 1}) * P({-7, 0, 3}));
    expect_reduced(nf);
}

TEST(Normalize, TwoQuadratics) {
    AlgebraicNF nf = normalize_c(parse("1/(x^2+1) + 1/(x^2+2)"));
    EXPECT_EQ(nf.num, P({3, 0, 2}));
    EXPECT_EQ(nf.den, P({2, 0, 3, 0, 1}));
    ASSERT_EQ(nf.corrections.size(), 2u);
    EXPECT_EQ(nf.corrections[0].locus, P({1, 0, 1}));
    EXPECT_EQ(nf.corrections[0].value, P({1}));
    EXPECT_EQ(nf.corrections[1].locus, P({2, 0, 1}));
    EXPECT_EQ(nf.corrections[1].value, P({-1}));
}

TEST(Normalize, ClosedTermIsConstant) {
    PointwiseNF nf = normalize_q(parse("(1+1)/(1+1+1) + 1/0"));
    EXPECT_EQ(nf.num, Poly::constant(q(2, 3)));
    EXPECT_EQ(nf.den, P({1}));
    EXPECT_TRUE(nf.exceptions.empty());
}

TEST(NfOps, Examples) {
    PointwiseNF inv_x = normalize_q(parse("1/x"));
    PointwiseNF sum = nf_add(inv_x, pointwise_constant(q(1)));
    EXPECT_EQ(sum, normalize_q(parse("1/x + 1/1")));

    PointwiseNF t = normalize_q(parse("(x^2+1)/(x-3) + x/x"));
    EXPECT_EQ(nf_add(t, pointwise_constant(q(0))), t);

    PointwiseNF prod = nf_mul(pointwise_var(), inv_x);
    EXPECT_EQ(prod.num, P({1}));
    EXPECT_EQ(prod.den, P({1}));
    EXPECT_EQ(prod.exceptions, (std::map<Rat, Rat>{{q(0), q(0)}}));

    EXPECT_EQ(nf_neg(nf_neg(t)), t);
    PointwiseNF neg = nf_neg(normalize_q(parse("x/x")));
    EXPECT_EQ(neg.num, P({-1}));
    EXPECT_EQ(neg.exceptions, (std::map<Rat, Rat>{{q(0), q(0)}}));
    EXPECT_EQ(nf_neg(pointwise_constant(q(0))), pointwise_constant(q(0)));

    PointwiseNF inv = nf_inv(pointwise_var());
    EXPECT_EQ(inv.num, P({1}));
    EXPECT_EQ(inv.den, P({0, 1}));
    EXPECT_TRUE(inv.exceptions.empty());
    EXPECT_EQ(nf_inv(normalize_q(parse("x/x"))), normalize_q(parse("x/x")));

    EXPECT_EQ(nf_eval(normalize_q(parse("x/x")), q(5)), q(1));
}

TEST(NfOps, ModelMismatch) {
    NormalForm a = normalize(parse("x"), Model::Rat), b = normalize(parse("x"), Model::Complex);
    EXPECT_THROW(nf_add(a, b), std::invalid_argument);
    EXPECT_THROW(nf_mul(a, b), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Properties

class NfProperty : public ::testing::TestWithParam<Model> {};

TEST_P(NfProperty, Soundness) {
    Model m = GetParam();
    TermGenerator gen(m == Model::Rat ? 1001 : 1002);
    for (int i = 0; i < 1000; ++i) {
        Term t = gen.term();
        NormalForm nf = normalize(t, m);
        for (auto const& a : sample_points(gen, nf, 25))
            ASSERT_EQ(nf_eval(nf, a), eval_term(t, a)) << print(t) << " at " << a.str();
        if (m == Model::Complex)
            for (auto const& r : check_loci(nf.algebraic()))
                ASSERT_EQ(nf.algebraic().value_mod(r), eval_term_mod(t, r)) << print(t) << " mod " << r.str();
    }
}

TEST_P(NfProperty, Homomorphism) {
    Model m = GetParam();
    TermGenerator gen(m == Model::Rat ? 2001 : 2002);
    for (int i = 0; i < 200; ++i) {
        Term s = gen.term(4), t = gen.term(4);
        NormalForm ns = normalize(s, m), nt = normalize(t, m);
        ASSERT_EQ(normalize(Term::add(s, t), m), nf_add(ns, nt));
        ASSERT_EQ(normalize(Term::mul(s, t), m), nf_mul(ns, nt));
        ASSERT_EQ(normalize(Term::neg(s), m), nf_neg(ns));
        ASSERT_EQ(normalize(Term::div(s, t), m), nf_mul(ns, nf_inv(nt)));
    }
}

TEST_P(NfProperty, InverseInvolution) {
    Model m = GetParam();
    TermGenerator gen(m == Model::Rat ? 3001 : 3002);
    for (int i = 0; i < 200; ++i) {
        NormalForm nf = normalize(gen.term(), m);
        ASSERT_EQ(nf_inv(nf_inv(nf)), nf);
    }
}

TEST_P(NfProperty, MinimalAndReduced) {
    Model m = GetParam();
    TermGenerator gen(m == Model::Rat ? 4001 : 4002);
    for (int i = 0; i < 300; ++i) {
        NormalForm nf = normalize(gen.term(), m);
        if (m == Model::Rat) {
            expect_reduced(nf.pointwise());
            expect_minimal(nf.pointwise());
        } else {
            expect_reduced(nf.algebraic());
            expect_minimal(nf.algebraic());
        }
    }
}

// Structural equality against semantic agreement: pairs sharing a base but
// with perturbed exceptional behaviour must be told apart, equal ones not.
TEST_P(NfProperty, Canonicity) {
    Model m = GetParam();
    TermGenerator gen(m == Model::Rat ? 5001 : 5002);
    int equal_pairs = 0;
    for (int i = 0; i < 300; ++i) {
        Term s = gen.term(4);
        Term t;
        switch (gen.pick(3)) {
        case 0: t = Term::mul(s, Term::div(Term::var(), Term::var())); break;
        case 1: t = Term::add(Term::neg(Term::neg(s)), Term::zero()); break;
        default: t = gen.term(4); break;
        }
        NormalForm a = normalize(s, m), b = normalize(t, m);
        bool agree = true;
        for (long k = -50; k <= 50 && agree; ++k) agree = eval_term(s, q(k)) == eval_term(t, q(k));
        for (auto const& pt : sample_points(gen, a, 0)) agree = agree && eval_term(s, pt) == eval_term(t, pt);
        for (auto const& pt : sample_points(gen, b, 0)) agree = agree && eval_term(s, pt) == eval_term(t, pt);
        if (m == Model::Complex) {
            std::set<Poly> loci;
            for (auto const& r : check_loci(a.algebraic())) loci.insert(r);
            for (auto const& r : check_loci(b.algebraic())) loci.insert(r);
            for (auto const& r : loci) agree = agree && eval_term_mod(s, r) == eval_term_mod(t, r);
        }
        ASSERT_EQ(a == b, agree) << print(s) << " vs " << print(t);
        equal_pairs += agree;
    }
    EXPECT_GT(equal_pairs, 50);
}

INSTANTIATE_TEST_SUITE_P(Models, NfProperty, ::testing::Values(Model::Rat, Model::Complex),
                         [](auto const& info) { return std::string(info.param == Model::Rat ? "Q" : "C"); });

TEST(NfRefinement, ComplexAgreesWithRationalOnRationalPoints) {
    TermGenerator gen(6001);
    for (int i = 0; i < 300; ++i) {
        Term t = gen.term();
        PointwiseNF pq = normalize_q(t);
        AlgebraicNF pc = normalize_c(t);
        EXPECT_EQ(pq.num, pc.num);
        EXPECT_EQ(pq.den, pc.den);
        for (auto const& [pt, v] : pq.exceptions) {
            Poly lin = primitive_part(Poly::linear_root(pt));
            auto const* c = pc.find(lin);
            ASSERT_NE(c, nullptr) << print(t) << " at " << pt.str();
            EXPECT_EQ(c->value.eval(pt), v);
        }
        for (int k = 0; k < 10; ++k) {
            Rat a = gen.point();
            EXPECT_EQ(nf_eval(pq, a), nf_eval(pc, a));
        }
    }
}
