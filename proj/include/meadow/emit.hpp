#pragma once

/**
 * @file emit.hpp
 * @brief Mixed fractions: a standardized polynomial g plus a simple fraction f.
 *
 * Given a normal form num/den with exceptional points (or loci) E and target
 * values v on them:
 *
 *   g   interpolates v on E  (Lagrange over points, or a CRT-style sum
 *       sum_r h_r * (v_r / h_r mod r) over loci, h_r = prod of the other loci);
 *       when den is constant, g is num/den plus the interpolant of the
 *       differences v - num/den,
 *   l   the common denominator of g, G = l*g,
 *   c   the common denominator of num, N = c*num,
 *   e'  the product of the loci of E that do not divide den,
 *   f = (N*e'*l - c*den*e'*G) / (c*den*e'*l).
 *
 * Off E the fraction equals num/den - g. On E its denominator vanishes, so
 * f = 0 and g + f = g = v. The witness n = c*l collects the integer
 * cancellations n/n = 1 the rewrite relies on.
 */

#include "meadow/factor.hpp"
#include "meadow/interp.hpp"
#include "meadow/nf.hpp"
#include "meadow/term.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace meadow {

/// Denotes the term 1 - e/e: 1 on the roots of e, 0 elsewhere.
struct PhiExpr {
    Poly locus = Poly::constant(1);

    Term to_term() const;
};

inline PhiExpr build_phi(std::vector<Rat> const& points) {
    Poly e = Poly::constant(1);
    for (auto const& a : points) e *= primitive_part(Poly::linear_root(a));
    return {e};
}

inline PhiExpr build_phi(std::vector<Poly> const& loci) {
    Poly e = Poly::constant(1);
    for (auto const& r : loci) {
        if (r.is_zero()) throw std::invalid_argument("build_phi: zero locus");
        e *= r;
    }
    return {e};
}

/// One interpolation node: an exceptional point (locus x - a) or irreducible
/// locus, the target value there, and its interpolation weight (b_i for
/// points, s'_r = v / h_r mod r for loci).
struct EmitNode {
    Poly locus;
    Poly target;
    Poly weight;
    friend bool operator==(EmitNode const&, EmitNode const&) = default;
};

struct MixedFraction {
    Model model = Model::Rat;
    StdPoly poly;
    Poly frac_num;
    Poly frac_den = Poly::constant(1);
    Integer witness_n = 1;
    std::vector<EmitNode> nodes;

    Poly g() const { return poly.to_poly(); }
};

// ---------------------------------------------------------------------------
// Terms for polynomials

/// Division-free term for an integer-coefficient polynomial, highest power
/// first: 3*x^2 - 7.
inline Term integer_poly_term(Poly const& p) {
    if (!p.has_integer_coeffs()) throw std::invalid_argument("integer_poly_term: non-integer coefficients");
    if (p.is_zero()) return Term::zero();
    std::optional<Term> acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        Integer c = p.coeff(i).numerator();
        if (c == 0) continue;
        Integer mag = ::abs(c);
        std::optional<Term> mono;
        if (i == 1) mono = Term::var();
        if (i > 1) mono = Term::pow(Term::var(), i);
        Term mono_term = mono ? (mag == 1 ? *mono : Term::mul(Term::lit(mag), *mono)) : Term::lit(mag);
        if (!acc) {
            if (c < 0) {
                // leading minus binds to the coefficient: -7*x^2, -x^2
                mono_term = !mono ? Term::neg(Term::lit(mag))
                                  : (mag == 1 ? Term::neg(*mono) : Term::mul(Term::neg(Term::lit(mag)), *mono));
            }
            acc = mono_term;
        } else {
            acc = Term::add(*acc, c < 0 ? Term::neg(mono_term) : mono_term);
        }
    }
    return *acc;
}

/// Polynomial term in standardized display, coefficients as closed simple
/// fractions r_i/l (plain integers when l = 1).
inline Term std_poly_term(StdPoly const& sp) {
    if (sp.denominator == 1) return integer_poly_term(Poly::from_integers(sp.numerators));
    std::optional<Term> acc;
    for (std::size_t i = sp.numerators.size(); i-- > 0;) {
        Integer const& r = sp.numerators[i];
        if (r == 0) continue;
        // a leading negative coefficient reads -r/l, i.e. (-r)/l
        bool lead_neg = !acc && r < 0;
        Term num = Term::lit(Integer(::abs(r)));
        Term coef = Term::div(lead_neg ? Term::neg(num) : num, Term::lit(sp.denominator));
        Term mono = i == 0 ? coef : Term::mul(coef, i == 1 ? Term::var() : Term::pow(Term::var(), i));
        if (!acc)
            acc = mono;
        else
            acc = Term::add(*acc, r < 0 ? Term::neg(mono) : mono);
    }
    return acc ? *acc : Term::zero();
}

inline Term PhiExpr::to_term() const {
    Term e = integer_poly_term(locus);
    return Term::add(Term::one(), Term::neg(Term::div(e, e)));
}

/// g + frac_num/frac_den as a term; classifies as MixedFraction.
inline Term to_term(MixedFraction const& mf) {
    return Term::add(std_poly_term(mf.poly), Term::div(integer_poly_term(mf.frac_num), integer_poly_term(mf.frac_den)));
}

// ---------------------------------------------------------------------------
// Emission

namespace detail {

/// Assembles f from the base fraction, g, and the extra locus product e'.
inline void assemble_fraction(MixedFraction& mf, Poly const& num, Poly const& den, Poly const& g,
                              Poly const& extra_loci) {
    mf.poly = standardize(g);
    Integer l = mf.poly.denominator;
    Integer c = denominator_lcm(num);
    Poly big_n = Rat(c) * num;
    Poly big_g = Rat(l) * g;
    mf.frac_num = Rat(l) * big_n * extra_loci - Rat(c) * den * extra_loci * big_g;
    mf.frac_den = mf.frac_num.is_zero() ? Poly::constant(1) : Rat(Integer(c * l)) * den * extra_loci;
    mf.witness_n = c * l;
}

/// A constant denominator means the generic part is itself a polynomial; it
/// goes into g so that polynomial inputs come out as g + 0/1.
inline Poly polynomial_part(Poly const& num, Poly const& den) {
    if (den.degree() > 0) return Poly();
    return num * Poly::constant(Rat(1) / den.lc());
}

}  // namespace detail

inline MixedFraction emit_mixed_q(PointwiseNF const& nf) {
    MixedFraction mf;
    mf.model = Model::Rat;
    std::map<Rat, Rat> targets;
    for (auto const& r : rational_roots(nf.den)) targets.emplace(r, Rat(0));
    for (auto const& [pt, v] : nf.exceptions) targets[pt] = v;

    Poly q = detail::polynomial_part(nf.num, nf.den);
    std::vector<InterpPoint> pts;
    std::vector<Rat> extra;
    for (auto const& [pt, v] : targets) {
        pts.push_back({pt, v - q.eval(pt)});
        if (!nf.den.eval(pt).is_zero()) extra.push_back(pt);
    }
    std::vector<Rat> weights = lagrange_weights(pts);
    Poly g = q + lagrange_interpolate(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Rat const& v = targets.at(pts[i].a);
        mf.nodes.push_back({Poly::linear_root(pts[i].a), Poly::constant(v), Poly::constant(weights[i])});
        if (g.eval(pts[i].a) != v) throw std::logic_error("emit_mixed_q: interpolation failed");
    }

    detail::assemble_fraction(mf, nf.num, nf.den, g, build_phi(extra).locus);
    return mf;
}

inline MixedFraction emit_mixed_c(AlgebraicNF const& nf) {
    MixedFraction mf;
    mf.model = Model::Complex;
    std::vector<Correction> targets;
    for (auto const& r : irreducible_factors(nf.den)) targets.push_back({r, Poly()});
    for (auto const& c : nf.corrections) {
        auto it = std::find_if(targets.begin(), targets.end(), [&](Correction const& t) { return t.locus == c.locus; });
        if (it != targets.end())
            it->value = c.value;
        else
            targets.push_back(c);
    }
    detail::sort_corrections(targets);

    Poly q = detail::polynomial_part(nf.num, nf.den);
    Poly g = q;
    std::vector<Poly> extra;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        Poly const& r = targets[i].locus;
        Poly h = Poly::constant(1);
        for (std::size_t j = 0; j < targets.size(); ++j)
            if (j != i) h *= targets[j].locus;
        Poly weight = mul_mod(targets[i].value - q, inv_mod(h, r), r);
        g += h * weight;
        mf.nodes.push_back({r, targets[i].value, weight});
        if (!divides(r, nf.den)) extra.push_back(r);
    }
    for (auto const& t : targets)
        if (rem(g, t.locus) != t.value) throw std::logic_error("emit_mixed_c: interpolation failed");

    detail::assemble_fraction(mf, nf.num, nf.den, g, build_phi(extra).locus);
    return mf;
}

inline MixedFraction emit_mixed(NormalForm const& nf) {
    if (nf.model() == Model::Rat) return emit_mixed_q(nf.pointwise());
    return emit_mixed_c(nf.algebraic());
}

struct WitnessedEmission {
    MixedFraction mf;
    Integer n;
};

/// Normalizes in the complex model and emits; n is a positive integer with
/// n*t = n*(g + f) under the rewrite's single cancellation assumption n/n = 1.
inline WitnessedEmission emit_with_witness(Term const& t) {
    MixedFraction mf = emit_mixed_c(normalize_c(t));
    Integer n = mf.witness_n;
    return {std::move(mf), n};
}

}  // namespace meadow
