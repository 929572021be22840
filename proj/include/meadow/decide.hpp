#pragma once

// Decision procedures over normal forms: semantic equality, expressibility
// as a single simple fraction, and finite-support summation.

#include "meadow/emit.hpp"
#include "meadow/nf.hpp"
#include "meadow/trace.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace meadow {

inline bool decide_eq(Term const& s, Term const& t, Model m) { return normalize(s, m) == normalize(t, m); }

/// Where two normal forms disagree: a rational point, or (complex model) an
/// irreducible locus on whose roots the residues differ.
struct Distinction {
    std::optional<Rat> point;
    std::optional<Poly> locus;
    Poly lhs_value;  ///< value (constant) or residue at the witness
    Poly rhs_value;
};

namespace detail {

inline std::optional<Rat> first_differing_point(NormalForm const& a, NormalForm const& b) {
    // Two distinct rational functions agree on at most finitely many points,
    // so a scan over 0, 1, -1, 2, -2, ... terminates.
    std::size_t bound = a.num().size() + a.den().size() + b.num().size() + b.den().size() + 2;
    if (a.model() == Model::Rat) bound += a.pointwise().exceptions.size() + b.pointwise().exceptions.size();
    else bound += a.algebraic().corrections.size() + b.algebraic().corrections.size();
    for (long k = 0; k <= static_cast<long>(bound); ++k) {
        for (long pt : {k, -k}) {
            if (nf_eval(a, Rat(pt)) != nf_eval(b, Rat(pt))) return Rat(pt);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// nullopt iff the normal forms are equal.
inline std::optional<Distinction> distinguish(NormalForm const& a, NormalForm const& b) {
    detail::require_same_model(a, b);
    if (a == b) return std::nullopt;
    if (a.model() == Model::Rat) {
        std::set<Rat> pts;
        for (auto const& [pt, v] : a.pointwise().exceptions) pts.insert(pt);
        for (auto const& [pt, v] : b.pointwise().exceptions) pts.insert(pt);
        for (auto const& pt : pts) {
            Rat va = nf_eval(a, pt), vb = nf_eval(b, pt);
            if (va != vb) return Distinction{pt, std::nullopt, Poly::constant(va), Poly::constant(vb)};
        }
    } else {
        std::set<Poly> loci;
        for (auto const& c : a.algebraic().corrections) loci.insert(c.locus);
        for (auto const& c : b.algebraic().corrections) loci.insert(c.locus);
        for (auto const& r : irreducible_factors(a.den())) loci.insert(r);
        for (auto const& r : irreducible_factors(b.den())) loci.insert(r);
        for (auto const& r : loci) {
            Poly va = a.algebraic().value_mod(r), vb = b.algebraic().value_mod(r);
            if (va != vb) return Distinction{std::nullopt, r, va, vb};
        }
    }
    if (auto pt = detail::first_differing_point(a, b))
        return Distinction{*pt, std::nullopt, Poly::constant(nf_eval(a, *pt)), Poly::constant(nf_eval(b, *pt))};
    throw std::logic_error("distinguish: unequal normal forms with no distinguishing witness");
}

struct SimpleReport {
    std::optional<Term> fraction;
    /// When not expressible: an exceptional point with a nonzero value.
    std::optional<std::pair<Rat, Rat>> obstruction;
};

/// A simple fraction P/Q equal to t in the rationals exists iff every
/// exceptional value of t's normal form is 0. P/Q is then num*e/(den*e) with
/// e = prod (x - a) over the exceptional points, cleared to integers.
inline SimpleReport simple_report(Term const& t) {
    PointwiseNF nf = normalize_q(t);
    for (auto const& [pt, v] : nf.exceptions)
        if (!v.is_zero()) return {std::nullopt, std::make_pair(pt, v)};
    std::vector<Rat> pts;
    for (auto const& [pt, v] : nf.exceptions) pts.push_back(pt);
    Poly e = build_phi(pts).locus;
    Rat c(denominator_lcm(nf.num));
    Poly p = c * nf.num * e;
    Poly q = c * nf.den * e;
    return {Term::div(integer_poly_term(p), integer_poly_term(q)), std::nullopt};
}

inline std::optional<Term> simple_expressible(Term const& t) { return simple_report(t).fraction; }

struct SumStarResult {
    Rat value;
    bool support_finite = false;
    friend bool operator==(SumStarResult const&, SumStarResult const&) = default;
};

/// Sum of t over the points where it is nonzero when there are finitely many,
/// else 0. A nonzero generic part is nonzero almost everywhere; otherwise the
/// support lies in the stored corrections.
inline SumStarResult sum_star(Term const& t, Model m) {
    NormalForm nf = normalize(t, m);
    if (!nf.num().is_zero()) return {Rat(0), false};
    Rat total;
    if (m == Model::Rat) {
        for (auto const& [pt, v] : nf.pointwise().exceptions) total += v;
    } else {
        for (auto const& c : nf.algebraic().corrections) total += trace_sum(c.value, c.locus);
    }
    return {total, true};
}

inline bool sum_star_equals(Term const& t, Term const& c, Model m) {
    if (contains_var(c)) throw std::invalid_argument("sum_star_equals: comparison term must be closed");
    return sum_star(t, m).value == eval_closed(c);
}

}  // namespace meadow
