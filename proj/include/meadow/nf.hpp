#pragma once

/**
 * @file nf.hpp
 * @brief Canonical normal forms for univariate meadow terms.
 *
 * A normal form is a reduced rational function num/den (the generic part)
 * together with the finitely many places where the term's meadow value
 * differs from it:
 *
 *  - PointwiseNF (meadow of rationals): a map from rational points to values.
 *  - AlgebraicNF (meadow of complex numbers): a list of irreducible loci r
 *    with a residue s mod r giving the value on every root of r.
 *
 * Generic value: num(a)/den(a) where den(a) != 0, and 0 where den(a) = 0.
 * Corrections are stored only where they differ from the generic value, so
 * two normal forms are structurally equal iff they denote the same function.
 */

#include "meadow/eval.hpp"
#include "meadow/factor.hpp"
#include "meadow/poly.hpp"
#include "meadow/term.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace meadow {

enum class Model { Rat, Complex };

inline char const* model_name(Model m) { return m == Model::Rat ? "Q" : "C"; }

namespace detail {

struct ReducedFraction {
    Poly num, den;
};

/// num/den with gcd cancelled and den primitive with positive leading
/// coefficient. A zero numerator gives 0/1.
inline ReducedFraction reduce_fraction(Poly const& num, Poly const& den) {
    if (den.is_zero()) throw std::domain_error("reduce_fraction: zero denominator");
    if (num.is_zero()) return {Poly(), Poly::constant(1)};
    Poly g = poly_gcd(num, den);
    Poly n = exact_div(num, g);
    Poly d = exact_div(den, g);
    ContentSplit cs = content_split(d);
    Rat k = meadow_inv(cs.content);
    return {k * n, cs.primitive};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Pointwise normal form (rationals)

struct PointwiseNF {
    Poly num;
    Poly den = Poly::constant(1);
    std::map<Rat, Rat> exceptions;

    Rat generic(Rat const& a) const { return num.eval(a) / den.eval(a); }

    friend bool operator==(PointwiseNF const&, PointwiseNF const&) = default;
};

inline PointwiseNF pointwise_constant(Rat const& c) { return {Poly::constant(c), Poly::constant(1), {}}; }
inline PointwiseNF pointwise_var() { return {Poly::x(), Poly::constant(1), {}}; }

inline Rat nf_eval(PointwiseNF const& nf, Rat const& pt) {
    auto it = nf.exceptions.find(pt);
    if (it != nf.exceptions.end()) return it->second;
    return nf.generic(pt);
}

namespace detail {

template <class Combine>
PointwiseNF pointwise_binary(PointwiseNF const& a, PointwiseNF const& b, Poly const& num, Poly const& den,
                             Combine combine) {
    ReducedFraction base = reduce_fraction(num, den);
    PointwiseNF out{base.num, base.den, {}};
    std::set<Rat> candidates;
    for (auto const& [pt, v] : a.exceptions) candidates.insert(pt);
    for (auto const& [pt, v] : b.exceptions) candidates.insert(pt);
    for (auto const& r : rational_roots(a.den)) candidates.insert(r);
    for (auto const& r : rational_roots(b.den)) candidates.insert(r);
    for (auto const& pt : candidates) {
        Rat v = combine(nf_eval(a, pt), nf_eval(b, pt));
        if (v != out.generic(pt)) out.exceptions.emplace(pt, v);
    }
    return out;
}

}  // namespace detail

inline PointwiseNF nf_add(PointwiseNF const& a, PointwiseNF const& b) {
    return detail::pointwise_binary(a, b, a.num * b.den + b.num * a.den, a.den * b.den,
                                    [](Rat const& x, Rat const& y) { return x + y; });
}

inline PointwiseNF nf_mul(PointwiseNF const& a, PointwiseNF const& b) {
    return detail::pointwise_binary(a, b, a.num * b.num, a.den * b.den,
                                    [](Rat const& x, Rat const& y) { return x * y; });
}

inline PointwiseNF nf_neg(PointwiseNF const& a) {
    PointwiseNF out{-a.num, a.den, {}};
    for (auto const& [pt, v] : a.exceptions) out.exceptions.emplace(pt, -v);
    return out;
}

/// Meadow inverse. Uncorrected roots of den or num keep value 0 on both sides,
/// so only the stored exceptions need revisiting.
inline PointwiseNF nf_inv(PointwiseNF const& a) {
    PointwiseNF out;
    if (a.num.is_zero()) {
        out = pointwise_constant(Rat(0));
    } else {
        detail::ReducedFraction base = detail::reduce_fraction(a.den, a.num);
        out = {base.num, base.den, {}};
    }
    for (auto const& [pt, v] : a.exceptions) {
        Rat inv = meadow_inv(v);
        if (inv != out.generic(pt)) out.exceptions.emplace(pt, inv);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Algebraic normal form (complex numbers)

struct Correction {
    Poly locus;  ///< irreducible, primitive, positive leading coefficient
    Poly value;  ///< residue mod locus, deg < deg locus
    friend bool operator==(Correction const&, Correction const&) = default;
};

struct AlgebraicNF {
    Poly num;
    Poly den = Poly::constant(1);
    std::vector<Correction> corrections;  ///< sorted by locus

    /// Generic value on the roots of an irreducible locus r, as a residue.
    Poly generic_mod(Poly const& r) const {
        if (divides(r, den)) return Poly();
        return mul_mod(num, inv_mod(den, r), r);
    }

    Correction const* find(Poly const& r) const {
        auto it = std::lower_bound(corrections.begin(), corrections.end(), r,
                                   [](Correction const& c, Poly const& key) { return c.locus < key; });
        if (it != corrections.end() && it->locus == r) return &*it;
        return nullptr;
    }

    /// The term's value on the roots of r, as a residue mod r.
    Poly value_mod(Poly const& r) const {
        if (auto const* c = find(r)) return c->value;
        return generic_mod(r);
    }

    friend bool operator==(AlgebraicNF const&, AlgebraicNF const&) = default;
};

inline AlgebraicNF algebraic_constant(Rat const& c) { return {Poly::constant(c), Poly::constant(1), {}}; }
inline AlgebraicNF algebraic_var() { return {Poly::x(), Poly::constant(1), {}}; }

/// Value at a rational point: a locus vanishing at pt is linear, so its
/// residue is a constant.
inline Rat nf_eval(AlgebraicNF const& nf, Rat const& pt) {
    for (auto const& c : nf.corrections)
        if (c.locus.degree() == 1 && c.locus.eval(pt).is_zero()) return c.value.eval(pt);
    return nf.num.eval(pt) / nf.den.eval(pt);
}

namespace detail {

inline void sort_corrections(std::vector<Correction>& cs) {
    std::sort(cs.begin(), cs.end(), [](Correction const& a, Correction const& b) { return a.locus < b.locus; });
}

template <class Combine>
AlgebraicNF algebraic_binary(AlgebraicNF const& a, AlgebraicNF const& b, Poly const& num, Poly const& den,
                             Combine combine) {
    ReducedFraction base = reduce_fraction(num, den);
    AlgebraicNF out{base.num, base.den, {}};
    std::set<Poly> candidates;
    for (auto const& c : a.corrections) candidates.insert(c.locus);
    for (auto const& c : b.corrections) candidates.insert(c.locus);
    for (auto const& r : irreducible_factors(a.den)) candidates.insert(r);
    for (auto const& r : irreducible_factors(b.den)) candidates.insert(r);
    for (auto const& r : candidates) {
        Poly v = combine(a.value_mod(r), b.value_mod(r), r);
        if (v != out.generic_mod(r)) out.corrections.push_back({r, v});
    }
    sort_corrections(out.corrections);
    return out;
}

}  // namespace detail

inline AlgebraicNF nf_add(AlgebraicNF const& a, AlgebraicNF const& b) {
    return detail::algebraic_binary(a, b, a.num * b.den + b.num * a.den, a.den * b.den,
                                    [](Poly const& x, Poly const& y, Poly const& r) { return rem(x + y, r); });
}

inline AlgebraicNF nf_mul(AlgebraicNF const& a, AlgebraicNF const& b) {
    return detail::algebraic_binary(a, b, a.num * b.num, a.den * b.den,
                                    [](Poly const& x, Poly const& y, Poly const& r) { return mul_mod(x, y, r); });
}

inline AlgebraicNF nf_neg(AlgebraicNF const& a) {
    AlgebraicNF out{-a.num, a.den, {}};
    for (auto const& c : a.corrections) out.corrections.push_back({c.locus, -c.value});
    return out;
}

inline AlgebraicNF nf_inv(AlgebraicNF const& a) {
    AlgebraicNF out;
    if (a.num.is_zero()) {
        out = algebraic_constant(Rat(0));
    } else {
        detail::ReducedFraction base = detail::reduce_fraction(a.den, a.num);
        out = {base.num, base.den, {}};
    }
    for (auto const& c : a.corrections) {
        Poly inv = inv_mod(c.value, c.locus);
        if (inv != out.generic_mod(c.locus)) out.corrections.push_back({c.locus, inv});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Residue evaluation of terms on the roots of an irreducible polynomial

/// s with deg s < deg r such that t equals s on every root of r. Division
/// inverts in Q[x]/(r); the zero residue inverts to zero.
inline Poly eval_term_mod(Term const& t, Poly const& r) {
    if (r.degree() < 1) throw std::domain_error("eval_term_mod: locus must be nonconstant");
    switch (t.op()) {
    case Op::Zero: return Poly();
    case Op::One: return rem(Poly::constant(1), r);
    case Op::IntLit: return rem(Poly::constant(Rat(t.value())), r);
    case Op::Var: return rem(Poly::x(), r);
    case Op::Neg: return -eval_term_mod(t.arg(), r);
    case Op::Pow: return pow_mod(eval_term_mod(t.arg(), r), t.exponent(), r);
    case Op::Add: return rem(eval_term_mod(t.lhs(), r) + eval_term_mod(t.rhs(), r), r);
    case Op::Mul: return mul_mod(eval_term_mod(t.lhs(), r), eval_term_mod(t.rhs(), r), r);
    case Op::Div: return mul_mod(eval_term_mod(t.lhs(), r), inv_mod(eval_term_mod(t.rhs(), r), r), r);
    }
    return Poly();
}

// ---------------------------------------------------------------------------
// Normalization

namespace detail {

template <class NF>
struct NfOps;

template <>
struct NfOps<PointwiseNF> {
    static PointwiseNF constant(Rat const& c) { return pointwise_constant(c); }
    static PointwiseNF var() { return pointwise_var(); }
};

template <>
struct NfOps<AlgebraicNF> {
    static AlgebraicNF constant(Rat const& c) { return algebraic_constant(c); }
    static AlgebraicNF var() { return algebraic_var(); }
};

template <class NF>
NF nf_pow(NF base, unsigned long e) {
    NF acc = NfOps<NF>::constant(Rat(1));
    while (e) {
        if (e & 1) acc = nf_mul(acc, base);
        e >>= 1;
        if (e) base = nf_mul(base, base);
    }
    return acc;
}

template <class NF>
NF normalize_as(Term const& t) {
    switch (t.op()) {
    case Op::Zero: return NfOps<NF>::constant(Rat(0));
    case Op::One: return NfOps<NF>::constant(Rat(1));
    case Op::IntLit: return NfOps<NF>::constant(Rat(t.value()));
    case Op::Var: return NfOps<NF>::var();
    case Op::Neg: return nf_neg(normalize_as<NF>(t.arg()));
    case Op::Pow: return nf_pow(normalize_as<NF>(t.arg()), t.exponent());
    case Op::Add: return nf_add(normalize_as<NF>(t.lhs()), normalize_as<NF>(t.rhs()));
    case Op::Mul: return nf_mul(normalize_as<NF>(t.lhs()), normalize_as<NF>(t.rhs()));
    case Op::Div: return nf_mul(normalize_as<NF>(t.lhs()), nf_inv(normalize_as<NF>(t.rhs())));
    }
    return NfOps<NF>::constant(Rat(0));
}

}  // namespace detail

inline PointwiseNF normalize_q(Term const& t) { return detail::normalize_as<PointwiseNF>(t); }
inline AlgebraicNF normalize_c(Term const& t) { return detail::normalize_as<AlgebraicNF>(t); }

/// Either flavor, tagged by model.
class NormalForm {
public:
    NormalForm(PointwiseNF nf) : v_(std::move(nf)) {}   // NOLINT(google-explicit-constructor)
    NormalForm(AlgebraicNF nf) : v_(std::move(nf)) {}   // NOLINT(google-explicit-constructor)

    Model model() const { return std::holds_alternative<PointwiseNF>(v_) ? Model::Rat : Model::Complex; }
    PointwiseNF const& pointwise() const { return std::get<PointwiseNF>(v_); }
    AlgebraicNF const& algebraic() const { return std::get<AlgebraicNF>(v_); }
    Poly const& num() const { return std::visit([](auto const& n) -> Poly const& { return n.num; }, v_); }
    Poly const& den() const { return std::visit([](auto const& n) -> Poly const& { return n.den; }, v_); }

    friend bool operator==(NormalForm const&, NormalForm const&) = default;

private:
    std::variant<PointwiseNF, AlgebraicNF> v_;
};

inline NormalForm normalize(Term const& t, Model m) {
    if (m == Model::Rat) return normalize_q(t);
    return normalize_c(t);
}

namespace detail {

inline void require_same_model(NormalForm const& a, NormalForm const& b) {
    if (a.model() != b.model())
        throw std::invalid_argument(std::string("model mismatch: ") + model_name(a.model()) + " vs " +
                                    model_name(b.model()));
}

}  // namespace detail

inline NormalForm nf_add(NormalForm const& a, NormalForm const& b) {
    detail::require_same_model(a, b);
    if (a.model() == Model::Rat) return nf_add(a.pointwise(), b.pointwise());
    return nf_add(a.algebraic(), b.algebraic());
}

inline NormalForm nf_mul(NormalForm const& a, NormalForm const& b) {
    detail::require_same_model(a, b);
    if (a.model() == Model::Rat) return nf_mul(a.pointwise(), b.pointwise());
    return nf_mul(a.algebraic(), b.algebraic());
}

inline NormalForm nf_neg(NormalForm const& a) {
    if (a.model() == Model::Rat) return nf_neg(a.pointwise());
    return nf_neg(a.algebraic());
}

inline NormalForm nf_inv(NormalForm const& a) {
    if (a.model() == Model::Rat) return nf_inv(a.pointwise());
    return nf_inv(a.algebraic());
}

inline Rat nf_eval(NormalForm const& a, Rat const& pt) {
    if (a.model() == Model::Rat) return nf_eval(a.pointwise(), pt);
    return nf_eval(a.algebraic(), pt);
}

}  // namespace meadow
