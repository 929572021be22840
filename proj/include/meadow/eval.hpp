#pragma once

// Pointwise evaluation of terms in the meadow of rationals (x/0 = 0).

#include "meadow/rat.hpp"
#include "meadow/term.hpp"

#include <stdexcept>

namespace meadow {

namespace detail {

inline Rat rat_pow(Rat base, unsigned long e) {
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

inline Rat eval_at(Term const& t, Rat const* point) {
    switch (t.op()) {
    case Op::Zero: return Rat(0);
    case Op::One: return Rat(1);
    case Op::IntLit: return Rat(t.value());
    case Op::Var:
        if (!point)
            throw std::invalid_argument("eval_closed: term contains a variable");
        return *point;
    case Op::Neg: return -eval_at(t.arg(), point);
    case Op::Pow: return rat_pow(eval_at(t.arg(), point), t.exponent());
    case Op::Add: return eval_at(t.lhs(), point) + eval_at(t.rhs(), point);
    case Op::Mul: return eval_at(t.lhs(), point) * eval_at(t.rhs(), point);
    case Op::Div: return eval_at(t.lhs(), point) / eval_at(t.rhs(), point);
    }
    return Rat(0);
}

}  // namespace detail

/// Value of t with the variable bound to a.
inline Rat eval_term(Term const& t, Rat const& a) { return detail::eval_at(t, &a); }

/// Value of a closed term; throws std::invalid_argument if t has a variable.
inline Rat eval_closed(Term const& t) { return detail::eval_at(t, nullptr); }

}  // namespace meadow
