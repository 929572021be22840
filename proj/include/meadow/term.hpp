#pragma once

/**
 * @file term.hpp
 * @brief Univariate terms over the divisive meadow signature {0, 1, -, +, *, /}.
 *
 * A Term is an immutable, shared AST node. Integer literals and natural powers
 * are kept as sugar; desugar() expands them into the bare signature.
 *
 * Construction helpers canonicalize literals so that printing and re-parsing
 * is structurally lossless: 0 and 1 become Zero/One, and a negative literal
 * becomes Neg of a positive one.
 */

#include "meadow/rat.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace meadow {

enum class Op { Zero, One, IntLit, Var, Neg, Add, Mul, Div, Pow };

class Term {
public:
    struct Node {
        Op op;
        Integer value;      // IntLit only, always >= 2
        unsigned long exponent = 0;  // Pow only
        std::shared_ptr<Node const> lhs;
        std::shared_ptr<Node const> rhs;
    };

    Term() : Term(make(Op::Zero)) {}

    Op op() const { return node_->op; }
    Integer const& value() const { return node_->value; }
    unsigned long exponent() const { return node_->exponent; }
    Term lhs() const { return Term(node_->lhs); }
    Term rhs() const { return Term(node_->rhs); }
    /// Operand of a unary node (Neg, Pow).
    Term arg() const { return Term(node_->lhs); }

    bool is_binary() const { return op() == Op::Add || op() == Op::Mul || op() == Op::Div; }

    friend bool operator==(Term const& a, Term const& b) {
        if (a.node_ == b.node_) return true;
        if (a.op() != b.op()) return false;
        switch (a.op()) {
        case Op::Zero:
        case Op::One:
        case Op::Var:
            return true;
        case Op::IntLit:
            return a.value() == b.value();
        case Op::Neg:
            return a.arg() == b.arg();
        case Op::Pow:
            return a.exponent() == b.exponent() && a.arg() == b.arg();
        default:
            return a.lhs() == b.lhs() && a.rhs() == b.rhs();
        }
    }

    static Term zero() { return make(Op::Zero); }
    static Term one() { return make(Op::One); }
    static Term var() { return make(Op::Var); }
    static Term lit(Integer const& n) {
        if (n < 0) return neg(lit(Integer(-n)));
        if (n == 0) return zero();
        if (n == 1) return one();
        Node node{Op::IntLit, n, 0, nullptr, nullptr};
        return Term(std::make_shared<Node const>(std::move(node)));
    }
    static Term lit(long n) { return lit(Integer(n)); }
    static Term neg(Term const& a) { return unary(Op::Neg, a, 0); }
    static Term add(Term const& a, Term const& b) { return binary(Op::Add, a, b); }
    static Term mul(Term const& a, Term const& b) { return binary(Op::Mul, a, b); }
    static Term div(Term const& a, Term const& b) { return binary(Op::Div, a, b); }
    static Term pow(Term const& a, unsigned long n) { return unary(Op::Pow, a, n); }

private:
    explicit Term(std::shared_ptr<Node const> n) : node_(std::move(n)) {}

    static Term make(Op op) { return Term(std::make_shared<Node const>(Node{op, {}, 0, nullptr, nullptr})); }
    static Term unary(Op op, Term const& a, unsigned long e) {
        return Term(std::make_shared<Node const>(Node{op, {}, e, a.node_, nullptr}));
    }
    static Term binary(Op op, Term const& a, Term const& b) {
        return Term(std::make_shared<Node const>(Node{op, {}, 0, a.node_, b.node_}));
    }

    std::shared_ptr<Node const> node_;
};

// ---------------------------------------------------------------------------
// Structural utilities

inline bool contains_var(Term const& t) {
    switch (t.op()) {
    case Op::Var: return true;
    case Op::Zero:
    case Op::One:
    case Op::IntLit: return false;
    case Op::Neg:
    case Op::Pow: return contains_var(t.arg());
    default: return contains_var(t.lhs()) || contains_var(t.rhs());
    }
}

inline bool contains_div(Term const& t) {
    switch (t.op()) {
    case Op::Div: return true;
    case Op::Zero:
    case Op::One:
    case Op::IntLit:
    case Op::Var: return false;
    case Op::Neg:
    case Op::Pow: return contains_div(t.arg());
    default: return contains_div(t.lhs()) || contains_div(t.rhs());
    }
}

inline std::size_t term_size(Term const& t) {
    switch (t.op()) {
    case Op::Zero:
    case Op::One:
    case Op::IntLit:
    case Op::Var: return 1;
    case Op::Neg:
    case Op::Pow: return 1 + term_size(t.arg());
    default: return 1 + term_size(t.lhs()) + term_size(t.rhs());
    }
}

inline std::size_t term_depth(Term const& t) {
    switch (t.op()) {
    case Op::Zero:
    case Op::One:
    case Op::IntLit:
    case Op::Var: return 0;
    case Op::Neg:
    case Op::Pow: return 1 + term_depth(t.arg());
    default: return 1 + std::max(term_depth(t.lhs()), term_depth(t.rhs()));
    }
}

/// Rewrites integer literals and powers into the bare signature.
/// Literals use a binary expansion n = (1+1)*k + b, so the result stays
/// logarithmic in n.
inline Term desugar(Term const& t) {
    switch (t.op()) {
    case Op::Zero:
    case Op::One:
    case Op::Var:
        return t;
    case Op::IntLit: {
        Integer n = t.value();
        // n >= 2 here
        Term two = Term::add(Term::one(), Term::one());
        Integer half = n / 2;
        Term high = half == 1 ? two : Term::mul(two, desugar(Term::lit(half)));
        if (n % 2 == 0)
            return half == 1 ? two : high;
        return Term::add(half == 1 ? two : high, Term::one());
    }
    case Op::Neg:
        return Term::neg(desugar(t.arg()));
    case Op::Pow: {
        if (t.exponent() == 0)
            return Term::one();
        Term base = desugar(t.arg());
        Term acc = base;
        for (unsigned long i = 1; i < t.exponent(); ++i)
            acc = Term::mul(acc, base);
        return acc;
    }
    case Op::Add:
        return Term::add(desugar(t.lhs()), desugar(t.rhs()));
    case Op::Mul:
        return Term::mul(desugar(t.lhs()), desugar(t.rhs()));
    case Op::Div:
        return Term::div(desugar(t.lhs()), desugar(t.rhs()));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Parsing

class ParseError : public std::runtime_error {
public:
    ParseError(std::string const& msg, std::size_t pos)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view in) : in_(in) {}

    Term parse() {
        Term t = sum();
        skip_ws();
        if (pos_ != in_.size())
            throw ParseError(std::string("unexpected '") + in_[pos_] + "'", pos_);
        return t;
    }

    std::optional<std::string> const& variable() const { return var_; }

private:
    void skip_ws() {
        while (pos_ < in_.size() && (in_[pos_] == ' ' || in_[pos_] == '\t' || in_[pos_] == '\n' || in_[pos_] == '\r'))
            ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (in_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    Term sum() {
        Term acc = prod();
        for (;;) {
            if (accept("+"))
                acc = Term::add(acc, prod());
            else if (accept("-"))
                acc = Term::add(acc, Term::neg(prod()));
            else
                return acc;
        }
    }

    Term prod() {
        Term acc = unary();
        for (;;) {
            // U+00B7 MIDDLE DOT, UTF-8 encoded
            if (accept("*") || accept("\xC2\xB7"))
                acc = Term::mul(acc, unary());
            else if (accept("/"))
                acc = Term::div(acc, unary());
            else
                return acc;
        }
    }

    Term unary() {
        if (accept("-"))
            return Term::neg(unary());
        Term base = atom();
        if (accept("^")) {
            skip_ws();
            std::size_t start = pos_;
            Integer e = natural();
            if (e > Integer(1u << 20))
                throw ParseError("exponent too large", start);
            return Term::pow(base, e.get_ui());
        }
        return base;
    }

    Integer natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < in_.size() && in_[pos_] >= '0' && in_[pos_] <= '9')
            ++pos_;
        if (start == pos_)
            throw ParseError(pos_ < in_.size() ? std::string("expected natural number, found '") + in_[pos_] + "'"
                                               : std::string("expected natural number, found end of input"),
                             pos_);
        return Integer(std::string(in_.substr(start, pos_ - start)), 10);
    }

    static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

    Term atom() {
        skip_ws();
        if (pos_ >= in_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = in_[pos_];
        if (c == '(') {
            ++pos_;
            Term inner = sum();
            if (!accept(")"))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (c >= '0' && c <= '9')
            return Term::lit(natural());
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < in_.size() && ident_char(in_[pos_]))
                ++pos_;
            std::string name(in_.substr(start, pos_ - start));
            if (var_ && *var_ != name)
                throw ParseError("multiple variables: '" + *var_ + "' and '" + name + "'", start);
            var_ = name;
            return Term::var();
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    std::optional<std::string> var_;
};

}  // namespace detail

/// Parses an expression. Any single identifier is accepted as the variable
/// and canonicalized to x; a second distinct identifier is an error.
inline Term parse(std::string_view input) {
    detail::Parser p(input);
    return p.parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

// Binding levels matching the grammar: sum < prod < unary < atom.
enum Level { kSum = 1, kProd = 2, kUnary = 3, kAtom = 4 };

inline Level level_of(Term const& t) {
    switch (t.op()) {
    case Op::Add: return kSum;
    case Op::Mul:
    case Op::Div: return kProd;
    case Op::Neg:
    case Op::Pow: return kUnary;
    default: return kAtom;
    }
}

inline void print_into(std::string& out, Term const& t, Level need);

inline void print_at(std::string& out, Term const& t, Level need) {
    if (level_of(t) < need) {
        out += '(';
        print_into(out, t, kSum);
        out += ')';
    } else {
        print_into(out, t, need);
    }
}

inline void print_into(std::string& out, Term const& t, Level) {
    switch (t.op()) {
    case Op::Zero: out += '0'; break;
    case Op::One: out += '1'; break;
    case Op::IntLit: out += t.value().get_str(); break;
    case Op::Var: out += 'x'; break;
    case Op::Neg:
        out += '-';
        print_at(out, t.arg(), kUnary);
        break;
    case Op::Pow:
        print_at(out, t.arg(), kAtom);
        out += '^';
        out += std::to_string(t.exponent());
        break;
    case Op::Add: {
        print_at(out, t.lhs(), kSum);
        Term r = t.rhs();
        if (r.op() == Op::Neg) {
            out += " - ";
            print_at(out, r.arg(), kProd);
        } else {
            out += " + ";
            print_at(out, r, kProd);
        }
        break;
    }
    case Op::Mul:
    case Op::Div:
        print_at(out, t.lhs(), kProd);
        out += t.op() == Op::Mul ? '*' : '/';
        // "a*-b" parses fine but reads badly
        print_at(out, t.rhs(), t.rhs().op() == Op::Neg ? kAtom : kUnary);
        break;
    }
}

}  // namespace detail

/// Canonical text; parse(print(t)) == t structurally.
inline std::string print(Term const& t) {
    std::string out;
    detail::print_into(out, t, detail::kSum);
    return out;
}

// ---------------------------------------------------------------------------
// Classification

enum class TermClass { SimpleFraction, ClosedSimpleFraction, Polynomial, MixedFraction, Fraction, Other };

inline char const* to_string(TermClass c) {
    switch (c) {
    case TermClass::SimpleFraction: return "SimpleFraction";
    case TermClass::ClosedSimpleFraction: return "ClosedSimpleFraction";
    case TermClass::Polynomial: return "Polynomial";
    case TermClass::MixedFraction: return "MixedFraction";
    case TermClass::Fraction: return "Fraction";
    case TermClass::Other: return "Other";
    }
    return "?";
}

inline bool is_simple_fraction(Term const& t) {
    return t.op() == Op::Div && !contains_div(t.lhs()) && !contains_div(t.rhs());
}

/// Built from the variable, closed division-free terms and closed simple
/// fractions using +, -, * and ^.
inline bool is_polynomial(Term const& t) {
    switch (t.op()) {
    case Op::Zero:
    case Op::One:
    case Op::IntLit:
    case Op::Var: return true;
    case Op::Div: return is_simple_fraction(t) && !contains_var(t);
    case Op::Neg:
    case Op::Pow: return is_polynomial(t.arg());
    default: return is_polynomial(t.lhs()) && is_polynomial(t.rhs());
    }
}

inline TermClass classify(Term const& t) {
    if (t.op() == Op::Div) {
        if (!is_simple_fraction(t))
            return TermClass::Fraction;
        return contains_var(t) ? TermClass::SimpleFraction : TermClass::ClosedSimpleFraction;
    }
    if (t.op() == Op::Add && is_polynomial(t.lhs()) && is_simple_fraction(t.rhs()))
        return TermClass::MixedFraction;
    if (is_polynomial(t))
        return TermClass::Polynomial;
    return TermClass::Other;
}

}  // namespace meadow
