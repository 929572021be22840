#pragma once

/**
 * @file rat.hpp
 * @brief Exact rational numbers with the meadow (total) inverse.
 *
 * Rat is a thin value wrapper around GMP's mpq_class. Every value is kept
 * canonical: coprime numerator and denominator, denominator positive, zero
 * stored as 0/1. Equality is therefore structural.
 *
 * Division follows meadow semantics: x/0 = 0.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace meadow {

using Integer = mpz_class;

class Rat {
    mpq_class v_;

public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
    Rat(Integer const& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(Integer const& n, Integer const& d) {
        if (d == 0)
            throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    mpq_class const& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(Rat const& o) { v_ += o.v_; return *this; }
    Rat& operator-=(Rat const& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(Rat const& o) { v_ *= o.v_; return *this; }
    /// Meadow division: anything divided by zero is zero.
    Rat& operator/=(Rat const& o) {
        if (o.is_zero())
            v_ = 0;
        else
            v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, Rat const& b) { return a += b; }
    friend Rat operator-(Rat a, Rat const& b) { return a -= b; }
    friend Rat operator*(Rat a, Rat const& b) { return a *= b; }
    friend Rat operator/(Rat a, Rat const& b) { return a /= b; }

    friend bool operator==(Rat const& a, Rat const& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(Rat const& a, Rat const& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const { return v_.get_d(); }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const {
        if (is_integer())
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, Rat const& r) { return os << r.str(); }
};

inline Rat rat_add(Rat const& a, Rat const& b) { return a + b; }
inline Rat rat_mul(Rat const& a, Rat const& b) { return a * b; }
inline Rat rat_neg(Rat const& a) { return -a; }

/// 1/a for a != 0, and 0 for a == 0.
inline Rat meadow_inv(Rat const& a) {
    if (a.is_zero())
        return Rat();
    return Rat(a.denominator(), a.numerator());
}

inline Rat abs(Rat const& a) { return a.sign() < 0 ? -a : a; }

/// Parses "p", "-p", "p/q" with optional surrounding whitespace.
inline Rat parse_rat(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
            digits.remove_prefix(1);
        if (digits.empty())
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        for (char c : digits)
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        std::string buf(s);
        if (buf.front() == '+') buf.erase(0, 1);
        return Integer(buf, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(text));
    Integer n = parse_int(text.substr(0, slash));
    Integer d = parse_int(text.substr(slash + 1));
    if (d == 0)
        throw std::invalid_argument("malformed rational: zero denominator");
    return Rat(n, d);
}

inline Integer lcm(Integer const& a, Integer const& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(Integer const& a, Integer const& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace meadow
