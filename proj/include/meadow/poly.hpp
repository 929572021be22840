#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Rat.
 *
 * Coefficient i is the coefficient of x^i. The highest stored coefficient is
 * always nonzero; the zero polynomial has no coefficients and degree
 * Poly::kMinusInfinity.
 */

#include "meadow/rat.hpp"

#include <algorithm>
#include <climits>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace meadow {

class Poly {
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

public:
    static constexpr int kMinusInfinity = INT_MIN;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(Rat const& c) { return Poly(std::vector<Rat>{c}); }
    static Poly x() { return Poly{Rat(0), Rat(1)}; }
    static Poly monomial(Rat const& c, std::size_t n) {
        std::vector<Rat> v(n + 1);
        v[n] = c;
        return Poly(std::move(v));
    }
    /// x - a
    static Poly linear_root(Rat const& a) { return Poly{-a, Rat(1)}; }
    static Poly from_integers(std::vector<Integer> const& coeffs) {
        std::vector<Rat> v;
        v.reserve(coeffs.size());
        for (auto const& z : coeffs) v.emplace_back(z);
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
    /// Number of stored coefficients (degree + 1, or 0 for zero).
    std::size_t size() const { return c_.size(); }
    std::vector<Rat> const& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat const& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Horner evaluation.
    Rat eval(Rat const& a) const {
        Rat acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * a + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return Poly(std::move(d));
    }

    bool has_integer_coeffs() const {
        return std::all_of(c_.begin(), c_.end(), [](Rat const& r) { return r.is_integer(); });
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly& operator+=(Poly const& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(Poly const& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, Poly const& b) { return a += b; }
    friend Poly operator-(Poly a, Poly const& b) { return a -= b; }
    friend Poly operator*(Poly const& a, Poly const& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(Rat const& s, Poly const& p) {
        if (s.is_zero()) return Poly();
        Poly r = p;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    Poly& operator*=(Poly const& o) { return *this = *this * o; }

    friend bool operator==(Poly const& a, Poly const& b) { return a.c_ == b.c_; }

    /// Canonical total order: by degree, then coefficients from the highest
    /// power downwards.
    friend std::strong_ordering operator<=>(Poly const& a, Poly const& b) {
        if (a.c_.size() != b.c_.size())
            return a.c_.size() <=> b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            auto c = a.c_[i] <=> b.c_[i];
            if (c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    /// Standardized display "a_n*x^n + ... + a_0".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            Rat const& c = c_[i];
            if (c.is_zero()) continue;
            Rat mag = abs(c);
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
            if (i == 0)
                out += mag.str();
            else if (mag.is_one())
                out += mono;
            else
                out += mag.str() + "*" + mono;
        }
        return out;
    }
};

inline Poly poly_add(Poly const& a, Poly const& b) { return a + b; }
inline Poly poly_mul(Poly const& a, Poly const& b) { return a * b; }
inline Poly poly_neg(Poly const& a) { return -a; }
inline Rat poly_eval(Poly const& p, Rat const& a) { return p.eval(a); }

inline Poly poly_pow(Poly base, unsigned long e) {
    Poly acc = Poly::constant(Rat(1));
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(Poly const& a, Poly const& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.coeffs();
    std::size_t db = b.size() - 1;
    std::vector<Rat> quo(rem.size() - db);
    Rat inv_lc = meadow_inv(b.lc());
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rat q = rem[k + db] * inv_lc;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k + j] -= q * b.coeffs()[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly rem(Poly const& a, Poly const& b) { return divmod(a, b).second; }

inline bool divides(Poly const& d, Poly const& p) { return rem(p, d).is_zero(); }

/// Quotient of a division known to be exact; throws otherwise.
inline Poly exact_div(Poly const& a, Poly const& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

inline Poly monic(Poly const& p) {
    if (p.is_zero()) return p;
    return meadow_inv(p.lc()) * p;
}

/// Writes p = content * primitive where primitive has coprime integer
/// coefficients and a positive leading coefficient. Zero maps to (0, zero).
struct ContentSplit {
    Rat content;
    Poly primitive;
};

inline ContentSplit content_split(Poly const& p) {
    if (p.is_zero()) return {Rat(0), Poly()};
    Integer den_lcm = 1;
    for (auto const& c : p.coeffs()) den_lcm = lcm(den_lcm, c.denominator());
    Integer num_gcd = 0;
    for (auto const& c : p.coeffs()) num_gcd = gcd(num_gcd, Integer(c.numerator() * (den_lcm / c.denominator())));
    Rat content(num_gcd, den_lcm);
    if (p.lc().sign() < 0) content = -content;
    return {content, meadow_inv(content) * p};
}

inline Poly primitive_part(Poly const& p) { return content_split(p).primitive; }

inline std::vector<Integer> integer_coeffs(Poly const& p) {
    std::vector<Integer> out;
    out.reserve(p.size());
    for (auto const& c : p.coeffs()) {
        if (!c.is_integer()) throw std::logic_error("integer_coeffs: non-integer coefficient");
        out.push_back(c.numerator());
    }
    return out;
}

/// Smallest positive integer c with c*p having integer coefficients.
inline Integer denominator_lcm(Poly const& p) {
    Integer l = 1;
    for (auto const& c : p.coeffs()) l = lcm(l, c.denominator());
    return l;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = primitive_part(r);  // keeps coefficient growth in check
    }
    return monic(a);
}

struct Bezout {
    Poly g;   ///< monic gcd(r, v)
    Poly rp;  ///< multiplies v
    Poly vp;  ///< multiplies r
};

/// Extended Euclid: r*vp + v*rp = g with g the monic gcd.
inline Bezout poly_bezout(Poly const& r, Poly const& v) {
    if (r.is_zero() && v.is_zero())
        throw std::domain_error("poly_bezout: both arguments are zero");
    // invariant: r0 = a0*r + b0*v, r1 = a1*r + b1*v
    Poly r0 = r, r1 = v;
    Poly a0 = Poly::constant(1), b0;
    Poly a1, b1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, rr] = divmod(r0, r1);
        Poly a2 = a0 - q * a1;
        Poly b2 = b0 - q * b1;
        r0 = std::move(r1);
        r1 = std::move(rr);
        a0 = std::move(a1);
        a1 = std::move(a2);
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    Rat s = meadow_inv(r0.lc());
    return {s * r0, s * b0, s * a0};
}

// ---------------------------------------------------------------------------
// Arithmetic in Q[x]/(m)

/// Inverse of a modulo m, with the meadow convention that the zero residue
/// inverts to zero. Throws std::domain_error when a is a nonzero zero divisor,
/// i.e. m must be split before it can serve as a locus.
inline Poly inv_mod(Poly const& a, Poly const& m) {
    Poly ar = rem(a, m);
    if (ar.is_zero()) return Poly();
    Bezout b = poly_bezout(m, ar);
    if (b.g.degree() != 0)
        throw std::domain_error("locus must be split: " + m.str() + " shares factor " + b.g.str());
    return rem(b.rp, m);
}

inline Poly mul_mod(Poly const& a, Poly const& b, Poly const& m) { return rem(a * b, m); }

inline Poly pow_mod(Poly base, unsigned long e, Poly const& m) {
    Poly acc = rem(Poly::constant(1), m);
    base = rem(base, m);
    while (e) {
        if (e & 1) acc = mul_mod(acc, base, m);
        e >>= 1;
        if (e) base = mul_mod(base, base, m);
    }
    return acc;
}

}  // namespace meadow
