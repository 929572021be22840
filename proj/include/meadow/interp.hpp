#pragma once

/**
 * @file interp.hpp
 * @brief Lagrange interpolation in the weighted form g = sum b_i prod_{j != i} (x - a_j),
 *        standardized (common-denominator) polynomials, and the closed-form
 *        coefficient expansion used as an independent check on both.
 */

#include "meadow/poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace meadow {

struct InterpPoint {
    Rat a;  ///< abscissa
    Rat v;  ///< ordinate
};

namespace detail {

inline void require_distinct(std::vector<Rat> const& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                throw std::invalid_argument("duplicate abscissa " + xs[i].str());
}

}  // namespace detail

/// b_i = v_i / prod_{j != i} (a_i - a_j)
inline std::vector<Rat> lagrange_weights(std::vector<InterpPoint> const& pts) {
    std::vector<Rat> xs;
    for (auto const& p : pts) xs.push_back(p.a);
    detail::require_distinct(xs);
    std::vector<Rat> b;
    b.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Rat den(1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) den *= pts[i].a - pts[j].a;
        b.push_back(pts[i].v / den);
    }
    return b;
}

/// The unique polynomial of degree < k through k points.
inline Poly lagrange_interpolate(std::vector<InterpPoint> const& pts) {
    std::vector<Rat> b = lagrange_weights(pts);
    Poly g;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Poly gi = Poly::constant(b[i]);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) gi *= Poly::linear_root(pts[j].a);
        g += gi;
    }
    return g;
}

/// sum_i (numerators[i] / denominator) x^i. Numerators and denominator are not
/// forced coprime.
struct StdPoly {
    std::vector<Integer> numerators;
    Integer denominator = 1;

    Poly to_poly() const {
        std::vector<Rat> v;
        v.reserve(numerators.size());
        for (auto const& r : numerators) v.emplace_back(r, denominator);
        return Poly(std::move(v));
    }

    /// Same polynomial with the least common denominator and no trailing
    /// zero numerators.
    StdPoly reduced() const;

    /// "(r_{k-1}*x^{k-1} + ... + r_0)/l"
    std::string str() const {
        std::string inner = Poly::from_integers(numerators).str();
        return "(" + inner + ")/" + denominator.get_str();
    }

    friend bool operator==(StdPoly const&, StdPoly const&) = default;
};

/// Common denominator l = lcm of the coefficient denominators, r_i = c_i * l.
inline StdPoly standardize(Poly const& p) {
    StdPoly out;
    out.denominator = denominator_lcm(p);
    for (auto const& c : p.coeffs()) out.numerators.push_back(c.numerator() * (out.denominator / c.denominator()));
    return out;
}

inline StdPoly StdPoly::reduced() const { return standardize(to_poly()); }

/// Same value as two StdPolys, regardless of denominator choice or padding.
inline bool equivalent(StdPoly const& a, StdPoly const& b) { return a.to_poly() == b.to_poly(); }

/**
 * Closed-form expansion of g = sum_i b_i prod_{j != i} (x - a_j) with a single
 * denominator s*m, where b_i = r_i/s_i, a_i = n_i/m_i, s = prod s_i and
 * m = prod m_i. For each j < k the coefficient of x^{k-1-j} is
 *
 *   (-1)^j * sum_i r_i m_i prod_{l in H_i} s_l
 *              * sum_{I subset H_i, |I| = j} prod_{h in I} n_h prod_{h' in H_i \ I} m_h'
 *
 * over s*m, with H_i = {0..k-1} \ {i}. Works on integers only and shares no
 * code with lagrange_interpolate.
 */
inline StdPoly appendix_oracle(std::vector<Rat> const& b, std::vector<Rat> const& a) {
    if (a.size() != b.size()) throw std::invalid_argument("appendix_oracle: size mismatch");
    detail::require_distinct(a);
    std::size_t k = a.size();
    if (k > 20) throw std::invalid_argument("appendix_oracle: subset enumeration limited to k <= 20");
    std::vector<Integer> r(k), s(k), n(k), m(k);
    Integer s_all = 1, m_all = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r[i] = b[i].numerator();
        s[i] = b[i].denominator();
        n[i] = a[i].numerator();
        m[i] = a[i].denominator();
        s_all *= s[i];
        m_all *= m[i];
    }
    StdPoly out;
    out.denominator = s_all * m_all;
    out.numerators.assign(k, Integer(0));
    for (std::size_t j = 0; j < k; ++j) {
        Integer cj = 0;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> h;
            for (std::size_t t = 0; t < k; ++t)
                if (t != i) h.push_back(t);
            Integer subset_sum = 0;
            for (unsigned long mask = 0; mask < (1UL << h.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountl(mask)) != j) continue;
                Integer prod = 1;
                for (std::size_t t = 0; t < h.size(); ++t)
                    prod *= (mask >> t) & 1 ? n[h[t]] : m[h[t]];
                subset_sum += prod;
            }
            Integer s_others = 1;
            for (auto t : h) s_others *= s[t];
            cj += r[i] * m[i] * s_others * subset_sum;
        }
        if (j % 2 == 1) cj = -cj;
        out.numerators[k - 1 - j] = cj;
    }
    return out;
}

}  // namespace meadow
