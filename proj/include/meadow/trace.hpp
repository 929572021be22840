#pragma once

// Exact sums of a polynomial over all complex roots of another polynomial,
// via power sums of the roots (Newton's identities).

#include "meadow/poly.hpp"

#include <stdexcept>
#include <vector>

namespace meadow {

/// Power sums p_0..p_{count-1} of the roots of r (with multiplicity).
inline std::vector<Rat> root_power_sums(Poly const& r, std::size_t count) {
    if (r.degree() < 1) throw std::domain_error("root_power_sums: constant polynomial");
    Poly mr = monic(r);
    auto d = static_cast<std::size_t>(mr.degree());
    // elementary symmetric e_i = (-1)^i * coeff(d - i)
    std::vector<Rat> e(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        e[i] = mr.coeff(d - i);
        if (i % 2 == 1) e[i] = -e[i];
    }
    std::vector<Rat> p(count);
    if (count == 0) return p;
    p[0] = Rat(static_cast<long>(d));
    for (std::size_t k = 1; k < count; ++k) {
        Rat acc;
        for (std::size_t i = 1; i < k && i <= d; ++i) {
            Rat term = e[i] * p[k - i];
            acc += i % 2 == 1 ? term : -term;
        }
        if (k <= d) {
            Rat term = Rat(static_cast<long>(k)) * e[k];
            acc += k % 2 == 1 ? term : -term;
        }
        p[k] = acc;
    }
    return p;
}

/// sum of s(alpha) over the complex roots alpha of a squarefree, nonconstant r.
inline Rat trace_sum(Poly const& s, Poly const& r) {
    if (r.is_zero() || r.degree() < 1) throw std::domain_error("trace_sum: locus must be nonconstant");
    Poly sr = rem(s, r);
    std::vector<Rat> p = root_power_sums(r, static_cast<std::size_t>(r.degree()));
    Rat total;
    for (std::size_t k = 0; k < sr.size(); ++k) total += sr.coeff(k) * p[k];
    return total;
}

}  // namespace meadow
