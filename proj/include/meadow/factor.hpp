#pragma once

/**
 * @file factor.hpp
 * @brief Factorization of univariate polynomials over Q.
 *
 * The pipeline is the classical one:
 *   - content / primitive split,
 *   - Yun's squarefree decomposition,
 *   - Cantor-Zassenhaus factorization modulo a small odd prime,
 *   - quadratic Hensel lifting of the modular factors (factor tree),
 *   - recombination of lifted factors by exact trial division.
 *
 * Irreducible factors are returned primitive, with integer coefficients and a
 * positive leading coefficient, sorted by degree and then coefficients.
 */

#include "meadow/poly.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

namespace meadow {

struct Factor {
    Poly factor;
    unsigned multiplicity;
    friend bool operator==(Factor const&, Factor const&) = default;
};

struct Factorization {
    Rat unit;
    std::vector<Factor> factors;

    /// unit * prod factor^multiplicity
    Poly expand() const {
        Poly acc = Poly::constant(unit);
        for (auto const& f : factors) acc *= poly_pow(f.factor, f.multiplicity);
        return acc;
    }
    friend bool operator==(Factorization const&, Factorization const&) = default;
};

namespace detail::modp {

// Polynomials over Z/m as ascending coefficient vectors with entries in [0, m).
using ZPoly = std::vector<Integer>;

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Integer mod(Integer const& a, Integer const& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline ZPoly reduce(ZPoly a, Integer const& m) {
    for (auto& c : a) c = mod(c, m);
    trim(a);
    return a;
}

inline int deg(ZPoly const& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly add(ZPoly const& a, ZPoly const& b, Integer const& m) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return reduce(std::move(r), m);
}

inline ZPoly sub(ZPoly const& a, ZPoly const& b, Integer const& m) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return reduce(std::move(r), m);
}

inline ZPoly mul(ZPoly const& a, ZPoly const& b, Integer const& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return reduce(std::move(r), m);
}

inline ZPoly scale(ZPoly const& a, Integer const& s, Integer const& m) {
    ZPoly r = a;
    for (auto& c : r) c *= s;
    return reduce(std::move(r), m);
}

inline Integer inverse(Integer const& a, Integer const& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("modular inverse does not exist");
    return r;
}

/// a = q*b + r over Z/m; lc(b) must be a unit mod m.
inline std::pair<ZPoly, ZPoly> divmod(ZPoly a, ZPoly const& b, Integer const& m) {
    if (b.empty()) throw std::domain_error("modular division by zero polynomial");
    if (a.size() < b.size()) return {{}, a};
    Integer inv = inverse(b.back(), m);
    std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c = mod(a[k + db] * inv, m);
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j)
            a[k + j] = mod(a[k + j] - c * b[j], m);
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline ZPoly rem(ZPoly const& a, ZPoly const& b, Integer const& m) { return divmod(a, b, m).second; }

inline ZPoly make_monic(ZPoly const& a, Integer const& m) {
    if (a.empty()) return a;
    return scale(a, inverse(a.back(), m), m);
}

/// Monic gcd over the field Z/p.
inline ZPoly gcd(ZPoly a, ZPoly b, Integer const& p) {
    while (!b.empty()) {
        ZPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

/// s*a + t*b = 1 over Z/p for coprime a, b.
inline std::pair<ZPoly, ZPoly> ext_gcd(ZPoly const& a, ZPoly const& b, Integer const& p) {
    ZPoly r0 = a, r1 = b;
    ZPoly s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        ZPoly s2 = sub(s0, mul(q, s1, p), p);
        ZPoly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("ext_gcd: inputs not coprime mod p");
    Integer inv = inverse(r0[0], p);
    return {scale(s0, inv, p), scale(t0, inv, p)};
}

inline ZPoly pow_mod(ZPoly base, Integer e, ZPoly const& f, Integer const& p) {
    ZPoly acc{1};
    acc = rem(acc, f, p);
    base = rem(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = rem(mul(acc, base, p), f, p);
        e >>= 1;
        if (e > 0) base = rem(mul(base, base, p), f, p);
    }
    return acc;
}

/// Splits a monic squarefree g whose irreducible factors all have degree d.
inline void equal_degree_split(ZPoly const& g, int d, Integer const& p, std::mt19937_64& rng,
                               std::vector<ZPoly>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    unsigned long pu = p.get_ui();
    for (;;) {
        ZPoly a(static_cast<std::size_t>(deg(g)));
        for (auto& c : a) c = static_cast<unsigned long>(rng() % pu);
        trim(a);
        if (deg(a) < 1) continue;
        ZPoly b = sub(pow_mod(a, e, g, p), ZPoly{1}, p);
        ZPoly c = gcd(g, b, p);
        if (deg(c) > 0 && deg(c) < deg(g)) {
            equal_degree_split(c, d, p, rng, out);
            equal_degree_split(divmod(g, c, p).first, d, p, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of a monic squarefree f over Z/p, p an odd prime.
inline std::vector<ZPoly> factor_squarefree(ZPoly f, Integer const& p) {
    std::vector<ZPoly> out;
    std::mt19937_64 rng(0x6d6561646f77ULL ^ p.get_ui());
    ZPoly x{0, 1};
    ZPoly h = x;
    for (int i = 1; deg(f) >= 2 * i; ++i) {
        h = pow_mod(h, p, f, p);
        ZPoly g = gcd(f, sub(h, x, p), p);
        if (deg(g) > 0) {
            equal_degree_split(g, i, p, rng, out);
            f = divmod(f, g, p).first;
            h = rem(h, f, p);
        }
    }
    if (deg(f) > 0) out.push_back(f);
    return out;
}

}  // namespace detail::modp

namespace detail {

inline std::vector<unsigned long> const& small_primes() {
    static std::vector<unsigned long> const primes = [] {
        std::vector<unsigned long> ps;
        std::vector<bool> sieve(20000, true);
        for (unsigned long i = 2; i < sieve.size(); ++i) {
            if (!sieve[i]) continue;
            if (i > 2) ps.push_back(i);
            for (unsigned long j = i * i; j < sieve.size(); j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

inline modp::ZPoly to_zpoly(std::vector<Integer> const& f, Integer const& m) { return modp::reduce(f, m); }

/// Symmetric representative in (-m/2, m/2].
inline Integer symmetric(Integer const& a, Integer const& m) {
    Integer r = modp::mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline Poly from_symmetric(modp::ZPoly const& a, Integer const& m) {
    std::vector<Rat> v;
    v.reserve(a.size());
    for (auto const& c : a) v.emplace_back(symmetric(c, m));
    return Poly(std::move(v));
}

struct HenselPair {
    modp::ZPoly g, h;
};

/// Lifts f = g0*h0 (mod p), h0 monic, to a factorization modulo `target`,
/// where target = p^(2^j).
inline HenselPair hensel_lift(modp::ZPoly const& f, modp::ZPoly g, modp::ZPoly h, Integer const& p,
                              Integer const& target) {
    using namespace modp;
    auto [s, t] = ext_gcd(g, h, p);
    Integer m = p;
    while (m < target) {
        Integer m2 = m * m;
        ZPoly e = sub(reduce(f, m2), mul(g, h, m2), m2);
        auto [q, r] = divmod(mul(s, e, m2), h, m2);
        ZPoly g2 = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
        ZPoly h2 = add(h, r, m2);
        ZPoly b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), ZPoly{1}, m2);
        auto [c, d] = divmod(mul(s, b, m2), h2, m2);
        ZPoly s2 = sub(s, d, m2);
        ZPoly t2 = sub(sub(t, mul(t, b, m2), m2), mul(c, g2, m2), m2);
        g = std::move(g2);
        h = std::move(h2);
        s = std::move(s2);
        t = std::move(t2);
        m = m2;
    }
    return {g, h};
}

/// Monic factors modulo `target` of F (given modulo target), one per entry of
/// `mod_p_factors`, via a balanced factor tree.
inline void lift_tree(modp::ZPoly const& F, std::vector<modp::ZPoly> const& mod_p_factors, Integer const& p,
                      Integer const& target, std::vector<modp::ZPoly>& out) {
    using namespace modp;
    if (mod_p_factors.size() == 1) {
        out.push_back(make_monic(F, target));
        return;
    }
    std::size_t half = mod_p_factors.size() / 2;
    std::vector<ZPoly> left(mod_p_factors.begin(), mod_p_factors.begin() + static_cast<long>(half));
    std::vector<ZPoly> right(mod_p_factors.begin() + static_cast<long>(half), mod_p_factors.end());
    ZPoly g0{mod(F.back(), p)};
    for (auto const& a : left) g0 = mul(g0, a, p);
    ZPoly h0{1};
    for (auto const& a : right) h0 = mul(h0, a, p);
    HenselPair lifted = hensel_lift(F, g0, h0, p, target);
    lift_tree(lifted.g, left, p, target, out);
    lift_tree(lifted.h, right, p, target, out);
}

inline Integer max_norm(std::vector<Integer> const& f) {
    Integer m = 0;
    for (auto const& c : f) {
        Integer a = ::abs(c);
        if (a > m) m = a;
    }
    return m;
}

inline void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                            auto&& fn, bool& stop) {
    if (stop) return;
    if (cur.size() == k) {
        stop = fn(cur);
        return;
    }
    for (std::size_t i = start; i < n && !stop; ++i) {
        cur.push_back(i);
        for_each_subset(n, k, cur, i + 1, fn, stop);
        cur.pop_back();
    }
}

/// Irreducible factors of a primitive squarefree f with positive leading
/// coefficient and degree >= 1.
inline std::vector<Poly> zassenhaus(Poly const& f) {
    using namespace modp;
    int n = f.degree();
    if (n <= 1) return {f};
    std::vector<Integer> fz = integer_coeffs(f);
    Poly df = f.derivative();
    std::vector<Integer> dfz = integer_coeffs(df);

    // Pick the admissible prime (among the first few) giving the fewest
    // modular factors.
    Integer best_p;
    std::vector<ZPoly> best;
    int admissible = 0;
    for (unsigned long pu : small_primes()) {
        Integer p(pu);
        if (modp::mod(fz.back(), p) == 0) continue;
        ZPoly fp = to_zpoly(fz, p);
        if (deg(gcd(fp, to_zpoly(dfz, p), p)) != 0) continue;
        auto facs = factor_squarefree(make_monic(fp, p), p);
        if (best.empty() || facs.size() < best.size()) {
            best = std::move(facs);
            best_p = p;
        }
        if (best.size() == 1 || ++admissible >= 5) break;
    }
    if (best.empty()) throw std::logic_error("zassenhaus: no admissible prime found");
    if (best.size() == 1) return {f};

    Integer lcf = fz.back();
    Integer bound = (sqrt(Integer(n + 1)) + 1) * (Integer(1) << static_cast<unsigned>(n)) * max_norm(fz) * ::abs(lcf);
    Integer target = best_p;
    while (target <= 2 * bound) target *= target;

    std::vector<ZPoly> lifted;
    lift_tree(to_zpoly(fz, target), best, best_p, target, lifted);

    std::vector<Poly> found;
    Poly rest = f;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool hit = false;
        std::vector<std::size_t> cur;
        Integer lc_rest = rest.lc().numerator();
        for_each_subset(lifted.size(), s, cur, 0, [&](std::vector<std::size_t> const& idx) {
            ZPoly g{modp::mod(lc_rest, target)};
            for (auto i : idx) g = mul(g, lifted[i], target);
            Poly cand = primitive_part(from_symmetric(g, target));
            if (cand.degree() < 1) return false;
            auto [q, r] = divmod(rest, cand);
            if (!r.is_zero() || !q.has_integer_coeffs()) return false;
            found.push_back(cand);
            rest = primitive_part(q);
            std::vector<ZPoly> remaining;
            for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
                if (j < idx.size() && idx[j] == i) {
                    ++j;
                    continue;
                }
                remaining.push_back(lifted[i]);
            }
            lifted = std::move(remaining);
            return true;
        }, hit);
        if (!hit) ++s;
    }
    if (rest.degree() >= 1) found.push_back(rest);
    return found;
}

/// Yun's algorithm: returns squarefree, pairwise coprime primitive a_i with
/// f = unit * prod a_i^i.
inline std::vector<Factor> squarefree_decomposition(Poly const& f) {
    std::vector<Factor> out;
    if (f.degree() < 1) return out;
    Poly df = f.derivative();
    Poly a0 = poly_gcd(f, df);
    Poly b = exact_div(f, a0);
    Poly c = exact_div(df, a0);
    Poly d = c - b.derivative();
    for (unsigned i = 1; b.degree() >= 1; ++i) {
        Poly a = poly_gcd(b, d);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
        if (a.degree() >= 1) out.push_back({primitive_part(a), i});
    }
    return out;
}

class FactorCache {
public:
    std::optional<std::vector<Factor>> find(Poly const& p) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(p);
        if (it == cache_.end()) return std::nullopt;
        return it->second;
    }
    void store(Poly const& p, std::vector<Factor> const& f) {
        std::lock_guard<std::mutex> lock(mu_);
        if (cache_.size() > 50000) cache_.clear();
        cache_.emplace(p, f);
    }
    static FactorCache& instance() {
        static FactorCache c;
        return c;
    }

private:
    std::mutex mu_;
    std::map<Poly, std::vector<Factor>> cache_;
};

}  // namespace detail

/// unit * prod factor^multiplicity == p, factors irreducible over Q.
inline Factorization factor_rationals(Poly const& p) {
    if (p.is_zero()) throw std::domain_error("factor_rationals: zero polynomial");
    ContentSplit cs = content_split(p);
    Factorization out{cs.content, {}};
    if (cs.primitive.degree() < 1) return out;
    if (auto hit = detail::FactorCache::instance().find(cs.primitive)) {
        out.factors = *hit;
        return out;
    }
    for (auto const& [part, mult] : detail::squarefree_decomposition(cs.primitive))
        for (auto& irr : detail::zassenhaus(part))
            out.factors.push_back({std::move(irr), mult});
    std::sort(out.factors.begin(), out.factors.end(),
              [](Factor const& a, Factor const& b) { return a.factor < b.factor; });
    detail::FactorCache::instance().store(cs.primitive, out.factors);
    return out;
}

/// Distinct irreducible factors (primitive, positive leading coefficient).
inline std::vector<Poly> irreducible_factors(Poly const& p) {
    std::vector<Poly> out;
    if (p.degree() < 1) return out;
    for (auto const& f : factor_rationals(p).factors) out.push_back(f.factor);
    return out;
}

/// All rational roots of p, ascending. Roots are read off the linear factors
/// of the factorization and each one is confirmed by evaluation.
inline std::vector<Rat> rational_roots(Poly const& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Rat> roots;
    for (auto const& f : irreducible_factors(p)) {
        if (f.degree() != 1) continue;
        Rat r = -f.coeff(0) / f.coeff(1);
        if (!p.eval(r).is_zero()) throw std::logic_error("rational_roots: spurious root");
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// p / gcd(p, p'), primitive with positive leading coefficient.
inline Poly squarefree_part(Poly const& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() < 1) return Poly::constant(1);
    return primitive_part(exact_div(p, poly_gcd(p, p.derivative())));
}

}  // namespace meadow
