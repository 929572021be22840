#pragma once

/**
 * @file check.hpp
 * @brief Seeded invariant suites, run by the `check` CLI subcommand.
 *
 * Each suite draws random inputs and compares a library result against an
 * independent route (pointwise term evaluation, polynomial expansion, ...).
 * Suites report the first counterexample they find.
 */

#include "meadow/decide.hpp"
#include "meadow/emit.hpp"
#include "meadow/eval.hpp"
#include "meadow/factor.hpp"
#include "meadow/interp.hpp"
#include "meadow/nf.hpp"
#include "meadow/random.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace meadow {

struct CheckOutcome {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;
    double seconds = 0;
};

/// Random points plus every point the normal form singles out.
inline std::vector<Rat> sample_points(TermGenerator& gen, NormalForm const& nf, std::size_t random_count) {
    std::set<Rat> pts;
    for (std::size_t i = 0; i < random_count; ++i) pts.insert(gen.point());
    if (nf.model() == Model::Rat) {
        for (auto const& [pt, v] : nf.pointwise().exceptions) pts.insert(pt);
    } else {
        for (auto const& c : nf.algebraic().corrections)
            if (c.locus.degree() == 1) pts.insert(-c.locus.coeff(0) / c.locus.coeff(1));
    }
    for (auto const& r : rational_roots(nf.den())) pts.insert(r);
    return {pts.begin(), pts.end()};
}

/// Loci on which a complex-model result must be checked residue-wise.
inline std::vector<Poly> check_loci(AlgebraicNF const& nf) {
    std::set<Poly> loci;
    for (auto const& c : nf.corrections) loci.insert(c.locus);
    for (auto const& r : irreducible_factors(nf.den)) loci.insert(r);
    return {loci.begin(), loci.end()};
}

namespace detail {

inline CheckOutcome timed(std::string name, std::function<void(CheckOutcome&)> const& body) {
    CheckOutcome out;
    out.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (std::exception const& e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

inline void fail(CheckOutcome& o, std::string msg) {
    if (o.passed) o.detail = std::move(msg);
    o.passed = false;
}

}  // namespace detail

inline CheckOutcome check_round_trip(std::uint64_t seed, std::size_t count) {
    return detail::timed("print/parse round trip", [&](CheckOutcome& o) {
        TermGenerator gen(seed);
        for (std::size_t i = 0; i < count && o.passed; ++i, ++o.cases) {
            Term t = gen.term();
            if (!(parse(print(t)) == t)) detail::fail(o, "round trip changed " + print(t));
        }
    });
}

inline CheckOutcome check_desugar(std::uint64_t seed, std::size_t count) {
    return detail::timed("desugaring preserves values", [&](CheckOutcome& o) {
        TermGenerator gen(seed);
        for (std::size_t i = 0; i < count && o.passed; ++i, ++o.cases) {
            Term t = gen.term();
            Term d = desugar(t);
            for (int k = 0; k < 25; ++k) {
                Rat a = gen.point();
                if (eval_term(t, a) != eval_term(d, a)) {
                    detail::fail(o, print(t) + " at " + a.str());
                    break;
                }
            }
        }
    });
}

inline CheckOutcome check_normal_form(std::uint64_t seed, std::size_t count, Model m) {
    return detail::timed(std::string("normal form soundness (") + model_name(m) + ")", [&](CheckOutcome& o) {
        TermGenerator gen(seed);
        for (std::size_t i = 0; i < count && o.passed; ++i, ++o.cases) {
            Term t = gen.term();
            NormalForm nf = normalize(t, m);
            for (auto const& a : sample_points(gen, nf, 25)) {
                if (nf_eval(nf, a) != eval_term(t, a)) {
                    detail::fail(o, print(t) + " at " + a.str());
                    break;
                }
            }
            if (m == Model::Complex) {
                for (auto const& r : check_loci(nf.algebraic()))
                    if (nf.algebraic().value_mod(r) != eval_term_mod(t, r)) {
                        detail::fail(o, print(t) + " on locus " + r.str());
                        break;
                    }
            }
        }
    });
}

inline CheckOutcome check_emission(std::uint64_t seed, std::size_t count, Model m) {
    return detail::timed(std::string("mixed fraction shape and fidelity (") + model_name(m) + ")",
                         [&](CheckOutcome& o) {
        TermGenerator gen(seed);
        for (std::size_t i = 0; i < count && o.passed; ++i, ++o.cases) {
            Term t = gen.term();
            NormalForm nf = normalize(t, m);
            MixedFraction mf = emit_mixed(nf);
            Term out = to_term(mf);
            if (classify(out) != TermClass::MixedFraction) {
                detail::fail(o, "shape of " + print(out));
                break;
            }
            if (mf.witness_n % mf.poly.denominator != 0) detail::fail(o, "witness not divisible by l");
            for (auto const& a : sample_points(gen, nf, 25))
                if (eval_term(out, a) != eval_term(t, a)) {
                    detail::fail(o, print(t) + " at " + a.str());
                    break;
                }
            if (m == Model::Complex)
                for (auto const& r : check_loci(nf.algebraic()))
                    if (eval_term_mod(out, r) != eval_term_mod(t, r)) {
                        detail::fail(o, print(t) + " on locus " + r.str());
                        break;
                    }
        }
    });
}

inline CheckOutcome check_inverse_involution(std::uint64_t seed, std::size_t count) {
    return detail::timed("inverse is an involution on normal forms", [&](CheckOutcome& o) {
        TermGenerator gen(seed);
        for (std::size_t i = 0; i < count && o.passed; ++i, ++o.cases) {
            Term t = gen.term(4);
            for (Model m : {Model::Rat, Model::Complex}) {
                NormalForm nf = normalize(t, m);
                if (!(nf_inv(nf_inv(nf)) == nf)) detail::fail(o, print(t));
            }
        }
    });
}

inline CheckOutcome check_bezout(std::uint64_t seed, std::size_t count) {
    return detail::timed("Bezout identity", [&](CheckOutcome& o) {
        TermGenerator gen(seed);
        for (std::size_t i = 0; i < count && o.passed; ++i, ++o.cases) {
            Poly a = gen.int_poly(gen.pick(7), 9);
            Poly b = gen.int_poly(gen.pick(7), 9);
            Bezout bz = poly_bezout(a, b);
            if (a * bz.vp + b * bz.rp != bz.g) detail::fail(o, a.str() + " , " + b.str());
            if (!divides(bz.g, a) || !divides(bz.g, b)) detail::fail(o, "gcd does not divide " + a.str());
        }
    });
}

inline CheckOutcome check_factorization(std::uint64_t seed, std::size_t count) {
    return detail::timed("factorization reconstructs its input", [&](CheckOutcome& o) {
        TermGenerator gen(seed);
        for (std::size_t i = 0; i < count && o.passed; ++i, ++o.cases) {
            Poly p = Poly::constant(Rat(gen.range(1, 5)));
            int parts = static_cast<int>(gen.range(1, 4));
            for (int k = 0; k < parts; ++k) p *= poly_pow(gen.int_poly(static_cast<int>(gen.range(1, 3)), 6), static_cast<unsigned long>(gen.range(1, 2)));
            Factorization f = factor_rationals(p);
            if (f.expand() != p) detail::fail(o, "reconstruction of " + p.str());
            for (auto const& fac : f.factors) {
                if (!fac.factor.has_integer_coeffs() || fac.factor.lc().sign() <= 0 || primitive_part(fac.factor) != fac.factor)
                    detail::fail(o, "non-canonical factor " + fac.factor.str());
            }
        }
    });
}

inline CheckOutcome check_interpolation(std::uint64_t seed, std::size_t count) {
    return detail::timed("interpolation agrees with the closed-form expansion", [&](CheckOutcome& o) {
        TermGenerator gen(seed);
        for (std::size_t i = 0; i < count && o.passed; ++i, ++o.cases) {
            std::size_t k = static_cast<std::size_t>(gen.range(1, 5));
            std::set<Rat> xs;
            while (xs.size() < k) xs.insert(gen.point());
            std::vector<InterpPoint> pts;
            for (auto const& x : xs) pts.push_back({x, gen.point()});
            Poly g = lagrange_interpolate(pts);
            if (g.degree() >= static_cast<int>(k)) detail::fail(o, "degree too large");
            for (auto const& p : pts)
                if (g.eval(p.a) != p.v) detail::fail(o, "misses point " + p.a.str());
            std::vector<Rat> as, bs = lagrange_weights(pts);
            for (auto const& p : pts) as.push_back(p.a);
            if (!(appendix_oracle(bs, as).reduced() == standardize(g))) detail::fail(o, "closed form differs for " + g.str());
        }
    });
}

inline std::vector<CheckOutcome> run_checks(std::uint64_t seed, std::size_t count) {
    return {
        check_round_trip(seed, count),
        check_desugar(seed + 1, count),
        check_normal_form(seed + 2, count, Model::Rat),
        check_normal_form(seed + 3, count, Model::Complex),
        check_emission(seed + 4, count, Model::Rat),
        check_emission(seed + 5, count, Model::Complex),
        check_inverse_involution(seed + 6, count),
        check_bezout(seed + 7, count),
        check_factorization(seed + 8, count),
        check_interpolation(seed + 9, count),
    };
}

}  // namespace meadow
