#pragma once

// Seeded generators for property checks.

#include "meadow/poly.hpp"
#include "meadow/term.hpp"

#include <random>
#include <vector>

namespace meadow {

struct TermGenConfig {
    int max_depth = 6;
    long max_literal = 9;
    unsigned long max_exponent = 3;
};

class TermGenerator {
public:
    explicit TermGenerator(std::uint64_t seed, TermGenConfig cfg = {}) : rng_(seed), cfg_(cfg) {}

    Term term() { return term(cfg_.max_depth); }

    Term term(int depth) {
        if (depth <= 0 || pick(100) < 15) return leaf();
        int budget = depth - 1;
        switch (pick(11)) {
        case 0: return Term::neg(term(budget));
        case 1:
        case 2: return Term::add(term(budget), term(budget));
        case 3:
            if (budget < 1) return Term::add(term(budget), term(budget));
            return Term::add(term(budget), Term::neg(term(budget - 1)));
        case 4:
        case 5: return Term::mul(term(budget), term(budget));
        case 6:
        case 7:
        case 8: return Term::div(term(budget), term(budget));
        case 9: {
            // x + k or x^2 + k: exceptional points, or a quadratic locus
            if (budget < 2) return leaf();
            Term base = pick(3) == 0 ? Term::pow(Term::var(), 2) : Term::var();
            return Term::div(term(budget), Term::add(base, Term::lit(range(-4, 4))));
        }
        default: return Term::pow(term(std::min(budget, 2)), static_cast<unsigned long>(range(0, static_cast<long>(cfg_.max_exponent))));
        }
    }

    Term leaf() {
        if (pick(100) < 45) return Term::var();
        return Term::lit(range(0, cfg_.max_literal));
    }

    /// Rational point; small integers are favoured so exceptional points are
    /// hit regularly.
    Rat point() {
        if (pick(100) < 40) return Rat(range(-4, 4));
        return Rat(Integer(range(-12, 12)), Integer(range(1, 6)));
    }

    Poly int_poly(int degree, long coeff_bound) {
        std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
        for (auto& v : c) v = Rat(range(-coeff_bound, coeff_bound));
        if (c.back().is_zero()) c.back() = Rat(1);
        return Poly(std::move(c));
    }

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    int pick(int n) { return static_cast<int>(range(0, n - 1)); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    TermGenConfig cfg_;
};

}  // namespace meadow
