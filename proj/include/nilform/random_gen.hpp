#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nilform/delta.hpp"
#include "nilform/inf_algebra.hpp"
#include "nilform/polynomial.hpp"

namespace nilform {

// All harness randomness flows from an explicit seed; trial k of a run
// draws from derive_seed(seed, k), so trials are order-independent and
// reports reproduce bit-for-bit.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Rational rational(int max_abs = 6, int max_den = 4) {
        int num = uniform(-max_abs, max_abs);
        int den = uniform(1, max_den);
        return make_rational(num, den);
    }

    Rational nonzero_rational(int max_abs = 6, int max_den = 4) {
        Rational r = rational(max_abs, max_den);
        while (r == 0)
            r = rational(max_abs, max_den);
        return r;
    }

    Monomial monomial(const std::vector<Var>& vars, int max_deg) {
        std::vector<Monomial::Factor> factors;
        int deg = uniform(0, max_deg);
        for (int d = 0; d < deg && !vars.empty(); ++d) {
            const Var& v = vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))];
            factors.emplace_back(v, 1);
        }
        return Monomial(std::move(factors));
    }

    Poly poly(const std::vector<Var>& vars, int max_deg, int max_terms = 5) {
        Poly p;
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t)
            p += Poly::term(monomial(vars, max_deg), rational());
        return p;
    }

    Poly nonzero_poly(const std::vector<Var>& vars, int max_deg, int max_terms = 5) {
        Poly p = poly(vars, max_deg, max_terms);
        while (p.is_zero())
            p = poly(vars, max_deg, max_terms);
        return p;
    }

    std::vector<Var> base_vars(int n) {
        std::vector<Var> vars;
        for (int j = 1; j <= n; ++j)
            vars.push_back(base_var(j));
        return vars;
    }

    std::vector<Var> level_vars(int n, int m) {
        std::vector<Var> vars = base_vars(n);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                vars.push_back(inf_var(i, j));
        return vars;
    }

    InfElement inf_element(int n, int m, int max_deg, int max_terms = 5) {
        return normal_form(poly(level_vars(n, m), max_deg, max_terms), n, m);
    }

    DeltaMap delta_map(int source_m, int target_m) {
        std::vector<int> values;
        int v = uniform(0, target_m);
        values.push_back(v);
        for (int k = 1; k <= source_m; ++k) {
            v = uniform(v, target_m);
            values.push_back(v);
        }
        return make_delta(std::move(values), target_m);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace nilform
