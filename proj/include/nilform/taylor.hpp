#pragma once

#include <map>
#include <vector>

#include "nilform/polynomial.hpp"

namespace nilform {

// Exact order-n Taylor decomposition of a polynomial around a rational
// point p:
//
//   f = sum_{|tau| <= order} 1/tau! (x-p)^tau d^tau f|_p
//       + sum_{|sigma| = order+1} (x-p)^sigma g_sigma
//
// The Taylor part is computed from the displayed mixed-partial formula;
// the remainders come from grouping the high-order part of the shifted
// expansion, each monomial under the lexicographically smallest sigma
// dividing it. Reconstruction is an exact identity.
struct TaylorSplit {
    Poly taylor;
    std::map<std::vector<int>, Poly> remainders; // sigma -> g_sigma, |sigma| = order+1
};

namespace detail {

inline void enumerate_multi_indices(int nvars, int total,
                                    std::vector<std::vector<int>>& out,
                                    std::vector<int>& cur, int pos, int left) {
    if (pos == nvars - 1) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur[pos] = e;
        enumerate_multi_indices(nvars, total, out, cur, pos + 1, left - e);
    }
}

// All sigma in Z_{>=0}^nvars with |sigma| = total, lexicographically ascending.
inline std::vector<std::vector<int>> multi_indices(int nvars, int total) {
    std::vector<std::vector<int>> out;
    if (nvars == 0)
        return out;
    std::vector<int> cur(nvars, 0);
    enumerate_multi_indices(nvars, total, out, cur, 0, total);
    return out;
}

// Lexicographically smallest sigma with |sigma| = total dividing gamma.
// Exists whenever |gamma| >= total; minimize components left to right.
inline std::vector<int> smallest_divisor_index(const std::vector<int>& gamma, int total) {
    const int k = static_cast<int>(gamma.size());
    std::vector<int> suffix(k + 1, 0);
    for (int i = k - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] + gamma[i];
    std::vector<int> sigma(k, 0);
    int left = total;
    for (int i = 0; i < k; ++i) {
        int lo = std::max(0, left - suffix[i + 1]);
        sigma[i] = std::min(lo, gamma[i]);
        if (sigma[i] != lo)
            throw error("no dividing multi-index"); // |gamma| < total
        left -= sigma[i];
    }
    if (left != 0)
        throw error("no dividing multi-index");
    return sigma;
}

} // namespace detail

inline TaylorSplit taylor_split(const Poly& f, const std::map<Var, Rational>& point, int order) {
    if (order < 0)
        throw error("taylor order must be non-negative");
    // collect the expansion variables: all base variables of f and of the point
    std::vector<Var> vars;
    for (const Var& v : f.variables()) {
        if (v.kind != VarKind::Base)
            throw error("taylor_split input must use base variables only");
        vars.push_back(v);
    }
    for (const auto& [v, c] : point)
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    const int k = static_cast<int>(vars.size());

    auto point_at = [&](const Var& v) {
        auto it = point.find(v);
        if (it == point.end())
            throw error("taylor point missing entry for " + to_string(v));
        return it->second;
    };

    TaylorSplit out;

    // x - p as polynomials, for re-expressing powers of the shift
    std::vector<Poly> shifted;
    for (const Var& v : vars)
        shifted.push_back(Poly::var(v) - Poly::constant(point_at(v)));

    // Taylor part per the mixed-partial formula
    std::map<Var, Rational> pt;
    for (const Var& v : vars)
        pt.emplace(v, point_at(v));
    for (int total = 0; total <= order; ++total) {
        for (const auto& tau : detail::multi_indices(k, total)) {
            Poly deriv = f;
            Rational inv_fact(1);
            for (int i = 0; i < k; ++i) {
                for (int r = 0; r < tau[i]; ++r)
                    deriv = partial(deriv, vars[i]);
                inv_fact /= factorial(static_cast<unsigned>(tau[i]));
            }
            if (deriv.is_zero())
                continue;
            Rational value = evaluate(deriv, pt) * inv_fact;
            if (value == 0)
                continue;
            Poly term = Poly::constant(value);
            for (int i = 0; i < k; ++i)
                term = term * shifted[i].pow(tau[i]);
            out.taylor += term;
        }
    }

    // Shifted expansion F(u) = f(u + p); group the order > `order` part
    std::map<Var, Poly> shift_sub;
    for (const Var& v : vars)
        shift_sub.emplace(v, Poly::var(v) + Poly::constant(point_at(v)));
    Poly expanded = substitute(f, shift_sub); // polynomial in u, written in the same vars

    for (const auto& sigma : detail::multi_indices(k, order + 1))
        out.remainders.emplace(sigma, Poly::zero());

    for (const auto& [mono, c] : expanded.terms()) {
        if (mono.degree() <= order)
            continue;
        std::vector<int> gamma(k, 0);
        for (const auto& [v, e] : mono.factors()) {
            auto it = std::find(vars.begin(), vars.end(), v);
            gamma[it - vars.begin()] = e;
        }
        auto sigma = detail::smallest_divisor_index(gamma, order + 1);
        // g_sigma gains c * (x-p)^(gamma - sigma)
        Poly term = Poly::constant(c);
        for (int i = 0; i < k; ++i)
            term = term * shifted[i].pow(gamma[i] - sigma[i]);
        out.remainders[sigma] += term;
    }

    return out;
}

// The exact reconstruction sum: taylor + sum_sigma (x-p)^sigma g_sigma.
// `point` must be the one the split was produced with.
inline Poly taylor_reconstruct(const TaylorSplit& split, const std::map<Var, Rational>& point) {
    std::vector<Poly> shifted;
    for (const auto& [v, c] : point)
        shifted.push_back(Poly::var(v) - Poly::constant(c));
    Poly acc = split.taylor;
    for (const auto& [sigma, g] : split.remainders) {
        if (g.is_zero())
            continue;
        if (sigma.size() != shifted.size())
            throw error("taylor reconstruction with a different point");
        Poly factor = Poly::constant(Rational(1));
        for (std::size_t i = 0; i < sigma.size(); ++i)
            factor = factor * shifted[i].pow(sigma[i]);
        acc += factor * g;
    }
    return acc;
}

} // namespace nilform
