#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nilform/polynomial.hpp"

namespace nilform {

// Canonical residue of a product of infinitesimal differences modulo the
// antisymmetry ideal < y_{i,j} y_{i',j'} + y_{i,j'} y_{i',j} >. Rows are a
// strictly ascending subset of {1..m}; cols are distinct and strictly
// ascending, one per row. The empty monomial is the base component.
struct InfMonomial {
    std::vector<int> rows;
    std::vector<int> cols;

    friend auto operator<=>(const InfMonomial&, const InfMonomial&) = default;

    bool full_rows(int m) const {
        if (static_cast<int>(rows.size()) != m)
            return false;
        for (int i = 0; i < m; ++i)
            if (rows[i] != i + 1)
                return false;
        return true;
    }

    Monomial to_monomial() const {
        std::vector<Monomial::Factor> f;
        for (std::size_t t = 0; t < rows.size(); ++t)
            f.emplace_back(inf_var(rows[t], cols[t]), 1);
        return Monomial(std::move(f));
    }
};

inline std::string to_string(const InfMonomial& m) {
    return to_string(m.to_monomial());
}

// Element of the level-m algebra of infinitesimal simplices of R^n in
// difference coordinates, in canonical normal form: a finite sum of
// canonical InfMonomials with polynomial coefficients in the base
// variables only.
class InfElement {
public:
    using CoeffMap = std::map<InfMonomial, Poly>;

    InfElement(int n, int m) : n_(n), m_(m) {
        if (n < 0 || m < 0)
            throw error("invalid (n, m) for infinitesimal element");
    }

    int n() const { return n_; }
    int m() const { return m_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const InfMonomial& mono, const Poly& coeff) {
        if (coeff.is_zero())
            return;
        auto it = coeffs_.find(mono);
        if (it == coeffs_.end()) {
            coeffs_.emplace(mono, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    Poly coeff(const InfMonomial& mono) const {
        auto it = coeffs_.find(mono);
        return it == coeffs_.end() ? Poly::zero() : it->second;
    }

    // Base component (coefficient of the empty monomial).
    Poly base_part() const { return coeff(InfMonomial{}); }

    // The canonical polynomial representative over Base + Inf variables.
    Poly representative() const {
        Poly out;
        for (const auto& [mono, c] : coeffs_)
            out += c * Poly::term(mono.to_monomial(), Rational(1));
        return out;
    }

    friend bool operator==(const InfElement&, const InfElement&) = default;

private:
    int n_, m_;
    CoeffMap coeffs_;
};

namespace detail {

// Reduce one pure-infinitesimal monomial: zero if any row or column
// repeats, otherwise +-1 times the canonical monomial, the sign being that
// of the permutation sorting the column assignment (rows kept ascending).
struct ReducedInfMonomial {
    bool zero = true;
    int sign = 1;
    InfMonomial canonical;
};

inline ReducedInfMonomial reduce_inf_part(const std::vector<std::pair<int, int>>& row_cols) {
    ReducedInfMonomial out;
    std::vector<std::pair<int, int>> pairs = row_cols; // (row, col)
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t t = 1; t < pairs.size(); ++t)
        if (pairs[t].first == pairs[t - 1].first)
            return out; // repeated row
    std::vector<int> cols;
    cols.reserve(pairs.size());
    for (const auto& rc : pairs)
        cols.push_back(rc.second);
    int sign = 1; // count inversions of the column assignment
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            if (cols[a] == cols[b])
                return out; // repeated column
            if (cols[a] > cols[b])
                sign = -sign;
        }
    out.zero = false;
    out.sign = sign;
    for (const auto& rc : pairs)
        out.canonical.rows.push_back(rc.first);
    std::sort(cols.begin(), cols.end());
    out.canonical.cols = std::move(cols);
    return out;
}

} // namespace detail

// Canonical normal form of a polynomial over Base + Inf variables modulo
// the antisymmetry ideal of level m. Idempotent and linear; a polynomial
// maps to zero exactly when it lies in the ideal.
inline InfElement normal_form(const Poly& p, int n, int m) {
    InfElement out(n, m);
    for (const auto& [mono, c] : p.terms()) {
        std::vector<Monomial::Factor> base_factors;
        std::vector<std::pair<int, int>> inf_pairs;
        bool dead = false;
        for (const auto& [v, e] : mono.factors()) {
            if (!var_in_context(v, n, m))
                throw error("variable " + to_string(v) + " out of range for (n=" +
                            std::to_string(n) + ", m=" + std::to_string(m) + ")");
            switch (v.kind) {
            case VarKind::Base:
                base_factors.emplace_back(v, e);
                break;
            case VarKind::Inf:
                if (e >= 2) {
                    dead = true; // square of an infinitesimal
                } else {
                    inf_pairs.emplace_back(v.row, v.col);
                }
                break;
            case VarKind::Vertex:
                throw error("vertex variable in difference-coordinate polynomial");
            }
            if (dead)
                break;
        }
        if (dead)
            continue;
        auto red = detail::reduce_inf_part(inf_pairs);
        if (red.zero && !inf_pairs.empty())
            continue;
        Rational coeff = red.sign < 0 ? Rational(-c) : c;
        out.add(red.canonical, Poly::term(Monomial(std::move(base_factors)), coeff));
    }
    return out;
}

inline InfElement inf_constant(const Rational& c, int n, int m) {
    InfElement e(n, m);
    e.add(InfMonomial{}, Poly::constant(c));
    return e;
}

inline void check_same_level(const InfElement& a, const InfElement& b) {
    if (a.n() != b.n() || a.m() != b.m())
        throw error("mismatched (n, m) levels: (" + std::to_string(a.n()) + "," +
                    std::to_string(a.m()) + ") vs (" + std::to_string(b.n()) + "," +
                    std::to_string(b.m()) + ")");
}

inline InfElement inf_add(const InfElement& a, const InfElement& b) {
    check_same_level(a, b);
    InfElement out = a;
    for (const auto& [mono, c] : b.coeffs())
        out.add(mono, c);
    return out;
}

inline InfElement inf_neg(const InfElement& a) {
    InfElement out(a.n(), a.m());
    for (const auto& [mono, c] : a.coeffs())
        out.add(mono, -c);
    return out;
}

inline InfElement inf_sub(const InfElement& a, const InfElement& b) {
    return inf_add(a, inf_neg(b));
}

// Product in the quotient: multiply representatives, reduce.
inline InfElement inf_mul(const InfElement& a, const InfElement& b) {
    check_same_level(a, b);
    return normal_form(a.representative() * b.representative(), a.n(), a.m());
}

inline InfElement operator+(const InfElement& a, const InfElement& b) { return inf_add(a, b); }
inline InfElement operator-(const InfElement& a, const InfElement& b) { return inf_sub(a, b); }
inline InfElement operator*(const InfElement& a, const InfElement& b) { return inf_mul(a, b); }

// Apply a polynomial operation f(z_1..z_k) to level elements: substitute
// representatives for the Base variables of f and reduce. This is the
// k-ary ring operation of the level algebra.
inline InfElement apply_polynomial_op(const Poly& f, const std::vector<InfElement>& args) {
    if (args.empty())
        throw error("apply_polynomial_op needs at least one argument");
    const int n = args[0].n(), m = args[0].m();
    for (const auto& a : args)
        check_same_level(args[0], a);
    std::map<Var, Poly> sigma;
    for (const Var& v : f.variables()) {
        if (v.kind != VarKind::Base)
            throw error("operation polynomial must use base variables only");
        if (v.col < 1 || v.col > static_cast<int>(args.size()))
            throw error("operation arity mismatch: variable " + to_string(v) + " with " +
                        std::to_string(args.size()) + " arguments");
        sigma.emplace(v, args[v.col - 1].representative());
    }
    return normal_form(substitute(f, sigma), n, m);
}

inline std::string to_string(const InfElement& e) {
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : e.coeffs()) {
        std::string cs = to_string(c);
        if (mono.rows.empty()) {
            // bare coefficient; parenthesize a leading minus after a join
            if (!first && cs.front() == '-')
                cs = "(" + cs + ")";
            out += first ? cs : " + " + cs;
        } else {
            if (c.terms().size() > 1 || (!first && cs.front() == '-'))
                cs = "(" + cs + ")";
            out += (first ? "" : " + ") + cs + " * " + to_string(mono);
        }
        first = false;
    }
    return out;
}

} // namespace nilform
