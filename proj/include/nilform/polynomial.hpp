#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilform/rational.hpp"
#include "nilform/variable.hpp"

namespace nilform {

// A monomial is a finite product of variables with positive exponents,
// stored sorted by variable. The empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<Var, int>;

    Monomial() = default;

    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        // merge duplicates, drop zero exponents
        std::vector<Factor> merged;
        for (const auto& f : factors_) {
            if (f.second == 0)
                continue;
            if (f.second < 0)
                throw error("negative exponent in monomial");
            if (!merged.empty() && merged.back().first == f.first)
                merged.back().second += f.second;
            else
                merged.push_back(f);
        }
        factors_ = std::move(merged);
    }

    static Monomial var(const Var& v, int exp = 1) { return Monomial({{v, exp}}); }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& f : factors_)
            d += f.second;
        return d;
    }

    int exponent(const Var& v) const {
        for (const auto& f : factors_)
            if (f.first == v)
                return f.second;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        std::vector<Factor> out;
        out.reserve(factors_.size() + o.factors_.size());
        auto a = factors_.begin();
        auto b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first)
                out.push_back(*a++);
            else if (b->first < a->first)
                out.push_back(*b++);
            else {
                out.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        out.insert(out.end(), a, factors_.end());
        out.insert(out.end(), b, o.factors_.end());
        Monomial m;
        m.factors_ = std::move(out);
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    bool divides(const Monomial& other) const {
        for (const auto& [v, e] : factors_)
            if (other.exponent(v) < e)
                return false;
        return true;
    }

    // other / this; requires divisibility
    Monomial quotient_of(const Monomial& other) const {
        std::vector<Factor> out;
        for (const auto& [v, e] : other.factors_) {
            int r = e - exponent(v);
            if (r < 0)
                throw error("monomial division without divisibility");
            if (r > 0)
                out.emplace_back(v, r);
        }
        return Monomial(std::move(out));
    }

private:
    std::vector<Factor> factors_;
};

// Canonical term order: total degree first (higher degree earlier), ties
// broken lexicographically on the sorted factor list with the Var order
// Base < Inf < Vertex. Fixes iteration and serialization everywhere.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da > db;
        return a.factors() < b.factors();
    }
};

// True exponent-vector lex order (earlier variable dominates). Unlike the
// serialization tie-break above this is invariant under multiplication by
// a common monomial, which is what rewrite-rule orientation needs.
inline bool exponent_lex_less(const Monomial& a, const Monomial& b) {
    auto ai = a.factors().begin(), ae = a.factors().end();
    auto bi = b.factors().begin(), be = b.factors().end();
    while (ai != ae || bi != be) {
        if (bi == be)
            return false; // a has an extra variable b lacks: a is larger
        if (ai == ae)
            return true;
        if (ai->first < bi->first)
            return false;
        if (bi->first < ai->first)
            return true;
        if (ai->second != bi->second)
            return ai->second < bi->second;
        ++ai, ++bi;
    }
    return false;
}

inline std::string to_string(const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty())
            out += "*";
        out += to_string(v);
        if (e != 1)
            out += "**" + std::to_string(e);
    }
    return out;
}

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored; equality is map equality.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, TermOrder>;

    Poly() = default;

    static Poly zero() { return Poly(); }

    static Poly constant(const Rational& c) {
        Poly p;
        if (c != 0)
            p.terms_.emplace(Monomial(), c);
        return p;
    }

    static Poly var(const Var& v) {
        Poly p;
        p.terms_.emplace(Monomial::var(v), Rational(1));
        return p;
    }

    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        if (c != 0)
            p.terms_.emplace(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_value() const {
        if (terms_.empty())
            return Rational(0);
        if (!is_constant())
            throw error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int degree() const { // total degree; -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0)
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly out;
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, -c);
        return out;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, ca * cb);
        return out;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly out;
        if (c == 0)
            return out;
        for (const auto& [m, pc] : p.terms_)
            out.terms_.emplace(m, c * pc);
        return out;
    }

    Poly pow(int e) const {
        if (e < 0)
            throw error("negative polynomial power");
        Poly acc = Poly::constant(Rational(1));
        for (int i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    // Every variable that occurs with a nonzero coefficient.
    std::vector<Var> variables() const {
        std::vector<Var> vars;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors())
                vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }

private:
    TermMap terms_;
};

// Simultaneous substitution; every variable of p must be mapped.
inline Poly substitute(const Poly& p, const std::map<Var, Poly>& sigma) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Poly acc = Poly::constant(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = sigma.find(v);
            if (it == sigma.end())
                throw error("substitution missing entry for " + to_string(v));
            acc = acc * it->second.pow(e);
        }
        out += acc;
    }
    return out;
}

// Variable-to-variable relabel; variables without an entry stay fixed.
// Cheaper than substitute and used heavily by the simplicial maps.
inline Poly relabel(const Poly& p, const std::map<Var, Var>& images) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> factors;
        factors.reserve(m.factors().size());
        for (const auto& [v, e] : m.factors()) {
            auto it = images.find(v);
            factors.emplace_back(it == images.end() ? v : it->second, e);
        }
        out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

inline Poly partial(const Poly& p, const Var& v) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        std::vector<Monomial::Factor> factors;
        for (const auto& [w, ew] : m.factors())
            factors.emplace_back(w, w == v ? ew - 1 : ew);
        out.add_term(Monomial(std::move(factors)), c * e);
    }
    return out;
}

inline Rational evaluate(const Poly& p, const std::map<Var, Rational>& point) {
    Rational acc(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                throw error("evaluation point missing entry for " + to_string(v));
            for (int i = 0; i < e; ++i)
                t *= it->second;
        }
        acc += t;
    }
    return acc;
}

// Divide by the gcd of the integer-normalized coefficients and make the
// coefficient of the exponent-lex-leading monomial positive. Used to
// canonicalize ideal generators.
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero())
        return p;
    const Monomial* lead_mono = nullptr;
    Rational lead;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        if (!lead_mono || exponent_lex_less(*lead_mono, m)) {
            lead_mono = &m;
            lead = c;
        }
        num_gcd = gcd(num_gcd, rat_num(c));
        den_lcm = lcm(den_lcm, rat_den(c));
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (lead < 0)
        scale = -scale;
    return scale * p;
}

inline std::string to_string(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (m.is_one())
            out += to_string(mag);
        else if (mag == 1)
            out += to_string(m);
        else
            out += to_string(mag) + "*" + to_string(m);
    }
    return out;
}

} // namespace nilform
