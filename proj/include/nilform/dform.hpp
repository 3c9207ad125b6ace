#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nilform/polynomial.hpp"

namespace nilform {

// Differential m-form on R^n with polynomial coefficients, stored on the
// ascending wedge basis dx_{j1} ^ ... ^ dx_{jm}, j1 < ... < jm.
class DForm {
public:
    using Tuple = std::vector<int>;
    using CoeffMap = std::map<Tuple, Poly>;

    DForm(int n, int degree) : n_(n), degree_(degree) {
        if (n < 0 || degree < 0)
            throw error("invalid dimension or degree for a form");
    }

    int n() const { return n_; }
    int degree() const { return degree_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Tuple& tuple, const Poly& coeff) {
        if (coeff.is_zero())
            return;
        validate(tuple);
        auto it = coeffs_.find(tuple);
        if (it == coeffs_.end()) {
            coeffs_.emplace(tuple, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    // Add coeff on an arbitrary distinct-index tuple, reordering to the
    // ascending basis with the sign of the sorting permutation; a repeated
    // index contributes nothing.
    void add_unordered(Tuple tuple, Poly coeff) {
        int sign = 1;
        for (std::size_t a = 0; a < tuple.size(); ++a)
            for (std::size_t b = a + 1; b < tuple.size(); ++b) {
                if (tuple[a] == tuple[b])
                    return;
                if (tuple[a] > tuple[b])
                    sign = -sign;
            }
        std::sort(tuple.begin(), tuple.end());
        add(tuple, sign < 0 ? -coeff : coeff);
    }

    Poly coeff(const Tuple& tuple) const {
        auto it = coeffs_.find(tuple);
        return it == coeffs_.end() ? Poly::zero() : it->second;
    }

    friend bool operator==(const DForm&, const DForm&) = default;

    friend DForm operator+(const DForm& a, const DForm& b) {
        if (a.n_ != b.n_ || a.degree_ != b.degree_)
            throw error("form dimension/degree mismatch");
        DForm out = a;
        for (const auto& [t, c] : b.coeffs_)
            out.add(t, c);
        return out;
    }

    friend DForm operator-(const DForm& a, const DForm& b) {
        if (a.n_ != b.n_ || a.degree_ != b.degree_)
            throw error("form dimension/degree mismatch");
        DForm out = a;
        for (const auto& [t, c] : b.coeffs_)
            out.add(t, -c);
        return out;
    }

    friend DForm operator*(const Rational& c, const DForm& w) {
        DForm out(w.n_, w.degree_);
        for (const auto& [t, p] : w.coeffs_)
            out.add(t, c * p);
        return out;
    }

private:
    void validate(const Tuple& tuple) const {
        if (static_cast<int>(tuple.size()) != degree_)
            throw error("wedge tuple length differs from form degree");
        int prev = 0;
        for (int j : tuple) {
            if (j <= prev || j > n_)
                throw error("wedge tuple must be ascending within 1..n");
            prev = j;
        }
    }

    int n_;
    int degree_;
    CoeffMap coeffs_;
};

// d(f dx_J) = sum_j df/dx_j dx_j ^ dx_J, reassociated onto the ascending
// basis. Implemented directly from the textbook formula, independent of
// the simplicial machinery.
inline DForm exterior_derivative(const DForm& w) {
    DForm out(w.n(), w.degree() + 1);
    for (const auto& [tuple, f] : w.coeffs()) {
        for (int j = 1; j <= w.n(); ++j) {
            Poly df = partial(f, base_var(j));
            if (df.is_zero())
                continue;
            DForm::Tuple t;
            t.reserve(tuple.size() + 1);
            t.push_back(j);
            t.insert(t.end(), tuple.begin(), tuple.end());
            out.add_unordered(std::move(t), std::move(df));
        }
    }
    return out;
}

inline std::string to_string(const DForm& w) {
    if (w.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [tuple, f] : w.coeffs()) {
        if (!first)
            out += " + ";
        first = false;
        out += "(" + to_string(f) + ")";
        for (std::size_t i = 0; i < tuple.size(); ++i)
            out += (i == 0 ? " dx" : "^dx") + std::to_string(tuple[i]);
    }
    return out;
}

} // namespace nilform
