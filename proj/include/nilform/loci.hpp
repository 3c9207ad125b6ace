#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilform/inf_algebra.hpp"
#include "nilform/linalg.hpp"
#include "nilform/polynomial.hpp"

namespace nilform {

// The three families of loci, each presented by an ideal of quadratic
// generators:
//   D(n)          first-order infinitesimal vectors of R^n
//   Dtilde(m, n)  m-tuples of infinitesimals, pairwise infinitesimally close
//   Rbracket(m,n) (m+1)-tuples of points of R^n, pairwise infinitesimally close
enum class LocusKind { D, Dtilde, Rbracket };
enum class Coords { Vertex, Difference };

struct LocusPresentation {
    LocusKind kind;
    Coords coords;
    int n = 0;
    int m = 0;
    std::vector<Poly> generators;
};

inline bool poly_less(const Poly& a, const Poly& b) {
    auto ai = a.terms().begin(), bi = b.terms().begin();
    TermOrder lt;
    for (; ai != a.terms().end() && bi != b.terms().end(); ++ai, ++bi) {
        if (lt(ai->first, bi->first))
            return true;
        if (lt(bi->first, ai->first))
            return false;
        if (ai->second != bi->second)
            return ai->second < bi->second;
    }
    return bi != b.terms().end();
}

namespace detail {

// Canonicalize a generator list: primitive parts, deduplicated, sorted.
inline std::vector<Poly> canonical_generators(std::vector<Poly> gens) {
    std::vector<Poly> out;
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        out.push_back(primitive_part(g));
    }
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

inline LocusPresentation generators(LocusKind kind, Coords coords, int n, int m) {
    if (n < 1)
        throw error("locus presentation needs n >= 1");
    if (kind != LocusKind::D && m < 0)
        throw error("locus presentation needs m >= 0");
    std::vector<Poly> gens;
    switch (kind) {
    case LocusKind::D:
        // pairwise products of the coordinates of one infinitesimal vector
        m = 0;
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b)
                gens.push_back(Poly::var(base_var(a)) * Poly::var(base_var(b)));
        break;
    case LocusKind::Dtilde: {
        if (coords != Coords::Difference)
            throw error("Dtilde is presented in its own (difference) variables");
        // I_n applied to each vector, and to each pairwise difference
        for (int i = 1; i <= m; ++i)
            for (int a = 1; a <= n; ++a)
                for (int b = a; b <= n; ++b)
                    gens.push_back(Poly::var(inf_var(i, a)) * Poly::var(inf_var(i, b)));
        for (int k = 1; k <= m; ++k)
            for (int l = k + 1; l <= m; ++l)
                for (int a = 1; a <= n; ++a)
                    for (int b = a; b <= n; ++b) {
                        Poly da = Poly::var(inf_var(k, a)) - Poly::var(inf_var(l, a));
                        Poly db = Poly::var(inf_var(k, b)) - Poly::var(inf_var(l, b));
                        gens.push_back(da * db);
                    }
        break;
    }
    case LocusKind::Rbracket:
        if (coords == Coords::Vertex) {
            for (int k = 1; k <= m + 1; ++k)
                for (int l = k + 1; l <= m + 1; ++l)
                    for (int a = 1; a <= n; ++a)
                        for (int b = a; b <= n; ++b) {
                            Poly da = Poly::var(vertex_var(k, a)) - Poly::var(vertex_var(l, a));
                            Poly db = Poly::var(vertex_var(k, b)) - Poly::var(vertex_var(l, b));
                            gens.push_back(da * db);
                        }
        } else {
            // the antisymmetry presentation y_{i,a} y_{i',b} + y_{i,b} y_{i',a}
            for (int i = 1; i <= m; ++i)
                for (int i2 = i; i2 <= m; ++i2)
                    for (int a = 1; a <= n; ++a)
                        for (int b = a; b <= n; ++b) {
                            Poly g = Poly::var(inf_var(i, a)) * Poly::var(inf_var(i2, b)) +
                                     Poly::var(inf_var(i, b)) * Poly::var(inf_var(i2, a));
                            gens.push_back(g);
                        }
        }
        break;
    }
    return LocusPresentation{kind, coords, n, m, detail::canonical_generators(std::move(gens))};
}

// Coordinate change of the comparison isomorphism: vertex slot 1 is the
// base point, slot k >= 2 is base plus the (k-1)-st difference.
inline Poly to_difference(const Poly& p, int n, int m) {
    std::map<Var, Poly> sigma;
    for (const Var& v : p.variables()) {
        if (v.kind != VarKind::Vertex)
            throw error("to_difference expects vertex variables, got " + to_string(v));
        if (!var_in_context(v, n, m))
            throw error("vertex variable " + to_string(v) + " out of range");
        if (v.row == 1)
            sigma.emplace(v, Poly::var(base_var(v.col)));
        else
            sigma.emplace(v, Poly::var(base_var(v.col)) + Poly::var(inf_var(v.row - 1, v.col)));
    }
    return substitute(p, sigma);
}

inline Poly from_difference(const Poly& p, int n, int m) {
    std::map<Var, Poly> sigma;
    for (const Var& v : p.variables()) {
        if (!var_in_context(v, n, m))
            throw error("variable " + to_string(v) + " out of range");
        if (v.kind == VarKind::Base)
            sigma.emplace(v, Poly::var(vertex_var(1, v.col)));
        else if (v.kind == VarKind::Inf)
            sigma.emplace(v, Poly::var(vertex_var(v.row + 1, v.col)) - Poly::var(vertex_var(1, v.col)));
        else
            throw error("from_difference expects base/difference variables, got " + to_string(v));
    }
    return substitute(p, sigma);
}

// Witness for an ideal membership claim: cofactors per generator index
// with sum cofactor * generator equal to the queried polynomial.
struct MembershipCertificate {
    std::map<int, Poly> combination;
    bool verified = false;
};

struct IdealMembership {
    bool member = false;
    MembershipCertificate certificate;
};

namespace detail {

inline std::vector<std::vector<int>> exponents_of_degree(int nvars, int d) {
    std::vector<std::vector<int>> out;
    if (nvars == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    std::vector<int> cur(nvars, 0);
    // reuse the multi-index enumeration shape from taylor: inline here to
    // avoid a dependency cycle
    struct Rec {
        int nvars;
        std::vector<std::vector<int>>& out;
        std::vector<int>& cur;
        void go(int pos, int left) {
            if (pos == nvars - 1) {
                cur[pos] = left;
                out.push_back(cur);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                cur[pos] = e;
                go(pos + 1, left - e);
            }
        }
    } rec{nvars, out, cur};
    rec.go(0, d);
    return out;
}

inline Monomial monomial_from_exponents(const std::vector<Var>& vars, const std::vector<int>& exp) {
    std::vector<Monomial::Factor> f;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (exp[i] > 0)
            f.emplace_back(vars[i], exp[i]);
    return Monomial(std::move(f));
}

// Split a monomial into its part supported on `wset` and the rest.
inline std::pair<Monomial, Monomial> split_monomial(const Monomial& mono,
                                                    const std::vector<Var>& wset) {
    std::vector<Monomial::Factor> in, out;
    for (const auto& [v, e] : mono.factors()) {
        if (std::binary_search(wset.begin(), wset.end(), v))
            in.emplace_back(v, e);
        else
            out.emplace_back(v, e);
    }
    return {Monomial(std::move(in)), Monomial(std::move(out))};
}

} // namespace detail

// Exact linear-algebra membership oracle. The generators are homogeneous
// quadratics in their own variable set W; any membership relation splits
// by the monomial outside W and by W-degree, so cofactors of W-degree
// deg(p) - 2 are complete and the verdict is definitive.
inline IdealMembership ideal_member(const Poly& p, const LocusPresentation& pres, int deg_bound) {
    if (deg_bound < p.degree())
        throw error("ideal_member degree bound below deg(p)");
    IdealMembership result;
    if (p.is_zero()) {
        result.member = true;
        result.certificate.verified = true;
        return result;
    }

    // the constrained variable set W
    std::vector<Var> wset;
    for (const Poly& g : pres.generators) {
        for (const Var& v : g.variables())
            wset.push_back(v);
        for (const auto& [mono, c] : g.terms())
            if (mono.degree() != 2)
                throw error("ideal_member requires homogeneous quadratic generators");
    }
    std::sort(wset.begin(), wset.end());
    wset.erase(std::unique(wset.begin(), wset.end()), wset.end());

    // slice the query polynomial by (outside-W monomial, W-degree)
    struct Slice {
        std::map<Monomial, Rational, TermOrder> terms; // W-part -> coefficient
    };
    std::map<std::pair<Monomial, int>, Slice,
             decltype([](const std::pair<Monomial, int>& a, const std::pair<Monomial, int>& b) {
                 TermOrder lt;
                 if (lt(a.first, b.first))
                     return true;
                 if (lt(b.first, a.first))
                     return false;
                 return a.second < b.second;
             })>
        slices;
    for (const auto& [mono, c] : p.terms()) {
        auto [wpart, opart] = detail::split_monomial(mono, wset);
        slices[{opart, wpart.degree()}].terms.emplace(wpart, c);
    }

    std::map<int, Poly> combination;
    for (const auto& [key, slice] : slices) {
        const auto& [outside, wdeg] = key;
        if (wdeg < 2)
            return IdealMembership{}; // nonzero slice of W-degree < 2
        // column index of the slice's W-monomials
        std::map<Monomial, int, TermOrder> col_of;
        auto col = [&](const Monomial& m) {
            auto [it, fresh] = col_of.emplace(m, static_cast<int>(col_of.size()));
            return it->second;
        };
        LinearSolver solver;
        std::vector<std::pair<int, Monomial>> row_meta; // (generator index, cofactor monomial)
        const auto cof_exps = detail::exponents_of_degree(static_cast<int>(wset.size()), wdeg - 2);
        for (int k = 0; k < static_cast<int>(pres.generators.size()); ++k) {
            for (const auto& exp : cof_exps) {
                Monomial nu = detail::monomial_from_exponents(wset, exp);
                SparseVec row;
                for (const auto& [gm, gc] : pres.generators[k].terms())
                    row[col(nu * gm)] += gc;
                row_meta.emplace_back(k, nu);
                solver.add_row(std::move(row));
            }
        }
        SparseVec target;
        for (const auto& [wm, c] : slice.terms)
            target.emplace(col(wm), c);
        auto red = solver.reduce(std::move(target));
        if (!red.residual.empty())
            return IdealMembership{};
        for (const auto& [r, c] : red.combination) {
            const auto& [k, nu] = row_meta[static_cast<std::size_t>(r)];
            auto [it, fresh] = combination.try_emplace(k, Poly::zero());
            it->second += c * Poly::term(nu * outside, Rational(1));
        }
    }

    result.member = true;
    result.certificate.combination = std::move(combination);
    for (auto it = result.certificate.combination.begin();
         it != result.certificate.combination.end();)
        it = it->second.is_zero() ? result.certificate.combination.erase(it) : std::next(it);
    // re-verify the witness
    Poly check;
    for (const auto& [k, cof] : result.certificate.combination)
        check += cof * pres.generators[static_cast<std::size_t>(k)];
    result.certificate.verified = (check == p);
    if (!result.certificate.verified)
        throw error("internal: membership certificate failed re-verification");
    return result;
}

// Both inclusions of the level-m equality of ideals: the pairwise-difference
// presentation of the simplicial locus against the antisymmetry presentation,
// generator by generator, with re-verified certificates.
struct IdealEqualityReport {
    LocusPresentation lhs; // Dtilde(m, n) in difference variables
    LocusPresentation rhs; // Rbracket(m, n) in difference variables
    std::vector<IdealMembership> lhs_in_rhs;
    std::vector<IdealMembership> rhs_in_lhs;
    bool equal = false;
};

inline IdealEqualityReport ideal_equality_check(int m, int n, int deg_bound) {
    IdealEqualityReport report;
    report.lhs = generators(LocusKind::Dtilde, Coords::Difference, n, m);
    report.rhs = generators(LocusKind::Rbracket, Coords::Difference, n, m);
    report.equal = true;
    for (const Poly& g : report.lhs.generators) {
        report.lhs_in_rhs.push_back(ideal_member(g, report.rhs, std::max(deg_bound, g.degree())));
        report.equal = report.equal && report.lhs_in_rhs.back().member;
    }
    for (const Poly& g : report.rhs.generators) {
        report.rhs_in_lhs.push_back(ideal_member(g, report.lhs, std::max(deg_bound, g.degree())));
        report.equal = report.equal && report.rhs_in_lhs.back().member;
    }
    return report;
}

} // namespace nilform
