#pragma once

#include <algorithm>
#include <vector>

#include "nilform/cosimplicial.hpp"
#include "nilform/dform.hpp"
#include "nilform/inf_algebra.hpp"
#include "nilform/linalg.hpp"
#include "nilform/random_gen.hpp"
#include "nilform/report.hpp"

namespace nilform {

// phi: read off the full-row components of a level-m element as an m-form.
// The coefficient of dx_{j1}^...^dx_{jm} is the coefficient polynomial of
// the canonical monomial with rows {1..m} and columns (j1..jm); everything
// else dies. Mutually inverse with psi by construction; the mixed-partial
// description of the paper is kept alongside as a verified property
// (phi_mixed_partial below).
inline DForm phi(const InfElement& e) {
    DForm out(e.n(), e.m());
    for (const auto& [mono, c] : e.coeffs())
        if (mono.full_rows(e.m()))
            out.add(mono.cols, c);
    return out;
}

// psi: transcribe an m-form back onto the canonical full-row monomials.
// The image is a normalized representative (only full-row support).
inline InfElement psi(const DForm& w) {
    InfElement out(w.n(), w.degree());
    for (const auto& [tuple, f] : w.coeffs()) {
        InfMonomial mono;
        for (int i = 1; i <= w.degree(); ++i)
            mono.rows.push_back(i);
        mono.cols = tuple;
        out.add(mono, f);
    }
    return out;
}

// The determinant-convention reading of psi: evaluate the wedge on the
// infinitesimal row vectors without the 1/m! normalization, i.e.
// sum_sigma sgn(sigma) prod_i y_{i, j_sigma(i)}. Satisfies
// phi(psi_determinant(w)) = m! * w; kept for auditing the convention.
inline InfElement psi_determinant(const DForm& w) {
    const int m = w.degree();
    InfElement out(w.n(), m);
    for (const auto& [tuple, f] : w.coeffs()) {
        // the tuple is ascending, so the sign of an assignment is the
        // inversion parity of the permuted column list
        std::vector<int> perm(tuple.begin(), tuple.end());
        Poly rep;
        do {
            int sign = 1;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b])
                        sign = -sign;
            std::vector<Monomial::Factor> factors;
            for (int i = 0; i < m; ++i)
                factors.emplace_back(inf_var(i + 1, perm[static_cast<std::size_t>(i)]), 1);
            rep += Poly::term(Monomial(std::move(factors)),
                              sign < 0 ? Rational(-1) : Rational(1));
        } while (std::next_permutation(perm.begin(), perm.end()));
        InfElement part = normal_form(f * rep, w.n(), m);
        for (const auto& [mono2, c2] : part.coeffs())
            out.add(mono2, c2);
    }
    return out;
}

// The paper's alpha-indexed mixed-partial formula, evaluated on a raw
// difference-coordinate polynomial: one derivative per row along an
// injection alpha from rows to columns, evaluated at vanishing
// infinitesimals, wedge factors reordered by sign. Agrees exactly with
// phi(normal_form(f)).
inline DForm phi_mixed_partial(const Poly& f, int n, int m) {
    DForm out(n, m);
    // enumerate injections rows {1..m} -> columns {1..n}
    std::vector<int> choice;
    auto rec = [&](auto&& self, int row) -> void {
        if (row > m) {
            Poly deriv = f;
            for (int i = 1; i <= m; ++i)
                deriv = partial(deriv, inf_var(i, choice[static_cast<std::size_t>(i - 1)]));
            if (deriv.is_zero())
                return;
            std::map<Var, Poly> sub;
            for (const Var& v : deriv.variables())
                sub.emplace(v, v.kind == VarKind::Inf ? Poly::zero() : Poly::var(v));
            Poly at_zero = substitute(deriv, sub);
            if (at_zero.is_zero())
                return;
            out.add_unordered(DForm::Tuple(choice.begin(), choice.end()), std::move(at_zero));
            return;
        }
        for (int j = 1; j <= n; ++j) {
            if (std::find(choice.begin(), choice.end(), j) != choice.end())
                continue;
            choice.push_back(j);
            self(self, row + 1);
            choice.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Representative of the class in the normalized complex: only the
// full-row components survive the quotient by the images of the cofaces
// d^i, i >= 1.
inline InfElement normalized_class(const InfElement& e) {
    InfElement out(e.n(), e.m());
    for (const auto& [mono, c] : e.coeffs())
        if (mono.full_rows(e.m()))
            out.add(mono, c);
    return out;
}

// Differential of the normalized complex, computed through the 0-th
// coface and the quotient projection.
inline InfElement normalized_differential(const InfElement& e) {
    return normalized_class(inf_map(coface(0, e.m()), e));
}

namespace detail {

inline std::vector<DForm::Tuple> ascending_tuples(int n, int m) {
    std::vector<DForm::Tuple> out;
    DForm::Tuple cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int j = next; j <= n; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace detail

inline DForm random_dform(Rng& rng, int n, int m, int deg, int max_terms = 4) {
    DForm out(n, m);
    auto tuples = detail::ascending_tuples(n, m);
    if (tuples.empty())
        return out;
    const auto vars = rng.base_vars(n);
    for (const auto& t : tuples)
        if (rng.uniform(0, 1) == 1)
            out.add(t, rng.poly(vars, deg, max_terms));
    if (out.is_zero()) // keep the trial informative
        out.add(tuples[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(tuples.size()) - 1))],
                rng.nonzero_poly(vars, deg, max_terms));
    return out;
}

// The full theorem harness: random forms and elements per level, exact
// identities between the normalized simplicial route and the textbook
// exterior derivative.
inline CheckReport theorem_check(int n, int m_max, int deg, int trials, std::uint64_t seed) {
    CheckReport report;
    report.command = "check derham";
    report.params = {{"n", n}, {"m", m_max}, {"deg", deg}};
    report.seed = seed;
    report.trials = trials;

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::string tag = " [trial " + std::to_string(t) + "]";
        const int m = t % (m_max + 1); // stratified coverage of the degrees
        const DForm w = random_dform(rng, n, std::min(m, n), deg);
        const InfElement e = rng.inf_element(n, m, deg);

        // (i) phi . psi = id
        const DForm w_rt = phi(psi(w));
        report.record(w_rt == w, "phi(psi(w)) = w" + tag, to_string(w_rt), to_string(w));

        // (ii) the normalization is compatible with the transcriptions
        const DForm pe = phi(e);
        const DForm pce = phi(normalized_class(e));
        report.record(pce == pe, "phi(normalized_class(e)) = phi(e)" + tag, to_string(pce),
                      to_string(pe));
        const InfElement nc = normalized_class(e);
        const InfElement nc_rt = normalized_class(psi(phi(e)));
        report.record(nc_rt == nc, "normalized_class(psi(phi(e))) = normalized_class(e)" + tag,
                      to_string(nc_rt), to_string(nc));

        // (iii) phi . d0 . psi = d
        const DForm lhs = phi(normalized_differential(psi(w)));
        const DForm rhs = exterior_derivative(w);
        report.record(lhs == rhs, "phi(d0(psi(w))) = d(w)" + tag, to_string(lhs), to_string(rhs));

        // (iv) the normalized differential squares to zero
        const InfElement dd = normalized_differential(normalized_differential(nc));
        report.record(dd.is_zero(), "d0(d0(e)) = 0" + tag, to_string(dd), "0");
        const InfElement ddw = normalized_differential(normalized_differential(psi(w)));
        report.record(ddw.is_zero(), "d0(d0(psi(w))) = 0" + tag, to_string(ddw), "0");

        // (v) chain-map naturality on arbitrary normalized elements
        const DForm nat_l = phi(normalized_differential(nc));
        const DForm nat_r = exterior_derivative(phi(nc));
        report.record(nat_l == nat_r, "phi(d0(e)) = d(phi(e))" + tag, to_string(nat_l),
                      to_string(nat_r));
        const InfElement nat2_l = psi(exterior_derivative(w));
        const InfElement nat2_r = normalized_differential(psi(w));
        report.record(nat2_l == nat2_r, "psi(d(w)) = d0(psi(w))" + tag, to_string(nat2_l),
                      to_string(nat2_r));
    }
    return report;
}

// Exact rank certification that the normalized quotient is no bigger than
// the space of forms: on the slice of x-degree <= deg, the span of the
// images of the cofaces d^i, i >= 1, equals ker(phi), and phi hits a
// space of dimension C(n, m) * #(base monomials of degree <= deg).
struct KernelOracleReport {
    int n = 0, m = 0, deg = 0;
    int slice_dim = 0;
    int coface_span_dim = 0;
    int phi_rank = 0;
    int kernel_dim = 0;       // slice_dim - phi_rank
    int expected_phi_rank = 0; // C(n,m) * #base monomials
    bool pass = false;
};

namespace detail {

inline std::vector<InfMonomial> canonical_inf_monomials(int n, int m) {
    std::vector<InfMonomial> out;
    std::vector<int> rows, cols;
    auto rec_cols = [&](auto&& self, std::size_t idx, int next_col) -> void {
        if (idx == rows.size()) {
            out.push_back(InfMonomial{rows, cols});
            return;
        }
        for (int j = next_col; j <= n; ++j) {
            cols.push_back(j);
            self(self, idx + 1, j + 1);
            cols.pop_back();
        }
    };
    auto rec_rows = [&](auto&& self, int next_row) -> void {
        rec_cols(rec_cols, 0, 1);
        for (int i = next_row; i <= m; ++i) {
            rows.push_back(i);
            self(self, i + 1);
            rows.pop_back();
        }
    };
    rec_rows(rec_rows, 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<Monomial> base_monomials_up_to(int n, int deg) {
    std::vector<Monomial> out;
    std::vector<Var> vars;
    for (int j = 1; j <= n; ++j)
        vars.push_back(base_var(j));
    for (int d = 0; d <= deg; ++d)
        for (const auto& exp : exponents_of_degree(n, d))
            out.push_back(monomial_from_exponents(vars, exp));
    return out;
}

} // namespace detail

inline KernelOracleReport kernel_dimension_oracle(int n, int m, int deg) {
    KernelOracleReport rep;
    rep.n = n, rep.m = m, rep.deg = deg;
    if (m < 1)
        throw error("kernel oracle needs m >= 1");

    constexpr auto pair_less = [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        TermOrder lt;
        return lt(a.second, b.second);
    };

    const auto monos = detail::canonical_inf_monomials(n, m);
    const auto bases = detail::base_monomials_up_to(n, deg);
    std::map<std::pair<InfMonomial, Monomial>, int, decltype(pair_less)> index;
    for (const auto& im : monos)
        for (const auto& bm : bases)
            index.emplace(std::pair{im, bm}, static_cast<int>(index.size()));
    rep.slice_dim = static_cast<int>(index.size());

    auto to_vec = [&](const InfElement& e) {
        SparseVec v;
        for (const auto& [im, cpoly] : e.coeffs())
            for (const auto& [bm, c] : cpoly.terms()) {
                auto it = index.find({im, bm});
                if (it == index.end())
                    throw error("coface image left the x-degree slice");
                v.emplace(it->second, c);
            }
        return v;
    };

    // span of the images of d^i, i >= 1, of the level-(m-1) slice
    const auto monos_below = detail::canonical_inf_monomials(n, m - 1);
    LinearSolver span;
    for (int i = 1; i <= m; ++i) {
        const DeltaMap d_i = coface(i, m - 1);
        for (const auto& im : monos_below)
            for (const auto& bm : bases) {
                InfElement basis_elt(n, m - 1);
                basis_elt.add(im, Poly::term(bm, Rational(1)));
                span.add_row(to_vec(inf_map(d_i, basis_elt)));
            }
    }
    rep.coface_span_dim = span.rank();

    // rank of phi on the slice
    LinearSolver phi_rank;
    std::map<std::pair<DForm::Tuple, Monomial>, int, decltype(pair_less)> form_index;
    for (const auto& im : monos)
        for (const auto& bm : bases) {
            InfElement basis_elt(n, m);
            basis_elt.add(im, Poly::term(bm, Rational(1)));
            const DForm img = phi(basis_elt);
            SparseVec v;
            for (const auto& [tuple, cpoly] : img.coeffs())
                for (const auto& [bm2, c] : cpoly.terms()) {
                    auto [it, fresh] =
                        form_index.emplace(std::pair{tuple, bm2}, static_cast<int>(form_index.size()));
                    v.emplace(it->second, c);
                }
            phi_rank.add_row(std::move(v));
        }
    rep.phi_rank = phi_rank.rank();
    rep.kernel_dim = rep.slice_dim - rep.phi_rank;

    // C(n, m)
    long long binom = 1;
    for (int i = 1; i <= m; ++i)
        binom = binom * (n - i + 1) / i;
    rep.expected_phi_rank = static_cast<int>(binom) * static_cast<int>(bases.size());

    rep.pass = rep.coface_span_dim == rep.kernel_dim && rep.phi_rank == rep.expected_phi_rank;
    return rep;
}

} // namespace nilform
