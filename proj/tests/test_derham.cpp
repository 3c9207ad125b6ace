#include <catch2/catch_amalgamated.hpp>

#include <nilform/derham.hpp>

using namespace nilform;

namespace {
Poly X(int j) { return Poly::var(base_var(j)); }
Poly Y(int i, int j) { return Poly::var(inf_var(i, j)); }
Poly C(long long v) { return Poly::constant(Rational(v)); }
} // namespace

TEST_CASE("form container reorders wedges by sign") {
    DForm w(2, 2);
    w.add_unordered({2, 1}, C(1));
    CHECK(w.coeff({1, 2}) == C(-1));
    DForm zero(2, 2);
    zero.add_unordered({1, 1}, C(5));
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(DForm(2, 1).add({3}, C(1)), error);
}

TEST_CASE("phi reads off full-row components") {
    const InfElement e = normal_form(X(1) * Y(1, 1), 1, 1);
    const DForm w = phi(e);
    CHECK(w.coeff({1}) == X(1));

    const InfElement level0 = normal_form(X(1) * X(1), 1, 0);
    CHECK(phi(level0).coeff({}) == X(1) * X(1));

    CHECK(phi(normal_form(X(1), 1, 1)).is_zero()); // no full-row component
}

TEST_CASE("psi transcribes onto canonical monomials") {
    DForm w(2, 2);
    w.add({1, 2}, C(1));
    const InfElement e = psi(w);
    CHECK(e.coeff(InfMonomial{{1, 2}, {1, 2}}) == C(1));
    CHECK(e == normal_form(make_rational(1, 2) *
                               (Y(1, 1) * Y(2, 2) - Y(1, 2) * Y(2, 1)), 2, 2));

    CHECK(psi(DForm(2, 1)).is_zero());
    DForm zero_form(2, 0);
    zero_form.add({}, X(1) + C(3));
    CHECK(psi(zero_form).base_part() == X(1) + C(3));
}

TEST_CASE("exterior derivative pinned cases") {
    DForm w(2, 1);
    w.add({1}, X(2));
    DForm dw = exterior_derivative(w);
    CHECK(dw.coeff({1, 2}) == C(-1));

    DForm closed(2, 1);
    closed.add({1}, X(2));
    closed.add({2}, X(1));
    CHECK(exterior_derivative(closed).is_zero());

    DForm f0(2, 0);
    f0.add({}, X(1) * X(2));
    const DForm df = exterior_derivative(f0);
    CHECK(df.coeff({1}) == X(2));
    CHECK(df.coeff({2}) == X(1));
}

TEST_CASE("normalization projection and differential") {
    const InfElement e = normal_form(X(1) + Y(1, 1), 1, 1);
    const InfElement nc = normalized_class(e);
    CHECK(nc.coeff(InfMonomial{{1}, {1}}) == C(1));
    CHECK(nc.base_part().is_zero());
    CHECK(normalized_class(nc) == nc);

    // the image of any i >= 1 coface dies in the normalized quotient
    Rng rng(1313);
    for (int t = 0; t < 30; ++t) {
        const int n = rng.uniform(1, 3), m = rng.uniform(1, 3);
        const int i = rng.uniform(1, m);
        const InfElement below = rng.inf_element(n, m - 1, 2);
        CHECK(normalized_class(inf_map(coface(i, m - 1), below)).is_zero());
        CHECK(phi(inf_map(coface(i, m - 1), below)).is_zero());
    }

    // level-0 pinned differential: x1^2 -> 2 x1 y1_1
    const InfElement sq = normal_form(X(1) * X(1), 1, 0);
    const InfElement d = normalized_differential(sq);
    CHECK(d.coeff(InfMonomial{{1}, {1}}) == C(2) * X(1));
    CHECK(normalized_differential(d).is_zero());
    CHECK(normalized_differential(inf_constant(Rational(3), 2, 0)).is_zero());
}

TEST_CASE("ideal multiples vanish under phi") {
    Rng rng(1414);
    for (int t = 0; t < 20; ++t) {
        const int n = rng.uniform(1, 3), m = rng.uniform(1, 3);
        const auto pres = generators(LocusKind::Rbracket, Coords::Difference, n, m);
        if (pres.generators.empty())
            continue;
        const Poly g = pres.generators[static_cast<std::size_t>(
            rng.uniform(0, static_cast<int>(pres.generators.size()) - 1))];
        const Poly p = rng.poly(rng.level_vars(n, m), 3, 4);
        CHECK(phi_mixed_partial(p * g, n, m).is_zero());
    }
}

TEST_CASE("the mixed-partial formula equals the transcription") {
    Rng rng(1515);
    for (int t = 0; t < 60; ++t) {
        const int n = rng.uniform(1, 3), m = rng.uniform(0, 3);
        const Poly f = rng.poly(rng.level_vars(n, m), 4, 6);
        CHECK(phi_mixed_partial(f, n, m) == phi(normal_form(f, n, m)));
    }
}

TEST_CASE("determinant-convention pairing carries the m! factor") {
    Rng rng(1616);
    for (int m = 0; m <= 3; ++m) {
        const int n = 3;
        const DForm w = random_dform(rng, n, m, 2);
        const Rational mfact = factorial(static_cast<unsigned>(m));
        CHECK(phi(psi_determinant(w)) == mfact * w);
        CHECK(phi(psi(w)) == w);
        // as elements, the alternating evaluation is m! times the transcription
        const InfElement transcribed = psi(w);
        InfElement scaled(w.n(), m);
        for (const auto& [mono, c] : transcribed.coeffs())
            scaled.add(mono, mfact * c);
        CHECK(psi_determinant(w) == scaled);
    }
}

TEST_CASE("top-degree forms are closed along both routes") {
    DForm w(2, 2);
    w.add({1, 2}, C(5));
    CHECK(exterior_derivative(w).is_zero());
    CHECK(phi(normalized_differential(psi(w))).is_zero());
}

TEST_CASE("theorem harness passes at desk scale") {
    for (int n = 1; n <= 3; ++n) {
        const CheckReport rep = theorem_check(n, std::min(n, 3), 2, 40, 7);
        INFO(rep.to_text());
        CHECK(rep.pass());
    }
}

TEST_CASE("exterior derivative squares to zero independently") {
    Rng rng(1717);
    for (int t = 0; t < 30; ++t) {
        const int n = rng.uniform(1, 3);
        const int m = rng.uniform(0, n);
        const DForm w = random_dform(rng, n, m, 3);
        CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
    }
}

TEST_CASE("kernel dimension oracle certifies the quotient size") {
    const auto a0 = kernel_dimension_oracle(1, 1, 1);
    CHECK(a0.pass);
    CHECK(a0.expected_phi_rank == 2); // C(1,1) * #{1, x}

    const auto a = kernel_dimension_oracle(1, 1, 2);
    CHECK(a.pass);
    CHECK(a.expected_phi_rank == 3); // C(1,1) * #{1, x, x^2}
    CHECK(a.phi_rank == 3);

    const auto b = kernel_dimension_oracle(2, 1, 1);
    CHECK(b.pass);
    CHECK(b.expected_phi_rank == 6); // C(2,1) * #{1, x1, x2}

    const auto c = kernel_dimension_oracle(2, 2, 0);
    CHECK(c.pass);
    CHECK(c.expected_phi_rank == 1); // the single wedge with constant coefficient

    const auto d = kernel_dimension_oracle(2, 2, 1);
    CHECK(d.pass);
    CHECK(d.coface_span_dim == d.kernel_dim);
}
