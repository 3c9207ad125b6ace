#include <catch2/catch_amalgamated.hpp>

#include <nilform/inf_algebra.hpp>
#include <nilform/loci.hpp>
#include <nilform/random_gen.hpp>
#include <nilform/taylor.hpp>

using namespace nilform;

namespace {
Poly X(int j) { return Poly::var(base_var(j)); }
Poly Y(int i, int j) { return Poly::var(inf_var(i, j)); }
Poly C(long long v) { return Poly::constant(Rational(v)); }

InfMonomial mono(std::vector<int> rows, std::vector<int> cols) {
    return InfMonomial{std::move(rows), std::move(cols)};
}
} // namespace

TEST_CASE("normal form of the generators' shapes") {
    // a squared difference dies
    CHECK(normal_form(Y(1, 1) * Y(1, 1), 1, 1).is_zero());
    // swapped column assignment picks up the sign
    const InfElement e = normal_form(Y(1, 2) * Y(2, 1), 2, 2);
    REQUIRE(e.coeffs().size() == 1);
    CHECK(e.coeff(mono({1, 2}, {1, 2})) == C(-1));
    CHECK(to_string(e) == "-1 * y1_1*y2_2");
    // an already canonical product stays put
    const InfElement f = normal_form(X(1) * Y(1, 1), 1, 1);
    CHECK(f.coeff(mono({1}, {1})) == X(1));
}

TEST_CASE("same row or same column collapses") {
    CHECK(normal_form(Y(1, 1) * Y(1, 2), 2, 2).is_zero());
    CHECK(normal_form(Y(1, 1) * Y(2, 1), 1, 2).is_zero());
    CHECK_FALSE(normal_form(Y(1, 1) * Y(2, 2), 2, 2).is_zero());
}

TEST_CASE("normal form is idempotent and linear") {
    Rng rng(111);
    for (int t = 0; t < 40; ++t) {
        const int n = rng.uniform(1, 3), m = rng.uniform(1, 3);
        const Poly p = rng.poly(rng.level_vars(n, m), 4, 6);
        const Poly q = rng.poly(rng.level_vars(n, m), 4, 6);
        const InfElement np = normal_form(p, n, m);
        CHECK(normal_form(np.representative(), n, m) == np);
        CHECK(normal_form(p + q, n, m) == inf_add(np, normal_form(q, n, m)));
    }
}

TEST_CASE("every multiple of a generator reduces to zero") {
    Rng rng(222);
    for (int t = 0; t < 30; ++t) {
        const int n = rng.uniform(1, 3), m = rng.uniform(1, 3);
        const auto pres = generators(LocusKind::Rbracket, Coords::Difference, n, m);
        if (pres.generators.empty())
            continue;
        const Poly g = pres.generators[static_cast<std::size_t>(
            rng.uniform(0, static_cast<int>(pres.generators.size()) - 1))];
        const Poly p = rng.poly(rng.level_vars(n, m), 3, 5);
        CHECK(normal_form(p * g, n, m).is_zero());
    }
}

TEST_CASE("level arithmetic") {
    Rng rng(333);
    for (int t = 0; t < 30; ++t) {
        const int n = rng.uniform(1, 2), m = rng.uniform(1, 3);
        const InfElement a = rng.inf_element(n, m, 3);
        CHECK(inf_add(a, InfElement(n, m)) == a);
        CHECK(inf_add(a, inf_neg(a)).is_zero());

        const InfElement b = rng.inf_element(n, m, 3);
        const InfElement c = rng.inf_element(n, m, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        // the quotient is linear
        CHECK(inf_add(a, b) ==
              normal_form(a.representative() + b.representative(), n, m));
    }
    CHECK_THROWS_AS(inf_add(InfElement(1, 1), InfElement(1, 2)), error);
    CHECK_THROWS_AS(normal_form(Y(2, 1), 1, 1), error); // row out of range
}

TEST_CASE("purely infinitesimal elements are nilpotent of order m+1") {
    Rng rng(444);
    for (int t = 0; t < 20; ++t) {
        const int n = rng.uniform(1, 3), m = rng.uniform(1, 2);
        InfElement prod = inf_constant(Rational(1), n, m);
        for (int k = 0; k <= m; ++k) {
            InfElement e = rng.inf_element(n, m, 2);
            InfElement no_base = inf_sub(e, normal_form(e.base_part(), n, m));
            prod = prod * no_base;
        }
        CHECK(prod.is_zero());
    }
}

TEST_CASE("taylor split pinned cases") {
    // x1^2 at 0, order 1: no low-order part, remainder g_(2) = 1
    auto ts = taylor_split(X(1) * X(1), {{base_var(1), Rational(0)}}, 1);
    CHECK(ts.taylor.is_zero());
    REQUIRE(ts.remainders.count({2}) == 1);
    CHECK(ts.remainders.at({2}) == C(1));

    // order >= deg f reproduces f with vanishing remainders
    Rng rng(555);
    for (int t = 0; t < 15; ++t) {
        const Poly f = rng.poly(rng.base_vars(2), 3);
        std::map<Var, Rational> p = {{base_var(1), rng.rational()}, {base_var(2), rng.rational()}};
        auto split = taylor_split(f, p, 4);
        CHECK(split.taylor == f);
        for (const auto& [sigma, gpoly] : split.remainders)
            CHECK(gpoly.is_zero());
    }

    // f = x1 x2 around (1,1) at order 1
    auto ts2 = taylor_split(X(1) * X(2),
                            {{base_var(1), Rational(1)}, {base_var(2), Rational(1)}}, 1);
    const Poly expected_taylor = C(1) + (X(1) - C(1)) + (X(2) - C(1));
    CHECK(ts2.taylor == expected_taylor);
    CHECK(ts2.remainders.at({1, 1}) == C(1));
    CHECK(ts2.remainders.at({2, 0}).is_zero());
    CHECK(ts2.remainders.at({0, 2}).is_zero());
}

TEST_CASE("taylor reconstruction is exact") {
    Rng rng(666);
    for (int t = 0; t < 60; ++t) {
        const int n = rng.uniform(1, 3);
        const Poly f = rng.poly(rng.base_vars(n), 4, 6);
        std::map<Var, Rational> p;
        for (int j = 1; j <= n; ++j)
            p.emplace(base_var(j), rng.rational());
        const int order = rng.uniform(0, 4);
        const auto split = taylor_split(f, p, order);
        CHECK(taylor_reconstruct(split, p) == f);
        for (const auto& [mono2, c] : split.taylor.terms())
            CHECK(mono2.degree() <= order);
        for (const auto& [sigma, gpoly] : split.remainders) {
            int total = 0;
            for (int e : sigma)
                total += e;
            CHECK(total == order + 1);
        }
    }
}

TEST_CASE("polynomial operations act through substitution") {
    // f = z1 z2 on (x1 + y11, x1 + y11): square kills the y^2 term
    const InfElement arg = normal_form(X(1) + Y(1, 1), 1, 1);
    const Poly f = X(1) * X(2); // z1 z2 as base variables 1, 2
    const InfElement out = apply_polynomial_op(f, {arg, arg});
    CHECK(out.coeff(InfMonomial{}) == X(1) * X(1));
    CHECK(out.coeff(mono({1}, {1})) == C(2) * X(1));

    // projection and constants
    Rng rng(777);
    const InfElement a = rng.inf_element(2, 2, 2);
    CHECK(apply_polynomial_op(X(1), {a}) == a);
    CHECK(apply_polynomial_op(C(7), {a}) == inf_constant(Rational(7), 2, 2));
    CHECK_THROWS_AS(apply_polynomial_op(X(3), {a, a}), error); // arity

    // composition: f(g1(a,b), g2(a,b)) both routes
    for (int t = 0; t < 15; ++t) {
        const InfElement u = rng.inf_element(2, 2, 2, 3);
        const InfElement v = rng.inf_element(2, 2, 2, 3);
        const Poly ff = rng.poly(rng.base_vars(2), 2, 4);
        const Poly g1 = rng.poly(rng.base_vars(2), 2, 3);
        const Poly g2 = rng.poly(rng.base_vars(2), 2, 3);
        std::map<Var, Poly> inner = {{base_var(1), g1}, {base_var(2), g2}};
        const InfElement direct = apply_polynomial_op(substitute(ff, inner), {u, v});
        const InfElement nested = apply_polynomial_op(
            ff, {apply_polynomial_op(g1, {u, v}), apply_polynomial_op(g2, {u, v})});
        CHECK(direct == nested);
    }
}
