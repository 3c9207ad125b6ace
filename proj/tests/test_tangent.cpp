#include <catch2/catch_amalgamated.hpp>

#include <nilform/module_harness.hpp>

using namespace nilform;

namespace {
Poly X(int j) { return Poly::var(base_var(j)); }
Poly C(long long v) { return Poly::constant(Rational(v)); }
} // namespace

TEST_CASE("presented rings rewrite to canonical form") {
    // Q[x]/(x^3)
    DeskRing trunc(1, {X(1).pow(3)});
    CHECK(trunc.normalize(X(1).pow(5) + X(1)) == X(1));
    CHECK(trunc.normalize(X(1).pow(2)) == X(1).pow(2));

    // binomial rule: x y -> z^2 like relation on two generators, u v - w^2 shape
    DeskRing bin(3, {X(1) * X(2) - X(3) * X(3)});
    const Poly lhs = bin.normalize(X(1) * X(2) * X(1));
    const Poly rhs = bin.normalize(X(3) * X(3) * X(1));
    CHECK(lhs == rhs);

    CHECK_THROWS_AS(DeskRing(1, {X(1) * X(1) + X(1) + C(1)}), error); // trinomial
    CHECK_THROWS_AS(DeskRing(1, {Poly::var(base_var(2))}), error);    // foreign variable

    // ring axioms on representatives
    Rng rng(909);
    DeskRing level = inf_level_ring(2);
    std::vector<Var> gens = {base_var(1), base_var(2), base_var(3)};
    for (int t = 0; t < 20; ++t) {
        const Poly a = level.normalize(rng.poly(gens, 3));
        const Poly b = level.normalize(rng.poly(gens, 3));
        const Poly c = level.normalize(rng.poly(gens, 3));
        CHECK(level.normalize(a * b) == level.normalize(b * a));
        CHECK(level.normalize(a * (b + c)) ==
              level.normalize(level.normalize(a * b) + level.normalize(a * c)));
        CHECK(level.normalize(level.normalize(a)) == level.normalize(a));
    }
}

TEST_CASE("square-zero multiplication law") {
    const DeskRing qx(1);
    const SquareZeroExtension ext(qx, 1);

    const SquareZeroElement xe = ext.element(X(1), {C(1)}); // x (+) 1
    const SquareZeroElement sq = ext.mul(xe, xe);
    CHECK(sq.base == X(1) * X(1));
    CHECK(sq.fiber[0] == C(2) * X(1));

    Rng rng(111);
    for (int t = 0; t < 20; ++t) {
        const SquareZeroElement g = ext.element(rng.poly({base_var(1)}, 2),
                                                {rng.poly({base_var(1)}, 2)});
        CHECK(ext.mul(g, ext.one()) == g);
        const SquareZeroElement pure_a = ext.element(Poly::zero(), {rng.poly({base_var(1)}, 2)});
        const SquareZeroElement pure_b = ext.element(Poly::zero(), {rng.poly({base_var(1)}, 2)});
        CHECK(ext.mul(pure_a, pure_b) == ext.element(Poly::zero(), {Poly::zero()}));
        // commutative, associative ring with componentwise addition
        const SquareZeroElement h = ext.element(rng.poly({base_var(1)}, 2),
                                                {rng.poly({base_var(1)}, 2)});
        CHECK(ext.mul(g, h) == ext.mul(h, g));
        CHECK(ext.mul(ext.mul(g, h), pure_a) == ext.mul(g, ext.mul(h, pure_a)));
        CHECK(ext.mul(g, ext.add(h, pure_a)) == ext.add(ext.mul(g, h), ext.mul(g, pure_a)));
    }
}

TEST_CASE("closed-formula action") {
    const DeskRing qx(1);
    const SquareZeroExtension ext(qx, 1);
    const SquareZeroElement arg = ext.element(X(1), {C(1)});

    // f = z^2 must match the product law
    const SquareZeroElement via_formula = ext.apply(X(1) * X(1), {arg});
    CHECK(via_formula.base == X(1) * X(1));
    CHECK(via_formula.fiber[0] == C(2) * X(1));
    CHECK(via_formula == ext.mul(arg, arg));

    // projection and constants
    CHECK(ext.apply(X(1), {arg}) == arg);
    const SquareZeroElement c7 = ext.apply(C(7), {arg});
    CHECK(c7.base == C(7));
    CHECK(c7.fiber[0].is_zero());
    CHECK_THROWS_AS(ext.apply(Poly::var(base_var(2)), {arg}), error);
}

TEST_CASE("descriptor axioms and roundtrips, canonical and relabeled") {
    CheckReport report;
    report.command = "unit";

    const DeskRing ring(2);
    const TangentDescriptor canonical = F_mod_to_tangent(ring, 2);
    CHECK(canonical.is_canonical());
    descriptor_axioms_check(canonical, 6, 21, report, "canonical");
    tangent_roundtrip_check(canonical, 6, 22, report, "canonical");

    // a relabeled descriptor: fiber automorphism + derivation shift
    RationalMatrix a = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    DeskModule mod{ring, 2};
    std::vector<DeskModule::Element> shift = {
        {X(2), Poly::zero()},
        {C(1), X(1)},
    };
    const TangentDescriptor relabeled(ring, 2, a, shift);
    CHECK_FALSE(relabeled.is_canonical());
    descriptor_axioms_check(relabeled, 6, 23, report, "relabeled");
    tangent_roundtrip_check(relabeled, 6, 24, report, "relabeled");

    INFO(report.to_text());
    CHECK(report.pass());

    CHECK_THROWS_AS(TangentDescriptor(ring, 2,
                                      RationalMatrix{{Rational(1), Rational(1)},
                                                     {Rational(1), Rational(1)}},
                                      shift),
                    error); // singular relabeling

    // trivial module: the projection is an isomorphism
    const TangentDescriptor trivial = F_mod_to_tangent(ring, 0);
    const RecoveredModule rec = tangent_to_mod(trivial);
    const SquareZeroElement g = trivial.unit(X(1) + C(2));
    CHECK(rec.phi(g).base == X(1) + C(2));
    CHECK(rec.phi_inverse(rec.phi(g)) == g);
}

TEST_CASE("ring maps must annihilate the domain relations") {
    const DeskRing trunc(1, {X(1).pow(2)}); // x^2 = 0
    const DeskRing target(1);
    // x -> x is not a ring map out of Q[x]/(x^2) into Q[x]
    CHECK_FALSE(RingMap{trunc, target, {X(1)}}.well_defined());
    // x -> 0 is
    CHECK(RingMap{trunc, target, {Poly::zero()}}.well_defined());
    // x -> x into another nilpotent-square ring is as well
    CHECK(RingMap{trunc, trunc, {X(1)}}.well_defined());
}

TEST_CASE("morphism roundtrip, identity and zero maps") {
    CheckReport report;
    report.command = "unit";

    const DeskRing dom(1), cod(1);
    const RingMap id{dom, dom, {X(1)}};
    DeskModule m1{dom, 1};
    morphism_roundtrip_check(ModuleMap{id, m1, m1, {m1.basis(0)}}, 4, 31, report, "identity");

    // phi = 0: the square-zero morphism keeps only the ring part
    const ModuleMap zero{RingMap{dom, cod, {X(1) * X(1)}}, m1, DeskModule{cod, 1}, {{Poly::zero()}}};
    const SquareZeroElement image = apply_sz_morphism(zero, {X(1), {C(5)}});
    CHECK(image.base == X(1) * X(1));
    CHECK(image.fiber[0].is_zero());
    morphism_roundtrip_check(zero, 4, 32, report, "zero");

    INFO(report.to_text());
    CHECK(report.pass());
}

TEST_CASE("derivation law") {
    const DeskRing qx(1);
    const DeskModule m{qx, 1};
    const std::vector<DeskModule::Element> d_one = {{C(1)}};

    // d(x^3) = 3 x^2
    CHECK(extend_derivation(m, d_one, X(1).pow(3))[0] == C(3) * X(1) * X(1));

    // the two-variable instance evaluated at (x, x^2) agrees
    const Poly f = X(1) * X(2);
    std::map<Var, Poly> args = {{base_var(1), X(1)}, {base_var(2), X(1) * X(1)}};
    const Poly composed = substitute(f, args); // x^3
    const Poly expected = X(1) * X(1) * C(1) + X(1) * (C(2) * X(1));
    CHECK(extend_derivation(m, d_one, composed)[0] == expected);

    // d = 0 passes everything
    CheckReport rep = derivation_check(m, {{Poly::zero()}}, {X(1).pow(4), X(1) * X(2)}, 8, 17);
    INFO(rep.to_text());
    CHECK(rep.pass());

    // d(x) = 1 reproduces formal differentiation on random polynomials
    Rng rng(555);
    for (int t = 0; t < 30; ++t) {
        const Poly p = rng.poly({base_var(1)}, 5, 5);
        CHECK(extend_derivation(m, d_one, p)[0] == partial(p, base_var(1)));
    }

    CheckReport rep2 = derivation_check(m, d_one, {X(1).pow(3), X(1) * X(2)}, 8, 18);
    INFO(rep2.to_text());
    CHECK(rep2.pass());

    // an inconsistent derivation on a quotient ring is reported
    const DeskRing trunc(1, {X(1) * X(1)});
    CheckReport rep3 = derivation_check(DeskModule{trunc, 1}, d_one, {X(1) * X(2)}, 8, 19);
    CHECK_FALSE(rep3.pass());
}

TEST_CASE("levelwise module instances") {
    // constant instance
    LevelwiseModule constant;
    const DeskRing ring(1);
    for (int d = 0; d <= 2; ++d)
        constant.levels.push_back(DeskModule{ring, 1});
    constant.ring_map = [ring](const DeltaMap&) { return RingMap{ring, ring, {X(1)}}; };
    constant.module_map = [ring](const DeltaMap&) {
        DeskModule m{ring, 1};
        return ModuleMap{RingMap{ring, ring, {X(1)}}, m, m, {m.basis(0)}};
    };
    CheckReport rep = levelwise_module_check(constant, 10, 41);
    INFO(rep.to_text());
    CHECK(rep.pass());

    // the simplicial levels acting on themselves
    CheckReport rep2 = levelwise_module_check(inf_levelwise_module(2), 10, 42);
    INFO(rep2.to_text());
    CHECK(rep2.pass());

    // corrupted structure map must be flagged
    LevelwiseModule corrupted = inf_levelwise_module(2);
    auto good = corrupted.module_map;
    corrupted.module_map = [good](const DeltaMap& theta) {
        ModuleMap m = good(theta);
        if (theta == coface(0, 1))
            m.basis_images[0][0] += X(1);
        return m;
    };
    CheckReport rep3 = levelwise_module_check(corrupted, 10, 43);
    CHECK_FALSE(rep3.pass());
}

TEST_CASE("assembled module harness") {
    const CheckReport rep = check_modules(16, 2026);
    INFO(rep.to_text());
    CHECK(rep.pass());
}
