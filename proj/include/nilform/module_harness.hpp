#pragma once

#include "nilform/tangent_checks.hpp"

namespace nilform {

// The level algebras of the n = 1 simplicial locus as presented rings:
// generators z_1 = x_1, z_{1+i} = y_{i,1}; every product of two
// differences vanishes, so the relations are monomial rules.
inline DeskRing inf_level_ring(int level) {
    std::vector<Poly> relations;
    for (int i = 1; i <= level; ++i)
        for (int j = i; j <= level; ++j)
            relations.push_back(Poly::var(base_var(1 + i)) * Poly::var(base_var(1 + j)));
    return DeskRing(level + 1, std::move(relations));
}

inline Poly inf_level_decode(const Poly& p) { // presentation vars -> difference vars
    std::map<Var, Var> images;
    for (const Var& v : p.variables())
        if (v.col > 1)
            images.emplace(v, inf_var(v.col - 1, 1));
    return relabel(p, images);
}

inline Poly inf_level_encode(const Poly& p) { // difference vars -> presentation vars
    std::map<Var, Var> images;
    for (const Var& v : p.variables())
        if (v.kind == VarKind::Inf)
            images.emplace(v, base_var(1 + v.row));
    return relabel(p, images);
}

// The simplicial levels of the locus for n = 1, acting on themselves as
// rank-one modules, with the geometric simplicial action as both layers.
inline LevelwiseModule inf_levelwise_module(int level_max) {
    LevelwiseModule L;
    for (int d = 0; d <= level_max; ++d)
        L.levels.push_back(DeskModule{inf_level_ring(d), 1});
    auto ring_map = [](const DeltaMap& theta) {
        DeskRing dom = inf_level_ring(theta.source());
        DeskRing cod = inf_level_ring(theta.target);
        std::vector<Poly> images;
        for (int i = 1; i <= dom.generator_count(); ++i) {
            const InfElement e = normal_form(inf_level_decode(dom.generator(i)), 1, theta.source());
            images.push_back(cod.normalize(inf_level_encode(inf_map(theta, e).representative())));
        }
        return RingMap{std::move(dom), std::move(cod), std::move(images)};
    };
    L.ring_map = ring_map;
    L.module_map = [ring_map](const DeltaMap& theta) {
        RingMap f = ring_map(theta);
        DeskModule dom{f.dom, 1};
        DeskModule cod{f.cod, 1};
        std::vector<DeskModule::Element> basis = {cod.basis(0)};
        return ModuleMap{std::move(f), std::move(dom), std::move(cod), std::move(basis)};
    };
    return L;
}

namespace detail {

inline RationalMatrix random_invertible_matrix(Rng& rng, int r) {
    RationalMatrix a = identity_matrix(r);
    for (int step = 0; step < 2 * r; ++step) {
        const int i = rng.uniform(0, r - 1);
        const int j = rng.uniform(0, r - 1);
        if (i == j) {
            const Rational scale = rng.nonzero_rational(3, 2);
            for (int t = 0; t < r; ++t)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *= scale;
        } else {
            const Rational lambda = rng.rational(2, 2);
            for (int t = 0; t < r; ++t)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] +=
                    lambda * a[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
        }
    }
    return a;
}

} // namespace detail

// The assembled module suite: the closed-formula action and its chain
// rule, the square-zero ring law, object and morphism roundtrips of the
// module/tangent equivalence (with relabeled descriptors), the derivation
// law against formal differentiation, and the levelwise instances.
inline CheckReport check_modules(int trials, std::uint64_t seed) {
    CheckReport report;
    report.command = "check modules";
    report.seed = seed;
    report.trials = trials;

    const DeskRing qx(1);
    const SquareZeroExtension ext(qx, 1);
    const std::vector<Var> x = {base_var(1)};
    const std::vector<Var> two = {base_var(1), base_var(2)};

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::string tag = " [trial " + std::to_string(t) + "]";

        auto rand_sz = [&] {
            return ext.element(rng.poly(x, 2, 3), {rng.poly(x, 2, 3)});
        };

        // chain rule of the closed formula: f(h_1, h_2) applied directly
        // equals f applied to the applied h_i
        const Poly f = rng.poly(two, 2, 4);
        const Poly h1 = rng.poly(two, 2, 3);
        const Poly h2 = rng.poly(two, 2, 3);
        const SquareZeroElement a1 = rand_sz(), a2 = rand_sz();
        std::map<Var, Poly> inner = {{base_var(1), h1}, {base_var(2), h2}};
        Poly composite = substitute(f, inner);
        const SquareZeroElement direct = ext.apply(composite, {a1, a2});
        const SquareZeroElement nested =
            ext.apply(f, {ext.apply(h1, {a1, a2}), ext.apply(h2, {a1, a2})});
        report.record(direct == nested, "closed-formula chain rule" + tag, to_string(direct),
                      to_string(nested));

        // the closed formula restricted to the ring operations is the
        // square-zero arithmetic
        const SquareZeroElement g = rand_sz(), h = rand_sz();
        const SquareZeroElement via_formula =
            ext.apply(Poly::var(base_var(1)) * Poly::var(base_var(2)), {g, h});
        const SquareZeroElement via_law = ext.mul(g, h);
        report.record(via_formula == via_law, "Eq-action matches the product law" + tag,
                      to_string(via_formula), to_string(via_law));
        const SquareZeroElement sum_formula =
            ext.apply(Poly::var(base_var(1)) + Poly::var(base_var(2)), {g, h});
        const SquareZeroElement sum_law = ext.add(g, h);
        report.record(sum_formula == sum_law, "Eq-action matches the sum law" + tag,
                      to_string(sum_formula), to_string(sum_law));

        // derivation d(x) = 1 reproduces formal differentiation
        const DeskModule m_qx{qx, 1};
        const Poly p = rng.poly(x, 4, 4);
        const auto dp = extend_derivation(m_qx, {{Poly::constant(Rational(1))}}, p);
        report.record(dp[0] == partial(p, base_var(1)), "d(x)=1 gives formal differentiation" + tag,
                      to_string(dp[0]), to_string(partial(p, base_var(1))));
    }

    // object roundtrips on random rings, ranks, and relabelings
    const int obj_trials = std::max(1, trials / 2);
    for (int t = 0; t < obj_trials; ++t) {
        Rng rng(derive_seed(seed ^ 0xabcdef12u, static_cast<std::uint64_t>(t)));
        const int gens = rng.uniform(1, 2);
        const int rank = rng.uniform(1, 3);
        const DeskRing ring(gens);
        const TangentDescriptor canonical = F_mod_to_tangent(ring, rank);
        descriptor_axioms_check(canonical, 1, derive_seed(seed, 1000 + static_cast<std::uint64_t>(t)),
                                report, "canonical t" + std::to_string(t));
        tangent_roundtrip_check(canonical, 1, derive_seed(seed, 2000 + static_cast<std::uint64_t>(t)),
                                report, "canonical t" + std::to_string(t));

        std::vector<DeskModule::Element> shift;
        DeskModule mod{ring, rank};
        std::vector<Var> rvars;
        for (int i = 1; i <= gens; ++i)
            rvars.push_back(base_var(i));
        for (int i = 0; i < gens; ++i) {
            DeskModule::Element s = mod.zero();
            for (Poly& c : s)
                c = rng.poly(rvars, 1, 2);
            shift.push_back(std::move(s));
        }
        const TangentDescriptor relabeled(ring, rank,
                                          detail::random_invertible_matrix(rng, rank), shift);
        descriptor_axioms_check(relabeled, 1, derive_seed(seed, 3000 + static_cast<std::uint64_t>(t)),
                                report, "relabeled t" + std::to_string(t));
        tangent_roundtrip_check(relabeled, 1, derive_seed(seed, 4000 + static_cast<std::uint64_t>(t)),
                                report, "relabeled t" + std::to_string(t));
    }

    // morphism roundtrips on random f-linear maps
    for (int t = 0; t < obj_trials; ++t) {
        Rng rng(derive_seed(seed ^ 0x13579bdfu, static_cast<std::uint64_t>(t)));
        const DeskRing dom(rng.uniform(1, 2));
        const DeskRing cod(rng.uniform(1, 2));
        std::vector<Var> cvars;
        for (int i = 1; i <= cod.generator_count(); ++i)
            cvars.push_back(base_var(i));
        std::vector<Poly> images;
        for (int i = 0; i < dom.generator_count(); ++i)
            images.push_back(rng.poly(cvars, 2, 3));
        RingMap f{dom, cod, std::move(images)};
        DeskModule dmod{dom, rng.uniform(1, 2)};
        DeskModule cmod{cod, rng.uniform(1, 2)};
        std::vector<DeskModule::Element> basis_images;
        for (int u = 0; u < dmod.rank; ++u) {
            DeskModule::Element e = cmod.zero();
            for (Poly& c : e)
                c = rng.poly(cvars, 2, 3);
            basis_images.push_back(std::move(e));
        }
        morphism_roundtrip_check(ModuleMap{f, dmod, cmod, std::move(basis_images)}, 2,
                                 derive_seed(seed, 5000 + static_cast<std::uint64_t>(t)), report,
                                 "morphism t" + std::to_string(t));
    }

    // derivation suite on a pinned test set
    {
        const DeskModule m_qx{qx, 1};
        std::vector<Poly> tests = {
            Poly::var(base_var(1)).pow(3),
            Poly::var(base_var(1)) * Poly::var(base_var(2)),
            Poly::var(base_var(1)).pow(2) + Poly::constant(Rational(2)) * Poly::var(base_var(2)),
        };
        CheckReport inner = derivation_check(m_qx, {{Poly::constant(Rational(1))}}, tests,
                                             std::max(4, trials / 8), derive_seed(seed, 60000));
        for (const auto& fcase : inner.failures)
            report.failures.push_back(fcase);
    }

    // levelwise instances: a constant one, the simplicial levels, and a
    // deliberately corrupted map that the check must flag
    {
        LevelwiseModule constant;
        const DeskRing ring(1);
        for (int d = 0; d <= 2; ++d)
            constant.levels.push_back(DeskModule{ring, 1});
        constant.ring_map = [ring](const DeltaMap&) {
            return RingMap{ring, ring, {Poly::var(base_var(1))}};
        };
        constant.module_map = [ring](const DeltaMap&) {
            DeskModule m{ring, 1};
            return ModuleMap{RingMap{ring, ring, {Poly::var(base_var(1))}}, m, m, {m.basis(0)}};
        };
        CheckReport inner = levelwise_module_check(constant, std::max(4, trials / 8),
                                                   derive_seed(seed, 70000));
        for (const auto& fcase : inner.failures)
            report.failures.push_back(fcase);

        CheckReport inf_inner = levelwise_module_check(inf_levelwise_module(2),
                                                       std::max(4, trials / 8),
                                                       derive_seed(seed, 80000));
        for (const auto& fcase : inf_inner.failures)
            report.failures.push_back(fcase);

        LevelwiseModule corrupted = inf_levelwise_module(2);
        auto good_map = corrupted.module_map;
        corrupted.module_map = [good_map](const DeltaMap& theta) {
            ModuleMap m = good_map(theta);
            if (theta == coface(0, 1)) // sabotage one structure map
                m.basis_images[0][0] += Poly::var(base_var(1));
            return m;
        };
        CheckReport corrupted_report = levelwise_module_check(corrupted, std::max(8, trials / 4),
                                                              derive_seed(seed, 90000));
        report.record(!corrupted_report.pass(), "corrupted structure map is detected",
                      corrupted_report.pass() ? "undetected" : "detected", "detected");
    }

    return report;
}

} // namespace nilform
