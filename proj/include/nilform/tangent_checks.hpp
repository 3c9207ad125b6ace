#pragma once

#include "nilform/cosimplicial.hpp"
#include "nilform/random_gen.hpp"
#include "nilform/report.hpp"
#include "nilform/tangent_category.hpp"

namespace nilform {

// Dubuc-Kock derivation law on a test set: additivity, the Leibniz
// instance, and the chain rule d(f(r_1..r_j)) = sum_i (df/dw_i)(r) d(r_i),
// all through the generator-value extension.
inline CheckReport derivation_check(const DeskModule& mod,
                                    const std::vector<DeskModule::Element>& gen_values,
                                    const std::vector<Poly>& test_polys, int trials,
                                    std::uint64_t seed) {
    CheckReport report;
    report.command = "check derivation";
    report.seed = seed;
    report.trials = trials;

    const DeskRing& ring = mod.ring;
    auto d = [&](const Poly& p) { return extend_derivation(mod, gen_values, ring.normalize(p)); };
    auto fmt = [&](const DeskModule::Element& e) {
        std::string s = "[";
        for (std::size_t i = 0; i < e.size(); ++i)
            s += (i ? ", " : "") + to_string(e[i]);
        return s + "]";
    };

    std::vector<Var> gens;
    for (int i = 1; i <= ring.generator_count(); ++i)
        gens.push_back(base_var(i));

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::string tag = " [trial " + std::to_string(t) + "]";
        const Poly p = ring.normalize(rng.poly(gens, 3));
        const Poly q = ring.normalize(rng.poly(gens, 3));

        const auto additive_l = d(p + q);
        const auto additive_r = mod.add(d(p), d(q));
        report.record(additive_l == additive_r, "additivity" + tag, fmt(additive_l), fmt(additive_r));

        const auto leibniz_l = d(ring.normalize(p * q));
        const auto leibniz_r = mod.add(mod.scale(p, d(q)), mod.scale(q, d(p)));
        report.record(leibniz_l == leibniz_r, "Leibniz" + tag, fmt(leibniz_l), fmt(leibniz_r));
    }

    int case_idx = 0;
    for (const Poly& f : test_polys) {
        Rng rng(derive_seed(seed ^ 0x5bd1e995u, static_cast<std::uint64_t>(case_idx)));
        int arity = 0;
        for (const Var& v : f.variables())
            arity = std::max(arity, v.col);
        std::vector<Poly> args;
        std::map<Var, Poly> sigma;
        for (int i = 1; i <= arity; ++i) {
            args.push_back(ring.normalize(rng.poly(gens, 2)));
            sigma.emplace(base_var(i), args.back());
        }
        const Poly composite = ring.normalize(arity ? substitute(f, sigma) : f);
        auto chain_l = d(composite);
        auto chain_r = mod.zero();
        for (int i = 1; i <= arity; ++i) {
            Poly df = partial(f, base_var(i));
            if (df.is_zero())
                continue;
            const Poly df_at = ring.normalize(substitute(df, sigma));
            chain_r = mod.add(chain_r, mod.scale(df_at, d(args[static_cast<std::size_t>(i - 1)])));
        }
        report.record(chain_l == chain_r, "chain rule case " + std::to_string(case_idx),
                      fmt(chain_l), fmt(chain_r));
        ++case_idx;
    }
    return report;
}

namespace detail {

inline SquareZeroElement random_carrier_element(Rng& rng, const TangentDescriptor& desc,
                                                const std::vector<Var>& gens, int deg = 2) {
    DeskModule::Element fiber = desc.module().zero();
    for (Poly& c : fiber)
        c = rng.poly(gens, deg, 3);
    return desc.to_carrier(SquareZeroElement{rng.poly(gens, deg, 3), std::move(fiber)});
}

} // namespace detail

// Abelian-group-object axioms for a descriptor: the projection and unit
// compose to the identity, the unit is a ring map, and the structure maps
// (fiberwise addition, negation) are ring maps over the base. All verified
// on random elements, exactly.
inline void descriptor_axioms_check(const TangentDescriptor& desc, int trials,
                                    std::uint64_t seed, CheckReport& report,
                                    const std::string& label) {
    std::vector<Var> gens;
    for (int i = 1; i <= desc.ring().generator_count(); ++i)
        gens.push_back(base_var(i));

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::string tag = " [" + label + " trial " + std::to_string(t) + "]";

        const Poly r = desc.ring().normalize(rng.poly(gens, 2, 3));
        const Poly s = desc.ring().normalize(rng.poly(gens, 2, 3));
        report.record(desc.project(desc.unit(r)) == r, "a(eta(r)) = r" + tag,
                      to_string(desc.project(desc.unit(r))), to_string(r));

        const SquareZeroElement eta_mul = desc.unit(desc.ring().normalize(r * s));
        const SquareZeroElement mul_eta = desc.mul(desc.unit(r), desc.unit(s));
        report.record(eta_mul == mul_eta, "eta is multiplicative" + tag, to_string(eta_mul),
                      to_string(mul_eta));

        // two random elements over the same base point, plus a third pair
        SquareZeroElement g = detail::random_carrier_element(rng, desc, gens);
        SquareZeroElement h = detail::random_carrier_element(rng, desc, gens);
        SquareZeroElement h_over_g = desc.to_carrier(
            SquareZeroElement{desc.from_carrier(g).base, desc.from_carrier(h).fiber});

        // projection is a ring map
        report.record(desc.project(desc.mul(g, h)) ==
                          desc.ring().normalize(desc.project(g) * desc.project(h)),
                      "a is multiplicative" + tag, to_string(desc.project(desc.mul(g, h))),
                      to_string(desc.ring().normalize(desc.project(g) * desc.project(h))));

        // fiberwise addition is a ring map over the base: check against
        // multiplication of pairs over matching projections
        SquareZeroElement g2 = detail::random_carrier_element(rng, desc, gens);
        SquareZeroElement h2_over_g2 = desc.to_carrier(
            SquareZeroElement{desc.from_carrier(g2).base, desc.from_carrier(h).fiber});
        const SquareZeroElement lhs = desc.add(desc.mul(g, g2), desc.mul(h_over_g, h2_over_g2));
        const SquareZeroElement rhs = desc.mul(desc.add(g, h_over_g), desc.add(g2, h2_over_g2));
        report.record(lhs == rhs, "addition map is a ring map over R" + tag, to_string(lhs),
                      to_string(rhs));

        // negation likewise
        const SquareZeroElement neg_l = desc.group_negate(desc.mul(g, g2));
        const SquareZeroElement neg_r = desc.mul(desc.group_negate(g), desc.group_negate(g2));
        report.record(neg_l == neg_r, "negation map is a ring map over R" + tag, to_string(neg_l),
                      to_string(neg_r));
    }
}

// Object roundtrip: recover the module from the descriptor and verify that
// g -> (a(g), g - eta(a(g))) is a ring isomorphism over R onto the
// square-zero extension of the recovered module, inverse included.
inline void tangent_roundtrip_check(const TangentDescriptor& desc, int trials,
                                    std::uint64_t seed, CheckReport& report,
                                    const std::string& label) {
    const RecoveredModule rec = tangent_to_mod(desc);
    std::vector<Var> gens;
    for (int i = 1; i <= desc.ring().generator_count(); ++i)
        gens.push_back(base_var(i));

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::string tag = " [" + label + " trial " + std::to_string(t) + "]";
        const SquareZeroElement g = detail::random_carrier_element(rng, desc, gens);
        const SquareZeroElement h = detail::random_carrier_element(rng, desc, gens);

        const SquareZeroElement back = rec.phi_inverse(rec.phi(g));
        report.record(back == g, "phi_inverse(phi(g)) = g" + tag, to_string(back), to_string(g));

        // phi is multiplicative into the square-zero law on the kernel module
        const SquareZeroElement pg = rec.phi(g), ph = rec.phi(h);
        SquareZeroElement expected{
            desc.ring().normalize(pg.base * ph.base),
            desc.module().add(rec.act(pg.base, ph.fiber), rec.act(ph.base, pg.fiber))};
        const SquareZeroElement actual = rec.phi(desc.mul(g, h));
        report.record(actual == expected, "phi(g h) = phi(g) phi(h)" + tag, to_string(actual),
                      to_string(expected));

        // the recovered action coincides with the free-module action
        const Poly r = desc.ring().normalize(rng.poly(gens, 2, 3));
        DeskModule::Element kappa = desc.module().zero();
        for (Poly& c : kappa)
            c = desc.ring().normalize(rng.poly(gens, 2, 3));
        const auto lhs = rec.act(r, kappa);
        const auto rhs = desc.module().scale(r, kappa);
        auto fmt = [&](const DeskModule::Element& e) {
            std::string s = "[";
            for (std::size_t i = 0; i < e.size(); ++i)
                s += (i ? ", " : "") + to_string(e[i]);
            return s + "]";
        };
        report.record(lhs == rhs, "recovered action is the module action" + tag, fmt(lhs), fmt(rhs));
    }
}

// Morphism roundtrip of the equivalence: F on a morphism followed by the
// projection recovery is the identity, and the recovery followed by F
// returns the same square-zero morphism.
inline void morphism_roundtrip_check(const ModuleMap& phi, int trials, std::uint64_t seed,
                                     CheckReport& report, const std::string& label) {
    auto sz = [&](const SquareZeroElement& g) { return apply_sz_morphism(phi, g); };
    const ModuleMap recovered = recover_module_map(phi.f, phi.dom, phi.cod, sz);

    bool basis_equal = true;
    for (int u = 0; u < phi.dom.rank; ++u)
        basis_equal = basis_equal && recovered.basis_images[static_cast<std::size_t>(u)] ==
                                         phi.basis_images[static_cast<std::size_t>(u)];
    report.record(basis_equal, "pi . F(f, phi) recovers phi [" + label + "]", "recovered basis images",
                  "original basis images");

    std::vector<Var> gens;
    for (int i = 1; i <= phi.dom.ring.generator_count(); ++i)
        gens.push_back(base_var(i));
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::string tag = " [" + label + " trial " + std::to_string(t) + "]";
        DeskModule::Element fiber = phi.dom.zero();
        for (Poly& c : fiber)
            c = phi.dom.ring.normalize(rng.poly(gens, 2, 3));
        SquareZeroElement g{phi.dom.ring.normalize(rng.poly(gens, 2, 3)), std::move(fiber)};

        const SquareZeroElement via_f = apply_sz_morphism(recovered, g);
        const SquareZeroElement direct = sz(g);
        report.record(via_f == direct, "F(f, pi . F(f, phi)) = F(f, phi)" + tag, to_string(via_f),
                      to_string(direct));

        // f-linearity of the module layer
        const Poly r = phi.dom.ring.normalize(rng.poly(gens, 2, 3));
        const auto lin_l = phi.apply(phi.dom.scale(r, g.fiber));
        const auto lin_r = phi.cod.scale(phi.f.apply(r), phi.apply(g.fiber));
        auto fmt = [&](const DeskModule::Element& e) {
            std::string s = "[";
            for (std::size_t i = 0; i < e.size(); ++i)
                s += (i ? ", " : "") + to_string(e[i]);
            return s + "]";
        };
        report.record(lin_l == lin_r, "phi is f-linear" + tag, fmt(lin_l), fmt(lin_r));
    }
}

// Levelwise (co)simplicial module: per-level ring and module with a
// structure map for every simplex-category arrow in range.
struct LevelwiseModule {
    std::vector<DeskModule> levels;
    std::function<RingMap(const DeltaMap&)> ring_map;
    std::function<ModuleMap(const DeltaMap&)> module_map;

    int level_max() const { return static_cast<int>(levels.size()) - 1; }
};

// Functoriality of both layers, f-linearity of every structure map, and
// compatibility of the levelwise square-zero extensions: each F(f, phi)
// is multiplicative. Reported per violated square.
inline CheckReport levelwise_module_check(const LevelwiseModule& L, int trials,
                                          std::uint64_t seed) {
    CheckReport report;
    report.command = "check levelwise-module";
    report.seed = seed;
    report.trials = trials;
    const int lmax = L.level_max();
    report.params = {{"levels", lmax + 1}};

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::string tag = " [trial " + std::to_string(t) + "]";
        const int a = rng.uniform(0, lmax);
        const int b = rng.uniform(0, lmax);
        const int c = rng.uniform(0, lmax);
        const DeltaMap theta = rng.delta_map(a, b);
        const DeltaMap theta2 = rng.delta_map(b, c);
        const DeltaMap composite = delta_compose(theta, theta2);
        const std::string square = to_string(theta) + " ; " + to_string(theta2);

        const DeskModule& dom = L.levels[static_cast<std::size_t>(a)];
        std::vector<Var> gens;
        for (int i = 1; i <= dom.ring.generator_count(); ++i)
            gens.push_back(base_var(i));
        const Poly r = dom.ring.normalize(rng.poly(gens, 2, 3));

        // ring layer functoriality
        const RingMap f1 = L.ring_map(theta), f2 = L.ring_map(theta2),
                      f12 = L.ring_map(composite);
        const Poly two_step = f2.apply(f1.apply(r));
        const Poly one_step = f12.apply(r);
        report.record(one_step == two_step, "ring functoriality " + square + tag,
                      to_string(one_step), to_string(two_step));

        // identity action
        const RingMap fid = L.ring_map(delta_identity(a));
        report.record(fid.apply(r) == r, "ring identity action" + tag, to_string(fid.apply(r)),
                      to_string(r));

        // module layer functoriality and f-linearity
        const ModuleMap p1 = L.module_map(theta), p2 = L.module_map(theta2),
                        p12 = L.module_map(composite);
        DeskModule::Element mel = dom.zero();
        for (Poly& cc : mel)
            cc = dom.ring.normalize(rng.poly(gens, 2, 3));
        const auto m_two = p2.apply(p1.apply(mel));
        const auto m_one = p12.apply(mel);
        auto fmt = [&](const DeskModule::Element& e) {
            std::string s = "[";
            for (std::size_t i = 0; i < e.size(); ++i)
                s += (i ? ", " : "") + to_string(e[i]);
            return s + "]";
        };
        report.record(m_one == m_two, "module functoriality " + square + tag, fmt(m_one),
                      fmt(m_two));

        const auto lin_l = p1.apply(dom.scale(r, mel));
        const auto lin_r = p1.cod.scale(f1.apply(r), p1.apply(mel));
        report.record(lin_l == lin_r, "module map f-linearity " + to_string(theta) + tag,
                      fmt(lin_l), fmt(lin_r));

        // compatibility: the induced square-zero morphism is multiplicative
        DeskModule::Element fib2 = dom.zero();
        for (Poly& cc : fib2)
            cc = dom.ring.normalize(rng.poly(gens, 2, 3));
        SquareZeroExtension ext(dom.ring, dom.rank);
        const SquareZeroElement g{r, mel};
        const SquareZeroElement h{dom.ring.normalize(rng.poly(gens, 2, 3)), fib2};
        SquareZeroExtension ext_cod(p1.cod.ring, p1.cod.rank);
        const SquareZeroElement sz_l = apply_sz_morphism(p1, ext.mul(g, h));
        const SquareZeroElement sz_r = ext_cod.mul(apply_sz_morphism(p1, g),
                                                   apply_sz_morphism(p1, h));
        report.record(sz_l == sz_r, "square-zero compatibility " + to_string(theta) + tag,
                      to_string(sz_l), to_string(sz_r));
    }

    // systematic sweep over composable pairs of elementary maps, so every
    // stored structure map sits in at least one verified square
    auto elementary_from = [&](int a) {
        std::vector<DeltaMap> out;
        if (a + 1 <= lmax)
            for (int i = 0; i <= a + 1; ++i)
                out.push_back(coface(i, a));
        if (a >= 1)
            for (int i = 0; i <= a - 1; ++i)
                out.push_back(codegeneracy(i, a));
        return out;
    };
    auto fmt2 = [&](const DeskModule::Element& e) {
        std::string s = "[";
        for (std::size_t i = 0; i < e.size(); ++i)
            s += (i ? ", " : "") + to_string(e[i]);
        return s + "]";
    };
    for (int a = 0; a <= lmax; ++a) {
        const DeskModule& dom = L.levels[static_cast<std::size_t>(a)];
        for (const DeltaMap& theta : elementary_from(a)) {
            const RingMap f1 = L.ring_map(theta);
            report.record(f1.well_defined(), "ring map well-defined " + to_string(theta),
                          "relations not annihilated", "relations -> 0");
            for (const DeltaMap& theta2 : elementary_from(theta.target)) {
                const DeltaMap composite = delta_compose(theta, theta2);
                const std::string square = to_string(theta) + " ; " + to_string(theta2);
                const RingMap f2 = L.ring_map(theta2), f12 = L.ring_map(composite);
                const ModuleMap p1 = L.module_map(theta), p2 = L.module_map(theta2),
                                p12 = L.module_map(composite);
                for (int i = 1; i <= dom.ring.generator_count(); ++i) {
                    const Poly gen = dom.ring.generator(i);
                    report.record(f12.apply(gen) == f2.apply(f1.apply(gen)),
                                  "ring functoriality " + square + " on generator " + std::to_string(i),
                                  to_string(f12.apply(gen)), to_string(f2.apply(f1.apply(gen))));
                }
                for (int u = 0; u < dom.rank; ++u) {
                    const auto one_step = p12.apply(dom.basis(u));
                    const auto two_step = p2.apply(p1.apply(dom.basis(u)));
                    report.record(one_step == two_step,
                                  "module functoriality " + square + " on basis " + std::to_string(u),
                                  fmt2(one_step), fmt2(two_step));
                }
            }
        }
    }
    return report;
}

} // namespace nilform
