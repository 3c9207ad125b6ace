#pragma once

#include <map>

#include "nilform/delta.hpp"
#include "nilform/loci.hpp"
#include "nilform/random_gen.hpp"
#include "nilform/report.hpp"

namespace nilform {

// Functorial action of a simplex-category map on level elements,
// implemented geometrically: pass to vertex coordinates, reindex the
// vertices along theta, come back, reduce. Functoriality holds by
// construction; the per-generator coface formulas are recovered as a
// property at the normalized level.
inline Poly vertex_reindex(const Poly& p, const DeltaMap& theta) {
    std::map<Var, Var> images;
    for (const Var& v : p.variables()) {
        if (v.kind != VarKind::Vertex)
            throw error("vertex_reindex expects vertex variables");
        const int slot = v.row - 1; // 0-based
        if (slot > theta.source())
            throw error("vertex slot beyond the source level");
        images.emplace(v, vertex_var(theta.values[static_cast<std::size_t>(slot)] + 1, v.col));
    }
    return relabel(p, images);
}

inline InfElement inf_map(const DeltaMap& theta, const InfElement& e) {
    if (theta.source() != e.m())
        throw error("inf_map level mismatch: map source " + std::to_string(theta.source()) +
                    " vs element level " + std::to_string(e.m()));
    const Poly vp = from_difference(e.representative(), e.n(), e.m());
    const Poly moved = vertex_reindex(vp, theta);
    return normal_form(to_difference(moved, e.n(), theta.target), e.n(), theta.target);
}

// Raw image of a difference-coordinate polynomial under theta, without
// reduction. Used to test that the simplicial maps preserve the ideal.
inline Poly inf_map_raw(const Poly& p, const DeltaMap& theta, int n) {
    const Poly vp = from_difference(p, n, theta.source());
    return to_difference(vertex_reindex(vp, theta), n, theta.target);
}

// The transported 0-th coface exactly as tabulated on generators: the base
// slot goes to base + first difference, the i-th difference to the
// (i+1)-st. Differs from vertex deletion by first-difference translation
// terms; the two agree after the normalized projection.
inline Poly literal_coface0(const Poly& p, int n, int m) {
    std::map<Var, Poly> sigma;
    for (const Var& v : p.variables()) {
        if (!var_in_context(v, n, m))
            throw error("variable " + to_string(v) + " out of range");
        if (v.kind == VarKind::Base)
            sigma.emplace(v, Poly::var(v) + Poly::var(inf_var(1, v.col)));
        else if (v.kind == VarKind::Inf)
            sigma.emplace(v, Poly::var(inf_var(v.row + 1, v.col)));
        else
            throw error("literal_coface0 expects base/difference variables");
    }
    return substitute(p, sigma);
}

// Random verification of the cosimplicial axioms at levels <= m_max:
// identity action, functoriality over composable pairs, the ring
// homomorphism law per level, and preservation of the level ideals by
// every coface and codegeneracy.
inline CheckReport check_cosimplicial_identities(int n, int m_max, int deg, int trials,
                                                 std::uint64_t seed) {
    CheckReport report;
    report.command = "check cosimplicial";
    report.params = {{"n", n}, {"m", m_max}, {"deg", deg}};
    report.seed = seed;
    report.trials = trials;

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::string tag = " [trial " + std::to_string(t) + "]";
        const int m0 = rng.uniform(0, m_max);
        const int m1 = rng.uniform(0, m_max);
        const int m2 = rng.uniform(0, m_max);
        const DeltaMap theta = rng.delta_map(m0, m1);
        const DeltaMap theta2 = rng.delta_map(m1, m2);
        const InfElement e = rng.inf_element(n, m0, deg);

        const InfElement lhs = inf_map(delta_compose(theta, theta2), e);
        const InfElement rhs = inf_map(theta2, inf_map(theta, e));
        report.record(lhs == rhs, "functoriality " + to_string(theta) + " ; " + to_string(theta2) + tag,
                      to_string(lhs), to_string(rhs));

        const InfElement id_e = inf_map(delta_identity(m0), e);
        report.record(id_e == e, "identity action" + tag, to_string(id_e), to_string(e));

        const InfElement b = rng.inf_element(n, m0, deg);
        const InfElement prod_map = inf_map(theta, e * b);
        const InfElement map_prod = inf_map(theta, e) * inf_map(theta, b);
        report.record(prod_map == map_prod, "ring homomorphism " + to_string(theta) + tag,
                      to_string(prod_map), to_string(map_prod));
    }

    // ideal preservation for the elementary maps
    for (int m = 0; m <= m_max; ++m) {
        const auto pres = generators(LocusKind::Rbracket, Coords::Difference, n, m);
        std::vector<DeltaMap> maps;
        for (int i = 0; i <= m + 1; ++i)
            maps.push_back(coface(i, m));
        for (int i = 0; i + 1 <= m; ++i)
            maps.push_back(codegeneracy(i, m));
        for (const DeltaMap& theta : maps) {
            const auto target = generators(LocusKind::Rbracket, Coords::Difference, n, theta.target);
            for (std::size_t k = 0; k < pres.generators.size(); ++k) {
                const Poly image = inf_map_raw(pres.generators[k], theta, n);
                const auto verdict = ideal_member(image, target, std::max(2, image.degree()));
                report.record(verdict.member,
                              "ideal preservation " + to_string(theta) + " generator #" + std::to_string(k),
                              to_string(image), "member of level-" + std::to_string(theta.target) + " ideal");
            }
        }
    }
    return report;
}

} // namespace nilform
