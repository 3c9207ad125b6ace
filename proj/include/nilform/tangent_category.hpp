#pragma once

#include <functional>
#include <vector>

#include "nilform/tangent.hpp"

namespace nilform {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix identity_matrix(int r) {
    RationalMatrix a(static_cast<std::size_t>(r),
                     std::vector<Rational>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return a;
}

inline RationalMatrix invert_matrix(RationalMatrix a) {
    const int r = static_cast<int>(a.size());
    RationalMatrix inv = identity_matrix(r);
    for (int col = 0; col < r; ++col) {
        int pivot = -1;
        for (int row = col; row < r; ++row)
            if (a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw error("fiber relabeling matrix is singular");
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
        std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        const Rational d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < r; ++j) {
            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= d;
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= d;
        }
        for (int row = 0; row < r; ++row) {
            if (row == col)
                continue;
            const Rational f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0)
                continue;
            for (int j = 0; j < r; ++j) {
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                inv[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
    }
    return inv;
}

// Abelian group object over a ring, presented as square-zero-shaped data
// up to a relabeling of the carrier: an invertible fiber automorphism A
// and a derivation-valued shift D, the element (r, m) being stored as
// (r, A m + D(r)). Only the public maps (projection, unit, addition,
// negation, multiplication) are exposed to consumers.
class TangentDescriptor {
public:
    TangentDescriptor(DeskRing ring, int rank)
        : ext_(std::move(ring), rank), fiber_auto_(identity_matrix(rank)),
          fiber_auto_inv_(identity_matrix(rank)),
          shift_(static_cast<std::size_t>(ext_.ring().generator_count()),
                 ext_.module().zero()) {}

    TangentDescriptor(DeskRing ring, int rank, RationalMatrix fiber_auto,
                      std::vector<DeskModule::Element> derivation_shift)
        : ext_(std::move(ring), rank), fiber_auto_(std::move(fiber_auto)),
          fiber_auto_inv_(invert_matrix(fiber_auto_)), shift_(std::move(derivation_shift)) {
        if (static_cast<int>(fiber_auto_.size()) != rank)
            throw error("fiber automorphism must be rank x rank");
        if (static_cast<int>(shift_.size()) != ext_.ring().generator_count())
            throw error("derivation shift must cover every generator");
    }

    const DeskRing& ring() const { return ext_.ring(); }
    const DeskModule& module() const { return ext_.module(); }
    int rank() const { return ext_.module().rank; }

    SquareZeroElement to_carrier(const SquareZeroElement& g) const { // the relabeling
        return ext_.element(g.base, matvec(fiber_auto_, g.fiber, shift_value(g.base)));
    }

    SquareZeroElement from_carrier(const SquareZeroElement& g) const {
        DeskModule::Element unshifted =
            ext_.module().add(g.fiber, ext_.module().negate(shift_value(g.base)));
        return ext_.element(g.base, matvec(fiber_auto_inv_, unshifted, ext_.module().zero()));
    }

    Poly project(const SquareZeroElement& g) const { return g.base; } // a

    SquareZeroElement unit(const Poly& r) const { // eta, a ring section of a
        return to_carrier(ext_.unit(r));
    }

    SquareZeroElement add(const SquareZeroElement& g, const SquareZeroElement& h) const {
        if (ring().normalize(g.base - h.base) != Poly::zero())
            throw error("group addition needs equal projections");
        // the relabeling is affine over a fixed base, so fiberwise addition
        // must subtract one copy of the shared shift
        DeskModule::Element sum = ext_.module().add(g.fiber, h.fiber);
        sum = ext_.module().add(sum, ext_.module().negate(shift_value(g.base)));
        return ext_.element(g.base, std::move(sum));
    }

    SquareZeroElement group_negate(const SquareZeroElement& g) const {
        return to_carrier(SquareZeroElement{g.base,
                                            ext_.module().negate(from_carrier(g).fiber)});
    }

    SquareZeroElement ring_add(const SquareZeroElement& g, const SquareZeroElement& h) const {
        return to_carrier(ext_.add(from_carrier(g), from_carrier(h)));
    }

    SquareZeroElement ring_sub(const SquareZeroElement& g, const SquareZeroElement& h) const {
        return to_carrier(ext_.sub(from_carrier(g), from_carrier(h)));
    }

    SquareZeroElement mul(const SquareZeroElement& g, const SquareZeroElement& h) const {
        return to_carrier(ext_.mul(from_carrier(g), from_carrier(h)));
    }

    SquareZeroElement one() const { return unit(Poly::constant(Rational(1))); }

    bool is_canonical() const {
        if (fiber_auto_ != identity_matrix(rank()))
            return false;
        for (const auto& s : shift_)
            for (const Poly& c : s)
                if (!c.is_zero())
                    return false;
        return true;
    }

private:
    DeskModule::Element shift_value(const Poly& r) const {
        return extend_derivation(ext_.module(), shift_, r);
    }

    DeskModule::Element matvec(const RationalMatrix& a, const DeskModule::Element& m,
                               DeskModule::Element offset) const {
        for (int t = 0; t < rank(); ++t) {
            Poly acc;
            for (int u = 0; u < rank(); ++u)
                acc += a[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] *
                       m[static_cast<std::size_t>(u)];
            offset[static_cast<std::size_t>(t)] += acc;
        }
        return ext_.module().normalize(std::move(offset));
    }

    SquareZeroExtension ext_;
    RationalMatrix fiber_auto_;
    RationalMatrix fiber_auto_inv_;
    std::vector<DeskModule::Element> shift_; // derivation values on the generators
};

// F on objects: a module gives the square-zero group object over its ring.
inline TangentDescriptor F_mod_to_tangent(const DeskRing& ring, int rank) {
    return TangentDescriptor(ring, rank);
}

// The inverse on objects: recover the ring, the kernel of the projection
// as a module, and the isomorphism g -> (a(g), g - eta(a(g))).
struct RecoveredModule {
    TangentDescriptor descriptor;

    const DeskRing& ring() const { return descriptor.ring(); }
    int rank() const { return descriptor.rank(); }

    // phi(g): base a(g), fiber the kernel part g - eta(a(g))
    SquareZeroElement phi(const SquareZeroElement& g) const {
        const Poly r = descriptor.project(g);
        SquareZeroElement kernel_part = descriptor.ring_sub(g, descriptor.unit(r));
        return SquareZeroElement{r, kernel_part.fiber};
    }

    // phi^{-1}(r, kappa) = eta(r) + iota(kappa), ring addition in the carrier
    SquareZeroElement phi_inverse(const SquareZeroElement& p) const {
        SquareZeroElement iota{Poly::zero(), p.fiber};
        return descriptor.ring_add(descriptor.unit(p.base), iota);
    }

    // the R-action on ker(a): r . kappa = eta(r) * iota(kappa)
    DeskModule::Element act(const Poly& r, const DeskModule::Element& kappa) const {
        SquareZeroElement iota{Poly::zero(), kappa};
        return descriptor.mul(descriptor.unit(r), iota).fiber;
    }
};

inline RecoveredModule tangent_to_mod(const TangentDescriptor& descriptor) {
    return RecoveredModule{descriptor};
}

// Ring homomorphism between presented rings, by generator images.
struct RingMap {
    DeskRing dom;
    DeskRing cod;
    std::vector<Poly> images;

    Poly apply(const Poly& p) const {
        std::map<Var, Poly> sigma;
        for (const Var& v : p.variables()) {
            if (v.kind != VarKind::Base || v.col > dom.generator_count())
                throw error("ring map applied outside its domain presentation");
            sigma.emplace(v, images[static_cast<std::size_t>(v.col - 1)]);
        }
        return cod.normalize(substitute(p, sigma));
    }

    bool well_defined() const {
        for (const Poly& r : dom.relations())
            if (!apply(r).is_zero())
                return false;
        return true;
    }
};

// f-linear map between free modules, by basis images.
struct ModuleMap {
    RingMap f;
    DeskModule dom;
    DeskModule cod;
    std::vector<DeskModule::Element> basis_images;

    DeskModule::Element apply(const DeskModule::Element& m) const {
        DeskModule::Element out = cod.zero();
        for (int u = 0; u < dom.rank; ++u)
            out = cod.add(out, cod.scale(f.apply(m[static_cast<std::size_t>(u)]),
                                         basis_images[static_cast<std::size_t>(u)]));
        return out;
    }
};

// F on morphisms: (f, phi) becomes r (+) m -> f(r) (+) phi(m).
inline SquareZeroElement apply_sz_morphism(const ModuleMap& phi, const SquareZeroElement& g) {
    return SquareZeroElement{phi.f.apply(g.base), phi.apply(g.fiber)};
}

// Recover the module map from the square-zero morphism: project the fiber
// of the image of 0 (+) e_u for every basis vector.
inline ModuleMap recover_module_map(
    const RingMap& f, const DeskModule& dom, const DeskModule& cod,
    const std::function<SquareZeroElement(const SquareZeroElement&)>& sz_morphism) {
    ModuleMap out{f, dom, cod, {}};
    for (int u = 0; u < dom.rank; ++u) {
        SquareZeroElement g{Poly::zero(), dom.basis(u)};
        out.basis_images.push_back(sz_morphism(g).fiber);
    }
    return out;
}

} // namespace nilform
