#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nilform/delta.hpp"
#include "nilform/polynomial.hpp"
#include "nilform/random_gen.hpp"
#include "nilform/report.hpp"

namespace nilform {

// Finitely presented commutative ring over Q: generators z_1..z_k (the
// Base variables), relations restricted to the monomial/binomial rewriting
// class so elements have canonical normal forms. A relation is a monomial
// (rewrites to zero) or a binomial (the larger monomial rewrites to a
// multiple of the smaller); rewriting strictly decreases the graded order
// and terminates.
class DeskRing {
public:
    explicit DeskRing(int num_generators, std::vector<Poly> relations = {})
        : num_generators_(num_generators) {
        if (num_generators < 1)
            throw error("ring needs at least one generator");
        for (Poly& r : relations) {
            if (r.is_zero())
                continue;
            r = primitive_part(r);
            for (const Var& v : r.variables())
                if (v.kind != VarKind::Base || v.col > num_generators)
                    throw error("relation uses a variable outside the presentation");
            const auto& terms = r.terms();
            if (terms.size() > 2)
                throw error("relation outside the monomial/binomial rewriting class");
            // orient by (degree, exponent lex): the larger side rewrites to
            // the smaller, so every rewrite strictly descends and terminates
            auto lhs = terms.begin();
            for (auto it = terms.begin(); it != terms.end(); ++it) {
                if (it->first.degree() > lhs->first.degree())
                    lhs = it;
                else if (it->first.degree() == lhs->first.degree() &&
                         exponent_lex_less(lhs->first, it->first))
                    lhs = it;
            }
            Rule rule;
            rule.lhs = lhs->first;
            for (auto it = terms.begin(); it != terms.end(); ++it)
                if (it != lhs)
                    rule.rhs += Poly::term(it->first, -it->second / lhs->second);
            rules_.push_back(std::move(rule));
            relations_.push_back(r);
        }
    }

    int generator_count() const { return num_generators_; }
    const std::vector<Poly>& relations() const { return relations_; }

    Poly generator(int i) const {
        if (i < 1 || i > num_generators_)
            throw error("generator index out of range");
        return Poly::var(base_var(i));
    }

    // Fixpoint rewriting; canonical for the relation classes used here.
    Poly normalize(Poly p) const {
        if (rules_.empty())
            return p;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [mono, c] : p.terms()) {
                const Rule* hit = nullptr;
                for (const Rule& rule : rules_)
                    if (rule.lhs.divides(mono)) {
                        hit = &rule;
                        break;
                    }
                if (!hit)
                    continue;
                const Monomial mono_copy = mono;
                const Rational coeff = c;
                p.add_term(mono_copy, -coeff);
                p += (coeff * Poly::term(hit->lhs.quotient_of(mono_copy), Rational(1))) * hit->rhs;
                changed = true;
                break;
            }
        }
        return p;
    }

    bool is_free() const { return rules_.empty(); }

    friend bool operator==(const DeskRing& a, const DeskRing& b) {
        return a.num_generators_ == b.num_generators_ && a.relations_ == b.relations_;
    }

private:
    struct Rule {
        Monomial lhs;
        Poly rhs;
        friend bool operator==(const Rule&, const Rule&) = default;
    };

    int num_generators_;
    std::vector<Poly> relations_;
    std::vector<Rule> rules_;
};

// Free module of finite rank over a DeskRing; elements are vectors of
// normalized ring elements.
struct DeskModule {
    DeskRing ring;
    int rank = 0;

    using Element = std::vector<Poly>;

    Element zero() const { return Element(static_cast<std::size_t>(rank)); }

    Element basis(int t) const {
        Element e = zero();
        e[static_cast<std::size_t>(t)] = Poly::constant(Rational(1));
        return e;
    }

    Element normalize(Element e) const {
        for (Poly& c : e)
            c = ring.normalize(std::move(c));
        return e;
    }

    Element add(const Element& a, const Element& b) const {
        Element out = a;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += b[i];
        return normalize(std::move(out));
    }

    Element negate(const Element& a) const {
        Element out = a;
        for (Poly& c : out)
            c = -c;
        return out;
    }

    Element scale(const Poly& r, const Element& a) const {
        Element out = a;
        for (Poly& c : out)
            c = ring.normalize(r * c);
        return out;
    }

    friend bool operator==(const DeskModule&, const DeskModule&) = default;
};

// Element r (+) m of the square-zero extension of a ring by a module.
struct SquareZeroElement {
    Poly base;
    DeskModule::Element fiber;

    friend bool operator==(const SquareZeroElement&, const SquareZeroElement&) = default;
};

inline std::string to_string(const SquareZeroElement& g) {
    std::string out = to_string(g.base) + " (+) [";
    for (std::size_t i = 0; i < g.fiber.size(); ++i)
        out += (i ? ", " : "") + to_string(g.fiber[i]);
    return out + "]";
}

// The ring R x M with multiplication (r0, m0)(r1, m1) = (r0 r1, r0 m1 + r1 m0),
// together with the projection and the unit section.
class SquareZeroExtension {
public:
    SquareZeroExtension(DeskRing ring, int rank)
        : ring_(std::move(ring)), module_{ring_, rank} {}

    const DeskRing& ring() const { return ring_; }
    const DeskModule& module() const { return module_; }

    SquareZeroElement element(Poly base, DeskModule::Element fiber) const {
        if (static_cast<int>(fiber.size()) != module_.rank)
            throw error("fiber rank mismatch");
        return {ring_.normalize(std::move(base)), module_.normalize(std::move(fiber))};
    }

    SquareZeroElement unit(const Poly& r) const { return element(r, module_.zero()); } // eta
    Poly project(const SquareZeroElement& g) const { return g.base; }                  // a

    SquareZeroElement add(const SquareZeroElement& g, const SquareZeroElement& h) const {
        return element(g.base + h.base, module_.add(g.fiber, h.fiber));
    }

    SquareZeroElement negate(const SquareZeroElement& g) const {
        return element(-g.base, module_.negate(g.fiber));
    }

    SquareZeroElement sub(const SquareZeroElement& g, const SquareZeroElement& h) const {
        return add(g, negate(h));
    }

    SquareZeroElement mul(const SquareZeroElement& g, const SquareZeroElement& h) const {
        return element(g.base * h.base,
                       module_.add(module_.scale(g.base, h.fiber), module_.scale(h.base, g.fiber)));
    }

    SquareZeroElement one() const { return unit(Poly::constant(Rational(1))); }

    // The closed formula for the action of a polynomial operation:
    //   f(r_1 (+) m_1, ..., r_k (+) m_k)
    //     = f(r) (+) sum_l m_l * (df/dz_l)(r).
    SquareZeroElement apply(const Poly& f, const std::vector<SquareZeroElement>& args) const {
        std::map<Var, Poly> sigma;
        for (const Var& v : f.variables()) {
            if (v.kind != VarKind::Base)
                throw error("operation polynomial must use base variables only");
            if (v.col < 1 || v.col > static_cast<int>(args.size()))
                throw error("operation arity mismatch");
            sigma.emplace(v, args[static_cast<std::size_t>(v.col - 1)].base);
        }
        Poly base = substitute(f, sigma);
        DeskModule::Element fiber = module_.zero();
        for (std::size_t l = 0; l < args.size(); ++l) {
            Poly df = partial(f, base_var(static_cast<int>(l) + 1));
            if (df.is_zero())
                continue;
            std::map<Var, Poly> sig;
            for (const Var& v : df.variables())
                sig.emplace(v, args[static_cast<std::size_t>(v.col - 1)].base);
            fiber = module_.add(fiber, module_.scale(substitute(df, sig), args[l].fiber));
        }
        return element(std::move(base), std::move(fiber));
    }

private:
    DeskRing ring_;
    DeskModule module_;
};

// Extend generator values to the whole ring along the derivation law
// d(f(z)) = sum_i (df/dz_i)(z) d(z_i).
inline DeskModule::Element extend_derivation(const DeskModule& mod,
                                             const std::vector<DeskModule::Element>& gen_values,
                                             const Poly& p) {
    if (static_cast<int>(gen_values.size()) != mod.ring.generator_count())
        throw error("derivation values must cover every generator");
    DeskModule::Element out = mod.zero();
    for (int i = 1; i <= mod.ring.generator_count(); ++i) {
        Poly df = partial(p, base_var(i));
        if (df.is_zero())
            continue;
        out = mod.add(out, mod.scale(mod.ring.normalize(df), gen_values[static_cast<std::size_t>(i - 1)]));
    }
    return out;
}

} // namespace nilform
