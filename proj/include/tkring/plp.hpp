#pragma once

// Piecewise Laurent polynomial functions on a fan: one element of
// Z[M/(sigma_perp ∩ M)] per cone, compatible along face inclusions.  A
// component is stored for every cone and the redundancy is validated, not
// trusted.  Conversion to and from GKM tuples realizes the isomorphism with
// the congruence ring for complete cellular fans.

#include <tkring/gkm.hpp>

namespace tkring {

// Per-fan quotient data: the ring of Laurent polynomial functions on each
// cone, plus the location of the maximal cones inside the sorted cone list.
struct PlpContext {
    std::vector<QuotientLattice> cone_quotients;  // indexed like fan.all_cones
    std::vector<std::size_t> max_cone_index;      // all_cones index per maximal cone
};

inline PlpContext make_plp_context(const Fan& f) {
    PlpContext ctx;
    for (const Cone& c : f.all_cones)
        ctx.cone_quotients.push_back(quotient(f.rank, c.span_perp));
    for (const Cone& m : f.max_cones) {
        auto it = std::find(f.all_cones.begin(), f.all_cones.end(), m);
        if (it == f.all_cones.end()) throw std::logic_error("maximal cone missing");
        ctx.max_cone_index.push_back(std::size_t(it - f.all_cones.begin()));
    }
    return ctx;
}

struct PlpFunction {
    std::vector<QuotientRingElem> components;  // indexed like fan.all_cones

    bool operator==(const PlpFunction& o) const { return components == o.components; }
};

// psi_{sigma, sigma'}: restriction of Laurent polynomial functions on sigma'
// to a face sigma, i.e. the further exponent quotient.  Lift ambiguity is
// killed by the face projection, so any section works.
inline QuotientRingElem restriction_map(const Fan& f, const PlpContext& ctx,
                                        std::size_t face_idx, std::size_t cone_idx,
                                        const QuotientRingElem& x) {
    const Cone& face = f.all_cones[face_idx];
    const Cone& big = f.all_cones[cone_idx];
    if (!is_face(big, face)) throw std::invalid_argument("not a face");
    const QuotientLattice& q_big = ctx.cone_quotients[cone_idx];
    const QuotientLattice& q_face = ctx.cone_quotients[face_idx];
    if (!(x.lattice.projection == q_big.projection))
        throw std::invalid_argument("element does not live on the larger cone");
    QuotientRingElem r;
    r.lattice = q_face;
    for (const auto& [e, c] : x.terms) {
        Vec pe = q_face.project(q_big.lift(e));
        auto it = r.terms.find(pe);
        if (it == r.terms.end()) {
            r.terms.emplace(std::move(pe), c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

struct PlpValidation {
    bool valid = false;
    // covering face relations (face index, cone index) whose restriction fails
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

// Checks every covering relation; the full face relation follows by
// transitivity of the restriction maps.
inline PlpValidation validate_plp(const Fan& f, const PlpContext& ctx,
                                  const PlpFunction& p) {
    if (p.components.size() != f.all_cones.size())
        throw std::invalid_argument("component count does not match the fan");
    PlpValidation r;
    for (std::size_t a = 0; a < f.all_cones.size(); ++a)
        for (std::size_t b = 0; b < f.all_cones.size(); ++b) {
            if (f.all_cones[a].dim + 1 != f.all_cones[b].dim) continue;
            if (!is_face(f.all_cones[b], f.all_cones[a])) continue;
            if (!(restriction_map(f, ctx, a, b, p.components[b]) == p.components[a]))
                r.violations.emplace_back(a, b);
        }
    r.valid = r.violations.empty();
    return r;
}

// h: a congruence tuple determines a compatible family by reducing, on each
// cone, the component of any containing maximal cone.  Well-definedness is
// verified against every containing maximal cone rather than assumed.
inline PlpFunction from_kclass(const GkmGraph& g, const Fan& f, const PlpContext& ctx,
                               const KClass& a) {
    if (!is_complete(f))
        throw std::domain_error("piecewise description requires a complete fan");
    if (!stars_strongly_connected(f))
        throw std::domain_error("fan stars are not strongly connected");
    if (a.components.size() != f.max_cones.size())
        throw std::invalid_argument("component count does not match the fan");
    PlpFunction p;
    p.components.resize(f.all_cones.size());
    for (std::size_t idx = 0; idx < f.all_cones.size(); ++idx) {
        bool assigned = false;
        for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
            if (!is_face(f.max_cones[i], f.all_cones[idx])) continue;
            QuotientRingElem r =
                project_to_quotient(a.components[i], ctx.cone_quotients[idx]);
            if (!assigned) {
                p.components[idx] = std::move(r);
                assigned = true;
            } else if (!(r == p.components[idx])) {
                throw std::domain_error(
                    "Assumption on star connectivity violated: containing maximal "
                    "cones disagree on cone " + std::to_string(idx));
            }
        }
        if (!assigned) throw std::logic_error("cone not contained in any maximal cone");
    }
    return p;
}

// Reads the tuple off the maximal cones, where the quotient is Z[M] itself;
// the result is membership-checked.
inline KClass to_kclass(const GkmGraph& g, const Fan& f, const PlpContext& ctx,
                        const PlpFunction& p) {
    if (p.components.size() != f.all_cones.size())
        throw std::invalid_argument("component count does not match the fan");
    std::vector<LaurentPoly> comps;
    for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
        const QuotientRingElem& e = p.components[ctx.max_cone_index[i]];
        if (e.lattice.quotient_rank() != f.rank)
            throw std::logic_error("maximal cone component is not over the full lattice");
        LaurentPoly c{f.rank, {}};
        for (const auto& [exp, coef] : e.terms) c.terms.emplace(e.lattice.lift(exp), coef);
        comps.push_back(std::move(c));
    }
    return make_kclass(g, std::move(comps));
}

}  // namespace tkring
