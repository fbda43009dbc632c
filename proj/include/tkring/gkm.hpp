#pragma once

// The GKM graph of a complete cellular fan and the ring of congruence tuples:
// one Laurent polynomial per maximal cone, components across each wall agreeing
// modulo 1 - e^chi for the wall's orthogonal character.  K-classes are stored
// by their fixed-point restrictions.

#include <tkring/cellular.hpp>
#include <tkring/laurent.hpp>

namespace tkring {

struct GkmEdge {
    std::size_t i = 0, j = 0;  // maximal-cone indices, i < j
    Vec chi;                   // primitive generator of (wall)^perp ∩ M, sign-normalized
};

struct GkmGraph {
    std::size_t m = 0;
    std::size_t rank = 0;
    std::vector<GkmEdge> edges;
    std::vector<std::size_t> order;     // cellular ordering of the maximal cones
    std::vector<std::size_t> position;  // inverse of order
};

inline GkmGraph build_gkm(const Fan& f, const CellularCertificate& cert) {
    if (!is_complete(f))
        throw std::domain_error("GKM description requires a complete fan");
    GkmGraph g;
    g.m = f.max_cones.size();
    g.rank = f.rank;
    g.order = cert.order;
    g.position = cert.position;
    for (const Wall& w : walls(f)) {
        if (w.cone.span_perp.size() != 1)
            throw std::logic_error("wall annihilator is not rank one");
        g.edges.push_back({w.i, w.j, w.cone.span_perp[0]});
    }
    return g;
}

struct MembershipCheck {
    bool member = false;
    std::vector<std::size_t> violated_edges;  // indices into GkmGraph::edges
};

inline MembershipCheck is_member(const GkmGraph& g,
                                 const std::vector<LaurentPoly>& components) {
    if (components.size() != g.m)
        throw std::invalid_argument("component count does not match the graph");
    MembershipCheck r;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const GkmEdge& e = g.edges[k];
        if (!divides_euler(sub(components[e.i], components[e.j]), e.chi))
            r.violated_edges.push_back(k);
    }
    r.member = r.violated_edges.empty();
    return r;
}

struct KClass {
    std::vector<LaurentPoly> components;  // component i = restriction at x_i

    bool operator==(const KClass& o) const { return components == o.components; }
};

// Checked constructor: throws when the congruences fail.
inline KClass make_kclass(const GkmGraph& g, std::vector<LaurentPoly> components) {
    MembershipCheck c = is_member(g, components);
    if (!c.member) {
        std::string msg = "tuple is not a member; violated edges:";
        for (std::size_t k : c.violated_edges)
            msg += " (" + std::to_string(g.edges[k].i + 1) + "," +
                   std::to_string(g.edges[k].j + 1) + ")";
        throw std::domain_error(msg);
    }
    return KClass{std::move(components)};
}

// Diagonal embedding of the representation ring.
inline KClass kclass_from_rep(const LaurentPoly& a, std::size_t m) {
    return KClass{std::vector<LaurentPoly>(m, a)};
}

inline KClass kclass_add(const KClass& a, const KClass& b) {
    if (a.components.size() != b.components.size())
        throw std::invalid_argument("component count mismatch");
    KClass r;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        r.components.push_back(add(a.components[i], b.components[i]));
    return r;
}

inline KClass kclass_sub(const KClass& a, const KClass& b) {
    if (a.components.size() != b.components.size())
        throw std::invalid_argument("component count mismatch");
    KClass r;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        r.components.push_back(sub(a.components[i], b.components[i]));
    return r;
}

inline KClass kclass_mul(const KClass& a, const KClass& b) {
    if (a.components.size() != b.components.size())
        throw std::invalid_argument("component count mismatch");
    KClass r;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        r.components.push_back(mul(a.components[i], b.components[i]));
    return r;
}

inline const LaurentPoly& restrict_at(const KClass& a, std::size_t i) {
    if (i >= a.components.size()) throw std::out_of_range("fixed point index out of range");
    return a.components[i];
}

inline bool kclass_is_zero(const KClass& a) {
    for (const LaurentPoly& c : a.components)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace tkring
