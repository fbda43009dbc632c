#pragma once

// The triangular module basis of the equivariant K-ring of a complete
// cellular fan.  Basis element p (in cellular order) restricts to the cell's
// Euler class at its own fixed point, to zero at all later fixed points, and
// is extended downward through the wall congruences.  Coordinates of any
// member are computed by descending exact division, which also yields the
// multiplicative structure constants.

#include <tkring/gkm.hpp>

#include <tuple>

namespace tkring {

// Product of the Euler classes of the cell characters of maximal cone i;
// the empty product (a point cell) is 1.
inline LaurentPoly euler_class_at(const CellularCertificate& cert, std::size_t i,
                                  std::size_t rank) {
    LaurentPoly p = laurent_one(rank);
    for (const Vec& u : cert.cell_characters[i]) p = mul(p, euler(u));
    return p;
}

// GKM neighbors of i that come later in the cellular order.  For a complete
// cellular fan these are exactly the n-k_i walls through tau_i and their
// characters agree with the cell characters up to sign; both facts are
// verified and a mismatch reports an inconsistency.
inline std::vector<std::pair<std::size_t, Vec>> upward_neighbors(
    const GkmGraph& g, const CellularCertificate& cert, std::size_t i) {
    std::vector<std::pair<std::size_t, Vec>> up;
    for (const GkmEdge& e : g.edges) {
        if (e.i != i && e.j != i) continue;
        std::size_t other = e.i == i ? e.j : e.i;
        if (g.position[other] > g.position[i]) up.emplace_back(other, e.chi);
    }
    std::sort(up.begin(), up.end(), [&](const auto& a, const auto& b) {
        return g.position[a.first] < g.position[b.first];
    });
    if (up.size() != cert.cell_dims[i])
        throw std::runtime_error("cellular/GKM inconsistency: upward neighbor count");
    std::vector<bool> used(cert.cell_characters[i].size(), false);
    for (const auto& [j, chi] : up) {
        bool matched = false;
        for (std::size_t t = 0; t < cert.cell_characters[i].size(); ++t) {
            if (used[t]) continue;
            if (sign_normalized(cert.cell_characters[i][t]) == chi) {
                used[t] = true;
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::runtime_error("cellular/GKM inconsistency: edge character");
    }
    return up;
}

// ---------------------------------------------------------------------------
// Congruence systems x = c_t (mod 1 - e^{chi_t}).
// ---------------------------------------------------------------------------

struct Congruence {
    Vec chi;           // primitive, pairwise non-proportional across a system
    LaurentPoly value;
};

inline bool satisfies(const LaurentPoly& x, const std::vector<Congruence>& cs) {
    for (const Congruence& c : cs)
        if (!divides_euler(sub(x, c.value), c.chi)) return false;
    return true;
}

namespace detail {

// Eliminate the first congruence: x = c_1 + (1 - e^{chi_1}) t transforms the
// remaining congruences into ones for t, dividing by the image of the first
// Euler class inside each quotient ring.  The division is exact whenever the
// system is solvable, so failure here means an inconsistent system.
inline LaurentPoly solve_congruences_elimination(std::size_t rank,
                                                 const std::vector<Congruence>& cs) {
    if (cs.empty()) return laurent_zero(rank);
    if (cs.size() == 1) return cs[0].value;
    const Congruence& head = cs[0];
    std::vector<Congruence> reduced;
    for (std::size_t t = 1; t < cs.size(); ++t) {
        QuotientRingElem d =
            reduce_mod_character(sub(cs[t].value, head.value), cs[t].chi);
        Vec w = d.lattice.project(head.chi);
        if (is_zero(w))
            throw std::domain_error("proportional characters in congruence system");
        LaurentPoly dq{d.lattice.quotient_rank(), d.terms};
        LaurentPoly lambda_bar = div_exact_one_minus(dq, w);
        LaurentPoly lambda{rank, {}};
        for (const auto& [e, c] : lambda_bar.terms)
            lambda.terms.emplace(d.lattice.lift(e), c);
        reduced.push_back({cs[t].chi, std::move(lambda)});
    }
    LaurentPoly t_sol = solve_congruences_elimination(rank, reduced);
    return add(head.value, mul(euler(head.chi), t_sol));
}

// Complete fallback: solve for the coefficients of x inside an exponent box
// as an integer-linear system, doubling the box until a solution appears.
inline LaurentPoly solve_congruences_box(std::size_t rank,
                                         const std::vector<Congruence>& cs) {
    Int radius = 1;
    for (const Congruence& c : cs)
        for (const auto& [e, _] : c.value.terms)
            for (const Int& x : e) radius = std::max(radius, abs_int(x));

    for (int attempt = 0; attempt < 4; ++attempt, radius *= 2) {
        // enumerate the box
        std::vector<Vec> box;
        Vec cur(rank, -radius);
        while (true) {
            box.push_back(cur);
            std::size_t d = 0;
            while (d < rank && cur[d] == radius) cur[d++] = -radius;
            if (d == rank) break;
            ++cur[d];
        }
        std::map<Vec, std::size_t> box_index;
        for (std::size_t k = 0; k < box.size(); ++k) box_index.emplace(box[k], k);

        std::vector<Vec> rows;
        Vec rhs;
        bool representable = true;
        for (const Congruence& c : cs) {
            QuotientRingElem target = reduce_mod_character(c.value, c.chi);
            std::map<Vec, std::size_t> class_row;
            for (std::size_t k = 0; k < box.size(); ++k) {
                Vec cls = target.lattice.project(box[k]);
                auto [it, fresh] = class_row.emplace(cls, rows.size());
                if (fresh) {
                    rows.emplace_back(box.size());
                    rhs.emplace_back(0);
                }
                rows[it->second][k] = 1;
            }
            for (const auto& [cls, coef] : target.terms) {
                auto it = class_row.find(cls);
                if (it == class_row.end()) {
                    representable = false;
                    break;
                }
                rhs[it->second] = coef;
            }
            if (!representable) break;
        }
        if (!representable) continue;

        Mat a(rows.size(), box.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t k = 0; k < box.size(); ++k) a(r, k) = rows[r][k];
        auto sol = solve_integer(a, rhs);
        if (!sol) continue;
        LaurentPoly x{rank, {}};
        for (std::size_t k = 0; k < box.size(); ++k) add_term(x, box[k], (*sol)[k]);
        if (satisfies(x, cs)) return x;
    }
    throw std::runtime_error("solver exhausted");
}

}  // namespace detail

// Any solution of the congruence system.  Fast paths first: a neighbor value
// or zero often already works; then elimination; the box search is the
// total fallback.
inline LaurentPoly solve_congruences(std::size_t rank, const std::vector<Congruence>& cs) {
    if (cs.empty()) return laurent_zero(rank);
    for (const Congruence& c : cs)
        if (satisfies(c.value, cs)) return c.value;
    if (satisfies(laurent_zero(rank), cs)) return laurent_zero(rank);
    try {
        LaurentPoly x = detail::solve_congruences_elimination(rank, cs);
        if (satisfies(x, cs)) return x;
    } catch (const std::domain_error&) {
        // fall through to the box search
    }
    return detail::solve_congruences_box(rank, cs);
}

// ---------------------------------------------------------------------------
// Basis, coordinates, structure constants.
// ---------------------------------------------------------------------------

struct KBasis {
    std::vector<KClass> classes;           // in cellular order
    std::vector<LaurentPoly> euler_diagonals;  // diagonal restriction per class
};

inline KBasis construct_basis(const GkmGraph& g, const CellularCertificate& cert) {
    const std::size_t m = g.m;
    for (std::size_t i = 0; i < m; ++i) upward_neighbors(g, cert, i);

    KBasis basis;
    for (std::size_t p = 0; p < m; ++p) {
        std::size_t i = g.order[p];
        std::vector<LaurentPoly> comps(m, laurent_zero(g.rank));
        comps[i] = euler_class_at(cert, i, g.rank);
        for (std::size_t lp = p; lp-- > 0;) {
            std::size_t l = g.order[lp];
            std::vector<Congruence> cs;
            for (const GkmEdge& e : g.edges) {
                if (e.i != l && e.j != l) continue;
                std::size_t other = e.i == l ? e.j : e.i;
                if (g.position[other] > lp) cs.push_back({e.chi, comps[other]});
            }
            try {
                comps[l] = solve_congruences(g.rank, cs);
            } catch (const std::runtime_error&) {
                throw std::runtime_error("solver exhausted at maximal cone " +
                                         std::to_string(l + 1));
            }
        }
        KClass f = make_kclass(g, std::move(comps));
        for (std::size_t lp = p + 1; lp < m; ++lp)
            if (!f.components[g.order[lp]].is_zero())
                throw std::logic_error("constructed class is not triangular");
        basis.euler_diagonals.push_back(f.components[i]);
        basis.classes.push_back(std::move(f));
    }
    return basis;
}

// Coefficients of f in the basis, by descending exact division through the
// Euler factors of each diagonal.  Exact for every member; a nonzero
// remainder reports corrupted input.
inline std::vector<LaurentPoly> coordinates(const GkmGraph& g,
                                            const CellularCertificate& cert,
                                            const KBasis& basis, const KClass& f) {
    const std::size_t m = g.m;
    if (f.components.size() != m)
        throw std::invalid_argument("component count does not match the graph");
    std::vector<LaurentPoly> coords(m, laurent_zero(g.rank));
    KClass rem = f;
    for (std::size_t p = m; p-- > 0;) {
        std::size_t i = g.order[p];
        LaurentPoly a = rem.components[i];
        try {
            for (const Vec& u : cert.cell_characters[i]) a = div_exact_euler(a, u);
        } catch (const std::domain_error&) {
            throw std::domain_error("not in the span");
        }
        coords[p] = a;
        if (!a.is_zero())
            rem = kclass_sub(rem, kclass_mul(kclass_from_rep(a, m), basis.classes[p]));
    }
    if (!kclass_is_zero(rem)) throw std::domain_error("not in the span");
    return coords;
}

// Structure constants a^p_{ij} of the basis, stored sparsely over position
// triples with i <= j; the expansion sum_p a^p_{ij} f_p = f_i f_j is exact.
struct StructureConstants {
    std::size_t m = 0;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, LaurentPoly> entries;

    const LaurentPoly* find(std::size_t i, std::size_t j, std::size_t p) const {
        if (i > j) std::swap(i, j);
        auto it = entries.find({i, j, p});
        return it == entries.end() ? nullptr : &it->second;
    }
};

inline StructureConstants structure_constants(const GkmGraph& g,
                                              const CellularCertificate& cert,
                                              const KBasis& basis) {
    StructureConstants sc;
    sc.m = g.m;
    for (std::size_t i = 0; i < g.m; ++i)
        for (std::size_t j = i; j < g.m; ++j) {
            KClass prod = kclass_mul(basis.classes[i], basis.classes[j]);
            std::vector<LaurentPoly> coords = coordinates(g, cert, basis, prod);
            for (std::size_t p = 0; p < g.m; ++p)
                if (!coords[p].is_zero()) sc.entries.emplace(std::tuple{i, j, p}, coords[p]);
        }
    return sc;
}

}  // namespace tkring
