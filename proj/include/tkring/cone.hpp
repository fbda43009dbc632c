#pragma once

// Strongly convex rational polyhedral cones with both descriptions.  A cone
// stores its extreme rays (primitive, lexicographically sorted), inward facet
// normals cutting it out inside its linear span, and a basis of the
// annihilator of that span in the dual lattice.  All derived data is computed
// eagerly at construction so membership, face and wall tests are pairings.

#include <tkring/lattice.hpp>

#include <cstddef>
#include <set>
#include <vector>

namespace tkring {

struct Cone {
    std::size_t ambient_rank = 0;
    std::size_t dim = 0;
    std::vector<Vec> rays;       // extreme rays, primitive, lex-sorted
    std::vector<Vec> facets;     // inward facet normals in M, primitive
    std::vector<Vec> span_perp;  // basis of span(rays)^perp ∩ M

    bool is_zero_cone() const { return rays.empty(); }

    bool operator==(const Cone& o) const {
        return ambient_rank == o.ambient_rank && rays == o.rays;
    }
    bool operator<(const Cone& o) const {
        if (dim != o.dim) return dim < o.dim;
        return rays < o.rays;
    }
};

namespace detail {

// All k-element index subsets of {0..n-1}, visited in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::size_t rank_of(const std::vector<Vec>& rows, std::size_t width) {
    if (rows.empty()) return 0;
    return smith_normal_form(Mat::from_rows(width, rows)).rank;
}

// Facet normals of the full-dimensional pointed cone generated by ys in Z^k.
// Facet hyperplanes are spanned by generators, so candidates are kernels of
// (k-1)-subsets oriented against the whole generator list.
inline std::vector<Vec> facets_full_dim(std::size_t k, const std::vector<Vec>& ys) {
    std::set<Vec> found;
    if (k == 0) return {};
    for_each_subset(ys.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vec> sub;
        for (std::size_t i : idx) sub.push_back(ys[i]);
        std::vector<Vec> line =
            sub.empty() ? annihilator(k, {}) : kernel_basis(Mat::from_rows(k, sub));
        if (line.size() != 1) return;
        const Vec& u = line[0];
        bool nonneg = true, nonpos = true;
        for (const Vec& y : ys) {
            Int p = dot(u, y);
            if (p < 0) nonneg = false;
            if (p > 0) nonpos = false;
        }
        if (nonneg)
            found.insert(u);
        else if (nonpos) {
            Vec neg(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
            found.insert(neg);
        }
    });
    std::vector<Vec> facets(found.begin(), found.end());
    if (rank_of(facets, k) != k) throw std::invalid_argument("not strongly convex");
    return facets;
}

}  // namespace detail

// Builds the cone generated by the given rays: primitivizes and deduplicates
// generators, discards non-extreme ones, and computes the facet normals by
// enumeration inside the span.  Throws if the generators contain a line.
inline Cone cone_from_rays(std::size_t ambient_rank, const std::vector<Vec>& generators) {
    Cone c;
    c.ambient_rank = ambient_rank;

    std::set<Vec> uniq;
    for (const Vec& g : generators) {
        if (g.size() != ambient_rank)
            throw std::invalid_argument("ray length does not match ambient rank");
        if (is_zero(g)) throw std::invalid_argument("zero vector is not a ray");
        uniq.insert(primitive(g));
    }
    std::vector<Vec> rays(uniq.begin(), uniq.end());

    c.span_perp = annihilator(ambient_rank, rays);
    c.dim = ambient_rank - c.span_perp.size();
    if (rays.empty()) return c;

    // Coordinates inside the saturated span lattice.
    SmithForm f = smith_normal_form(Mat::from_columns(ambient_rank, rays));
    const std::size_t k = f.rank;
    Mat coords(k, ambient_rank);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < ambient_rank; ++j) coords(i, j) = f.u(i, j);

    std::vector<Vec> ys;
    for (const Vec& r : rays) ys.push_back(matvec(coords, r));

    std::vector<Vec> span_facets = detail::facets_full_dim(k, ys);

    // Keep extreme rays only: the facets tight at an extreme ray have rank k-1.
    std::vector<Vec> extreme;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<Vec> tight;
        for (const Vec& u : span_facets)
            if (dot(u, ys[i]) == 0) tight.push_back(u);
        if (detail::rank_of(tight, k) + 1 == k) extreme.push_back(rays[i]);
    }
    c.rays = std::move(extreme);

    std::set<Vec> pulled;
    for (const Vec& u : span_facets) pulled.insert(primitive(vecmat(u, coords)));
    c.facets.assign(pulled.begin(), pulled.end());
    return c;
}

inline bool contains(const Cone& c, const Vec& x) {
    if (x.size() != c.ambient_rank)
        throw std::invalid_argument("ambient rank mismatch");
    for (const Vec& u : c.span_perp)
        if (dot(u, x) != 0) return false;
    for (const Vec& u : c.facets)
        if (dot(u, x) < 0) return false;
    return true;
}

inline bool rel_interior_contains(const Cone& c, const Vec& x) {
    if (x.size() != c.ambient_rank)
        throw std::invalid_argument("ambient rank mismatch");
    for (const Vec& u : c.span_perp)
        if (dot(u, x) != 0) return false;
    for (const Vec& u : c.facets)
        if (dot(u, x) <= 0) return false;
    return true;
}

// All faces of c, including {0} and c itself, sorted by (dim, rays).
// Faces are tight sets of facet-normal subsets.
inline std::vector<Cone> faces(const Cone& c) {
    std::set<std::vector<Vec>> ray_sets;
    const std::size_t nf = c.facets.size();
    for (std::size_t k = 0; k <= nf; ++k)
        detail::for_each_subset(nf, k, [&](const std::vector<std::size_t>& idx) {
            std::vector<Vec> tight_rays;
            for (const Vec& r : c.rays) {
                bool tight = true;
                for (std::size_t f : idx)
                    if (dot(c.facets[f], r) != 0) {
                        tight = false;
                        break;
                    }
                if (tight) tight_rays.push_back(r);
            }
            ray_sets.insert(tight_rays);
        });
    ray_sets.insert({});  // the zero cone, tight set of all facets
    std::vector<Cone> fs;
    for (const auto& rs : ray_sets) fs.push_back(cone_from_rays(c.ambient_rank, rs));
    std::sort(fs.begin(), fs.end());
    return fs;
}

// f is a face of c iff recovering the minimal face of c through f's rays
// gives back exactly f.
inline bool is_face(const Cone& c, const Cone& f) {
    if (f.ambient_rank != c.ambient_rank) return false;
    for (const Vec& r : f.rays)
        if (!std::binary_search(c.rays.begin(), c.rays.end(), r)) return false;
    // Facet normals of c vanishing on all of f...
    std::vector<const Vec*> tight_facets;
    for (const Vec& u : c.facets) {
        bool vanishes = true;
        for (const Vec& fr : f.rays)
            if (dot(u, fr) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) tight_facets.push_back(&u);
    }
    // ...cut out the minimal face of c containing f.
    std::vector<Vec> face_rays;
    for (const Vec& r : c.rays) {
        bool tight = true;
        for (const Vec* u : tight_facets)
            if (dot(*u, r) != 0) {
                tight = false;
                break;
            }
        if (tight) face_rays.push_back(r);
    }
    return face_rays == f.rays;
}

// Intersection of two cones, computed exactly from the combined inequality
// description restricted to the common span.
inline Cone intersect(const Cone& c1, const Cone& c2) {
    if (c1.ambient_rank != c2.ambient_rank)
        throw std::invalid_argument("ambient rank mismatch");
    const std::size_t n = c1.ambient_rank;

    std::vector<Vec> eq;
    eq.insert(eq.end(), c1.span_perp.begin(), c1.span_perp.end());
    eq.insert(eq.end(), c2.span_perp.begin(), c2.span_perp.end());
    std::vector<Vec> span_basis =
        eq.empty() ? annihilator(n, {}) : kernel_basis(Mat::from_rows(n, eq));
    const std::size_t s = span_basis.size();
    if (s == 0) return cone_from_rays(n, {});
    Mat b = Mat::from_columns(n, span_basis);

    std::set<Vec> rows;
    for (const Cone* c : {&c1, &c2})
        for (const Vec& u : c->facets) {
            Vec restricted(s);
            for (std::size_t j = 0; j < s; ++j) restricted[j] = dot(u, span_basis[j]);
            if (!is_zero(restricted)) rows.insert(restricted);
        }
    std::vector<Vec> ineq(rows.begin(), rows.end());

    std::set<Vec> found;
    detail::for_each_subset(ineq.size(), s - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vec> sub;
        for (std::size_t i : idx) sub.push_back(ineq[i]);
        std::vector<Vec> line =
            sub.empty() ? annihilator(s, {}) : kernel_basis(Mat::from_rows(s, sub));
        if (line.size() != 1) return;
        for (int sign : {1, -1}) {
            Vec g(s);
            for (std::size_t i = 0; i < s; ++i) g[i] = sign * line[0][i];
            bool ok = true;
            for (const Vec& row : ineq)
                if (dot(row, g) < 0) {
                    ok = false;
                    break;
                }
            if (ok) found.insert(primitive(matvec(b, g)));
        }
    });
    return cone_from_rays(n, std::vector<Vec>(found.begin(), found.end()));
}

// Image of c in the quotient by the span of one of its faces: project the
// rays, drop zero images, re-primitivize and rebuild the dual description.
inline Cone quotient_cone(const Cone& c, const Cone& face, const QuotientLattice& q) {
    if (!is_face(c, face)) throw std::invalid_argument("not a face of the cone");
    std::vector<Vec> images;
    for (const Vec& r : c.rays) {
        Vec y = q.project(r);
        if (!is_zero(y)) images.push_back(primitive(y));
    }
    return cone_from_rays(q.quotient_rank(), images);
}

// Smooth = simplicial with primitive rays extending to a lattice basis.
inline bool is_smooth(const Cone& c) {
    if (c.rays.size() != c.dim) return false;
    if (c.rays.empty()) return true;
    SmithForm f = smith_normal_form(Mat::from_columns(c.ambient_rank, c.rays));
    for (std::size_t i = 0; i < c.rays.size(); ++i)
        if (f.diag(i) != 1) return false;
    return true;
}

}  // namespace tkring
