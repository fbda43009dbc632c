#pragma once

// Fans as coherent collections of cones.  A fan is built from its maximal
// cones; all faces are generated and deduplicated at construction.  Axiom
// checking reports violations as data instead of throwing, so the CLI can
// surface them.

#include <tkring/cone.hpp>

#include <cstddef>
#include <queue>
#include <string>
#include <vector>

namespace tkring {

struct Fan {
    std::size_t rank = 0;
    std::vector<Vec> rays;        // primitive generators of the 1-dim cones
    std::vector<Cone> max_cones;  // as listed by the input
    std::vector<Cone> all_cones;  // every face of every maximal cone, sorted
};

struct Wall {
    std::size_t i = 0, j = 0;  // indices into max_cones, i < j
    Cone cone;
};

inline Fan make_fan(std::size_t rank, std::vector<Cone> max_cones) {
    Fan f;
    f.rank = rank;
    f.max_cones = std::move(max_cones);
    std::set<Cone> cones;
    for (const Cone& c : f.max_cones) {
        if (c.ambient_rank != rank)
            throw std::invalid_argument("cone ambient rank does not match fan");
        for (const Cone& face : faces(c)) cones.insert(face);
    }
    f.all_cones.assign(cones.begin(), cones.end());
    std::set<Vec> rays;
    for (const Cone& c : f.all_cones)
        if (c.dim == 1) rays.insert(c.rays[0]);
    f.rays.assign(rays.begin(), rays.end());
    return f;
}

inline Fan make_fan(std::size_t rank, const std::vector<Vec>& rays,
                    const std::vector<std::vector<std::size_t>>& max_cone_rays) {
    std::vector<Cone> cones;
    for (const auto& idx : max_cone_rays) {
        std::vector<Vec> gens;
        for (std::size_t r : idx) {
            if (r >= rays.size()) throw std::invalid_argument("ray index out of range");
            gens.push_back(rays[r]);
        }
        cones.push_back(cone_from_rays(rank, gens));
    }
    return make_fan(rank, std::move(cones));
}

// Fan-axiom violations; empty means the fan is valid.  Cone indices in the
// messages are 1-based to match the usual labelling of examples.
inline std::vector<std::string> validate(const Fan& f) {
    std::vector<std::string> violations;
    if (f.max_cones.empty()) {
        violations.push_back("empty fan");
        return violations;
    }
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        for (std::size_t j = i + 1; j < f.max_cones.size(); ++j) {
            Cone meet = intersect(f.max_cones[i], f.max_cones[j]);
            if (meet == f.max_cones[i] || meet == f.max_cones[j]) {
                violations.push_back("maximal cone " + std::to_string(i + 1) +
                                     " and " + std::to_string(j + 1) +
                                     " are nested; input must list maximal cones");
                continue;
            }
            if (!is_face(f.max_cones[i], meet) || !is_face(f.max_cones[j], meet))
                violations.push_back(
                    "intersection of cones " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " is not a common face");
        }
    return violations;
}

inline bool is_pure(const Fan& f) {
    for (const Cone& c : f.max_cones)
        if (c.dim != f.rank) return false;
    return true;
}

inline std::vector<Wall> walls(const Fan& f) {
    std::vector<Wall> ws;
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        for (std::size_t j = i + 1; j < f.max_cones.size(); ++j) {
            Cone meet = intersect(f.max_cones[i], f.max_cones[j]);
            if (meet.dim + 1 == f.rank) ws.push_back({i, j, std::move(meet)});
        }
    return ws;
}

// Complete = nonempty, pure, and every (n-1)-dimensional cone is a facet of
// exactly two maximal cones.  A boundary point of the support would lie in a
// wall belonging to just one maximal cone, so this is exact for fans.
inline bool is_complete(const Fan& f) {
    if (f.max_cones.empty() || !is_pure(f)) return false;
    for (const Cone& c : f.all_cones) {
        if (c.dim + 1 != f.rank) continue;
        std::size_t count = 0;
        for (const Cone& m : f.max_cones)
            if (is_face(m, c)) ++count;
        if (count != 2) return false;
    }
    return true;
}

struct StarFan {
    Cone tau;
    QuotientLattice quotient;
    std::vector<Cone> cones;                 // images of all cones containing tau
    std::vector<std::size_t> max_indices;    // maximal cones of the base containing tau
};

inline StarFan star(const Fan& f, const Cone& tau) {
    if (std::find(f.all_cones.begin(), f.all_cones.end(), tau) == f.all_cones.end())
        throw std::invalid_argument("cone is not in the fan");
    StarFan s;
    s.tau = tau;
    s.quotient = quotient(f.rank, tau.rays);
    std::set<Cone> images;
    for (const Cone& c : f.all_cones)
        if (is_face(c, tau)) images.insert(quotient_cone(c, tau, s.quotient));
    s.cones.assign(images.begin(), images.end());
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        if (is_face(f.max_cones[i], tau)) s.max_indices.push_back(i);
    return s;
}

// For every cone tau and every pair of maximal cones containing tau, the two
// must be connected inside the wall graph restricted to maximal cones
// containing tau.  Complete fans always satisfy this; the check also admits
// the pseudomanifold-with-boundary fans.
inline bool stars_strongly_connected(const Fan& f) {
    std::vector<Wall> ws = walls(f);
    for (const Cone& tau : f.all_cones) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < f.max_cones.size(); ++i)
            if (is_face(f.max_cones[i], tau)) members.push_back(i);
        if (members.size() <= 1) continue;
        std::set<std::size_t> in_star(members.begin(), members.end());
        std::set<std::size_t> seen{members[0]};
        std::queue<std::size_t> frontier;
        frontier.push(members[0]);
        while (!frontier.empty()) {
            std::size_t cur = frontier.front();
            frontier.pop();
            for (const Wall& w : ws) {
                if (w.i != cur && w.j != cur) continue;
                std::size_t other = w.i == cur ? w.j : w.i;
                if (in_star.count(other) && !seen.count(other)) {
                    seen.insert(other);
                    frontier.push(other);
                }
            }
        }
        if (seen.size() != members.size()) return false;
    }
    return true;
}

}  // namespace tkring
