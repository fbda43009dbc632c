#pragma once

// Decides whether a fan is cellular with respect to a generic lattice vector
// and produces either a certificate (distinguished faces, ordering of maximal
// cones, smooth quotient cones, cell characters) or a rejection naming the
// first failed condition.

#include <tkring/fan.hpp>

#include <optional>
#include <variant>

namespace tkring {

struct CellularCertificate {
    Vec v;
    std::vector<std::size_t> order;     // order[p] = maximal-cone index at position p
    std::vector<std::size_t> position;  // inverse of order
    std::vector<Cone> tau;              // distinguished face of each maximal cone
    std::vector<QuotientLattice> tau_quotient;
    std::vector<Cone> quotient_cones;   // sigma_i / span(tau_i)
    std::vector<std::vector<Vec>> cell_characters;  // in M, one list per maximal cone
    std::vector<std::size_t> cell_dims;             // n - dim(tau_i)
};

enum class RejectionKind {
    invalid_fan,
    not_pure,
    not_generic,
    ordering_cycle,
    non_smooth_quotient,
};

struct RejectionReport {
    RejectionKind kind;
    std::string reason;
    std::vector<std::string> fan_violations;  // for invalid_fan
    std::optional<std::size_t> cone_index;    // for non_smooth_quotient
    std::optional<Cone> tau;                  // distinguished face at that cone
    std::vector<std::size_t> cycle;           // for ordering_cycle
};

using CellularResult = std::variant<CellularCertificate, RejectionReport>;

// v is generic when it lies in the support of the fan but in the span of no
// (n-1)-dimensional cone.
inline bool is_generic(const Fan& f, const Vec& v) {
    bool in_support = false;
    for (const Cone& c : f.max_cones)
        if (contains(c, v)) {
            in_support = true;
            break;
        }
    if (!in_support) return false;
    for (const Cone& c : f.all_cones) {
        if (c.dim + 1 != f.rank) continue;
        bool in_span = true;
        for (const Vec& u : c.span_perp)
            if (dot(u, v) != 0) {
                in_span = false;
                break;
            }
        if (in_span) return false;
    }
    return true;
}

// The minimal face gamma of sigma such that the image of v in the quotient by
// span(gamma) lies in the relative interior of the image of sigma.  The set
// of such faces is closed under intersection.
inline Cone distinguished_face(const Cone& sigma, const Vec& v) {
    std::vector<Cone> passing;
    for (const Cone& gamma : faces(sigma)) {
        QuotientLattice q = quotient(sigma.ambient_rank, gamma.rays);
        Cone image = quotient_cone(sigma, gamma, q);
        if (rel_interior_contains(image, q.project(v))) passing.push_back(gamma);
    }
    if (passing.empty())
        throw std::domain_error("v not generic for this cone");
    std::vector<Vec> meet_rays = passing[0].rays;
    for (const Cone& gamma : passing) {
        std::vector<Vec> next;
        for (const Vec& r : meet_rays)
            if (std::binary_search(gamma.rays.begin(), gamma.rays.end(), r))
                next.push_back(r);
        meet_rays = std::move(next);
    }
    for (const Cone& gamma : passing)
        if (gamma.rays == meet_rays) return gamma;
    throw std::domain_error("v not generic for this cone");
}

struct BbOrder {
    std::optional<std::vector<std::size_t>> order;  // present on success
    std::vector<std::size_t> cycle;                 // witness on failure
};

// Topological order of the digraph with an edge i -> j whenever
// tau_i is contained in sigma_j (i != j), lowest index first.
inline BbOrder bb_order(const std::vector<Cone>& max_cones, const std::vector<Cone>& tau) {
    const std::size_t m = max_cones.size();
    std::vector<std::vector<std::size_t>> succ(m);
    std::vector<std::size_t> indegree(m, 0);
    auto contained = [](const Cone& t, const Cone& sigma) {
        for (const Vec& r : t.rays)
            if (!contains(sigma, r)) return false;
        return true;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (contained(tau[i], max_cones[j])) {
                succ[i].push_back(j);
                ++indegree[j];
            }
        }
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < m; ++i)
        if (indegree[i] == 0) ready.insert(i);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t i = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(i);
        for (std::size_t j : succ[i])
            if (--indegree[j] == 0) ready.insert(j);
    }
    if (order.size() == m) return {order, {}};

    // Every unresolved node keeps an unresolved predecessor, so walking
    // predecessors from any unresolved node must revisit one: a cycle.
    std::vector<bool> done(m, false);
    for (std::size_t i : order) done[i] = true;
    std::vector<std::vector<std::size_t>> pred(m);
    for (std::size_t i = 0; i < m; ++i)
        if (!done[i])
            for (std::size_t j : succ[i])
                if (!done[j]) pred[j].push_back(i);
    std::size_t start = 0;
    while (done[start]) ++start;
    std::vector<std::size_t> path;
    std::vector<int> mark(m, 0);
    std::size_t cur = start;
    while (mark[cur] == 0) {
        mark[cur] = 1;
        path.push_back(cur);
        cur = pred[cur].front();
    }
    std::vector<std::size_t> cycle;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        cycle.push_back(*it);
        if (*it == cur) break;
    }
    return {std::nullopt, cycle};
}

inline CellularResult certify_cellular(const Fan& f, const Vec& v) {
    auto reject = [](RejectionKind kind, std::string reason) {
        RejectionReport r;
        r.kind = kind;
        r.reason = std::move(reason);
        return r;
    };

    std::vector<std::string> violations = validate(f);
    if (!violations.empty()) {
        RejectionReport r = reject(RejectionKind::invalid_fan, "fan axioms violated");
        r.fan_violations = std::move(violations);
        return r;
    }
    if (!is_pure(f)) return reject(RejectionKind::not_pure, "fan is not pure");
    if (v.size() != f.rank)
        throw std::invalid_argument("v length does not match fan rank");
    if (!is_generic(f, v)) return reject(RejectionKind::not_generic, "v is not generic");

    const std::size_t m = f.max_cones.size();
    CellularCertificate cert;
    cert.v = v;
    cert.tau.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        cert.tau[i] = distinguished_face(f.max_cones[i], v);

    BbOrder bb = bb_order(f.max_cones, cert.tau);
    if (!bb.order) {
        RejectionReport r = reject(RejectionKind::ordering_cycle,
                                   "no ordering satisfies the cell-closure property");
        r.cycle = bb.cycle;
        return r;
    }
    cert.order = *bb.order;
    cert.position.resize(m);
    for (std::size_t p = 0; p < m; ++p) cert.position[cert.order[p]] = p;

    cert.tau_quotient.resize(m);
    cert.quotient_cones.resize(m);
    cert.cell_characters.resize(m);
    cert.cell_dims.resize(m);
    for (std::size_t p = 0; p < m; ++p) {
        std::size_t i = cert.order[p];
        cert.tau_quotient[i] = quotient(f.rank, cert.tau[i].rays);
        cert.quotient_cones[i] =
            quotient_cone(f.max_cones[i], cert.tau[i], cert.tau_quotient[i]);
        if (!is_smooth(cert.quotient_cones[i])) {
            RejectionReport r =
                reject(RejectionKind::non_smooth_quotient,
                       "non-smooth quotient cone at maximal cone " + std::to_string(i + 1));
            r.cone_index = i;
            r.tau = cert.tau[i];
            return r;
        }
        // Dual basis of the quotient-cone rays, pulled back along the
        // projection; the pullback lands in tau_i^perp automatically.
        const Cone& qc = cert.quotient_cones[i];
        cert.cell_dims[i] = qc.dim;
        if (qc.dim > 0) {
            Mat duals = dual_basis(Mat::from_columns(qc.ambient_rank, qc.rays));
            for (std::size_t j = 0; j < qc.rays.size(); ++j)
                cert.cell_characters[i].push_back(
                    vecmat(duals.column(j), cert.tau_quotient[i].projection));
        }
    }

    // Certificate invariants; failures here indicate a bug, not bad input.
    if (!cert.tau[cert.order[0]].is_zero_cone())
        throw std::logic_error("first cell's distinguished face is not the origin");
    for (std::size_t i = 0; i < m; ++i) {
        for (const Vec& u : cert.cell_characters[i])
            for (const Vec& w : cert.tau[i].rays)
                if (dot(u, w) != 0) throw std::logic_error("cell character not in tau_perp");
        const Cone& qc = cert.quotient_cones[i];
        for (std::size_t jj = 0; jj < cert.cell_characters[i].size(); ++jj)
            for (std::size_t rr = 0; rr < qc.rays.size(); ++rr) {
                Vec lift = cert.tau_quotient[i].lift(qc.rays[rr]);
                Int expect = jj == rr ? 1 : 0;
                if (dot(cert.cell_characters[i][jj], lift) != expect)
                    throw std::logic_error("cell character pairing is not Kronecker");
            }
    }
    return cert;
}

}  // namespace tkring
