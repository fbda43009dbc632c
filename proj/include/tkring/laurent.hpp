#pragma once

// Sparse Laurent polynomials with integer coefficients, modelling the
// representation ring Z[M] of the compact torus: exponent vector -> nonzero
// coefficient.  Includes equivariant Euler classes 1 - e^u, reduction modulo
// the ideals (1 - e^chi) via lattice quotients of M, and exact division.

#include <tkring/lattice.hpp>

#include <map>
#include <utility>

namespace tkring {

struct LaurentPoly {
    std::size_t rank = 0;
    std::map<Vec, Int> terms;  // canonical: no zero coefficients

    bool is_zero() const { return terms.empty(); }

    bool operator==(const LaurentPoly& o) const {
        return rank == o.rank && terms == o.terms;
    }
};

inline LaurentPoly laurent_zero(std::size_t rank) { return {rank, {}}; }

inline LaurentPoly laurent_monomial(std::size_t rank, const Vec& exponent, Int coeff) {
    if (exponent.size() != rank)
        throw std::invalid_argument("exponent length does not match rank");
    LaurentPoly p{rank, {}};
    if (coeff != 0) p.terms.emplace(exponent, std::move(coeff));
    return p;
}

inline LaurentPoly laurent_one(std::size_t rank) {
    return laurent_monomial(rank, Vec(rank), 1);
}

inline void add_term(LaurentPoly& p, const Vec& exponent, const Int& coeff) {
    if (coeff == 0) return;
    auto it = p.terms.find(exponent);
    if (it == p.terms.end()) {
        p.terms.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) p.terms.erase(it);
    }
}

inline LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.rank != g.rank) throw std::invalid_argument("rank mismatch");
    LaurentPoly r = f;
    for (const auto& [e, c] : g.terms) add_term(r, e, c);
    return r;
}

inline LaurentPoly neg(const LaurentPoly& f) {
    LaurentPoly r{f.rank, {}};
    for (const auto& [e, c] : f.terms) r.terms.emplace(e, -c);
    return r;
}

inline LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g) {
    return add(f, neg(g));
}

inline LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.rank != g.rank) throw std::invalid_argument("rank mismatch");
    LaurentPoly r{f.rank, {}};
    for (const auto& [e1, c1] : f.terms)
        for (const auto& [e2, c2] : g.terms) {
            Vec e(f.rank);
            for (std::size_t i = 0; i < f.rank; ++i) e[i] = e1[i] + e2[i];
            add_term(r, e, c1 * c2);
        }
    return r;
}

inline LaurentPoly scalar_mul(const Int& a, const LaurentPoly& f) {
    LaurentPoly r{f.rank, {}};
    if (a == 0) return r;
    for (const auto& [e, c] : f.terms) r.terms.emplace(e, a * c);
    return r;
}

// The equivariant Euler class of the character u, with the 1 - e^{+u}
// convention; euler(0) = 0.
inline LaurentPoly euler(const Vec& u) {
    LaurentPoly p = laurent_one(u.size());
    add_term(p, u, Int(-1));
    return p;
}

// Exponent substitution along a lattice automorphism; a ring automorphism.
inline LaurentPoly transform_exponents(const LaurentPoly& f, const Mat& t) {
    LaurentPoly r{t.rows, {}};
    for (const auto& [e, c] : f.terms) r.terms.emplace(matvec(t, e), c);
    return r;
}

// ---------------------------------------------------------------------------
// Quotient rings Z[M / L] for saturated sublattices L of M.  Elements carry
// the quotient lattice whose projection fixes their exponent coordinates.
// ---------------------------------------------------------------------------

struct QuotientRingElem {
    QuotientLattice lattice;   // quotient of M
    std::map<Vec, Int> terms;  // exponents in projected coordinates

    bool is_zero() const { return terms.empty(); }

    bool operator==(const QuotientRingElem& o) const {
        return lattice.projection == o.lattice.projection && terms == o.terms;
    }
};

inline QuotientRingElem project_to_quotient(const LaurentPoly& f, QuotientLattice q) {
    QuotientRingElem r;
    r.lattice = std::move(q);
    for (const auto& [e, c] : f.terms) {
        Vec pe = r.lattice.project(e);
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

// Image of f in Z[M]/(1 - e^chi) = Z[M / Z chi] for a primitive character.
inline QuotientRingElem reduce_mod_character(const LaurentPoly& f, const Vec& chi) {
    if (is_zero(chi) || content(chi) != 1)
        throw std::invalid_argument("character must be primitive and nonzero");
    return project_to_quotient(f, quotient(f.rank, {chi}));
}

// Image of f in Z[M/(sigma_perp ∩ M)]; valid because the perp basis spans a
// saturated sublattice, which the function checks.
inline QuotientRingElem reduce_mod_ideal(const LaurentPoly& f,
                                         const std::vector<Vec>& perp_basis) {
    if (!perp_basis.empty()) {
        SmithForm s = smith_normal_form(Mat::from_columns(f.rank, perp_basis));
        if (s.rank != perp_basis.size())
            throw std::invalid_argument("perp basis is not linearly independent");
        for (std::size_t i = 0; i < perp_basis.size(); ++i)
            if (s.diag(i) != 1) throw std::invalid_argument("perp basis is not saturated");
    }
    return project_to_quotient(f, quotient(f.rank, perp_basis));
}

inline bool divides_euler(const LaurentPoly& f, const Vec& chi) {
    return reduce_mod_character(f, chi).is_zero();
}

// Quotient rings are Laurent rings in the projected coordinates, so their
// arithmetic is the same sparse merge.
inline QuotientRingElem qadd(const QuotientRingElem& a, const QuotientRingElem& b) {
    if (!(a.lattice.projection == b.lattice.projection))
        throw std::invalid_argument("quotient lattice mismatch");
    QuotientRingElem r = a;
    for (const auto& [e, c] : b.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

inline QuotientRingElem qmul(const QuotientRingElem& a, const QuotientRingElem& b) {
    if (!(a.lattice.projection == b.lattice.projection))
        throw std::invalid_argument("quotient lattice mismatch");
    QuotientRingElem r;
    r.lattice = a.lattice;
    const std::size_t n = a.lattice.quotient_rank();
    for (const auto& [e1, c1] : a.terms)
        for (const auto& [e2, c2] : b.terms) {
            Vec e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(e), c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Exact division by 1 - e^w.
//
// A unimodular change of exponent coordinates sends w to g*e_1 (g = content
// of w).  The polynomial then splits along the remaining coordinates into
// univariate Laurent polynomials in t = e^{e_1}, each divided by 1 - t^g by
// leading-term elimination; t is a unit, so only the exponent spread matters.
// ---------------------------------------------------------------------------

inline LaurentPoly div_exact_one_minus(const LaurentPoly& f, const Vec& w) {
    if (w.size() != f.rank) throw std::invalid_argument("rank mismatch");
    if (is_zero(w)) throw std::invalid_argument("cannot divide by zero Euler class");
    if (f.is_zero()) return laurent_zero(f.rank);

    const Int g = content(w);
    SmithForm s = smith_normal_form(Mat::from_columns(f.rank, {primitive(w)}));
    Mat t = s.u, t_inv = s.u_inv;
    if (matvec(t, primitive(w))[0] == -1) {
        for (std::size_t j = 0; j < f.rank; ++j) t(0, j) = -t(0, j);
        for (std::size_t i = 0; i < f.rank; ++i) t_inv(i, 0) = -t_inv(i, 0);
    }

    LaurentPoly moved = transform_exponents(f, t);

    // fibers over the coordinates 2..n
    std::map<Vec, std::map<Int, Int>> fibers;
    for (const auto& [e, c] : moved.terms) {
        Vec tail(e.begin() + 1, e.end());
        fibers[tail][e[0]] = c;
    }

    LaurentPoly result{f.rank, {}};
    for (auto& [tail, fiber] : fibers) {
        std::map<Int, Int> quot;
        while (!fiber.empty()) {
            auto hi = std::prev(fiber.end());
            if (hi->first - fiber.begin()->first < g)
                throw std::domain_error("division remainder nonzero");
            Int a = hi->first, c = hi->second;
            fiber.erase(hi);
            // -c * t^{a-g} * (1 - t^g) removes c * t^a
            quot[a - g] += -c;
            auto [it, fresh] = fiber.emplace(a - g, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) fiber.erase(it);
            }
        }
        for (const auto& [a, c] : quot) {
            if (c == 0) continue;
            Vec e(f.rank);
            e[0] = a;
            for (std::size_t i = 1; i < f.rank; ++i) e[i] = tail[i - 1];
            result.terms.emplace(std::move(e), c);
        }
    }
    return transform_exponents(result, t_inv);
}

// Exact quotient f / (1 - e^chi) for primitive chi; throws when f is not in
// the ideal.
inline LaurentPoly div_exact_euler(const LaurentPoly& f, const Vec& chi) {
    if (is_zero(chi) || content(chi) != 1)
        throw std::invalid_argument("character must be primitive and nonzero");
    return div_exact_one_minus(f, chi);
}

}  // namespace tkring
