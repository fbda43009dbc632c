#pragma once

// Exact integer linear algebra over free abelian groups Z^n: Smith normal
// form with recorded unimodular transforms, saturation of sublattices,
// quotient lattices with chosen sections, dual bases and annihilators.
// Everything is arbitrary precision; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tkring {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Row-major dense integer matrix.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat from_columns(std::size_t rank, const std::vector<Vec>& cols_in) {
        Mat m(rank, cols_in.size());
        for (std::size_t j = 0; j < cols_in.size(); ++j) {
            if (cols_in[j].size() != rank)
                throw std::invalid_argument("column length does not match ambient rank");
            for (std::size_t i = 0; i < rank; ++i) m(i, j) = cols_in[j][i];
        }
        return m;
    }

    static Mat from_rows(std::size_t rank, const std::vector<Vec>& rows_in) {
        Mat m(rows_in.size(), rank);
        for (std::size_t i = 0; i < rows_in.size(); ++i) {
            if (rows_in[i].size() != rank)
                throw std::invalid_argument("row length does not match ambient rank");
            for (std::size_t j = 0; j < rank; ++j) m(i, j) = rows_in[i][j];
        }
        return m;
    }

    Vec column(std::size_t j) const {
        Vec c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Vec row(std::size_t i) const {
        Vec r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = (*this)(i, j);
        return r;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline Mat matmul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: dimension mismatch");
    Mat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& xik = x(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

inline Vec matvec(const Mat& m, const Vec& x) {
    if (m.cols != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
    Vec y(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) y[i] += m(i, j) * x[j];
    return y;
}

// Row vector times matrix; used for pulling functionals back along projections.
inline Vec vecmat(const Vec& x, const Mat& m) {
    if (m.rows != x.size()) throw std::invalid_argument("vecmat: dimension mismatch");
    Vec y(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.rows; ++i) y[j] += x[i] * m(i, j);
    return y;
}

inline Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

inline Int dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline bool is_zero(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](const Int& e) { return e == 0; });
}

inline Int content(const Vec& x) {
    Int g = 0;
    for (const Int& e : x) g = gcd_int(g, e);
    return g;
}

// w / gcd(entries); keeps the ray direction.
inline Vec primitive(const Vec& w) {
    Int g = content(w);
    if (g == 0) throw std::invalid_argument("zero has no primitive direction");
    Vec p(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) p[i] = w[i] / g;
    return p;
}

// Normal form for vectors defined only up to sign: first nonzero entry positive.
inline Vec sign_normalized(Vec w) {
    for (const Int& e : w) {
        if (e == 0) continue;
        if (e < 0)
            for (Int& x : w) x = -x;
        break;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Smith normal form.
//
// smith_normal_form(A) returns S = U*A*V with U, V unimodular and S diagonal
// with d_1 | d_2 | ..., all diagonal entries nonnegative.  The inverses of U
// and V are tracked alongside so that callers can read off saturated bases
// and sections without a separate inversion.
// ---------------------------------------------------------------------------

struct SmithForm {
    Mat s;
    Mat u, u_inv;  // u * u_inv = I
    Mat v, v_inv;  // v * v_inv = I
    std::size_t rank = 0;

    Int diag(std::size_t i) const { return s(i, i); }
};

inline SmithForm smith_normal_form(const Mat& input) {
    SmithForm f;
    f.s = input;
    const std::size_t r = input.rows, c = input.cols;
    f.u = Mat::identity(r);
    f.u_inv = Mat::identity(r);
    f.v = Mat::identity(c);
    f.v_inv = Mat::identity(c);
    Mat& s = f.s;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c; ++k) std::swap(s(i, k), s(j, k));
        for (std::size_t k = 0; k < r; ++k) std::swap(f.u(i, k), f.u(j, k));
        for (std::size_t k = 0; k < r; ++k) std::swap(f.u_inv(k, i), f.u_inv(k, j));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < r; ++k) std::swap(s(k, i), s(k, j));
        for (std::size_t k = 0; k < c; ++k) std::swap(f.v(k, i), f.v(k, j));
        for (std::size_t k = 0; k < c; ++k) std::swap(f.v_inv(i, k), f.v_inv(j, k));
    };
    // row_i -= q * row_j
    auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < c; ++k) s(i, k) -= q * s(j, k);
        for (std::size_t k = 0; k < r; ++k) f.u(i, k) -= q * f.u(j, k);
        for (std::size_t k = 0; k < r; ++k) f.u_inv(k, j) += q * f.u_inv(k, i);
    };
    // col_i -= q * col_j
    auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < r; ++k) s(k, i) -= q * s(k, j);
        for (std::size_t k = 0; k < c; ++k) f.v(k, i) -= q * f.v(k, j);
        for (std::size_t k = 0; k < c; ++k) f.v_inv(j, k) += q * f.v_inv(i, k);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t k = 0; k < c; ++k) s(i, k) = -s(i, k);
        for (std::size_t k = 0; k < r; ++k) f.u(i, k) = -f.u(i, k);
        for (std::size_t k = 0; k < r; ++k) f.u_inv(k, i) = -f.u_inv(k, i);
    };

    const std::size_t steps = std::min(r, c);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        // Pivot: nonzero entry of smallest magnitude in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (s(i, j) == 0) continue;
                if (!found || abs_int(s(i, j)) < abs_int(s(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        // Euclidean clearing of row t and column t.  Truncating division
        // leaves remainders strictly smaller than the pivot, so swapping a
        // nonzero remainder into the pivot position strictly shrinks it.
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s(i, t) == 0) continue;
                row_op(i, t, Int(s(i, t) / s(t, t)));
                if (s(i, t) != 0) {
                    swap_rows(t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (s(t, j) == 0) continue;
                col_op(j, t, Int(s(t, j) / s(t, t)));
                if (s(t, j) != 0) {
                    swap_cols(t, j);
                    again = true;
                }
            }
        }

        // Divisibility: make the pivot divide the whole trailing block.
        bool fixed = true;
        while (fixed) {
            fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j) {
                    if (s(i, j) % s(t, t) == 0) continue;
                    row_op(t, i, Int(-1));  // row_t += row_i
                    again = true;
                    while (again) {
                        again = false;
                        for (std::size_t i2 = t + 1; i2 < r; ++i2) {
                            if (s(i2, t) == 0) continue;
                            row_op(i2, t, Int(s(i2, t) / s(t, t)));
                            if (s(i2, t) != 0) {
                                swap_rows(t, i2);
                                again = true;
                            }
                        }
                        for (std::size_t j2 = t + 1; j2 < c; ++j2) {
                            if (s(t, j2) == 0) continue;
                            col_op(j2, t, Int(s(t, j2) / s(t, t)));
                            if (s(t, j2) != 0) {
                                swap_cols(t, j2);
                                again = true;
                            }
                        }
                    }
                    fixed = true;
                }
        }

        if (s(t, t) < 0) negate_row(t);
    }
    f.rank = 0;
    for (std::size_t i = 0; i < steps; ++i)
        if (s(i, i) != 0) ++f.rank;
    return f;
}

// Exact inverse of a unimodular matrix; throws if |det| != 1.
inline Mat inverse_unimodular(const Mat& b) {
    if (b.rows != b.cols) throw std::invalid_argument("not a lattice basis");
    SmithForm f = smith_normal_form(b);
    for (std::size_t i = 0; i < b.rows; ++i)
        if (f.diag(i) != 1) throw std::invalid_argument("not a lattice basis");
    // U*B*V = I  =>  B^{-1} = V*U.
    return matmul(f.v, f.u);
}

inline bool is_unimodular(const Mat& b) {
    if (b.rows != b.cols) return false;
    SmithForm f = smith_normal_form(b);
    for (std::size_t i = 0; i < b.rows; ++i)
        if (f.diag(i) != 1) return false;
    return true;
}

// Saturated basis of {x in Z^cols : A x = 0}, one vector per kernel dimension,
// sign-normalized.  Columns of V beyond the rank of A form the kernel.
inline std::vector<Vec> kernel_basis(const Mat& a) {
    SmithForm f = smith_normal_form(a);
    std::vector<Vec> basis;
    for (std::size_t j = f.rank; j < a.cols; ++j)
        basis.push_back(sign_normalized(f.v.column(j)));
    return basis;
}

// Basis of {u in M : <u, w> = 0 for every input w}; inputs live in N = Z^rank.
inline std::vector<Vec> annihilator(std::size_t rank, const std::vector<Vec>& vectors) {
    if (vectors.empty()) {
        std::vector<Vec> basis;
        Mat id = Mat::identity(rank);
        for (std::size_t j = 0; j < rank; ++j) basis.push_back(id.column(j));
        return basis;
    }
    return kernel_basis(Mat::from_rows(rank, vectors));
}

// Basis of (R-span of the inputs) ∩ Z^rank, i.e. the saturation of the
// generated sublattice.  Columns of U^{-1} indexed below the rank.
inline std::vector<Vec> saturate(std::size_t rank, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return {};
    SmithForm f = smith_normal_form(Mat::from_columns(rank, vectors));
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < f.rank; ++j) basis.push_back(f.u_inv.column(j));
    return basis;
}

// ---------------------------------------------------------------------------
// Quotient lattices N -> N/N_tau with a chosen integral section.
// ---------------------------------------------------------------------------

struct QuotientLattice {
    std::size_t ambient_rank = 0;
    Mat sub_basis;    // columns: saturated basis of N_tau
    Mat projection;   // (n-k) x n, surjective, kills sub_basis
    Mat section;      // n x (n-k), projection * section = I

    std::size_t quotient_rank() const { return projection.rows; }

    Vec project(const Vec& x) const { return matvec(projection, x); }
    Vec lift(const Vec& y) const { return matvec(section, y); }
};

inline QuotientLattice quotient(std::size_t ambient_rank, const std::vector<Vec>& sub) {
    QuotientLattice q;
    q.ambient_rank = ambient_rank;
    if (sub.empty()) {
        q.sub_basis = Mat(ambient_rank, 0);
        q.projection = Mat::identity(ambient_rank);
        q.section = Mat::identity(ambient_rank);
        return q;
    }
    SmithForm f = smith_normal_form(Mat::from_columns(ambient_rank, sub));
    const std::size_t k = f.rank;
    q.sub_basis = Mat(ambient_rank, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < ambient_rank; ++i) q.sub_basis(i, j) = f.u_inv(i, j);
    // Rows k..n of U vanish on the sublattice; the matching columns of U^{-1}
    // provide a section.
    q.projection = Mat(ambient_rank - k, ambient_rank);
    q.section = Mat(ambient_rank, ambient_rank - k);
    for (std::size_t i = k; i < ambient_rank; ++i)
        for (std::size_t j = 0; j < ambient_rank; ++j) q.projection(i - k, j) = f.u(i, j);
    for (std::size_t j = k; j < ambient_rank; ++j)
        for (std::size_t i = 0; i < ambient_rank; ++i) q.section(i, j - k) = f.u_inv(i, j);
    return q;
}

// Columns u_j with <u_j, b_r> = delta_{jr} for the columns b_r of B.
inline Mat dual_basis(const Mat& b) {
    return transpose(inverse_unimodular(b));
}

// One integer solution of A x = b, if any.  Free coordinates are set to zero.
inline std::optional<Vec> solve_integer(const Mat& a, const Vec& b) {
    if (a.rows != b.size()) throw std::invalid_argument("solve_integer: dimension mismatch");
    SmithForm f = smith_normal_form(a);
    Vec ub = matvec(f.u, b);
    Vec y(a.cols);
    const std::size_t steps = std::min(a.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        if (i < steps && f.diag(i) != 0) {
            if (ub[i] % f.diag(i) != 0) return std::nullopt;
            y[i] = ub[i] / f.diag(i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return matvec(f.v, y);
}

}  // namespace tkring
