#include <catch2/catch_amalgamated.hpp>
#include <tkring/lattice.hpp>

#include <random>

using namespace tkring;

namespace {

Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

bool in_lattice(const std::vector<Vec>& basis, const Vec& x) {
    if (basis.empty()) return is_zero(x);
    auto sol = solve_integer(Mat::from_columns(x.size(), basis), x);
    return sol.has_value();
}

bool same_lattice(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.size() != b.size()) return false;
    for (const Vec& x : a)
        if (!in_lattice(b, x)) return false;
    for (const Vec& x : b)
        if (!in_lattice(a, x)) return false;
    return true;
}

void check_snf(const Mat& a) {
    SmithForm f = smith_normal_form(a);
    REQUIRE(matmul(matmul(f.u, a), f.v) == f.s);
    REQUIRE(matmul(f.u, f.u_inv) == Mat::identity(a.rows));
    REQUIRE(matmul(f.v, f.v_inv) == Mat::identity(a.cols));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (i != j) REQUIRE(f.s(i, j) == 0);
    const std::size_t steps = std::min(a.rows, a.cols);
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        REQUIRE(f.s(i, i) >= 0);
        if (f.s(i + 1, i + 1) != 0) {
            REQUIRE(f.s(i, i) != 0);
            REQUIRE(f.s(i + 1, i + 1) % f.s(i, i) == 0);
        }
    }
}

}  // namespace

TEST_CASE("smith normal form on worked examples") {
    {
        Mat a(2, 2);
        a(0, 0) = 2;
        a(1, 1) = 3;
        SmithForm f = smith_normal_form(a);
        REQUIRE(f.s(0, 0) == 1);
        REQUIRE(f.s(1, 1) == 6);
        check_snf(a);
    }
    {
        Mat a = Mat::identity(3);
        SmithForm f = smith_normal_form(a);
        REQUIRE(f.s == Mat::identity(3));
        check_snf(a);
    }
    {
        // rows are the sigma_2 generators (2,1) and (4,1)
        Mat a(2, 2);
        a(0, 0) = 2;
        a(0, 1) = 1;
        a(1, 0) = 4;
        a(1, 1) = 1;
        SmithForm f = smith_normal_form(a);
        REQUIRE(f.s(0, 0) == 1);
        REQUIRE(f.s(1, 1) == 2);
        check_snf(a);
    }
}

TEST_CASE("smith normal form randomized properties") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        Mat a(dim(rng), dim(rng));
        for (auto& x : a.a) x = entry(rng);
        check_snf(a);
    }
}

TEST_CASE("primitive vectors") {
    REQUIRE(primitive(vec({4, 2})) == vec({2, 1}));
    REQUIRE(primitive(vec({2, 1})) == vec({2, 1}));
    REQUIRE(primitive(vec({0, -3})) == vec({0, -1}));
    REQUIRE_THROWS_AS(primitive(vec({0, 0})), std::invalid_argument);
}

TEST_CASE("saturation of sublattices") {
    REQUIRE(same_lattice(saturate(2, {vec({2, 1})}), {vec({2, 1})}));
    REQUIRE(same_lattice(saturate(2, {vec({2, 0})}), {vec({1, 0})}));
    REQUIRE(same_lattice(saturate(2, {vec({2, 1}), vec({4, 1})}),
                         {vec({1, 0}), vec({0, 1})}));
    REQUIRE(saturate(2, {}).empty());

    // idempotence and SNF-of-saturated-basis-is-identity on random inputs
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-6, 6), count(1, 3), rank(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = rank(rng);
        std::vector<Vec> vs;
        for (int k = count(rng); k > 0; --k) {
            Vec v(n);
            for (auto& x : v) x = entry(rng);
            if (!is_zero(v)) vs.push_back(v);
        }
        auto basis = saturate(n, vs);
        REQUIRE(same_lattice(saturate(n, basis), basis));
        if (!basis.empty()) {
            SmithForm f = smith_normal_form(Mat::from_columns(n, basis));
            for (std::size_t i = 0; i < basis.size(); ++i) REQUIRE(f.diag(i) == 1);
        }
        for (const Vec& v : vs) REQUIRE(in_lattice(basis, v));
    }
}

TEST_CASE("quotient lattices") {
    {
        QuotientLattice q = quotient(2, {vec({2, 1})});
        REQUIRE(q.quotient_rank() == 1);
        REQUIRE(is_zero(q.project(vec({2, 1}))));
        REQUIRE(matmul(q.projection, q.section) == Mat::identity(1));
    }
    {
        QuotientLattice q = quotient(3, {});
        REQUIRE(q.projection == Mat::identity(3));
    }
    {
        // tau_4 of the three-dimensional nine-cone example
        QuotientLattice q = quotient(3, {vec({0, 0, 1})});
        REQUIRE(q.quotient_rank() == 2);
        REQUIRE(is_zero(q.project(vec({0, 0, 1}))));
        REQUIRE(matmul(q.projection, q.section) == Mat::identity(2));
    }

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-5, 5), count(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 4;
        std::vector<Vec> vs;
        for (int k = count(rng); k > 0; --k) {
            Vec v(n);
            for (auto& x : v) x = entry(rng);
            if (!is_zero(v)) vs.push_back(v);
        }
        QuotientLattice q = quotient(n, vs);
        REQUIRE(matmul(q.projection, q.section) == Mat::identity(q.quotient_rank()));
        for (const Vec& v : vs) REQUIRE(is_zero(q.project(v)));
        for (std::size_t j = 0; j < q.sub_basis.cols; ++j)
            REQUIRE(is_zero(q.project(q.sub_basis.column(j))));
        if (q.sub_basis.cols > 0) {
            SmithForm f = smith_normal_form(q.sub_basis);
            for (std::size_t i = 0; i < q.sub_basis.cols; ++i) REQUIRE(f.diag(i) == 1);
        }
    }
}

TEST_CASE("dual bases") {
    {
        Mat b = Mat::from_columns(2, {vec({1, 0}), vec({4, 1})});
        Mat d = dual_basis(b);
        REQUIRE(d.column(0) == vec({1, -4}));
        REQUIRE(d.column(1) == vec({0, 1}));
    }
    REQUIRE(dual_basis(Mat::identity(4)) == Mat::identity(4));
    {
        Mat b = Mat::from_columns(2, {vec({2, 1}), vec({1, 1})});
        Mat d = dual_basis(b);
        REQUIRE(d.column(0) == vec({1, -1}));
        REQUIRE(d.column(1) == vec({-1, 2}));
    }
    {
        Mat b = Mat::from_columns(2, {vec({2, 0}), vec({0, 1})});
        REQUIRE_THROWS_AS(dual_basis(b), std::invalid_argument);
    }

    // Kronecker pairing identity on random unimodular matrices built from
    // random elementary operations.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3), ops(3, 12);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 3;
        Mat b = Mat::identity(n);
        int k = ops(rng);
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        while (k-- > 0) {
            std::size_t i = idx(rng), j = idx(rng);
            if (i == j) continue;
            Int q = entry(rng);
            for (std::size_t r = 0; r < n; ++r) b(r, i) += q * b(r, j);
        }
        Mat d = dual_basis(b);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                REQUIRE(dot(d.column(i), b.column(j)) == (i == j ? 1 : 0));
    }
}

TEST_CASE("annihilators") {
    {
        auto a = annihilator(2, {vec({4, 1})});
        REQUIRE(a.size() == 1);
        REQUIRE(a[0] == vec({1, -4}));
    }
    REQUIRE(annihilator(2, {vec({1, 0}), vec({0, 1})}).empty());
    {
        auto a = annihilator(2, {vec({-1, -1})});
        REQUIRE(a.size() == 1);
        REQUIRE(a[0] == vec({1, -1}));
    }

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> entry(-5, 5), count(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 4;
        std::vector<Vec> vs;
        for (int k = count(rng); k > 0; --k) {
            Vec v(n);
            for (auto& x : v) x = entry(rng);
            vs.push_back(v);
        }
        auto a = annihilator(n, vs);
        for (const Vec& u : a) {
            REQUIRE(content(u) == 1);
            for (const Vec& w : vs) REQUIRE(dot(u, w) == 0);
        }
    }
}

TEST_CASE("integer linear solve") {
    Mat a = Mat::from_rows(2, {vec({2, 4}), vec({1, 1})});
    auto sol = solve_integer(a, vec({6, 2}));
    REQUIRE(sol.has_value());
    REQUIRE(matvec(a, *sol) == vec({6, 2}));

    REQUIRE_FALSE(solve_integer(Mat::from_rows(1, {vec({2})}), vec({3})).has_value());
}
