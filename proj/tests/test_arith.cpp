#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "gxb/arith.hpp"

using namespace gxb;

namespace {

// Cofactor expansion; independent of the Bareiss routine under test.
long long det_by_expansion(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const long long term = m[0][c] * det_by_expansion(minor);
        total += (c % 2 ? -term : term);
    }
    return total;
}

// gcd of all k x k minors (the k-th determinantal divisor).
long long determinantal_divisor(const IntMatrix& a, int k) {
    long long g = 0;
    std::vector<int> rows(k), cols(k);
    std::function<void(int, int)> pick_rows;
    std::function<void(int, int)> pick_cols;
    pick_cols = [&](int i, int start) {
        if (i == k) {
            std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) m[r][c] = a(rows[r], cols[c]);
            g = std::gcd(g, det_by_expansion(m));
            return;
        }
        for (int c = start; c < a.cols(); ++c) {
            cols[i] = c;
            pick_cols(i + 1, c + 1);
        }
    };
    pick_rows = [&](int i, int start) {
        if (i == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < a.rows(); ++r) {
            rows[i] = r;
            pick_rows(i + 1, r + 1);
        }
    };
    pick_rows(0, 0);
    return g < 0 ? -g : g;
}

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

bool is_diagonal(const IntMatrix& d) {
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    return true;
}

} // namespace

TEST_CASE("roots of unity by exponent") {
    UnityExponent a(3, 4), b(1, 4);
    CHECK((a * b).is_one());
    CHECK((a / b).value() == 2);
    CHECK(a.inverse().value() == 1);
    CHECK(UnityExponent(-1, 6).value() == 5);
    CHECK(UnityExponent(1, 2).lift(6) == UnityExponent(3, 6));
    CHECK((UnityExponent(1, 2) * UnityExponent(1, 3)) == UnityExponent(5, 6));
    CHECK_THROWS_AS(UnityExponent(1, 4).lift(6), Error);
    CHECK_THROWS_AS(UnityExponent(1, 0), Error);
}

TEST_CASE("integer helpers") {
    CHECK(mod_floor(-7, 3) == 2);
    long long x, y;
    CHECK(ext_gcd(12, 18, x, y) == 6);
    CHECK(12 * x + 18 * y == 6);
    CHECK(ext_gcd(-4, 6, x, y) == 2);
    CHECK(-4 * x + 6 * y == 2);
    CHECK(ext_gcd(0, 0, x, y) == 0);
    CHECK_THROWS_AS(checked_mul(1LL << 40, 1LL << 40), std::overflow_error);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<long long>::max(), 1), std::overflow_error);
}

TEST_CASE("Smith normal form of small examples") {
    IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto s = smith_normal_form(a);
    CHECK(s.factors == std::vector<long long>{2, 6, 12});

    IntMatrix b{{2, 0}, {0, 3}};
    CHECK(smith_normal_form(b).factors == std::vector<long long>{1, 6});

    IntMatrix z(2, 3);
    CHECK(smith_normal_form(z).factors.empty());

    CHECK(determinant(a) == -144);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
}

TEST_CASE("Smith normal form reconstructs and matches determinantal divisors") {
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 4);
        const int c = 1 + static_cast<int>(rng() % 4);
        auto a = random_matrix(rng, r, c, -9, 9);
        if (trial % 5 == 0)  // force some rank deficiency
            for (int j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j);
        CAPTURE(trial);
        auto s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(is_diagonal(s.D));
        CHECK(s.V * s.V_inv == IntMatrix::identity(c));
        CHECK(std::llabs(determinant(s.U)) == 1);
        CHECK(std::llabs(determinant(s.V)) == 1);
        for (int i = 0; i < s.rank(); ++i) {
            CHECK(s.factors[i] > 0);
            CHECK(s.D(i, i) == s.factors[i]);
            if (i > 0) CHECK(s.factors[i] % s.factors[i - 1] == 0);
        }
        // Oracle: d_1 ... d_k equals the k-th determinantal divisor.
        long long prod = 1;
        for (int k = 1; k <= std::min(r, c); ++k) {
            const long long dk = determinantal_divisor(a, k);
            if (k <= s.rank()) {
                prod *= s.factors[k - 1];
                CHECK(prod == dk);
            } else {
                CHECK(dk == 0);
            }
        }
    }
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        auto a = random_matrix(rng, n, n, -6, 6);
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
        CHECK(determinant(a) == det_by_expansion(m));
    }
}

TEST_CASE("Smith normal form reports overflow") {
    IntMatrix a{{1LL << 62, 3}, {5, 1LL << 62}};
    CHECK_THROWS_AS(smith_normal_form(a), std::overflow_error);
}

TEST_CASE("congruence solutions equal brute-force enumeration") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const long long n = 2 + static_cast<long long>(rng() % 11);
        const int rows = 1 + static_cast<int>(rng() % 3);
        const int cols = 1 + static_cast<int>(rng() % 3);
        auto a = random_matrix(rng, rows, cols, -12, 12);
        std::vector<long long> b(rows);
        for (auto& x : b) x = static_cast<long long>(rng() % n);
        CAPTURE(trial);

        std::set<std::vector<long long>> expect;
        std::vector<long long> x(cols, 0);
        while (true) {
            bool ok = true;
            for (int i = 0; i < rows; ++i) {
                long long acc = 0;
                for (int j = 0; j < cols; ++j) acc += a(i, j) * x[j];
                ok = ok && mod_floor(acc - b[i], n) == 0;
            }
            if (ok) expect.insert(x);
            int j = 0;
            for (; j < cols; ++j) {
                if (++x[j] < n) break;
                x[j] = 0;
            }
            if (j == cols) break;
        }

        auto sol = solve_congruences(a, b, n);
        CHECK(sol.feasible == !expect.empty());
        CHECK(sol.count() == static_cast<long long>(expect.size()));
        std::set<std::vector<long long>> got;
        long long visits = 0;
        sol.for_each([&](const std::vector<long long>& v) {
            got.insert(v);
            ++visits;
            return true;
        });
        CHECK(visits == static_cast<long long>(expect.size()));
        CHECK(got == expect);
    }
}

TEST_CASE("modular diagonalization applies row operations to right-hand sides") {
    IntMatrix a{{2, 4}, {3, 1}};
    std::vector<std::vector<long long>> rhs{{2, 0}};
    auto d = diagonalize_mod(a, 6, &rhs);
    CHECK(d.modulus == 6);
    auto p = d.V * d.V_inv;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(mod_floor(p(i, j) - (i == j), 6) == 0);
    auto sol = solve_congruences(a, {2, 0}, 6);
    REQUIRE(sol.feasible);
    CHECK(mod_floor(2 * sol.particular[0] + 4 * sol.particular[1], 6) == 2);
    CHECK(mod_floor(3 * sol.particular[0] + sol.particular[1], 6) == 0);
    CHECK_FALSE(solve_congruences(a, {1, 0}, 6).feasible);
}

TEST_CASE("for_each stops early") {
    IntMatrix a(1, 2);
    auto sol = solve_congruences(a, {0}, 5);
    CHECK(sol.count() == 25);
    int seen = 0;
    sol.for_each([&](const std::vector<long long>&) { return ++seen < 3; });
    CHECK(seen == 3);
}
