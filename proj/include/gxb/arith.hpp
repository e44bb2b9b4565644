#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gxb/errors.hpp"

namespace gxb {

/// An N-th root of unity exp(2 pi i value / N), stored by its exponent.
class UnityExponent {
public:
    UnityExponent(long long value, long long modulus);

    long long value() const noexcept { return value_; }
    long long modulus() const noexcept { return modulus_; }
    bool is_one() const noexcept { return value_ == 0; }

    /// Same root expressed in mu_m; m must be a multiple of modulus().
    UnityExponent lift(long long m) const;

    UnityExponent operator*(const UnityExponent& o) const;
    UnityExponent operator/(const UnityExponent& o) const;
    UnityExponent inverse() const;

    friend bool operator==(const UnityExponent& a, const UnityExponent& b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }

private:
    long long value_;
    long long modulus_;
};

long long mod_floor(long long a, long long n);
/// Extended gcd: returns g = gcd(a,b) >= 0 and sets x, y with a*x + b*y = g.
long long ext_gcd(long long a, long long b, long long& x, long long& y);
long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    long long& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    long long operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> data_;
};

/// Exact Smith normal form over Z: U * A * V = D with U, V unimodular.
struct SmithDecomposition {
    /// Nonzero invariant factors d_1 | d_2 | ... (all positive).
    std::vector<long long> factors;
    IntMatrix U;
    IntMatrix V;
    IntMatrix V_inv;
    IntMatrix D;
    int rank() const noexcept { return static_cast<int>(factors.size()); }
};

/// Pivoting picks the smallest nonzero |entry|, ties broken by (row, col).
/// Throws std::overflow_error if an intermediate leaves int64.
SmithDecomposition smith_normal_form(const IntMatrix& a);

long long determinant(const IntMatrix& a);

/// Diagonalization of A over Z/N by unimodular row and column operations:
/// (row ops) * A * V = diag(diagonal) mod N.
struct ModularDiagonalization {
    long long modulus = 1;
    int rows = 0;
    int cols = 0;
    /// diagonal[i] for i < min(rows, cols); zero past the rank.
    std::vector<long long> diagonal;
    IntMatrix V;
    IntMatrix V_inv;
};

/// The extra vectors in `rhs` (each of length rows) receive the same row
/// operations as A.
ModularDiagonalization diagonalize_mod(IntMatrix a, long long modulus,
                                       std::vector<std::vector<long long>>* rhs = nullptr);

/// All x in (Z/N)^cols with A x = b (mod N): the set
/// { particular + sum_i c_i kernel[i] : 0 <= c_i < kernel_orders[i] },
/// each element listed exactly once.
struct CongruenceSolution {
    bool feasible = false;
    long long modulus = 1;
    std::vector<long long> particular;
    std::vector<std::vector<long long>> kernel;
    std::vector<long long> kernel_orders;

    /// Number of solutions (0 when infeasible); saturates at INT64_MAX.
    long long count() const;
    /// Visits every solution; stop early by returning false.
    void for_each(const std::function<bool(const std::vector<long long>&)>& visit) const;
};

CongruenceSolution solve_congruences(const IntMatrix& a, const std::vector<long long>& b, long long modulus);

} // namespace gxb
