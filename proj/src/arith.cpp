#include "gxb/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gxb {

long long mod_floor(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

// ---------------------------------------------------------------- UnityExponent

UnityExponent::UnityExponent(long long value, long long modulus) : value_(0), modulus_(modulus) {
    if (modulus <= 0) throw Error(ErrorKind::MalformedInput, "root-of-unity modulus must be positive");
    value_ = mod_floor(value, modulus);
}

UnityExponent UnityExponent::lift(long long m) const {
    if (m <= 0 || m % modulus_ != 0)
        throw Error(ErrorKind::MalformedInput,
                    "cannot lift mu_" + std::to_string(modulus_) + " into mu_" + std::to_string(m));
    return UnityExponent(value_ * (m / modulus_), m);
}

UnityExponent UnityExponent::operator*(const UnityExponent& o) const {
    if (o.modulus_ != modulus_) {
        const long long m = std::lcm(modulus_, o.modulus_);
        return lift(m) * o.lift(m);
    }
    return UnityExponent(value_ + o.value_, modulus_);
}

UnityExponent UnityExponent::operator/(const UnityExponent& o) const { return *this * o.inverse(); }

UnityExponent UnityExponent::inverse() const { return UnityExponent(-value_, modulus_); }

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const long long a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(a, o(k, j)));
        }
    return out;
}

long long determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    // Bareiss fraction-free elimination.
    IntMatrix m = a;
    const int n = m.rows();
    long long sign = 1, prev = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (checked_mul(m(i, j), m(k, k)) - checked_mul(m(i, k), m(k, j))) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------- elimination core

namespace {

// Row/column operations shared by the exact and the modular elimination.
// With modulus 0 arithmetic is exact (overflow-checked), otherwise mod N.
class Eliminator {
public:
    Eliminator(IntMatrix a, long long modulus, bool track_u, std::vector<std::vector<long long>>* rhs)
        : a_(std::move(a)), n_(modulus), rhs_(rhs) {
        if (n_ > 0)
            for (int i = 0; i < a_.rows(); ++i)
                for (int j = 0; j < a_.cols(); ++j) a_(i, j) = mod_floor(a_(i, j), n_);
        if (track_u) u_ = IntMatrix::identity(a_.rows());
        v_ = IntMatrix::identity(a_.cols());
        v_inv_ = IntMatrix::identity(a_.cols());
    }

    long long norm(long long x) const { return n_ > 0 ? mod_floor(x, n_) : x; }
    long long mag(long long x) const {
        // Size used for pivot choice: distance to zero.
        if (n_ > 0) {
            x = mod_floor(x, n_);
            return std::min(x, n_ - x);
        }
        return x < 0 ? -x : x;
    }
    long long add(long long a, long long b) const { return n_ > 0 ? mod_floor(a + b, n_) : checked_add(a, b); }
    long long mul(long long a, long long b) const {
        if (n_ > 0) return mod_floor(static_cast<long long>(static_cast<__int128>(a) * b % n_), n_);
        return checked_mul(a, b);
    }
    // Signed representative with smallest |.|; keeps Euclid steps short mod N.
    long long rep(long long x) const {
        if (n_ <= 0) return x;
        x = mod_floor(x, n_);
        return x > n_ / 2 ? x - n_ : x;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
        if (u_.rows())
            for (int c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
        if (rhs_)
            for (auto& v : *rhs_) std::swap(v[i], v[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
        for (int r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
        for (int c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
    }
    // rows (i, j) <- [[p, q], [r, s]] * rows (i, j); determinant +-1.
    void row_combine(int i, int j, long long p, long long q, long long r, long long s) {
        auto apply = [&](long long& x, long long& y) {
            const long long nx = add(mul(p, x), mul(q, y));
            const long long ny = add(mul(r, x), mul(s, y));
            x = nx;
            y = ny;
        };
        for (int c = 0; c < a_.cols(); ++c) apply(a_(i, c), a_(j, c));
        if (u_.rows())
            for (int c = 0; c < u_.cols(); ++c) apply(u_(i, c), u_(j, c));
        if (rhs_)
            for (auto& v : *rhs_) apply(v[i], v[j]);
    }
    // cols (i, j) <- cols (i, j) * [[p, q], [r, s]]; determinant det = ps - qr = +-1.
    void col_combine(int i, int j, long long p, long long q, long long r, long long s) {
        auto apply = [&](long long& x, long long& y) {
            const long long nx = add(mul(p, x), mul(r, y));
            const long long ny = add(mul(q, x), mul(s, y));
            x = nx;
            y = ny;
        };
        for (int row = 0; row < a_.rows(); ++row) apply(a_(row, i), a_(row, j));
        for (int row = 0; row < v_.rows(); ++row) apply(v_(row, i), v_(row, j));
        // V_inv rows (i, j) <- inverse * rows (i, j).
        const long long det = p * s - q * r;
        const long long ip = s * det, iq = -q * det, ir = -r * det, is = p * det;
        for (int c = 0; c < v_inv_.cols(); ++c) {
            long long& x = v_inv_(i, c);
            long long& y = v_inv_(j, c);
            const long long nx = add(mul(ip, x), mul(iq, y));
            const long long ny = add(mul(ir, x), mul(is, y));
            x = nx;
            y = ny;
        }
    }

    // Clears row t and column t outside the pivot (t, t). Pivot must be nonzero.
    void clear_cross(int t) {
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < a_.rows(); ++i) {
                const long long x = rep(a_(i, t));
                if (x == 0) continue;
                const long long p = rep(a_(t, t));
                if (x % p == 0) {
                    row_combine(t, i, 1, 0, -(x / p), 1);
                } else {
                    long long u, v;
                    const long long g = ext_gcd(p, x, u, v);
                    row_combine(t, i, u, v, -(x / g), p / g);
                }
            }
            for (int j = t + 1; j < a_.cols(); ++j) {
                const long long x = rep(a_(t, j));
                if (x == 0) continue;
                const long long p = rep(a_(t, t));
                if (x % p == 0) {
                    col_combine(t, j, 1, -(x / p), 0, 1);
                } else {
                    long long u, v;
                    const long long g = ext_gcd(p, x, u, v);
                    col_combine(t, j, u, -(x / g), v, p / g);
                    dirty = true;  // column step may refill column t
                }
            }
            if (!dirty)
                for (int i = t + 1; i < a_.rows(); ++i)
                    if (norm(a_(i, t)) != 0) dirty = true;
        }
    }

    // Returns the rank; leaves a_ diagonal on the leading block.
    int diagonalize() {
        const int limit = std::min(a_.rows(), a_.cols());
        int t = 0;
        for (; t < limit; ++t) {
            int pr = -1, pc = -1;
            long long best = 0;
            for (int i = t; i < a_.rows(); ++i)
                for (int j = t; j < a_.cols(); ++j) {
                    const long long m = mag(a_(i, j));
                    if (m != 0 && (pr < 0 || m < best)) {
                        best = m;
                        pr = i;
                        pc = j;
                        if (m == 1) goto found;
                    }
                }
        found:
            if (pr < 0) break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            clear_cross(t);
        }
        return t;
    }

    IntMatrix& a() { return a_; }
    IntMatrix& u() { return u_; }
    IntMatrix& v() { return v_; }
    IntMatrix& v_inv() { return v_inv_; }

private:
    IntMatrix a_;
    long long n_;
    std::vector<std::vector<long long>>* rhs_;
    IntMatrix u_;
    IntMatrix v_;
    IntMatrix v_inv_;
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    Eliminator e(a, 0, true, nullptr);
    const int rank = e.diagonalize();
    // Enforce d_1 | d_2 | ... with diag(a, b) -> diag(gcd, lcm).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) {
                const long long x = e.a()(i, i), y = e.a()(j, j);
                if (y % x == 0) continue;
                long long u, v;
                const long long g = ext_gcd(x, y, u, v);
                // U = [[u, v], [-y/g, x/g]], V = [[1, -v*y/g], [1, u*x/g]]
                e.row_combine(i, j, u, v, -(y / g), x / g);
                e.col_combine(i, j, 1, checked_mul(-v, y / g), 1, checked_mul(u, x / g));
                changed = true;
            }
    }
    for (int t = 0; t < rank; ++t)
        if (e.a()(t, t) < 0) {
            // Negate the row: unimodular with determinant -1.
            for (int c = 0; c < e.a().cols(); ++c) e.a()(t, c) = -e.a()(t, c);
            for (int c = 0; c < e.u().cols(); ++c) e.u()(t, c) = -e.u()(t, c);
        }
    SmithDecomposition out;
    for (int t = 0; t < rank; ++t) out.factors.push_back(e.a()(t, t));
    out.U = e.u();
    out.V = e.v();
    out.V_inv = e.v_inv();
    out.D = e.a();
    return out;
}

ModularDiagonalization diagonalize_mod(IntMatrix a, long long modulus, std::vector<std::vector<long long>>* rhs) {
    if (modulus <= 0) throw Error(ErrorKind::MalformedInput, "modulus must be positive");
    if (rhs)
        for (auto& v : *rhs) {
            if (static_cast<int>(v.size()) != a.rows()) throw std::invalid_argument("rhs length mismatch");
            for (auto& x : v) x = mod_floor(x, modulus);
        }
    ModularDiagonalization out;
    out.modulus = modulus;
    out.rows = a.rows();
    out.cols = a.cols();
    Eliminator e(std::move(a), modulus, false, rhs);
    if (modulus > 1) e.diagonalize();
    const int limit = std::min(out.rows, out.cols);
    out.diagonal.resize(limit);
    for (int t = 0; t < limit; ++t) out.diagonal[t] = mod_floor(e.a()(t, t), modulus);
    out.V = e.v();
    out.V_inv = e.v_inv();
    return out;
}

// ---------------------------------------------------------------- congruences

long long CongruenceSolution::count() const {
    if (!feasible) return 0;
    long long total = 1;
    for (long long o : kernel_orders) {
        if (total > std::numeric_limits<long long>::max() / o) return std::numeric_limits<long long>::max();
        total *= o;
    }
    return total;
}

void CongruenceSolution::for_each(const std::function<bool(const std::vector<long long>&)>& visit) const {
    if (!feasible) return;
    const std::size_t k = kernel.size();
    std::vector<long long> coeff(k, 0);
    std::vector<long long> x = particular;
    while (true) {
        if (!visit(x)) return;
        std::size_t i = 0;
        for (; i < k; ++i) {
            for (std::size_t r = 0; r < x.size(); ++r) x[r] = mod_floor(x[r] + kernel[i][r], modulus);
            if (++coeff[i] < kernel_orders[i]) break;
            coeff[i] = 0;  // wrapped: x already returned to its earlier value in this slot
        }
        if (i == k) return;
    }
}

CongruenceSolution solve_congruences(const IntMatrix& a, const std::vector<long long>& b, long long modulus) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_congruences: shape mismatch");
    if (modulus <= 0) throw Error(ErrorKind::MalformedInput, "modulus must be positive");
    std::vector<std::vector<long long>> rhs{b};
    const ModularDiagonalization d = diagonalize_mod(a, modulus, &rhs);
    const std::vector<long long>& c = rhs[0];
    CongruenceSolution sol;
    sol.modulus = modulus;
    const int cols = a.cols();
    std::vector<long long> z(cols, 0);
    for (int i = 0; i < a.rows(); ++i) {
        const long long di = i < static_cast<int>(d.diagonal.size()) ? d.diagonal[i] : 0;
        const long long g = std::gcd(di, modulus);
        if (c[i] % g != 0) return sol;  // infeasible
        if (i < cols && di != 0) {
            long long inv, unused;
            ext_gcd(di / g, modulus / g, inv, unused);
            z[i] = mod_floor(static_cast<long long>(static_cast<__int128>(c[i] / g) * inv % (modulus / g)), modulus / g);
        }
    }
    sol.feasible = true;
    sol.particular.assign(cols, 0);
    for (int r = 0; r < cols; ++r) {
        __int128 acc = 0;
        for (int j = 0; j < cols; ++j) acc += static_cast<__int128>(d.V(r, j)) * z[j];
        sol.particular[r] = mod_floor(static_cast<long long>(acc % modulus), modulus);
    }
    for (int j = 0; j < cols; ++j) {
        const long long dj = j < static_cast<int>(d.diagonal.size()) ? d.diagonal[j] : 0;
        const long long g = std::gcd(dj, modulus);  // gcd(0, N) = N: free coordinate
        if (g == 1) continue;
        const long long step = modulus / g;
        std::vector<long long> gen(cols);
        for (int r = 0; r < cols; ++r) gen[r] = mod_floor(d.V(r, j) * step, modulus);
        sol.kernel.push_back(std::move(gen));
        sol.kernel_orders.push_back(g);
    }
    return sol;
}

} // namespace gxb
