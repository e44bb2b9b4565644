#include "gxb/cohomology.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace gxb {

// ---------------------------------------------------------------- CoefficientModule

CoefficientModule CoefficientModule::trivial(FiniteGroup a) {
    if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "coefficient group " + a.name() + " is not abelian");
    CoefficientModule m;
    m.basis_ = abelian_basis(a);
    m.a_ = std::make_shared<const FiniteGroup>(std::move(a));
    return m;
}

CoefficientModule CoefficientModule::roots_of_unity(int n) {
    CoefficientModule m = trivial(cyclic_group(n));
    m.roots_of_unity_ = true;
    return m;
}

CoefficientModule CoefficientModule::with_action(const FiniteGroup& acting, FiniteGroup a,
                                                 std::vector<std::vector<Elem>> action) {
    CoefficientModule m = trivial(std::move(a));
    const FiniteGroup& A = *m.a_;
    if (static_cast<int>(action.size()) != acting.order())
        throw Error(ErrorKind::MalformedInput, "action table needs one row per element of the acting group");
    bool trivial = true;
    for (int g = 0; g < acting.order(); ++g) {
        if (!is_homomorphism(A, A, action[g]) || !is_surjective(GroupHom{A.order(), A.order(), action[g]}))
            throw Error(ErrorKind::NotAHomomorphism,
                        "action of element " + std::to_string(g) + " is not an automorphism");
        for (Elem x = 0; x < A.order(); ++x) trivial = trivial && action[g][x] == x;
    }
    for (int g = 0; g < acting.order(); ++g)
        for (int h = 0; h < acting.order(); ++h)
            for (Elem x = 0; x < A.order(); ++x)
                if (action[acting.mul(g, h)][x] != action[g][action[h][x]])
                    throw Error(ErrorKind::NotAHomomorphism, "action is not a homomorphism G -> Aut(A) at (" +
                                                                 std::to_string(g) + "," + std::to_string(h) + ")");
    if (!trivial) m.action_ = std::move(action);
    return m;
}

// ---------------------------------------------------------------- Cochain

namespace {

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

Cochain::Cochain(GroupPtr g, ModulePtr m, int degree) : g_(std::move(g)), m_(std::move(m)), degree_(degree) {
    if (degree < 0) throw Error(ErrorKind::MalformedInput, "negative cochain degree");
    if (!m_->trivial_action() && m_->acting_order() != g_->order())
        throw Error(ErrorKind::ParentMismatch, "module action is defined for a different group");
    if (std::pow(static_cast<double>(g_->order()), degree) > 1e8)
        throw Error(ErrorKind::BudgetExceeded, "cochain table too large");
    values_.assign(ipow(g_->order(), degree), 0);
}

std::size_t Cochain::index(const std::vector<Elem>& args) const {
    if (static_cast<int>(args.size()) != degree_)
        throw Error(ErrorKind::MalformedInput, "expected " + std::to_string(degree_) + " arguments");
    std::size_t idx = 0;
    for (Elem a : args) {
        g_->check_element(a);
        idx = idx * g_->order() + a;
    }
    return idx;
}

std::vector<Elem> Cochain::tuple(std::size_t index) const {
    std::vector<Elem> t(degree_);
    for (int i = degree_ - 1; i >= 0; --i) {
        t[i] = static_cast<Elem>(index % g_->order());
        index /= g_->order();
    }
    return t;
}

void Cochain::set(const std::vector<Elem>& args, Elem value) {
    m_->group().check_element(value);
    values_[index(args)] = value;
}

bool Cochain::is_normalized() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0) continue;
        for (Elem a : tuple(i))
            if (a == 0) return false;
    }
    return true;
}

bool Cochain::is_zero() const {
    for (Elem v : values_)
        if (v != 0) return false;
    return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (!(*g_ == *o.g_) || !(*m_ == *o.m_) || degree_ != o.degree_)
        throw Error(ErrorKind::ParentMismatch, "adding cochains over different data");
    Cochain r = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] = m_->add(values_[i], o.values_[i]);
    return r;
}

Cochain Cochain::operator-() const {
    Cochain r = *this;
    for (auto& v : r.values_) v = m_->neg(v);
    return r;
}

bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.values_ == b.values_ && *a.g_ == *b.g_ && *a.m_ == *b.m_;
}

// ---------------------------------------------------------------- differential

Cochain differential(const Cochain& c) {
    const int n = c.degree();
    if (n > kMaxDifferentialDegree)
        throw Error(ErrorKind::DegreeTooHigh, "differential defined for degree <= 3, got " + std::to_string(n));
    const FiniteGroup& g = c.group();
    const CoefficientModule& m = c.module();
    Cochain out(c.group_ptr(), c.module_ptr(), n + 1);
    const std::size_t total = out.size();
    std::vector<Elem> t(n + 1), sub(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        t = out.tuple(idx);
        auto value_at = [&](const std::vector<Elem>& args) {
            std::size_t k = 0;
            for (Elem a : args) k = k * g.order() + a;
            return c.raw(k);
        };
        // g_1 . c(g_2, ..., g_{n+1})
        for (int i = 0; i < n; ++i) sub[i] = t[i + 1];
        Elem acc = m.act(t[0], value_at(sub));
        for (int i = 1; i <= n; ++i) {
            for (int k = 0, s = 0; k <= n; ++k) {
                if (k == i) continue;
                sub[s++] = (k == i - 1) ? g.mul(t[i - 1], t[i]) : t[k];
            }
            const Elem v = value_at(sub);
            acc = m.add(acc, (i % 2) ? m.neg(v) : v);
        }
        for (int i = 0; i < n; ++i) sub[i] = t[i];
        const Elem last = value_at(sub);
        acc = m.add(acc, ((n + 1) % 2) ? m.neg(last) : last);
        out.set_raw(idx, acc);
    }
    return out;
}

bool is_cocycle(const Cochain& c) { return differential(c).is_zero(); }

// ---------------------------------------------------------------- linear model

namespace {

// Coordinates of C^n: one block of basis-rank coordinates per tuple in `tuples`.
struct CochainCoordinates {
    int degree;
    std::vector<std::size_t> tuples;  // dense indices into G^degree
    std::vector<long long> index_of;  // dense index -> position in tuples, or -1
};

CochainCoordinates coordinates_for(const FiniteGroup& g, int degree, bool normalized) {
    CochainCoordinates cc{degree, {}, {}};
    const std::size_t total = ipow(g.order(), degree);
    cc.index_of.assign(total, -1);
    for (std::size_t idx = 0; idx < total; ++idx) {
        bool keep = true;
        if (normalized) {
            std::size_t k = idx;
            for (int i = 0; i < degree; ++i, k /= g.order()) keep = keep && (k % g.order()) != 0;
        }
        if (keep) {
            cc.index_of[idx] = static_cast<long long>(cc.tuples.size());
            cc.tuples.push_back(idx);
        }
    }
    return cc;
}

// Integer matrix of d: C^n -> C^{n+1} in basis coordinates. Row for output
// coordinate j' is scaled by e / a_{j'} when `scaled`, so that the kernel
// condition reads "= 0 mod e".
IntMatrix differential_matrix(const FiniteGroup& g, const CoefficientModule& m, const CochainCoordinates& from,
                              const CochainCoordinates& to, bool scaled) {
    const AbelianBasis& basis = m.basis();
    const int r = basis.rank();
    const long long e = m.exponent();
    const int n = from.degree;
    IntMatrix d(static_cast<int>(to.tuples.size()) * r, static_cast<int>(from.tuples.size()) * r);
    // action[g][j'][j] = coordinate j' of g . b_j
    std::vector<std::vector<std::vector<int>>> action(g.order(), std::vector<std::vector<int>>(r, std::vector<int>(r)));
    for (Elem x = 0; x < g.order(); ++x)
        for (int j = 0; j < r; ++j) {
            const Elem img = m.act(x, basis.generators[j]);
            for (int jp = 0; jp < r; ++jp) action[x][jp][j] = basis.coordinates[img][jp];
        }
    std::vector<Elem> t(n + 1), sub(n);
    for (std::size_t row_t = 0; row_t < to.tuples.size(); ++row_t) {
        std::size_t idx = to.tuples[row_t];
        for (int i = n; i >= 0; --i) {
            t[i] = static_cast<Elem>(idx % g.order());
            idx /= g.order();
        }
        auto column_of = [&](const std::vector<Elem>& args) -> long long {
            std::size_t k = 0;
            for (Elem a : args) k = k * g.order() + a;
            return from.index_of[k];
        };
        auto add_identity = [&](long long col_t, long long sign) {
            if (col_t < 0) return;
            for (int j = 0; j < r; ++j) d(static_cast<int>(row_t) * r + j, static_cast<int>(col_t) * r + j) += sign;
        };
        for (int i = 0; i < n; ++i) sub[i] = t[i + 1];
        if (long long col_t = column_of(sub); col_t >= 0)
            for (int jp = 0; jp < r; ++jp)
                for (int j = 0; j < r; ++j)
                    d(static_cast<int>(row_t) * r + jp, static_cast<int>(col_t) * r + j) += action[t[0]][jp][j];
        for (int i = 1; i <= n; ++i) {
            for (int k = 0, s = 0; k <= n; ++k) {
                if (k == i) continue;
                sub[s++] = (k == i - 1) ? g.mul(t[i - 1], t[i]) : t[k];
            }
            add_identity(column_of(sub), (i % 2) ? -1 : 1);
        }
        for (int i = 0; i < n; ++i) sub[i] = t[i];
        add_identity(column_of(sub), ((n + 1) % 2) ? -1 : 1);
    }
    for (int row = 0; row < d.rows(); ++row) {
        const long long scale = scaled ? e / basis.orders[row % r] : 1;
        for (int col = 0; col < d.cols(); ++col) d(row, col) = mod_floor(d(row, col) * scale, e);
    }
    return d;
}

std::vector<long long> coordinates_of(const Cochain& c, const CochainCoordinates& cc) {
    const AbelianBasis& basis = c.module().basis();
    const int r = basis.rank();
    std::vector<long long> x(cc.tuples.size() * r);
    for (std::size_t t = 0; t < cc.tuples.size(); ++t)
        for (int j = 0; j < r; ++j) x[t * r + j] = basis.coordinates[c.raw(cc.tuples[t])][j];
    return x;
}

Cochain cochain_from(const GroupPtr& g, const ModulePtr& m, const CochainCoordinates& cc,
                     const std::vector<long long>& x) {
    const AbelianBasis& basis = m->basis();
    const int r = basis.rank();
    Cochain c(g, m, cc.degree);
    std::vector<int> coords(r);
    for (std::size_t t = 0; t < cc.tuples.size(); ++t) {
        for (int j = 0; j < r; ++j) coords[j] = static_cast<int>(mod_floor(x[t * r + j], basis.orders[j]));
        c.set_raw(cc.tuples[t], basis.element(coords));
    }
    return c;
}

} // namespace

std::optional<Cochain> is_coboundary(const Cochain& c) {
    const int n = c.degree();
    if (n < 1) throw Error(ErrorKind::MalformedInput, "coboundaries start in degree 1");
    if (n - 1 > kMaxDifferentialDegree) throw Error(ErrorKind::DegreeTooHigh, "degree too high");
    const CoefficientModule& m = c.module();
    const long long e = m.exponent();
    if (e == 1) return Cochain(c.group_ptr(), c.module_ptr(), n - 1);
    const bool normalized = c.is_normalized();
    const auto from = coordinates_for(c.group(), n - 1, normalized);
    const auto to = coordinates_for(c.group(), n, normalized);
    const IntMatrix d = differential_matrix(c.group(), m, from, to, true);
    std::vector<long long> rhs = coordinates_of(c, to);
    const int r = m.basis().rank();
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = rhs[i] * (e / m.basis().orders[i % r]) % e;
    const CongruenceSolution sol = solve_congruences(d, rhs, e);
    if (!sol.feasible) return std::nullopt;
    Cochain w = cochain_from(c.group_ptr(), c.module_ptr(), from, sol.particular);
    if (!(differential(w) == c)) throw std::logic_error("is_coboundary: witness does not verify");
    return w;
}

// ---------------------------------------------------------------- H^n

long long CohomologyGroup::order() const {
    long long total = 1;
    for (long long f : factors_) total = checked_mul(total, f);
    return total;
}

CohomologyGroup cohomology_group(GroupPtr g, int n, ModulePtr m, double budget) {
    if (n < 0 || n > kMaxDifferentialDegree)
        throw Error(ErrorKind::DegreeTooHigh, "cohomology computed for 0 <= n <= 3, got " + std::to_string(n));
    if (!m->trivial_action() && m->acting_order() != g->order())
        throw Error(ErrorKind::ParentMismatch, "module action is defined for a different group");
    const double cost = std::pow(static_cast<double>(g->order()), n) * std::max(1.0, std::log2(m->group().order()));
    if (cost > budget)
        throw Error(ErrorKind::BudgetExceeded, "|G|^n log|A| = " + std::to_string(static_cast<long long>(cost)) +
                                                   " exceeds budget " + std::to_string(static_cast<long long>(budget)));
    CohomologyGroup h;
    h.degree_ = n;
    h.g_ = g;
    h.m_ = m;
    const long long e = m->exponent();
    h.e_ = e;
    if (e == 1) return h;

    const AbelianBasis& basis = m->basis();
    const int r = basis.rank();
    const auto here = coordinates_for(*g, n, true);
    const auto next = coordinates_for(*g, n + 1, true);
    h.tuples_ = here.tuples;
    const int k = static_cast<int>(here.tuples.size()) * r;

    // Cocycles: kernel of the scaled d_n over Z/e.
    const ModularDiagonalization kd = diagonalize_mod(differential_matrix(*g, *m, here, next, true), e);
    for (int j = 0; j < k; ++j) {
        const long long dj = j < static_cast<int>(kd.diagonal.size()) ? kd.diagonal[j] : 0;
        const long long gj = std::gcd(dj, e);
        if (gj == 1) continue;
        std::vector<long long> v(k);
        for (int row = 0; row < k; ++row) v[row] = mod_floor(kd.V(row, j) * (e / gj), e);
        h.kernel_basis_.push_back(std::move(v));
        h.kernel_orders_.push_back(gj);
        h.kernel_columns_.push_back(j);
    }
    h.kernel_v_inv_ = kd.V_inv;
    const int s = static_cast<int>(h.kernel_basis_.size());
    if (s == 0) return h;

    auto kernel_coords = [&](const std::vector<long long>& x) {
        std::vector<long long> c(s);
        for (int i = 0; i < s; ++i) {
            const int j = h.kernel_columns_[i];
            __int128 z = 0;
            for (int col = 0; col < k; ++col) z += static_cast<__int128>(kd.V_inv(j, col)) * x[col];
            const long long zj = mod_floor(static_cast<long long>(z % e), e);
            const long long step = e / h.kernel_orders_[i];
            if (zj % step != 0) throw Error(ErrorKind::NotACocycle, "vector outside the cocycle module");
            c[i] = zj / step;
        }
        return c;
    };

    // Relations: coboundaries, the zero relations a_j * e_{t,j}, and the orders of the kernel basis.
    std::vector<std::vector<long long>> relations;
    if (n >= 1) {
        const auto prev = coordinates_for(*g, n - 1, true);
        const IntMatrix dprev = differential_matrix(*g, *m, prev, here, false);
        for (int col = 0; col < dprev.cols(); ++col) {
            std::vector<long long> v(k);
            for (int row = 0; row < k; ++row) v[row] = dprev(row, col);
            relations.push_back(kernel_coords(v));
        }
    }
    for (int row = 0; row < k; ++row) {
        std::vector<long long> v(k, 0);
        v[row] = basis.orders[row % r];
        relations.push_back(kernel_coords(v));
    }
    for (int i = 0; i < s; ++i) {
        std::vector<long long> v(s, 0);
        v[i] = h.kernel_orders_[i];
        relations.push_back(std::move(v));
    }
    IntMatrix rel(static_cast<int>(relations.size()), s);
    for (int row = 0; row < rel.rows(); ++row)
        for (int col = 0; col < s; ++col) rel(row, col) = relations[row][col];
    const ModularDiagonalization qd = diagonalize_mod(std::move(rel), e);
    h.quotient_v_ = qd.V;

    // Cyclic decomposition first, then invariant factors through an exact
    // Smith form of diag(orders).
    std::vector<std::vector<long long>> cyclic_x;
    for (int i = 0; i < s; ++i) {
        const long long di = i < static_cast<int>(qd.diagonal.size()) ? qd.diagonal[i] : 0;
        const long long f = std::gcd(di, e);
        if (f == 1) continue;
        h.cyclic_orders_.push_back(f);
        h.cyclic_columns_.push_back(i);
        std::vector<long long> x(k, 0);
        for (int j = 0; j < s; ++j) {
            const long long cj = qd.V_inv(i, j);
            if (cj == 0) continue;
            for (int row = 0; row < k; ++row) x[row] = mod_floor(x[row] + cj * h.kernel_basis_[j][row], e);
        }
        cyclic_x.push_back(std::move(x));
    }
    const int t = static_cast<int>(h.cyclic_orders_.size());
    if (t == 0) return h;
    IntMatrix diag(t, t);
    for (int i = 0; i < t; ++i) diag(i, i) = h.cyclic_orders_[i];
    const SmithDecomposition sd = smith_normal_form(diag);
    h.smith_v_ = sd.V;
    for (int l = 0; l < t; ++l) {
        const long long d = sd.D(l, l);
        if (d == 1) continue;
        h.factors_.push_back(d);
        h.factor_slots_.push_back(l);
        std::vector<long long> x(k, 0);
        for (int i = 0; i < t; ++i) {
            const long long c = mod_floor(sd.V_inv(l, i), e);
            if (c == 0) continue;
            for (int row = 0; row < k; ++row) x[row] = mod_floor(x[row] + c * cyclic_x[i][row], e);
        }
        h.reps_.push_back(cochain_from(g, m, here, x));
    }
    return h;
}

std::vector<long long> CohomologyGroup::class_of(const Cochain& cocycle) const {
    if (cocycle.degree() != degree_ || !(cocycle.group() == *g_) || !(cocycle.module() == *m_))
        throw Error(ErrorKind::ParentMismatch, "cocycle does not belong to this cohomology group");
    if (!cocycle.is_normalized()) throw Error(ErrorKind::MalformedInput, "class_of expects a normalized cocycle");
    if (!is_cocycle(cocycle)) throw Error(ErrorKind::NotACocycle, "class_of on a non-cocycle");
    std::vector<long long> out(factors_.size(), 0);
    if (factors_.empty()) return out;
    const AbelianBasis& basis = m_->basis();
    const int r = basis.rank();
    std::vector<long long> x(tuples_.size() * r);
    for (std::size_t t = 0; t < tuples_.size(); ++t)
        for (int j = 0; j < r; ++j) x[t * r + j] = basis.coordinates[cocycle.raw(tuples_[t])][j];
    const int s = static_cast<int>(kernel_basis_.size());
    const int k = static_cast<int>(x.size());
    std::vector<long long> c(s);
    for (int i = 0; i < s; ++i) {
        const int j = kernel_columns_[i];
        __int128 z = 0;
        for (int col = 0; col < k; ++col) z += static_cast<__int128>(kernel_v_inv_(j, col)) * x[col];
        const long long zj = mod_floor(static_cast<long long>(z % e_), e_);
        c[i] = zj / (e_ / kernel_orders_[i]);
    }
    const int t = static_cast<int>(cyclic_orders_.size());
    std::vector<long long> y(t);
    for (int i = 0; i < t; ++i) {
        __int128 acc = 0;
        for (int j = 0; j < s; ++j) acc += static_cast<__int128>(c[j]) * quotient_v_(j, cyclic_columns_[i]);
        y[i] = mod_floor(static_cast<long long>(acc % e_), cyclic_orders_[i]);
    }
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        const int l = factor_slots_[f];
        __int128 acc = 0;
        for (int i = 0; i < t; ++i) acc += static_cast<__int128>(y[i]) * smith_v_(i, l);
        out[f] = mod_floor(static_cast<long long>(acc % factors_[f]), factors_[f]);
    }
    return out;
}

// ---------------------------------------------------------------- pushforward / splittings

Cochain pushforward(const Cochain& c, const GroupHom& f, ModulePtr target) {
    const FiniteGroup& a = c.module().group();
    const FiniteGroup& b = target->group();
    if (f.source_order != a.order() || f.target_order != b.order() || !is_homomorphism(a, b, f.images))
        throw Error(ErrorKind::NotAHomomorphism, "pushforward map is not a homomorphism of coefficient groups");
    if (!target->trivial_action() && target->acting_order() != c.group().order())
        throw Error(ErrorKind::ParentMismatch, "target action is defined for a different group");
    for (Elem g = 0; g < c.group().order(); ++g)
        for (Elem x = 0; x < a.order(); ++x)
            if (f(c.module().act(g, x)) != target->act(g, f(x)))
                throw Error(ErrorKind::NotAHomomorphism, "pushforward map does not commute with the actions");
    Cochain out(c.group_ptr(), std::move(target), c.degree());
    for (std::size_t i = 0; i < c.size(); ++i) out.set_raw(i, f(c.raw(i)));
    return out;
}

long long count_splittings(const Cochain& omega) {
    if (omega.degree() != 2) throw Error(ErrorKind::MalformedInput, "splitting count needs a 2-cocycle");
    if (!omega.module().trivial_action())
        throw Error(ErrorKind::NonTrivialAction, "splitting count implemented for trivial actions only");
    if (!is_cocycle(omega)) throw Error(ErrorKind::NotACocycle, "extension class is not a 2-cocycle");
    if (!is_coboundary(omega)) return 0;
    return static_cast<long long>(all_homomorphisms(omega.group(), omega.module().group()).size());
}

} // namespace gxb
