#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gxb/arith.hpp"
#include "gxb/group.hpp"

namespace gxb {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// A finite abelian group A (written additively through its table) with an
/// optional left action of a group G by automorphisms.
class CoefficientModule {
public:
    /// A with the trivial action of any group.
    static CoefficientModule trivial(FiniteGroup a);
    /// mu_n, realized as C_n: element id k is exp(2 pi i k / n).
    static CoefficientModule roots_of_unity(int n);
    /// action[g][a] = g . a for every g in `acting`; validated as a
    /// homomorphism G -> Aut(A).
    static CoefficientModule with_action(const FiniteGroup& acting, FiniteGroup a,
                                         std::vector<std::vector<Elem>> action);

    const FiniteGroup& group() const noexcept { return *a_; }
    const AbelianBasis& basis() const noexcept { return basis_; }
    bool trivial_action() const noexcept { return action_.empty(); }
    /// Order of the acting group for a nontrivial action, 0 otherwise.
    int acting_order() const noexcept { return static_cast<int>(action_.size()); }
    Elem act(Elem g, Elem a) const { return action_.empty() ? a : action_[g][a]; }
    /// Least common multiple of element orders of A.
    int exponent() const noexcept { return a_->exponent(); }
    /// True when A is mu_n realized by `roots_of_unity`.
    bool is_roots_of_unity() const noexcept { return roots_of_unity_; }

    Elem add(Elem x, Elem y) const { return a_->mul(x, y); }
    Elem neg(Elem x) const { return a_->inv(x); }

    friend bool operator==(const CoefficientModule& a, const CoefficientModule& b) {
        return *a.a_ == *b.a_ && a.action_ == b.action_;
    }

private:
    std::shared_ptr<const FiniteGroup> a_;
    AbelianBasis basis_;
    std::vector<std::vector<Elem>> action_;
    bool roots_of_unity_ = false;
};

using ModulePtr = std::shared_ptr<const CoefficientModule>;

inline ModulePtr share(CoefficientModule m) { return std::make_shared<const CoefficientModule>(std::move(m)); }

/// A function G^n -> A stored densely; tuple (g_1..g_n) lives at the
/// mixed-radix index ((g_1 |G| + g_2) |G| + ...).
class Cochain {
public:
    Cochain(GroupPtr g, ModulePtr m, int degree);

    int degree() const noexcept { return degree_; }
    const FiniteGroup& group() const noexcept { return *g_; }
    const CoefficientModule& module() const noexcept { return *m_; }
    const GroupPtr& group_ptr() const noexcept { return g_; }
    const ModulePtr& module_ptr() const noexcept { return m_; }
    std::size_t size() const noexcept { return values_.size(); }

    Elem at(const std::vector<Elem>& args) const { return values_[index(args)]; }
    Elem at(Elem a) const { return values_[a]; }
    Elem at(Elem a, Elem b) const { return values_[static_cast<std::size_t>(a) * g_->order() + b]; }
    Elem at(Elem a, Elem b, Elem c) const {
        const std::size_t n = g_->order();
        return values_[(a * n + b) * n + c];
    }
    void set(const std::vector<Elem>& args, Elem value);
    Elem raw(std::size_t i) const { return values_[i]; }
    void set_raw(std::size_t i, Elem value) { values_[i] = value; }
    const std::vector<Elem>& values() const noexcept { return values_; }

    std::size_t index(const std::vector<Elem>& args) const;
    std::vector<Elem> tuple(std::size_t index) const;

    /// Value is zero whenever some argument is the identity.
    bool is_normalized() const;
    bool is_zero() const;

    Cochain operator+(const Cochain& o) const;
    Cochain operator-() const;

    /// Equal values over equal groups and modules.
    friend bool operator==(const Cochain& a, const Cochain& b);

private:
    GroupPtr g_;
    ModulePtr m_;
    int degree_;
    std::vector<Elem> values_;
};

inline constexpr int kMaxDifferentialDegree = 3;
/// Default ceiling on |G|^n * log2|A| for cohomology_group.
inline constexpr double kDefaultCohomologyBudget = 1e7;

/// Bar differential with the action on the first slot:
/// (dc)(g_1..g_{n+1}) = g_1.c(g_2..) + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{n+1} c(g_1..g_n).
Cochain differential(const Cochain& c);
bool is_cocycle(const Cochain& c);
/// A cochain w of degree n-1 with d(w) = c, or nothing. Normalized c yields a
/// normalized witness.
std::optional<Cochain> is_coboundary(const Cochain& c);

/// H^n(G, M) with generators given by normalized representative cocycles.
class CohomologyGroup {
public:
    int degree() const noexcept { return degree_; }
    /// Invariant factors (each > 1) of the finite abelian group H^n.
    const std::vector<long long>& invariant_factors() const noexcept { return factors_; }
    const std::vector<Cochain>& representatives() const noexcept { return reps_; }
    /// |H^n|.
    long long order() const;
    /// Coordinates of the class of a normalized cocycle, one per invariant
    /// factor; all zero exactly for coboundaries.
    std::vector<long long> class_of(const Cochain& cocycle) const;

private:
    friend CohomologyGroup cohomology_group(GroupPtr g, int n, ModulePtr m, double budget);

    int degree_ = 0;
    GroupPtr g_;
    ModulePtr m_;
    std::vector<long long> factors_;
    std::vector<Cochain> reps_;
    // Internal coordinates: kernel basis of d_n and the quotient change of basis.
    long long e_ = 1;
    std::vector<std::size_t> tuples_;
    std::vector<std::vector<long long>> kernel_basis_;
    std::vector<long long> kernel_orders_;
    IntMatrix kernel_v_inv_;
    std::vector<int> kernel_columns_;
    IntMatrix quotient_v_;
    std::vector<long long> cyclic_orders_;
    std::vector<int> cyclic_columns_;
    IntMatrix smith_v_;
    std::vector<int> factor_slots_;
};

CohomologyGroup cohomology_group(GroupPtr g, int n, ModulePtr m, double budget = kDefaultCohomologyBudget);

/// Entrywise push-forward along a homomorphism A -> B compatible with the actions.
Cochain pushforward(const Cochain& c, const GroupHom& f, ModulePtr target);

/// Number of homomorphic sections of the central extension of G by A with
/// class [omega]: zero when [omega] != 0, |Hom(G, A)| otherwise.
long long count_splittings(const Cochain& omega);

} // namespace gxb
