#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gxb/twisted_center.hpp"

namespace gxb {

using TwistedDataPtr = std::shared_ptr<const TwistedGroupData>;

inline TwistedDataPtr share(TwistedGroupData d) { return std::make_shared<const TwistedGroupData>(std::move(d)); }

/// Default ceiling on equation-matrix entries and on solution counts.
inline constexpr double kDefaultEnumerationBudget = 5e7;

/// A function L x M -> mu_modulus stored by exponents, row-major over the
/// sorted element lists of L and M.
struct OmegaBicharacter {
    Subgroup L;
    Subgroup M;
    long long modulus = 1;
    std::vector<long long> exponents;

    static OmegaBicharacter trivial(Subgroup l, Subgroup m, long long modulus);

    long long at(Elem l, Elem m) const;
    UnityExponent value(Elem l, Elem m) const { return UnityExponent(at(l, m), modulus); }
    /// Same values in mu_m (m a multiple of modulus).
    OmegaBicharacter lift(long long m) const;
    /// The smallest modulus that still holds every value.
    OmegaBicharacter reduced() const;

    friend bool operator==(const OmegaBicharacter&, const OmegaBicharacter&) = default;
};

/// Modulus used for enumerated bicharacters: exp(G) when omega is trivial,
/// N * exp(G) otherwise (every solution of the first two axioms fits there).
long long bicharacter_modulus(const TwistedGroupData& data);

struct BicharacterCheck {
    bool ok = true;
    /// 1, 2 or 3 for the first failing axiom, 0 when the subgroups themselves
    /// are unsuitable.
    int axiom = 0;
    std::vector<Elem> tuple;
    std::string message;
};

/// Exhaustive check of the twisted multiplicativity in each slot and of
/// conjugation invariance.
BicharacterCheck verify_bicharacter(const TwistedGroupData& data, const OmegaBicharacter& b);

/// S(L, M, B): a fusion subcategory of the twisted center.
class SubcatData {
public:
    /// Throws MalformedInput naming the failing axiom.
    SubcatData(TwistedDataPtr parent, OmegaBicharacter b);

    const TwistedGroupData& parent() const noexcept { return *parent_; }
    const TwistedDataPtr& parent_ptr() const noexcept { return parent_; }
    const Subgroup& L() const noexcept { return b_.L; }
    const Subgroup& M() const noexcept { return b_.M; }
    const OmegaBicharacter& B() const noexcept { return b_; }

    friend bool operator==(const SubcatData& a, const SubcatData& b) { return a.b_ == b.b_; }
    /// Canonical order: |L|, |M|, L ids, M ids, B exponents.
    friend bool operator<(const SubcatData& a, const SubcatData& b);

private:
    struct Trusted {};
    SubcatData(TwistedDataPtr parent, OmegaBicharacter b, Trusted) : parent_(std::move(parent)), b_(std::move(b)) {}
    friend SubcatData centralizer_subcat(const SubcatData&);
    friend std::vector<SubcatData> enumerate_subcats(TwistedDataPtr, double);

    TwistedDataPtr parent_;
    OmegaBicharacter b_;
};

/// |L| [G:M].
long long fpdim(const SubcatData& s);
/// S(M, L, B') with B'(m, l) = B(l, m)^-1.
SubcatData centralizer_subcat(const SubcatData& s);
/// True when `inner` is a subcategory of `outer`: L_inner in L_outer,
/// M_outer in M_inner, and the bicharacters agree on L_inner x M_outer.
bool contains(const SubcatData& outer, const SubcatData& inner);

/// Every bicharacter on L x M satisfying all three axioms, in lex order of
/// exponent tables. Throws BudgetExceeded past the budget.
std::vector<OmegaBicharacter> solve_bicharacters(const TwistedGroupData& data, const Subgroup& l, const Subgroup& m,
                                                 double budget = kDefaultEnumerationBudget);

/// All S(L, M, B) over commuting normal pairs, in canonical order.
std::vector<SubcatData> enumerate_subcats(TwistedDataPtr data, double budget = kDefaultEnumerationBudget);

} // namespace gxb
