#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gxb/errors.hpp"

namespace gxb {

using Elem = int;

/// Default ceiling on |G| for subgroup-lattice style enumerations.
inline constexpr int kDefaultSubgroupBound = 64;

/// A finite group stored as a validated multiplication table.
///
/// Element 0 is always the identity. The table, inverses and element orders
/// are fixed at construction; the object is immutable afterwards.
class FiniteGroup {
public:
    /// Validates the table (Latin square, identity at 0, associativity) and
    /// throws Error(NotAGroup) naming the first violation.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::string name = {},
                                  std::vector<std::string> labels = {});

    int order() const noexcept { return n_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(Elem a) const;

    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    /// g^-1 x g
    Elem conj(Elem g, Elem x) const { return mul(mul(inv(g), x), g); }
    Elem power(Elem a, long long k) const;
    int element_order(Elem a) const { return orders_[a]; }

    bool is_abelian() const noexcept { return abelian_; }
    int exponent() const noexcept { return exponent_; }
    bool valid(Elem a) const noexcept { return a >= 0 && a < n_; }
    void check_element(Elem a) const;

    std::vector<std::vector<int>> table() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

private:
    FiniteGroup() = default;

    int n_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> orders_;
    bool abelian_ = true;
    int exponent_ = 1;
    std::string name_;
    std::vector<std::string> labels_;
};

/// A subgroup as a sorted set of element ids of some parent group.
struct Subgroup {
    std::vector<Elem> elements;

    int order() const noexcept { return static_cast<int>(elements.size()); }
    bool contains(Elem a) const;
    bool is_trivial() const noexcept { return elements.size() == 1; }

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    /// Canonical order: by order, then lexicographically by element ids.
    friend bool operator<(const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    }
};

/// A map on element ids. Whether it is a homomorphism is checked by
/// `make_hom` / `is_homomorphism`.
struct GroupHom {
    int source_order = 0;
    int target_order = 0;
    std::vector<Elem> images;

    Elem operator()(Elem a) const { return images[a]; }
    friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

struct ConjugacyClass {
    Elem representative;
    std::vector<Elem> elements;
};

struct Quotient {
    FiniteGroup group;
    GroupHom projection;
    /// Minimal-id coset representative of every quotient element.
    std::vector<Elem> section;
};

/// A subgroup re-indexed as a group in its own right. `embedding[i]` is the
/// parent id of local element i; local ids follow parent id order.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<Elem> embedding;
    /// Parent id -> local id, or -1 outside the subgroup.
    std::vector<int> local;
};

/// Basis of a finite abelian group: A is the internal direct sum of the
/// cyclic groups <generators[i]>, of orders `orders[i]` (nonincreasing).
struct AbelianBasis {
    std::vector<Elem> generators;
    std::vector<int> orders;
    /// coordinates[a][i] in [0, orders[i]) with a = sum_i coordinates[a][i] * generators[i].
    std::vector<std::vector<int>> coordinates;
    /// Element id from a coordinate vector.
    Elem element(const std::vector<int>& coords) const;
    int rank() const noexcept { return static_cast<int>(generators.size()); }

    std::vector<int> radix_index;  // mixed-radix lookup table backing element()
};

struct DualGroup {
    FiniteGroup group;
    /// pairing[chi][a] is the exponent e with chi(a) = exp(2 pi i e / modulus).
    std::vector<std::vector<int>> pairing;
    int modulus = 1;
};

// ---------------------------------------------------------------- builders

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int order);
FiniteGroup symmetric_group(int degree);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name = {});
/// Permutations in cycle notation on points 0..degree-1; products compose left
/// to right (a*b applies a first). Elements are ordered by breadth-first
/// closure from the identity.
FiniteGroup permutation_group(int degree, const std::vector<std::string>& generators);
/// Builtin names: C{n}, C{a}xC{b}[xC{c}...], D{2n}, S{n}, Q8.
FiniteGroup builtin_group(const std::string& name);

// ---------------------------------------------------------------- queries

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, Elem a);
Subgroup center(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& generators);
bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements);
/// Validates a subgroup given as an arbitrary id list.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> elements);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
bool is_subset(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Elementwise commutation [L, M] = 1.
bool commute_elementwise(const FiniteGroup& g, const Subgroup& l, const Subgroup& m);
Subgroup commutator_subgroup(const FiniteGroup& g);

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound = kDefaultSubgroupBound);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int bound = kDefaultSubgroupBound);
std::vector<std::pair<Subgroup, Subgroup>> commuting_normal_pairs(const FiniteGroup& g,
                                                                   int bound = kDefaultSubgroupBound);

Quotient quotient(const FiniteGroup& g, const Subgroup& n);
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s, std::string name = {});

AbelianBasis abelian_basis(const FiniteGroup& a);
DualGroup dual_group(const FiniteGroup& a);
/// H^perp inside the dual group produced by `dual_group(a)`.
Subgroup annihilator(const FiniteGroup& a, const Subgroup& h);
/// Annihilator of a subgroup of the dual back in the original group.
Subgroup annihilator_in_group(const DualGroup& dual, const Subgroup& chars);

// ---------------------------------------------------------------- homomorphisms

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<Elem>& images);
GroupHom make_hom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<Elem> images);
GroupHom identity_hom(const FiniteGroup& g);
bool is_surjective(const GroupHom& f);
Subgroup kernel(const GroupHom& f);
/// A generating set built greedily by minimal ids.
std::vector<Elem> small_generating_set(const FiniteGroup& g);
/// Every homomorphism src -> dst, enumerated over generator images.
std::vector<GroupHom> all_homomorphisms(const FiniteGroup& src, const FiniteGroup& dst);
/// Brute-force isomorphism search; intended for small groups only.
std::optional<GroupHom> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

} // namespace gxb
