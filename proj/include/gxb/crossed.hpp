#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gxb/subcat.hpp"

namespace gxb {

/// How the ambient category is graded.
///
/// Pointed: Vec(G, omega) graded by a surjection pi: G -> H, with the
/// minimal-id section. Rep: Rep(G) graded by the dual of a central subgroup
/// H, i.e. the quotient of the dual of Z(G) by the annihilator of H.
struct GradingSpec {
    enum class Kind { Pointed, Rep };
    Kind kind = Kind::Pointed;

    // Pointed case.
    GroupHom projection;
    std::vector<Elem> section;
    Subgroup kernel;

    // Rep case.
    Subgroup central_subgroup;

    /// The grading group itself; order |H| in both cases.
    FiniteGroup grading_group = cyclic_group(1);

    int grading_order() const noexcept { return grading_group.order(); }
};

/// Validates pi (homomorphism, surjective) and picks the minimal-id section.
GradingSpec pointed_grading(const FiniteGroup& g, const FiniteGroup& target, const GroupHom& pi);
/// pi the projection onto G/K.
GradingSpec pointed_grading_by_kernel(const FiniteGroup& g, const Subgroup& k);
/// Throws NotCentral unless h lies in Z(G).
GradingSpec rep_grading(const FiniteGroup& g, const Subgroup& h);
/// One Rep grading per subgroup of Z(G), in canonical subgroup order.
std::vector<GradingSpec> gradings_of_rep(const FiniteGroup& g);

struct TheoremChecks {
    bool centralizes = false;  // s lies in the centralizer of the canonical copy
    bool fpdim = false;        // |grading group| fpdim(s) = FPdim of the ambient
    bool transverse = false;
    std::string detail;
    bool all() const noexcept { return centralizes && fpdim && transverse; }
};

/// The three conditions for a subcategory of the center to give a crossed
/// braiding. For Rep gradings the parent must carry trivial omega.
TheoremChecks check_theorem_conditions(const GradingSpec& grading, const SubcatData& s);

struct CrossedBraidingCertificate {
    GradingSpec grading;
    SubcatData witness;
    TheoremChecks checks;
};

struct CrossedEnumeration {
    std::vector<CrossedBraidingCertificate> certificates;
    /// Set when the enumeration is empty for a structural reason, e.g.
    /// "kernel-not-central".
    std::optional<std::string> reason;
};

/// One certificate per G-invariant omega-bicharacter on ker(pi) x G; empty
/// with reason "kernel-not-central" when ker(pi) is not central.
CrossedEnumeration enumerate_pointed(TwistedDataPtr data, const GradingSpec& grading,
                                     double budget = kDefaultEnumerationBudget);

/// Triples (L, M, B) with H <= M normal, M/H abelian, L normal abelian
/// commuting with M, and B a nondegenerate invariant bicharacter on L x M/H.
CrossedEnumeration enumerate_rep(TwistedDataPtr data, const GradingSpec& grading);
/// Convenience overload building the untwisted parent.
CrossedEnumeration enumerate_rep(const FiniteGroup& g, const Subgroup& h);

} // namespace gxb
