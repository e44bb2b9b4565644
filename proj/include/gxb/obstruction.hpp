#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gxb/cohomology.hpp"
#include "gxb/twisted_center.hpp"

namespace gxb {

/// An extension 1 -> N -> E -> G -> 1 with the minimal-id section lambda and
/// n(g,h) = lambda_{gh}^-1 lambda_g lambda_h, so lambda_g lambda_h = lambda_{gh} n(g,h).
struct ExtensionData {
    FiniteGroup extension;
    Subgroup normal;
    Quotient quotient;
    /// n[g * |G| + h], an element of N (as an id of E).
    std::vector<Elem> n;

    Elem at(Elem g, Elem h) const { return n[static_cast<std::size_t>(g) * quotient.group.order() + h]; }
};

/// Builds the data and checks n(gh,k) lambda_k^-1 n(g,h) lambda_k = n(g,hk) n(h,k).
ExtensionData extension_cocycle(const FiniteGroup& e, const Subgroup& n);

struct FiberedVerdict {
    bool extends = false;
    /// "not-central", "nontrivial-class" or "splits".
    std::string reason;
    std::optional<long long> torsor_count;
};

/// Whether E is N x (E/N) compatibly with N: every coset must meet the
/// centralizer of N, and the resulting Z(N)-valued class must vanish. For
/// abelian N the first clause says N is central. The torsor count is
/// |Hom(E/N, Z(N))|.
FiberedVerdict fibered_enrichment_extends(const FiniteGroup& e, const Subgroup& n);

/// omega is a 2-cocycle on g valued in invertibles_of_center(n).product with
/// trivial action; true when its push-forward to Z(N) is a coboundary.
bool zesting_lift_exists(const FiniteGroup& n, const Cochain& omega);

struct FullyFaithfulObstruction {
    bool vanishes = false;
    long long splitting_count = 0;
};

/// The class of a 2-cocycle with trivial action, and the number of liftings.
FullyFaithfulObstruction fully_faithful_obstruction(const Cochain& omega2);

} // namespace gxb
