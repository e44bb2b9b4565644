#pragma once

#include <vector>

#include "gxb/arith.hpp"
#include "gxb/cohomology.hpp"

namespace gxb {

/// A group G with a normalized 3-cocycle omega valued in mu_N.
class TwistedGroupData {
public:
    /// Checks degree, mu_N coefficients, normalization and the cocycle identity.
    TwistedGroupData(GroupPtr g, Cochain omega);
    /// omega = 1 with values in mu_{exp G}.
    static TwistedGroupData untwisted(GroupPtr g);
    /// Skips the cocycle check; for feeding deliberately broken data to the
    /// downstream verifiers.
    static TwistedGroupData unchecked(GroupPtr g, Cochain omega);

    const FiniteGroup& group() const noexcept { return *g_; }
    const GroupPtr& group_ptr() const noexcept { return g_; }
    const Cochain& omega() const noexcept { return omega_; }
    /// N, the order of the roots of unity carrying omega.
    long long modulus() const noexcept { return omega_.module().group().order(); }
    bool untwisted_omega() const { return omega_.is_zero(); }

    friend bool operator==(const TwistedGroupData& a, const TwistedGroupData& b) {
        return *a.g_ == *b.g_ && a.modulus() == b.modulus() && a.omega_.values() == b.omega_.values();
    }

private:
    TwistedGroupData(GroupPtr g, Cochain omega, bool check);

    GroupPtr g_;
    Cochain omega_;
};

/// beta_a(g,h) = omega(a,g,h) omega(g,h,(gh)^-1 a gh) / omega(g, g^-1 a g, h).
UnityExponent beta(const TwistedGroupData& data, Elem a, Elem g, Elem h);
/// Same value as a bare exponent mod data.modulus().
long long beta_exponent(const TwistedGroupData& data, Elem a, Elem g, Elem h);

struct RestrictedBeta {
    SubgroupGroup centralizer;
    /// Degree-2 cochain on centralizer.group with values in mu_N.
    Cochain cocycle;
};

/// beta_a restricted to C_G(a) x C_G(a); throws BetaNotCocycle when it fails
/// the 2-cocycle identity.
RestrictedBeta beta_restricted_cocycle(const TwistedGroupData& data, Elem a);

struct SimpleLabel {
    Elem representative = 0;
    int class_size = 0;
    int centralizer_order = 0;
    /// Number of beta_a-projective irreducibles of C_G(a).
    int irrep_count = 0;
    /// Sum of their squared dimensions, |C_G(a)|.
    long long dimension_square_total = 0;
};

struct CenterCensus {
    std::vector<SimpleLabel> labels;
    long long simple_count = 0;
    /// Sum over simples of FPdim^2; always |G|^2.
    long long fpdim_square_total = 0;
};

/// Simple objects counted through beta-regular classes of each centralizer:
/// x is beta-regular when beta(x,h) = beta(h,x) for every h commuting with x.
CenterCensus simple_census(const TwistedGroupData& data);

/// The invertible objects of the untwisted center of Vec(N): characters of N
/// times the center of N, with the projection onto the center.
struct CenterInvertibles {
    FiniteGroup characters;        // dual of N / [N,N]
    FiniteGroup center;            // Z(N) as a group
    std::vector<Elem> center_embedding;  // local id -> id in N
    FiniteGroup product;           // characters x center, id = chi * |Z| + z
    GroupHom projection;           // product -> center
};

CenterInvertibles invertibles_of_center(const FiniteGroup& n);

} // namespace gxb
