#include "gxb/obstruction.hpp"

#include <stdexcept>

namespace gxb {

ExtensionData extension_cocycle(const FiniteGroup& e, const Subgroup& n) {
    if (!is_subgroup(e, n.elements)) throw Error(ErrorKind::MalformedInput, "N is not a subgroup");
    Quotient q = quotient(e, n);  // throws NotNormal
    const FiniteGroup& g = q.group;
    const auto& lam = q.section;
    ExtensionData out{e, n, q, {}};
    out.n.resize(static_cast<std::size_t>(g.order()) * g.order());
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y)
            out.n[static_cast<std::size_t>(x) * g.order() + y] =
                e.mul(e.inv(lam[g.mul(x, y)]), e.mul(lam[x], lam[y]));
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y)
            for (Elem z = 0; z < g.order(); ++z) {
                const Elem lhs = e.mul(out.at(g.mul(x, y), z), e.conj(lam[z], out.at(x, y)));
                const Elem rhs = e.mul(out.at(x, g.mul(y, z)), out.at(y, z));
                if (lhs != rhs) throw std::logic_error("extension cocycle identity fails");
            }
    return out;
}

FiberedVerdict fibered_enrichment_extends(const FiniteGroup& e, const Subgroup& n) {
    if (!is_subgroup(e, n.elements)) throw Error(ErrorKind::MalformedInput, "N is not a subgroup");
    Quotient q = quotient(e, n);
    const FiniteGroup& g = q.group;

    // C_E(N), and a section through it.
    std::vector<bool> centralizing(e.order(), true);
    for (Elem x = 0; x < e.order(); ++x)
        for (Elem y : n.elements) centralizing[x] = centralizing[x] && e.mul(x, y) == e.mul(y, x);
    std::vector<Elem> lam(g.order(), -1);
    for (Elem x = 0; x < e.order(); ++x)
        if (centralizing[x] && lam[q.projection(x)] < 0) lam[q.projection(x)] = x;
    FiberedVerdict out;
    for (Elem c : lam)
        if (c < 0) {
            out.reason = "not-central";
            return out;
        }

    // n(g,h) lies in N and in C_E(N), i.e. in Z(N); the action is trivial.
    std::vector<Elem> zids;
    for (Elem x : n.elements)
        if (centralizing[x]) zids.push_back(x);
    SubgroupGroup zn = subgroup_as_group(e, make_subgroup(e, zids));
    auto gp = share(g);
    auto module = share(CoefficientModule::trivial(zn.group));
    Cochain cls(gp, module, 2);
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) {
            const Elem v = e.mul(e.inv(lam[g.mul(x, y)]), e.mul(lam[x], lam[y]));
            if (zn.local[v] < 0) throw std::logic_error("centralizing section leaves the center of N");
            cls.set({x, y}, zn.local[v]);
        }
    if (!is_coboundary(cls)) {
        out.reason = "nontrivial-class";
        return out;
    }
    out.extends = true;
    out.reason = "splits";
    out.torsor_count = static_cast<long long>(all_homomorphisms(g, zn.group).size());
    return out;
}

bool zesting_lift_exists(const FiniteGroup& n, const Cochain& omega) {
    CenterInvertibles inv = invertibles_of_center(n);
    if (omega.degree() != 2) throw Error(ErrorKind::MalformedInput, "zesting data must be a 2-cocycle");
    if (!(omega.module().group() == inv.product) || !omega.module().trivial_action())
        throw Error(ErrorKind::ParentMismatch, "zesting cocycle must take values in the invertibles of the center");
    if (!is_cocycle(omega)) throw Error(ErrorKind::NotACocycle, "zesting data fails the 2-cocycle identity");
    Cochain pushed = pushforward(omega, inv.projection, share(CoefficientModule::trivial(inv.center)));
    return is_coboundary(pushed).has_value();
}

FullyFaithfulObstruction fully_faithful_obstruction(const Cochain& omega2) {
    if (omega2.degree() != 2) throw Error(ErrorKind::MalformedInput, "obstruction data must be a 2-cocycle");
    if (!omega2.module().trivial_action())
        throw Error(ErrorKind::NonTrivialAction, "obstruction computed for trivial actions only");
    if (!is_cocycle(omega2)) throw Error(ErrorKind::NotACocycle, "obstruction data fails the 2-cocycle identity");
    FullyFaithfulObstruction out;
    out.vanishes = is_coboundary(omega2).has_value();
    out.splitting_count = count_splittings(omega2);
    return out;
}

} // namespace gxb
