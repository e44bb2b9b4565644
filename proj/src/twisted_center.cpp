#include "gxb/twisted_center.hpp"

#include <string>

namespace gxb {

TwistedGroupData::TwistedGroupData(GroupPtr g, Cochain omega) : TwistedGroupData(std::move(g), std::move(omega), true) {}

TwistedGroupData::TwistedGroupData(GroupPtr g, Cochain omega, bool check) : g_(std::move(g)), omega_(std::move(omega)) {
    if (omega_.degree() != 3) throw Error(ErrorKind::MalformedInput, "omega must have degree 3");
    if (!(omega_.group() == *g_)) throw Error(ErrorKind::ParentMismatch, "omega is defined on a different group");
    if (!omega_.module().is_roots_of_unity())
        throw Error(ErrorKind::MalformedInput, "omega must take values in roots of unity");
    if (!omega_.is_normalized()) throw Error(ErrorKind::NotACocycle, "omega is not normalized");
    if (check && !is_cocycle(omega_)) throw Error(ErrorKind::NotACocycle, "omega fails the 3-cocycle identity");
}

TwistedGroupData TwistedGroupData::untwisted(GroupPtr g) {
    const int e = g->exponent();
    Cochain omega(g, share(CoefficientModule::roots_of_unity(e)), 3);
    return TwistedGroupData(std::move(g), std::move(omega), false);
}

TwistedGroupData TwistedGroupData::unchecked(GroupPtr g, Cochain omega) {
    return TwistedGroupData(std::move(g), std::move(omega), false);
}

long long beta_exponent(const TwistedGroupData& data, Elem a, Elem g, Elem h) {
    const FiniteGroup& G = data.group();
    const Cochain& w = data.omega();
    const Elem gh = G.mul(g, h);
    const long long v = static_cast<long long>(w.at(a, g, h)) + w.at(g, h, G.conj(gh, a)) - w.at(g, G.conj(g, a), h);
    return mod_floor(v, data.modulus());
}

UnityExponent beta(const TwistedGroupData& data, Elem a, Elem g, Elem h) {
    return UnityExponent(beta_exponent(data, a, g, h), data.modulus());
}

RestrictedBeta beta_restricted_cocycle(const TwistedGroupData& data, Elem a) {
    const FiniteGroup& G = data.group();
    G.check_element(a);
    SubgroupGroup c = subgroup_as_group(G, centralizer(G, a));
    auto local = share(c.group);
    Cochain cocycle(local, data.omega().module_ptr(), 2);
    const int n = local->order();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            cocycle.set_raw(static_cast<std::size_t>(x) * n + y,
                            static_cast<Elem>(beta_exponent(data, a, c.embedding[x], c.embedding[y])));
    if (!is_cocycle(cocycle))
        throw Error(ErrorKind::BetaNotCocycle,
                    "beta for class of " + G.label(a) + " is not a 2-cocycle on its centralizer");
    return RestrictedBeta{std::move(c), std::move(cocycle)};
}

CenterCensus simple_census(const TwistedGroupData& data) {
    const FiniteGroup& G = data.group();
    CenterCensus out;
    for (const auto& cls : conjugacy_classes(G)) {
        RestrictedBeta rb = beta_restricted_cocycle(data, cls.representative);
        const FiniteGroup& c = rb.centralizer.group;
        const Cochain& b = rb.cocycle;
        int regular = 0;
        for (const auto& inner : conjugacy_classes(c)) {
            const Elem x = inner.representative;
            bool ok = true;
            for (Elem h = 0; h < c.order() && ok; ++h)
                if (c.mul(x, h) == c.mul(h, x)) ok = b.at(x, h) == b.at(h, x);
            if (ok) ++regular;
        }
        SimpleLabel label;
        label.representative = cls.representative;
        label.class_size = static_cast<int>(cls.elements.size());
        label.centralizer_order = c.order();
        label.irrep_count = regular;
        label.dimension_square_total = c.order();
        out.simple_count += regular;
        out.fpdim_square_total += static_cast<long long>(label.class_size) * label.class_size * c.order();
        out.labels.push_back(label);
    }
    return out;
}

CenterInvertibles invertibles_of_center(const FiniteGroup& n) {
    Quotient ab = quotient(n, commutator_subgroup(n));
    DualGroup chars = dual_group(ab.group);
    SubgroupGroup z = subgroup_as_group(n, center(n));
    FiniteGroup product = direct_product(chars.group, z.group);
    const int zo = z.group.order();
    std::vector<Elem> images(product.order());
    for (Elem p = 0; p < product.order(); ++p) images[p] = p % zo;
    GroupHom proj = make_hom(product, z.group, std::move(images));
    return CenterInvertibles{std::move(chars.group), std::move(z.group), std::move(z.embedding), std::move(product),
                             std::move(proj)};
}

} // namespace gxb
