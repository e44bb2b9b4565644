#include "gxb/crossed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gxb {

// ---------------------------------------------------------------- gradings

GradingSpec pointed_grading(const FiniteGroup& g, const FiniteGroup& target, const GroupHom& pi) {
    if (pi.source_order != g.order() || pi.target_order != target.order() || !is_homomorphism(g, target, pi.images))
        throw Error(ErrorKind::NotAHomomorphism, "grading map is not a homomorphism onto " + target.name());
    if (!is_surjective(pi)) throw Error(ErrorKind::NotSurjective, "grading map onto " + target.name() + " is not surjective");
    GradingSpec spec;
    spec.kind = GradingSpec::Kind::Pointed;
    spec.projection = pi;
    spec.section.assign(target.order(), -1);
    for (Elem a = 0; a < g.order(); ++a)
        if (spec.section[pi(a)] < 0) spec.section[pi(a)] = a;
    spec.kernel = kernel(pi);
    spec.grading_group = target;
    return spec;
}

GradingSpec pointed_grading_by_kernel(const FiniteGroup& g, const Subgroup& k) {
    Quotient q = quotient(g, k);
    return pointed_grading(g, q.group, q.projection);
}

GradingSpec rep_grading(const FiniteGroup& g, const Subgroup& h) {
    if (!is_subgroup(g, h.elements)) throw Error(ErrorKind::MalformedInput, "grading datum is not a subgroup");
    const Subgroup z = center(g);
    if (!is_subset(h, z)) throw Error(ErrorKind::NotCentral, "grading subgroup is not contained in the center");
    SubgroupGroup zg = subgroup_as_group(g, z);
    std::vector<Elem> local;
    for (Elem x : h.elements) local.push_back(zg.local[x]);
    Subgroup h_local = make_subgroup(zg.group, local);
    DualGroup dual = dual_group(zg.group);
    Subgroup perp = annihilator(zg.group, h_local);
    GradingSpec spec;
    spec.kind = GradingSpec::Kind::Rep;
    spec.central_subgroup = h;
    spec.grading_group = quotient(dual.group, perp).group;
    return spec;
}

std::vector<GradingSpec> gradings_of_rep(const FiniteGroup& g) {
    SubgroupGroup zg = subgroup_as_group(g, center(g));
    std::vector<Subgroup> hs;
    for (const auto& s : all_subgroups(zg.group)) {
        std::vector<Elem> ids;
        for (Elem x : s.elements) ids.push_back(zg.embedding[x]);
        hs.push_back(make_subgroup(g, ids));
    }
    std::sort(hs.begin(), hs.end());
    std::vector<GradingSpec> out;
    for (const auto& h : hs) out.push_back(rep_grading(g, h));
    return out;
}

// ---------------------------------------------------------------- conditions

namespace {

void require_parent(const GradingSpec& grading, const TwistedGroupData& data) {
    const FiniteGroup& g = data.group();
    if (grading.kind == GradingSpec::Kind::Pointed) {
        if (grading.projection.source_order != g.order())
            throw Error(ErrorKind::ParentMismatch, "grading map is defined on a different group");
    } else {
        if (!data.untwisted_omega())
            throw Error(ErrorKind::InvalidGrading, "Rep gradings need the untwisted center");
        if (!is_subgroup(g, grading.central_subgroup.elements) || !is_subset(grading.central_subgroup, center(g)))
            throw Error(ErrorKind::ParentMismatch, "grading subgroup is not central in this group");
    }
}

// Whether B(l, .) descends to M/H and l -> B(l, .) is injective.
bool descends_injectively(const SubcatData& s, const Subgroup& h, std::string& why) {
    if (!is_subset(h, s.M())) {
        why = "H is not contained in M";
        return false;
    }
    for (Elem l : s.L().elements)
        for (Elem x : h.elements)
            if (s.B().at(l, x) != 0) {
                why = "B is nontrivial on L x H";
                return false;
            }
    for (Elem l : s.L().elements) {
        if (l == 0) continue;
        bool nonzero = false;
        for (Elem m : s.M().elements) nonzero = nonzero || s.B().at(l, m) != 0;
        if (!nonzero) {
            why = "B-hat is not injective";
            return false;
        }
    }
    return true;
}

} // namespace

TheoremChecks check_theorem_conditions(const GradingSpec& grading, const SubcatData& s) {
    const TwistedGroupData& data = s.parent();
    const FiniteGroup& g = data.group();
    require_parent(grading, data);
    const long long n = s.B().modulus;
    TheoremChecks out;
    std::vector<std::string> notes;
    if (grading.kind == GradingSpec::Kind::Pointed) {
        SubcatData canonical(s.parent_ptr(), OmegaBicharacter::trivial(trivial_subgroup(), grading.kernel, n));
        out.centralizes = contains(centralizer_subcat(canonical), s);
        if (!out.centralizes) notes.push_back("L is not inside the kernel");
        out.transverse = s.M() == whole_group(g);
        if (!out.transverse) notes.push_back("M is not the whole group");
    } else {
        const Subgroup& h = grading.central_subgroup;
        SubcatData canonical(s.parent_ptr(), OmegaBicharacter::trivial(h, whole_group(g), n));
        out.centralizes = contains(centralizer_subcat(canonical), s);
        if (!out.centralizes) notes.push_back("not inside the centralizer of the canonical subcategory");
        std::string why;
        out.transverse = descends_injectively(s, h, why);
        if (!out.transverse) notes.push_back(why);
    }
    out.fpdim = static_cast<long long>(grading.grading_order()) * fpdim(s) == g.order();
    if (!out.fpdim) notes.push_back("dimension count fails");
    for (std::size_t i = 0; i < notes.size(); ++i) out.detail += (i ? "; " : "") + notes[i];
    return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

CrossedBraidingCertificate certify(const GradingSpec& grading, SubcatData witness) {
    TheoremChecks checks = check_theorem_conditions(grading, witness);
    if (!checks.all()) throw std::logic_error("enumerated witness fails the braiding conditions: " + checks.detail);
    return CrossedBraidingCertificate{grading, std::move(witness), std::move(checks)};
}

void sort_certificates(std::vector<CrossedBraidingCertificate>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.witness < b.witness; });
}

} // namespace

CrossedEnumeration enumerate_pointed(TwistedDataPtr data, const GradingSpec& grading, double budget) {
    if (grading.kind != GradingSpec::Kind::Pointed)
        throw Error(ErrorKind::InvalidGrading, "pointed enumeration needs a grading map");
    require_parent(grading, *data);
    const FiniteGroup& g = data->group();
    CrossedEnumeration out;
    if (!is_subset(grading.kernel, center(g))) {
        out.reason = "kernel-not-central";
        return out;
    }
    for (auto& b : solve_bicharacters(*data, grading.kernel, whole_group(g), budget))
        out.certificates.push_back(certify(grading, SubcatData(data, std::move(b))));
    sort_certificates(out.certificates);
    return out;
}

CrossedEnumeration enumerate_rep(TwistedDataPtr data, const GradingSpec& grading) {
    if (grading.kind != GradingSpec::Kind::Rep)
        throw Error(ErrorKind::InvalidGrading, "Rep enumeration needs a central subgroup");
    require_parent(grading, *data);
    const FiniteGroup& g = data->group();
    const Subgroup& h = grading.central_subgroup;
    const long long n = bicharacter_modulus(*data);
    const auto normals = normal_subgroups(g);
    CrossedEnumeration out;

    for (const auto& m : normals) {
        if (!is_subset(h, m)) continue;
        SubgroupGroup mg = subgroup_as_group(g, m);
        std::vector<Elem> h_local;
        for (Elem x : h.elements) h_local.push_back(mg.local[x]);
        Quotient q = quotient(mg.group, make_subgroup(mg.group, h_local));
        if (!q.group.is_abelian()) continue;
        const AbelianBasis qb = abelian_basis(q.group);

        for (const auto& l : normals) {
            if (l.order() != q.group.order()) continue;
            if (!commute_elementwise(g, l, l) || !commute_elementwise(g, l, m)) continue;
            SubgroupGroup lg = subgroup_as_group(g, l);
            const AbelianBasis lb = abelian_basis(lg.group);

            // Bilinear pairings are fixed by their values on basis pairs:
            // e_ij / gcd(|l_i|, |q_j|).
            const int r = lb.rank(), c = qb.rank();
            std::vector<long long> caps;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) caps.push_back(std::gcd(lb.orders[i], qb.orders[j]));
            std::vector<long long> e(caps.size(), 0);
            while (true) {
                OmegaBicharacter b;
                b.L = l;
                b.M = m;
                b.modulus = n;
                for (Elem x : l.elements) {
                    const auto& lc = lb.coordinates[lg.local[x]];
                    for (Elem y : m.elements) {
                        const auto& qc = qb.coordinates[q.projection(mg.local[y])];
                        long long v = 0;
                        for (int i = 0; i < r; ++i)
                            for (int j = 0; j < c; ++j) {
                                const std::size_t k = static_cast<std::size_t>(i) * c + j;
                                v += static_cast<long long>(lc[i]) * qc[j] * e[k] * (n / caps[k]);
                            }
                        b.exponents.push_back(mod_floor(v, n));
                    }
                }
                bool keep = true;
                for (Elem x : l.elements) {
                    if (x == 0) continue;
                    bool nonzero = false;
                    for (Elem y : m.elements) nonzero = nonzero || b.at(x, y) != 0;
                    keep = keep && nonzero;
                }
                for (Elem t = 0; t < g.order() && keep; ++t)
                    for (Elem x : l.elements)
                        for (Elem y : m.elements)
                            keep = keep && b.at(g.conj(t, x), y) == b.at(x, g.conj(g.inv(t), y));
                if (keep) out.certificates.push_back(certify(grading, SubcatData(data, std::move(b))));

                std::size_t k = 0;
                for (; k < e.size(); ++k) {
                    if (++e[k] < caps[k]) break;
                    e[k] = 0;
                }
                if (k == e.size()) break;
            }
        }
    }
    sort_certificates(out.certificates);
    return out;
}

CrossedEnumeration enumerate_rep(const FiniteGroup& g, const Subgroup& h) {
    auto data = share(TwistedGroupData::untwisted(share(g)));
    return enumerate_rep(data, rep_grading(g, h));
}

} // namespace gxb
