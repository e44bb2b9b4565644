#include "gxb/selftest.hpp"

#include <functional>
#include <random>

#include "gxb/io.hpp"

namespace gxb {

bool SelftestReport::passed() const {
    for (const auto& p : properties)
        if (!p.passed) return false;
    return true;
}

namespace {

struct BatteryEntry {
    GroupPtr group;
    std::vector<Cochain> omegas;  // zero cochain first, then the stored representatives
};

// A property returns an empty string on success, otherwise what went wrong.
using Property = std::function<std::string(const BatteryEntry&)>;

std::string describe(const BatteryEntry& e, std::size_t k) {
    return e.group->name() + (k == 0 ? " with trivial omega" : " with omega repr:" + std::to_string(k - 1));
}

std::string class_equation(const BatteryEntry& e) {
    const auto& g = *e.group;
    int total = 0;
    for (const auto& c : conjugacy_classes(g)) {
        total += static_cast<int>(c.elements.size());
        if (g.order() % static_cast<int>(c.elements.size()) != 0) return g.name() + ": class size does not divide |G|";
    }
    if (total != g.order()) return g.name() + ": class sizes do not sum to |G|";
    for (Elem z : center(g).elements)
        for (Elem x = 0; x < g.order(); ++x)
            if (g.mul(z, x) != g.mul(x, z)) return g.name() + ": center element " + std::to_string(z) + " is not central";
    return {};
}

std::string fixtures_are_cocycles(const BatteryEntry& e) {
    for (std::size_t k = 0; k < e.omegas.size(); ++k) {
        if (!e.omegas[k].is_normalized()) return describe(e, k) + ": not normalized";
        if (!is_cocycle(e.omegas[k])) return describe(e, k) + ": not a 3-cocycle";
    }
    return {};
}

std::string beta_property(const BatteryEntry& e) {
    for (std::size_t k = 0; k < e.omegas.size(); ++k) {
        auto data = TwistedGroupData::unchecked(e.group, e.omegas[k]);
        for (const auto& c : conjugacy_classes(*e.group)) {
            try {
                beta_restricted_cocycle(data, c.representative);
            } catch (const Error& err) {
                return describe(e, k) + ", class of " + std::to_string(c.representative) + ": " + err.what();
            }
        }
    }
    return {};
}

std::string census_property(const BatteryEntry& e) {
    const long long n = e.group->order();
    for (std::size_t k = 0; k < e.omegas.size(); ++k) {
        auto census = simple_census(TwistedGroupData(e.group, e.omegas[k]));
        if (census.fpdim_square_total != n * n) return describe(e, k) + ": sum of FPdim^2 is not |G|^2";
        for (const auto& l : census.labels)
            if (l.dimension_square_total != l.centralizer_order)
                return describe(e, k) + ": projective dimensions do not fill the centralizer";
    }
    return {};
}

std::string subcat_calculus(const BatteryEntry& e) {
    const long long n = e.group->order();
    for (std::size_t k = 0; k < e.omegas.size(); ++k) {
        auto data = share(TwistedGroupData(e.group, e.omegas[k]));
        for (const auto& s : enumerate_subcats(data)) {
            auto c = centralizer_subcat(s);
            if (fpdim(s) * fpdim(c) != n * n) return describe(e, k) + ": fpdim(s) fpdim(s') is not |G|^2";
            if (!(centralizer_subcat(c) == s)) return describe(e, k) + ": double centralizer differs";
        }
    }
    return {};
}

std::string pointed_uniqueness(const BatteryEntry& e) {
    const auto& g = *e.group;
    for (std::size_t k = 0; k < e.omegas.size(); ++k) {
        auto data = share(TwistedGroupData(e.group, e.omegas[k]));
        auto found = enumerate_pointed(data, pointed_grading(g, g, identity_hom(g))).certificates.size();
        if (found != 1) return describe(e, k) + ": " + std::to_string(found) + " braidings on the identity grading";
    }
    return {};
}

std::string rep_certificates(const BatteryEntry& e) {
    auto data = share(TwistedGroupData::untwisted(e.group));
    for (const auto& spec : gradings_of_rep(*e.group))
        for (const auto& c : enumerate_rep(data, spec).certificates) {
            if (!check_theorem_conditions(spec, c.witness).all()) return e.group->name() + ": certificate fails the conditions";
            if (!verify_bicharacter(*data, c.witness.B()).ok) return e.group->name() + ": witness is not a bicharacter";
        }
    return {};
}

std::string extension_identity(const BatteryEntry& e) {
    for (const auto& n : normal_subgroups(*e.group)) {
        try {
            extension_cocycle(*e.group, n);
        } catch (const std::logic_error& err) {
            return e.group->name() + ", normal subgroup of order " + std::to_string(n.order()) + ": " + err.what();
        }
    }
    return {};
}

std::string fibered_oracle(const BatteryEntry& e) {
    const auto& g = *e.group;
    for (const auto& n : normal_subgroups(g)) {
        const bool verdict = fibered_enrichment_extends(g, n).extends;
        const bool product =
            find_isomorphism(g, direct_product(subgroup_as_group(g, n).group, quotient(g, n).group)).has_value();
        if (verdict != product) return g.name() + ", normal subgroup of order " + std::to_string(n.order()) + ": verdict differs";
    }
    return {};
}

} // namespace

SelftestReport run_selftest(const std::filesystem::path& fixture_dir, std::uint64_t seed) {
    std::vector<BatteryEntry> battery;
    for (const auto& name : kSelftestBattery) {
        BatteryEntry e{share(builtin_group(name)), {}};
        auto fixture = omega_fixture_for(fixture_dir, e.group);
        e.omegas.emplace_back(e.group, share(CoefficientModule::roots_of_unity(e.group->order())), 3);
        for (auto& r : fixture.representatives) e.omegas.push_back(std::move(r));
        battery.push_back(std::move(e));
    }

    std::mt19937_64 rng(seed);
    auto differential_property = [&rng](const BatteryEntry& e) -> std::string {
        auto m = share(CoefficientModule::roots_of_unity(e.group->order()));
        for (int degree : {0, 1, 2})
            for (int trial = 0; trial < 8; ++trial) {
                Cochain c(e.group, m, degree);
                for (std::size_t i = 0; i < c.size(); ++i) c.set_raw(i, static_cast<Elem>(rng() % m->group().order()));
                if (!differential(differential(c)).is_zero())
                    return e.group->name() + ": d(d(c)) is nonzero for a degree-" + std::to_string(degree) + " cochain";
            }
        return {};
    };

    const std::vector<std::pair<std::string, Property>> properties = {
        {"class-equation", class_equation},
        {"differential-squares-to-zero", differential_property},
        {"omega-fixtures-are-cocycles", fixtures_are_cocycles},
        {"beta-restricted-cocycle", beta_property},
        {"center-dimension-count", census_property},
        {"subcategory-centralizer-calculus", subcat_calculus},
        {"pointed-braiding-unique", pointed_uniqueness},
        {"rep-certificates-verify", rep_certificates},
        {"extension-cocycle-identity", extension_identity},
        {"fibered-matches-product-decomposition", fibered_oracle},
    };

    SelftestReport report;
    for (const auto& [name, property] : properties) {
        PropertyResult r{name, true, {}};
        for (const auto& e : battery) {
            std::string failure;
            try {
                failure = property(e);
            } catch (const std::exception& err) {
                failure = e.group->name() + ": " + err.what();
            }
            if (!failure.empty()) {
                r.passed = false;
                r.detail = failure;
                break;
            }
        }
        report.properties.push_back(std::move(r));
    }
    return report;
}

} // namespace gxb
