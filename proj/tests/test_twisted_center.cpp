#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "fixtures.hpp"
#include "gxb/twisted_center.hpp"
#include "oracles.hpp"

using namespace gxb;

namespace {

TwistedGroupData c2_sign() {
    auto g = share(cyclic_group(2));
    Cochain w(g, share(CoefficientModule::roots_of_unity(2)), 3);
    w.set({1, 1, 1}, 1);
    return TwistedGroupData(g, w);
}

} // namespace

TEST_CASE("beta values") {
    auto s3 = share(symmetric_group(3));
    auto plain = TwistedGroupData::untwisted(s3);
    for (Elem a = 0; a < 6; ++a)
        for (Elem g = 0; g < 6; ++g)
            for (Elem h = 0; h < 6; ++h) CHECK(beta(plain, a, g, h).is_one());

    auto sign = c2_sign();
    CHECK(beta(sign, 1, 1, 1) == UnityExponent(1, 2));
    CHECK(beta(sign, 0, 1, 1).is_one());
}

TEST_CASE("beta agrees with the direct formula and is trivial at the identity") {
    for (const auto& name : fixtures::kBattery) {
        for (const auto& data : fixtures::twisted_battery(name)) {
            const auto& g = data.group();
            for (Elem a = 0; a < g.order(); ++a)
                for (Elem x = 0; x < g.order(); ++x)
                    for (Elem y = 0; y < g.order(); ++y) {
                        REQUIRE(beta_exponent(data, a, x, y) == oracle::beta_value(g, data.omega(), a, x, y));
                        if (a == 0) CHECK(beta_exponent(data, a, x, y) == 0);
                    }
        }
    }
}

TEST_CASE("restricted beta is a 2-cocycle for every representative and class") {
    for (const auto& name : fixtures::kBattery) {
        CAPTURE(name);
        for (const auto& data : fixtures::twisted_battery(name))
            for (const auto& cls : conjugacy_classes(data.group())) {
                auto rb = beta_restricted_cocycle(data, cls.representative);
                CHECK(is_cocycle(rb.cocycle));
                CHECK(rb.centralizer.group.order() == centralizer(data.group(), cls.representative).order());
            }
    }
}

TEST_CASE("corrupted omega is caught") {
    auto g = share(cyclic_group(4));
    Cochain w(g, share(CoefficientModule::roots_of_unity(4)), 3);
    w.set({1, 1, 2}, 1);  // a single entry: not a cocycle
    CHECK_THROWS_AS(TwistedGroupData(g, w), Error);
    auto bad = TwistedGroupData::unchecked(g, w);
    bool caught = false;
    for (Elem a = 0; a < 4; ++a) {
        try {
            beta_restricted_cocycle(bad, a);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::BetaNotCocycle);
            caught = true;
        }
    }
    CHECK(caught);
}

TEST_CASE("simple census for trivial omega") {
    auto s3 = simple_census(TwistedGroupData::untwisted(share(symmetric_group(3))));
    CHECK(s3.simple_count == 8);
    CHECK(s3.fpdim_square_total == 36);
    std::vector<int> counts;
    for (auto& l : s3.labels) counts.push_back(l.irrep_count);
    CHECK(counts == std::vector<int>{3, 2, 3});

    auto c2 = simple_census(TwistedGroupData::untwisted(share(cyclic_group(2))));
    CHECK(c2.simple_count == 4);
    CHECK(c2.fpdim_square_total == 4);
}

TEST_CASE("census matches centralizer class counts and the dimension identity") {
    for (const auto& name : fixtures::kBattery) {
        CAPTURE(name);
        auto g = share(builtin_group(name));
        auto census = simple_census(TwistedGroupData::untwisted(g));
        long long expect = 0;
        for (const auto& cls : conjugacy_classes(*g)) {
            auto c = subgroup_as_group(*g, centralizer(*g, cls.representative));
            expect += static_cast<long long>(oracle::class_sizes(c.group).size());
        }
        CHECK(census.simple_count == expect);
        for (const auto& data : fixtures::twisted_battery(name))
            CHECK(simple_census(data).fpdim_square_total == static_cast<long long>(g->order()) * g->order());
    }
}

TEST_CASE("twisted census depends only on the class of omega") {
    std::mt19937 rng(41);
    for (const auto& name : fixtures::kBattery) {
        CAPTURE(name);
        for (const auto& data : fixtures::twisted_battery(name)) {
            auto base = simple_census(data);
            for (int trial = 0; trial < 3; ++trial) {
                Cochain chi(data.group_ptr(), data.omega().module_ptr(), 2);
                for (std::size_t i = 0; i < chi.size(); ++i) {
                    auto t = chi.tuple(i);
                    if (t[0] != 0 && t[1] != 0) chi.set_raw(i, static_cast<Elem>(rng() % data.modulus()));
                }
                TwistedGroupData moved(data.group_ptr(), data.omega() + differential(chi));
                auto other = simple_census(moved);
                REQUIRE(other.labels.size() == base.labels.size());
                for (std::size_t i = 0; i < base.labels.size(); ++i)
                    CHECK(other.labels[i].irrep_count == base.labels[i].irrep_count);
            }
        }
    }
}

TEST_CASE("a nontrivial twist can change the census") {
    CHECK(simple_census(c2_sign()).simple_count == 4);
    // Every twist of C2 x C2 stays abelian with 16 simples; on C2^3 the
    // "type III" class gives the double of D8, with 22.
    for (const auto& data : fixtures::twisted_battery("C2xC2")) CHECK(simple_census(data).simple_count == 16);
    auto reps = fixtures::twisted_battery("C2xC2xC2");
    const auto& base = reps.front();
    std::set<long long> counts;
    for (unsigned mask = 0; mask < (1u << (reps.size() - 1)); ++mask) {
        Cochain w(base.group_ptr(), reps[1].omega().module_ptr(), 3);
        for (std::size_t i = 1; i < reps.size(); ++i)
            if (mask & (1u << (i - 1))) w = w + reps[i].omega();
        counts.insert(simple_census(TwistedGroupData(base.group_ptr(), w)).simple_count);
    }
    CHECK(counts == std::set<long long>{22, 64});
}

TEST_CASE("invertible objects of the untwisted center") {
    auto s3 = invertibles_of_center(symmetric_group(3));
    CHECK(s3.characters.order() == 2);
    CHECK(s3.center.order() == 1);
    for (Elem p = 0; p < s3.product.order(); ++p) CHECK(s3.projection(p) == 0);

    auto c2 = invertibles_of_center(cyclic_group(2));
    CHECK(c2.product.order() == 4);
    CHECK(c2.projection.images == std::vector<Elem>{0, 1, 0, 1});

    auto q8 = invertibles_of_center(quaternion_group());
    CHECK(q8.characters.order() == 4);
    CHECK(find_isomorphism(q8.characters, builtin_group("C2xC2")).has_value());
    CHECK(q8.center.order() == 2);
    CHECK(q8.center_embedding == std::vector<Elem>{0, 1});
    CHECK(is_surjective(q8.projection));
}
