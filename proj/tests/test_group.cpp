#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gxb/group.hpp"
#include "oracles.hpp"

using namespace gxb;

namespace {

const std::vector<std::string> kBattery = {"C2", "C3", "C4", "C6", "C2xC2", "S3", "D8", "Q8"};

std::vector<std::vector<Elem>> as_lists(const std::vector<Subgroup>& s) {
    std::vector<std::vector<Elem>> out;
    for (const auto& x : s) out.push_back(x.elements);
    return out;
}

} // namespace

TEST_CASE("cyclic table is addition mod n") {
    auto c4 = cyclic_group(4);
    REQUIRE(c4.order() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(c4.mul(i, j) == (i + j) % 4);
    CHECK(c4.is_abelian());
    CHECK(c4.exponent() == 4);
}

TEST_CASE("tables that are not groups are rejected") {
    SUBCASE("not a Latin square") {
        CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);
    }
    SUBCASE("identity not at 0") {
        CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), Error);
    }
    SUBCASE("Latin loop of order 5 that is not associative") {
        std::vector<std::vector<int>> loop = {
            {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
        try {
            FiniteGroup::from_table(loop);
            FAIL("accepted a non-associative loop");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAGroup);
        }
    }
    SUBCASE("unknown builtin") {
        try {
            builtin_group("Z7");
            FAIL("accepted unknown name");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnknownBuiltin);
        }
    }
}

TEST_CASE("builtin orders") {
    CHECK(builtin_group("C6").order() == 6);
    CHECK(builtin_group("C2xC2").order() == 4);
    CHECK(builtin_group("C2xC2xC2").order() == 8);
    CHECK(builtin_group("D8").order() == 8);
    CHECK(builtin_group("D10").order() == 10);
    CHECK(builtin_group("S3").order() == 6);
    CHECK(builtin_group("S4").order() == 24);
    CHECK(builtin_group("Q8").order() == 8);
    CHECK_FALSE(builtin_group("D8").is_abelian());
    CHECK(builtin_group("Q8").exponent() == 4);
}

TEST_CASE("conjugacy classes of S3 and Q8") {
    auto s3 = symmetric_group(3);
    auto cls = conjugacy_classes(s3);
    std::vector<int> sizes;
    for (auto& c : cls) sizes.push_back(static_cast<int>(c.elements.size()));
    CHECK(sizes == std::vector<int>{1, 3, 2});

    auto q8 = quaternion_group();
    sizes.clear();
    for (auto& c : conjugacy_classes(q8)) sizes.push_back(static_cast<int>(c.elements.size()));
    CHECK(sizes == std::vector<int>{1, 1, 2, 2, 2});
}

TEST_CASE("classes, center and subgroups agree with brute force on the battery") {
    for (const auto& name : kBattery) {
        CAPTURE(name);
        auto g = builtin_group(name);
        std::vector<int> sizes;
        int total = 0;
        for (auto& c : conjugacy_classes(g)) {
            sizes.push_back(static_cast<int>(c.elements.size()));
            total += static_cast<int>(c.elements.size());
            CHECK(c.representative == c.elements.front());
        }
        CHECK(total == g.order());
        CHECK(sizes == oracle::class_sizes(g));
        CHECK(center(g).elements == oracle::center_by_pairs(g));

        auto subs = all_subgroups(g);
        CHECK(as_lists(subs) == oracle::subgroups_by_subsets(g));
        for (auto& s : subs) CHECK(g.order() % s.order() == 0);

        std::vector<std::vector<Elem>> normal_oracle;
        for (auto& s : oracle::subgroups_by_subsets(g))
            if (oracle::normal_by_conjugation(g, s)) normal_oracle.push_back(s);
        CHECK(as_lists(normal_subgroups(g)) == normal_oracle);

        for (Elem a = 0; a < g.order(); ++a) {
            auto c = centralizer(g, a);
            std::vector<Elem> expect;
            for (Elem x = 0; x < g.order(); ++x)
                if (g.mul(a, x) == g.mul(x, a)) expect.push_back(x);
            CHECK(c.elements == expect);
        }
    }
}

TEST_CASE("subgroup counts") {
    CHECK(all_subgroups(symmetric_group(3)).size() == 6);
    CHECK(normal_subgroups(symmetric_group(3)).size() == 3);
    CHECK(all_subgroups(quaternion_group()).size() == 6);
    CHECK(normal_subgroups(quaternion_group()).size() == 6);
    CHECK(all_subgroups(dihedral_group(8)).size() == 10);
    CHECK(all_subgroups(symmetric_group(4)).size() == 30);
    CHECK_THROWS_AS(all_subgroups(symmetric_group(4), 12), Error);
}

TEST_CASE("commuting normal pairs match brute force") {
    for (const auto& name : kBattery) {
        CAPTURE(name);
        auto g = builtin_group(name);
        std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> expect;
        std::vector<std::vector<Elem>> normals;
        for (auto& s : oracle::subgroups_by_subsets(g))
            if (oracle::normal_by_conjugation(g, s)) normals.push_back(s);
        for (auto& l : normals)
            for (auto& m : normals) {
                bool ok = true;
                for (Elem a : l)
                    for (Elem b : m) ok = ok && g.mul(a, b) == g.mul(b, a);
                if (ok) expect.insert({l, m});
            }
        std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> got;
        for (auto& [l, m] : commuting_normal_pairs(g)) got.insert({l.elements, m.elements});
        CHECK(got == expect);
    }
}

TEST_CASE("quotients") {
    auto c4 = cyclic_group(4);
    auto q = quotient(c4, make_subgroup(c4, {0, 2}));
    CHECK(q.group.order() == 2);
    for (Elem a = 0; a < 4; ++a) CHECK(q.projection(a) == a % 2);
    CHECK(q.section == std::vector<Elem>{0, 1});

    auto s3 = symmetric_group(3);
    auto a3 = make_subgroup(s3, {0, 3, 4});
    auto sq = quotient(s3, a3);
    CHECK(sq.group.order() == 2);
    CHECK(find_isomorphism(sq.group, cyclic_group(2)).has_value());

    try {
        quotient(s3, make_subgroup(s3, {0, 1}));
        FAIL("quotient by non-normal subgroup");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotNormal);
    }

    for (const auto& name : kBattery) {
        auto g = builtin_group(name);
        for (auto& n : normal_subgroups(g)) {
            auto qq = quotient(g, n);
            CHECK(qq.group.order() * n.order() == g.order());
            CHECK(is_homomorphism(g, qq.group, qq.projection.images));
            for (Elem x = 0; x < qq.group.order(); ++x) CHECK(qq.projection(qq.section[x]) == x);
            CHECK(kernel(qq.projection).elements == n.elements);
        }
    }
}

TEST_CASE("duals and annihilators") {
    auto c4 = cyclic_group(4);
    auto d = dual_group(c4);
    CHECK(d.group.order() == 4);
    CHECK(find_isomorphism(d.group, c4).has_value());

    for (const auto& name : {"C2", "C4", "C6", "C2xC2", "C2xC4", "C3xC3"}) {
        CAPTURE(name);
        auto a = builtin_group(name);
        auto dual = dual_group(a);
        REQUIRE(dual.group.order() == a.order());
        // Characters are homomorphisms into Z/modulus and distinct.
        std::set<std::vector<int>> rows;
        for (Elem chi = 0; chi < dual.group.order(); ++chi) {
            rows.insert(dual.pairing[chi]);
            for (Elem x = 0; x < a.order(); ++x)
                for (Elem y = 0; y < a.order(); ++y)
                    CHECK((dual.pairing[chi][x] + dual.pairing[chi][y]) % dual.modulus ==
                          dual.pairing[chi][a.mul(x, y)]);
        }
        CHECK(rows.size() == static_cast<std::size_t>(a.order()));
        for (auto& h : all_subgroups(a)) {
            auto perp = annihilator(a, h);
            CHECK(perp.order() * h.order() == a.order());
            CHECK(annihilator_in_group(dual, perp).elements == h.elements);
        }
    }

    try {
        dual_group(symmetric_group(3));
        FAIL("dual of nonabelian");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAbelian);
    }
}

TEST_CASE("abelian bases decompose the group") {
    for (const auto& name : {"C1", "C2", "C6", "C2xC2", "C2xC4", "C2xC2xC2", "C4xC4"}) {
        CAPTURE(name);
        auto a = builtin_group(name);
        auto b = abelian_basis(a);
        int prod = 1;
        for (int o : b.orders) prod *= o;
        CHECK(prod == a.order());
        for (int i = 0; i < b.rank(); ++i) CHECK(a.element_order(b.generators[i]) == b.orders[i]);
        for (Elem x = 0; x < a.order(); ++x) CHECK(b.element(b.coordinates[x]) == x);
    }
}

TEST_CASE("permutation groups") {
    auto g = permutation_group(3, {"(0 1 2)", "(0 1)"});
    CHECK(g.order() == 6);
    CHECK(find_isomorphism(g, symmetric_group(3)).has_value());
    auto v4 = permutation_group(4, {"(0 1)(2 3)", "(0 2)(1 3)"});
    CHECK(v4.order() == 4);
    CHECK(find_isomorphism(v4, builtin_group("C2xC2")).has_value());
    CHECK_FALSE(find_isomorphism(v4, cyclic_group(4)).has_value());
    CHECK_THROWS_AS(permutation_group(3, {"(0 5)"}), Error);
}

TEST_CASE("isomorphism classes in the battery") {
    CHECK_FALSE(find_isomorphism(dihedral_group(8), quaternion_group()).has_value());
    CHECK(find_isomorphism(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)).has_value());
    CHECK(find_isomorphism(dihedral_group(6), symmetric_group(3)).has_value());
}

TEST_CASE("homomorphism enumeration matches brute force") {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"C2", "C2"}, {"S3", "C2"}, {"C4", "C2xC2"}, {"C2xC2", "C4"}, {"Q8", "C2xC2"},
        {"C3", "S3"}, {"C2", "D8"}, {"C6", "C6"}, {"S3", "S3"}};
    for (auto& [s, t] : pairs) {
        CAPTURE(s);
        CAPTURE(t);
        auto a = builtin_group(s);
        auto b = builtin_group(t);
        auto homs = all_homomorphisms(a, b);
        CHECK(static_cast<long long>(homs.size()) == oracle::hom_count_by_maps(a, b));
        for (auto& h : homs) CHECK(is_homomorphism(a, b, h.images));
    }
    CHECK(all_homomorphisms(symmetric_group(3), cyclic_group(2)).size() == 2);
}

TEST_CASE("homomorphism validation") {
    auto c4 = cyclic_group(4);
    auto c2 = cyclic_group(2);
    auto f = make_hom(c4, c2, {0, 1, 0, 1});
    CHECK(is_surjective(f));
    CHECK(kernel(f).elements == std::vector<Elem>{0, 2});
    try {
        make_hom(c4, c2, {0, 1, 1, 0});
        FAIL("accepted non-homomorphism");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAHomomorphism);
    }
}

TEST_CASE("subgroup helpers") {
    auto s3 = symmetric_group(3);
    CHECK_FALSE(is_subgroup(s3, {0, 1, 2}));
    CHECK_THROWS_AS(make_subgroup(s3, {0, 1, 2}), Error);
    CHECK(commutator_subgroup(s3).order() == 3);
    CHECK(commutator_subgroup(quaternion_group()).order() == 2);
    CHECK(generated_subgroup(s3, {1, 3}).order() == 6);
    auto sg = subgroup_as_group(s3, make_subgroup(s3, {0, 3, 4}));
    CHECK(sg.group.order() == 3);
    CHECK(sg.embedding == std::vector<Elem>{0, 3, 4});
    CHECK(sg.local[3] == 1);
    CHECK(sg.local[1] == -1);
    auto z = center(quaternion_group());
    CHECK(intersect(z, whole_group(quaternion_group())) == z);
    CHECK(is_subset(trivial_subgroup(), z));
}
