#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "gxb/subcat.hpp"
#include "oracles.hpp"

using namespace gxb;

namespace {

TwistedDataPtr plain(const std::string& name) { return share(TwistedGroupData::untwisted(share(builtin_group(name)))); }

OmegaBicharacter table(const FiniteGroup& g, const std::vector<Elem>& l, const std::vector<Elem>& m, long long n,
                       const std::function<long long(Elem, Elem)>& f) {
    OmegaBicharacter b;
    b.L = make_subgroup(g, l);
    b.M = make_subgroup(g, m);
    b.modulus = n;
    for (Elem x : b.L.elements)
        for (Elem y : b.M.elements) b.exponents.push_back(mod_floor(f(x, y), n));
    return b;
}

// Every table L x M -> mu_n passing the directly evaluated axioms.
std::vector<std::vector<long long>> brute_bicharacters(const TwistedGroupData& d, const Subgroup& l, const Subgroup& m,
                                                       long long n) {
    const std::size_t cells = static_cast<std::size_t>(l.order()) * m.order();
    std::vector<long long> t(cells, 0);
    std::vector<std::vector<long long>> out;
    while (true) {
        if (oracle::satisfies_axioms(d.group(), d.omega(), l.elements, m.elements, n, t)) out.push_back(t);
        std::size_t i = 0;
        for (; i < cells; ++i) {
            if (++t[i] < n) break;
            t[i] = 0;
        }
        if (i == cells) break;
    }
    return out;
}

} // namespace

TEST_CASE("C2 with trivial omega has five subcategories") {
    // Per-pair counts 1, 1, 1, 2: the toric code's Vec, <e>, <m>, <f> and everything.
    auto subs = enumerate_subcats(plain("C2"));
    REQUIRE(subs.size() == 5);
    std::map<std::pair<int, int>, int> per_pair;
    for (auto& s : subs) ++per_pair[{s.L().order(), s.M().order()}];
    CHECK(per_pair[{1, 1}] == 1);
    CHECK(per_pair[{1, 2}] == 1);
    CHECK(per_pair[{2, 1}] == 1);
    CHECK(per_pair[{2, 2}] == 2);
}

TEST_CASE("verify_bicharacter on C4") {
    auto d = plain("C4");
    const auto& g = d->group();
    std::vector<Elem> all{0, 1, 2, 3};
    auto good = table(g, all, all, 4, [](Elem x, Elem y) { return x * y; });
    CHECK(verify_bicharacter(*d, good).ok);
    auto bad = table(g, all, all, 4, [](Elem x, Elem y) { return x + y; });
    auto check = verify_bicharacter(*d, bad);
    CHECK_FALSE(check.ok);
    CHECK(check.axiom == 1);
    CHECK(check.tuple.size() == 3);
    CHECK_THROWS_AS(SubcatData(d, bad), Error);
    CHECK(verify_bicharacter(*d, OmegaBicharacter::trivial(whole_group(g), trivial_subgroup(), 4)).ok);
}

TEST_CASE("fpdim, centralizer and containment on S3") {
    auto d = plain("S3");
    const auto& g = d->group();
    const long long n = bicharacter_modulus(*d);
    auto whole = whole_group(g);
    auto one = trivial_subgroup();
    auto a3 = make_subgroup(g, {0, 3, 4});
    SubcatData vec(d, OmegaBicharacter::trivial(one, whole, n));
    SubcatData rep(d, OmegaBicharacter::trivial(one, one, n));
    SubcatData a3a3(d, OmegaBicharacter::trivial(a3, a3, n));
    SubcatData a3one(d, OmegaBicharacter::trivial(a3, one, n));
    CHECK(fpdim(vec) == 1);
    CHECK(fpdim(rep) == 6);
    CHECK(fpdim(a3a3) == 6);

    auto full = centralizer_subcat(vec);
    CHECK(full.L() == whole);
    CHECK(full.M() == one);
    CHECK(fpdim(full) == 36);
    CHECK(centralizer_subcat(full) == vec);

    CHECK(contains(a3one, rep));
    CHECK(contains(rep, rep));
    CHECK(contains(a3a3, vec));
    CHECK_FALSE(contains(rep, a3one));

    auto other = plain("C2");
    SubcatData c2vec(other, OmegaBicharacter::trivial(one, whole_group(other->group()), 2));
    try {
        contains(c2vec, vec);
        FAIL("mixed parents accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParentMismatch);
    }
}

TEST_CASE("enumeration always contains the trivial and canonical subcategories") {
    for (const auto& name : fixtures::kBattery) {
        CAPTURE(name);
        for (const auto& data : fixtures::twisted_battery(name)) {
            auto d = share(data);
            auto subs = enumerate_subcats(d);
            const long long n = bicharacter_modulus(*d);
            SubcatData vec(d, OmegaBicharacter::trivial(trivial_subgroup(), whole_group(d->group()), n));
            SubcatData rep(d, OmegaBicharacter::trivial(trivial_subgroup(), trivial_subgroup(), n));
            CHECK(std::find(subs.begin(), subs.end(), vec) != subs.end());
            CHECK(std::find(subs.begin(), subs.end(), rep) != subs.end());
            CHECK(std::is_sorted(subs.begin(), subs.end()));
            CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
        }
    }
}

TEST_CASE("subcategory calculus identities on the battery") {
    for (const auto& name : fixtures::kBattery) {
        CAPTURE(name);
        for (const auto& data : fixtures::twisted_battery(name)) {
            auto d = share(data);
            const long long g2 = static_cast<long long>(d->group().order()) * d->group().order();
            auto subs = enumerate_subcats(d);
            for (const auto& s : subs) {
                auto c = centralizer_subcat(s);
                CHECK(fpdim(s) * fpdim(c) == g2);
                CHECK(centralizer_subcat(c) == s);
                auto check = verify_bicharacter(*d, c.B());
                CHECK_MESSAGE(check.ok, check.message);
                CHECK(std::find(subs.begin(), subs.end(), c) != subs.end());
            }
        }
    }
}

TEST_CASE("containment is a partial order reversed by the centralizer") {
    for (const std::string name : {"C2", "C4", "C2xC2", "S3", "Q8"}) {
        CAPTURE(name);
        auto d = plain(name);
        auto subs = enumerate_subcats(d);
        const std::size_t n = subs.size();
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) le[i][j] = contains(subs[j], subs[i]);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(le[i][i]);
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && le[i][j]) CHECK_FALSE(le[j][i]);
                for (std::size_t k = 0; k < n; ++k)
                    if (le[i][j] && le[j][k]) CHECK(le[i][k]);
                if (le[i][j])
                    CHECK(contains(centralizer_subcat(subs[i]), centralizer_subcat(subs[j])));
            }
        }
    }
}

TEST_CASE("enumeration agrees with brute force over all tables") {
    for (const auto& name : fixtures::kBattery) {
        for (const auto& data : fixtures::twisted_battery(name)) {
            auto d = share(data);
            const long long n = bicharacter_modulus(*d);
            std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::vector<std::vector<long long>>> got;
            for (const auto& s : enumerate_subcats(d)) got[{s.L().elements, s.M().elements}].push_back(s.B().exponents);
            for (const auto& [l, m] : commuting_normal_pairs(d->group())) {
                const double cells = static_cast<double>(l.order()) * m.order();
                if (cells * std::log2(static_cast<double>(n)) > 18) continue;
                CAPTURE(name);
                CAPTURE(l.order());
                CAPTURE(m.order());
                auto expect = brute_bicharacters(*d, l, m, n);
                std::sort(expect.begin(), expect.end());
                CHECK(got[{l.elements, m.elements}] == expect);
            }
        }
    }
}

TEST_CASE("budget is enforced") {
    try {
        solve_bicharacters(*plain("D8"), whole_group(dihedral_group(8)), center(dihedral_group(8)), 10);
        FAIL("budget ignored");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}
