#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "gxb/cli.hpp"
#include "oracles.hpp"

using namespace gxb;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("gxb_cli_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("pointed verb examples") {
    auto r = run({"crossed-pointed", "--group", "S3", "--omega", "trivial", "--grading", "full"});
    CHECK(r.code == kExitOk);
    auto j = r.json();
    CHECK(j.at("count") == 1);
    CHECK(j.at("certificates").size() == 1);
    CHECK(j.at("reason").is_string());

    auto rejected = run({"crossed-pointed", "--group", "S3", "--grading", "quotient-by:0,3,4"});
    CHECK(rejected.code == kExitRejected);
    CHECK(rejected.json().at("reason") == "kernel-not-central");
    CHECK(rejected.json().at("count") == 0);

    auto c4 = run({"crossed-pointed", "--group", "C4", "--grading", "quotient-by:0,2"});
    CHECK(c4.code == kExitOk);
    CHECK(c4.json().at("count") == 2);

    for (const std::string k : {"0", "1", "2", "3"}) {
        auto d8 = run({"crossed-pointed", "--group", "D8", "--omega", "repr:" + k});
        CHECK(d8.code == kExitOk);
        CHECK(d8.json().at("count") == 1);
        CHECK(d8.json().at("ambient").at("omega_source") == "stored");
    }
}

TEST_CASE("Rep verb on C4 with the full center matches a brute-force triple search") {
    auto r = run({"crossed-rep", "--group", "C4", "--center-subgroup", "full"});
    REQUIRE(r.code == kExitOk);
    const auto count = r.json().at("count").get<long long>();

    // Oracle: every (L, M, table) passing the axioms directly, then the three conditions.
    auto g = cyclic_group(4);
    auto data = share(TwistedGroupData::untwisted(share(g)));
    auto spec = rep_grading(g, whole_group(g));
    long long brute = 0;
    for (const auto& l : normal_subgroups(g))
        for (const auto& m : normal_subgroups(g)) {
            // The dimension condition alone rules out any pair with |L| [G:M] != |G| / |H|.
            if (l.order() * (g.order() / m.order()) * spec.grading_order() != g.order()) continue;
            const std::size_t cells = l.elements.size() * m.elements.size();
            std::vector<long long> t(cells, 0);
            while (true) {
                if (oracle::satisfies_axioms(g, data->omega(), l.elements, m.elements, 4, t)) {
                    OmegaBicharacter b{l, m, 4, t};
                    if (check_theorem_conditions(spec, SubcatData(data, b)).all()) ++brute;
                }
                std::size_t i = 0;
                for (; i < cells; ++i) {
                    if (++t[i] < 4) break;
                    t[i] = 0;
                }
                if (i == cells) break;
            }
        }
    CHECK(count == brute);
    CHECK(count == 1);

    auto trivial = run({"crossed-rep", "--group", "C4", "--center-subgroup", "trivial"});
    CHECK(trivial.json().at("count") == 4);
    auto bad = run({"crossed-rep", "--group", "S3", "--center-subgroup", "0,3,4"});
    CHECK(bad.code == kExitRejected);
    CHECK(bad.json().at("error") == "NotCentral");
}

TEST_CASE("obstruction lab verbs") {
    auto f = run({"fibered", "--extension", "C4", "--normal", "0,2"});
    CHECK(f.code == kExitOk);
    CHECK(f.json().at("extends") == false);
    auto v = run({"fibered", "--extension", "C2xC2", "--normal", "0,2"}).json();
    CHECK(v.at("extends") == true);
    CHECK(v.at("torsor_count") == 2);
    CHECK(run({"fibered", "--extension", "S3", "--normal", "0,1"}).code == kExitRejected);

    auto z = run({"zesting", "--group", "S3", "--over", "C2"}).json();
    CHECK(z.at("all_lift") == true);
    CHECK(z.at("classes").size() == 2);
    auto zc = run({"zesting", "--group", "C2"}).json();
    CHECK(zc.at("all_lift") == false);

    auto o = run({"obstruction", "--over", "C2", "--coefficients", "C2"}).json();
    REQUIRE(o.at("classes").size() == 2);
    CHECK(o.at("classes")[0].at("splitting_count") == 2);
    CHECK(o.at("classes")[1].at("vanishes") == false);

    auto dir = scratch("cocycle");
    std::ofstream(dir / "w.json") << R"({"degree": 2, "module": {"builtin": "C2"}, "entries": {"1,1": 1}})";
    auto one = run({"obstruction", "--over", "C2", "--coefficients", "C2", "--cocycle", (dir / "w.json").string()}).json();
    CHECK(one.at("vanishes") == false);
    CHECK(one.at("splitting_count") == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("other verbs") {
    auto g = run({"group", "--group", "S3"}).json();
    CHECK(g.at("order") == 6);
    CHECK(g.at("classes").size() == 3);
    CHECK(run({"subgroups", "--group", "S4"}).json().at("count") == 30);
    CHECK(run({"subgroups", "--group", "S4", "--normal-only"}).json().at("count") == 4);
    auto h = run({"cohomology", "--group", "C2xC2", "--degree", "3", "--modulus", "4"}).json();
    CHECK(h.at("invariant_factors") == Json{2, 2, 2, 2});
    auto h2 = run({"cohomology", "--group", "C2", "--degree", "2", "--coefficients", "C2"}).json();
    CHECK(h2.at("order") == 2);
    auto census = run({"center-census", "--group", "S3"}).json();
    CHECK(census.at("simple_count") == 8);
    CHECK(census.at("fpdim_square_total") == 36);
    auto subs = run({"subcats", "--group", "C2"}).json();
    CHECK(subs.at("count") == 5);
    CHECK(subs.at("subcategories")[0].contains("fpdim"));
    CHECK(run({"gradings-rep", "--group", "C4"}).json().at("count") == 3);
}

TEST_CASE("malformed input exits with 1 and names the datum") {
    auto unknown = run({"group", "--group", "Z9"});
    CHECK(unknown.code == kExitMalformed);
    CHECK(unknown.err.find("Z9") != std::string::npos);

    auto ids = run({"fibered", "--extension", "C4", "--normal", "0,x"});
    CHECK(ids.code == kExitMalformed);
    CHECK(ids.json().at("reason").get<std::string>().find("'x'") != std::string::npos);

    CHECK(run({"crossed-pointed", "--group", "C4", "--grading", "halves"}).code == kExitMalformed);
    CHECK(run({"crossed-pointed", "--group", "C4", "--omega", "repr:7"}).code == kExitMalformed);
    CHECK(run({"crossed-pointed"}).code == kExitMalformed);
    CHECK(run({"no-such-verb"}).code == kExitMalformed);
    CHECK(run({}).code == kExitMalformed);
    CHECK(run({"group", "--group", "S3", "--format", "xml"}).code == kExitMalformed);

    auto dir = scratch("badjson");
    std::ofstream(dir / "g.json") << "{not json";
    auto bad = run({"group", "--group", (dir / "g.json").string()});
    CHECK(bad.code == kExitMalformed);
    CHECK(bad.err.find("g.json") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("a non-cocycle omega file is a domain rejection") {
    auto dir = scratch("omega");
    std::ofstream(dir / "w.json") << R"({"degree": 3, "modulus": 4, "entries": {"1,1,2": 1}, "normalized": true})";
    auto r = run({"center-census", "--group", "C4", "--omega", (dir / "w.json").string()});
    CHECK(r.code == kExitRejected);
    CHECK(r.json().at("error") == "NotACocycle");
    std::filesystem::remove_all(dir);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> cases = {
        {"subcats", "--group", "D8", "--omega", "repr:2"},
        {"crossed-rep", "--group", "Q8", "--center-subgroup", "trivial", "--format", "table"},
        {"center-census", "--group", "C2xC2xC2", "--omega", "repr:9"},
        {"selftest", "--seed", "5"},
    };
    for (const auto& args : cases) {
        auto a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("table format is derived from the JSON report") {
    auto t = run({"center-census", "--group", "S3", "--format", "table"});
    CHECK(t.code == kExitOk);
    CHECK(t.out.find("simple_count") != std::string::npos);
    CHECK(t.out.find("centralizer_order") != std::string::npos);
    Json rows = Json::array({{{"a", 1}, {"bb", "x"}}, {{"a", 22}}});
    CHECK(render_table(rows) == "a   bb\n1   x\n22  -\n");
}

TEST_CASE("selftest passes, names a corrupted fixture, and ignores the seed") {
    auto ok = run({"selftest"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.json().at("passed") == true);

    std::vector<bool> base;
    const Json ok_report = ok.json();
    for (const auto& p : ok_report.at("properties")) base.push_back(p.at("passed").get<bool>());
    for (const std::string seed : {"1", "99", "123456789"}) {
        std::vector<bool> verdicts;
        const Json report = run({"selftest", "--seed", seed}).json();
        for (const auto& p : report.at("properties"))
            verdicts.push_back(p.at("passed").get<bool>());
        CHECK(verdicts == base);
    }

    // Copy the stored fixtures and break the C4 one.
    auto dir = scratch("corrupt");
    for (const auto& entry : std::filesystem::directory_iterator(default_omega_dir()))
        std::filesystem::copy_file(entry.path(), dir / entry.path().filename());
    std::ifstream in(dir / "C4.json");
    Json f = Json::parse(in);
    in.close();
    f["representatives"][0]["entries"] = Json{{"1,1,2", 1}};
    std::ofstream(dir / "C4.json") << f.dump();

    auto bad = run({"selftest", "--fixtures", dir.string()});
    CHECK(bad.code != kExitOk);
    bool named = false;
    const Json bad_report = bad.json();
    for (const auto& p : bad_report.at("properties"))
        if (p.at("property") == "beta-restricted-cocycle") {
            CHECK(p.at("passed") == false);
            named = p.at("detail").get<std::string>().find("C4") != std::string::npos;
        }
    CHECK(named);
    std::filesystem::remove_all(dir);
}
