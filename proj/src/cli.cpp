#include "gxb/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gxb/selftest.hpp"

namespace gxb {

namespace {

struct RunConfig {
    std::string verb;
    std::string group;
    std::string omega = "trivial";
    std::string grading = "full";
    std::string center_subgroup = "full";
    std::string extension;
    std::string normal;
    std::string over = "C2";
    std::string coefficients;
    std::string cocycle;
    std::string format = "json";
    std::string fixtures;
    std::optional<double> budget;
    std::uint64_t seed = kDefaultSeed;
    int degree = 3;
    std::optional<int> modulus;
    bool normal_only = false;
};

struct Outcome {
    Json report;
    int code = kExitOk;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

std::filesystem::path fixture_dir(const RunConfig& c) {
    return c.fixtures.empty() ? default_omega_dir() : std::filesystem::path(c.fixtures);
}

GroupPtr require_group(const std::string& spec, const char* flag) {
    if (spec.empty()) malformed(std::string(flag) + " is required");
    return share(load_group(spec));
}

// ------------------------------------------------------------ omega handling

struct Ambient {
    TwistedDataPtr data;
    Json description;
};

Ambient resolve_omega(const RunConfig& c) {
    GroupPtr g = require_group(c.group, "--group");
    Json desc{{"group", g->name()}, {"order", g->order()}, {"omega", c.omega}};
    if (c.omega == "trivial") return {share(TwistedGroupData::untwisted(g)), desc};
    if (c.omega.starts_with("repr:")) {
        const auto ids = parse_ids(c.omega.substr(5));
        if (ids.size() != 1) malformed("--omega repr:k takes a single index, got '" + c.omega + "'");
        bool stored = false;
        OmegaFixture f = omega_fixture_for(fixture_dir(c), g, &stored);
        const auto k = static_cast<std::size_t>(ids[0]);
        if (k >= f.representatives.size())
            malformed("--omega " + c.omega + ": " + g->name() + " has " + std::to_string(f.representatives.size()) +
                      " stored representatives");
        desc["omega_source"] = stored ? "stored" : "computed";
        return {share(TwistedGroupData(g, f.representatives[k])), desc};
    }
    Cochain w = load_cochain(c.omega, g);
    if (w.degree() != 3) malformed("--omega file '" + c.omega + "' is not a 3-cochain");
    if (!w.module().is_roots_of_unity()) malformed("--omega file '" + c.omega + "' must use \"modulus\" coefficients");
    return {share(TwistedGroupData(g, std::move(w))), desc};
}

double budget_or(const RunConfig& c, double fallback) { return c.budget.value_or(fallback); }

// ------------------------------------------------------------ verbs

Outcome verb_group(const RunConfig& c) {
    GroupPtr g = require_group(c.group, "--group");
    Json classes = Json::array();
    for (const auto& cl : conjugacy_classes(*g))
        classes.push_back({{"representative", cl.representative}, {"size", cl.elements.size()}, {"elements", cl.elements}});
    Json r{{"group", g->name()},
           {"order", g->order()},
           {"abelian", g->is_abelian()},
           {"exponent", g->exponent()},
           {"center", center(*g).elements},
           {"classes", classes},
           {"labels", g->labels()}};
    r["reason"] = g->name() + " has order " + std::to_string(g->order()) + " and " + std::to_string(classes.size()) +
                  " conjugacy classes";
    return {r};
}

Outcome verb_subgroups(const RunConfig& c) {
    GroupPtr g = require_group(c.group, "--group");
    const int bound = static_cast<int>(budget_or(c, kDefaultSubgroupBound));
    auto subs = c.normal_only ? normal_subgroups(*g, bound) : all_subgroups(*g, bound);
    Json list = Json::array();
    for (const auto& s : subs) list.push_back({{"order", s.order()}, {"elements", s.elements}, {"normal", is_normal(*g, s)}});
    Json r{{"group", g->name()}, {"count", subs.size()}, {"subgroups", list}};
    r["reason"] = std::to_string(subs.size()) + (c.normal_only ? " normal" : "") + " subgroups";
    return {r};
}

Outcome verb_cohomology(const RunConfig& c) {
    GroupPtr g = require_group(c.group, "--group");
    ModulePtr m;
    Json coeff;
    if (!c.coefficients.empty()) {
        if (c.modulus) malformed("--modulus and --coefficients are exclusive");
        FiniteGroup a = load_group(c.coefficients);
        if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "coefficient group " + a.name() + " is not abelian");
        coeff = a.name();
        m = share(CoefficientModule::trivial(std::move(a)));
    } else {
        const int n = c.modulus.value_or(g->order());
        if (n < 1) malformed("--modulus must be positive");
        coeff = "mu_" + std::to_string(n);
        m = share(CoefficientModule::roots_of_unity(n));
    }
    CohomologyGroup h = cohomology_group(g, c.degree, m, budget_or(c, kDefaultCohomologyBudget));
    Json reps = Json::array();
    for (const auto& r : h.representatives()) reps.push_back(cochain_to_json(r));
    Json r{{"group", g->name()},
           {"degree", c.degree},
           {"coefficients", coeff},
           {"invariant_factors", h.invariant_factors()},
           {"order", h.order()},
           {"representatives", reps}};
    r["reason"] = "H^" + std::to_string(c.degree) + " has order " + std::to_string(h.order());
    return {r};
}

Outcome verb_census(const RunConfig& c) {
    Ambient a = resolve_omega(c);
    CenterCensus census = simple_census(*a.data);
    Json labels = Json::array();
    for (const auto& l : census.labels)
        labels.push_back({{"representative", l.representative},
                          {"class_size", l.class_size},
                          {"centralizer_order", l.centralizer_order},
                          {"irreps", l.irrep_count}});
    Json r{{"ambient", a.description},
           {"simple_count", census.simple_count},
           {"fpdim_square_total", census.fpdim_square_total},
           {"classes", labels}};
    r["reason"] = std::to_string(census.simple_count) + " simple objects";
    return {r};
}

Outcome verb_subcats(const RunConfig& c) {
    Ambient a = resolve_omega(c);
    auto subs = enumerate_subcats(a.data, budget_or(c, kDefaultEnumerationBudget));
    Json list = Json::array();
    for (const auto& s : subs) list.push_back(subcat_to_json(s));
    Json r{{"ambient", a.description}, {"count", subs.size()}, {"subcategories", list}};
    r["reason"] = std::to_string(subs.size()) + " fusion subcategories";
    return {r};
}

Outcome crossed_report(const Ambient& a, const GradingSpec& spec, const CrossedEnumeration& e) {
    Json certs = Json::array();
    for (const auto& cert : e.certificates) certs.push_back(certificate_to_json(cert, a.description));
    Json r{{"ambient", a.description}, {"grading", grading_to_json(spec)}, {"count", certs.size()}, {"certificates", certs}};
    if (e.reason) {
        r["reason"] = *e.reason;
        return {r, kExitRejected};
    }
    r["reason"] = std::to_string(certs.size()) + " crossed braidings";
    return {r};
}

Outcome verb_crossed_pointed(const RunConfig& c) {
    Ambient a = resolve_omega(c);
    const auto& g = a.data->group();
    GradingSpec spec;
    if (c.grading == "full") spec = pointed_grading(g, g, identity_hom(g));
    else if (c.grading.starts_with("quotient-by:")) {
        const auto ids = parse_ids(c.grading.substr(12));
        for (Elem x : ids)
            if (!g.valid(x)) throw Error(ErrorKind::InvalidElement, "--grading names element " + std::to_string(x));
        if (!is_subgroup(g, std::vector<Elem>(ids))) malformed("--grading " + c.grading + " is not a subgroup");
        spec = pointed_grading_by_kernel(g, make_subgroup(g, ids));
    } else malformed("--grading must be full or quotient-by:\"ids\", got '" + c.grading + "'");
    return crossed_report(a, spec, enumerate_pointed(a.data, spec, budget_or(c, kDefaultEnumerationBudget)));
}

Subgroup central_subgroup_arg(const FiniteGroup& g, const std::string& text) {
    if (text == "full") return center(g);
    if (text == "trivial") return trivial_subgroup();
    auto ids = parse_ids(text);
    for (Elem x : ids)
        if (!g.valid(x)) throw Error(ErrorKind::InvalidElement, "--center-subgroup names element " + std::to_string(x));
    if (!is_subgroup(g, ids)) malformed("--center-subgroup " + text + " is not a subgroup");
    return make_subgroup(g, ids);
}

Outcome verb_crossed_rep(const RunConfig& c) {
    if (c.omega != "trivial") throw Error(ErrorKind::InvalidGrading, "Rep gradings need --omega trivial");
    Ambient a = resolve_omega(c);
    a.description["category"] = "Rep";
    const auto& g = a.data->group();
    GradingSpec spec = rep_grading(g, central_subgroup_arg(g, c.center_subgroup));
    return crossed_report(a, spec, enumerate_rep(a.data, spec));
}

Outcome verb_gradings_rep(const RunConfig& c) {
    GroupPtr g = require_group(c.group, "--group");
    Json list = Json::array();
    for (const auto& spec : gradings_of_rep(*g)) list.push_back(grading_to_json(spec));
    Json r{{"group", g->name()}, {"count", list.size()}, {"gradings", list}};
    r["reason"] = std::to_string(list.size()) + " faithful gradings of Rep(" + g->name() + ")";
    return {r};
}

Outcome verb_fibered(const RunConfig& c) {
    GroupPtr e = require_group(c.extension, "--extension");
    if (c.normal.empty()) malformed("--normal is required");
    auto ids = parse_ids(c.normal);
    for (Elem x : ids)
        if (!e->valid(x)) throw Error(ErrorKind::InvalidElement, "--normal names element " + std::to_string(x));
    if (!is_subgroup(*e, ids)) malformed("--normal " + c.normal + " is not a subgroup");
    Subgroup n = make_subgroup(*e, ids);
    FiberedVerdict v = fibered_enrichment_extends(*e, n);
    Json r{{"extension", e->name()}, {"normal", n.elements}, {"extends", v.extends}, {"reason", v.reason}};
    if (v.torsor_count) r["torsor_count"] = *v.torsor_count;
    return {r};
}

// Every class of a finite abelian cohomology group, as (coordinates, cocycle).
std::vector<std::pair<std::vector<long long>, Cochain>> all_classes(const CohomologyGroup& h, const Cochain& zero,
                                                                    double budget) {
    if (static_cast<double>(h.order()) > budget) throw Error(ErrorKind::BudgetExceeded, "too many classes to list");
    std::vector<std::pair<std::vector<long long>, Cochain>> out;
    const auto& f = h.invariant_factors();
    std::vector<long long> coords(f.size(), 0);
    while (true) {
        Cochain w = zero;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (long long t = 0; t < coords[i]; ++t) w = w + h.representatives()[i];
        out.emplace_back(coords, std::move(w));
        std::size_t i = 0;
        for (; i < f.size(); ++i) {
            if (++coords[i] < f[i]) break;
            coords[i] = 0;
        }
        if (i == f.size()) break;
    }
    return out;
}

Outcome verb_zesting(const RunConfig& c) {
    GroupPtr n = require_group(c.group, "--group");
    GroupPtr g = require_group(c.over, "--over");
    CenterInvertibles inv = invertibles_of_center(*n);
    auto m = share(CoefficientModule::trivial(inv.product));
    Json r{{"group", n->name()}, {"over", g->name()}, {"center_order", inv.center.order()},
           {"invertibles_order", inv.product.order()}};
    if (!c.cocycle.empty()) {
        Cochain w = load_cochain(c.cocycle, g);
        if (w.degree() != 2) malformed("--cocycle '" + c.cocycle + "' is not a 2-cochain");
        if (!(w.module().group() == inv.product))
            throw Error(ErrorKind::ParentMismatch, "--cocycle '" + c.cocycle + "' is not valued in the invertibles of Z(Vec(" +
                                                       n->name() + "))");
        const bool lifts = zesting_lift_exists(*n, Cochain(g, m, 2) + w);
        r["lifts"] = lifts;
        r["reason"] = lifts ? "the center component is a coboundary" : "the center component is not a coboundary";
        return {r};
    }
    CohomologyGroup h = cohomology_group(g, 2, m, budget_or(c, kDefaultCohomologyBudget));
    Json list = Json::array();
    bool all = true;
    for (auto& [coords, w] : all_classes(h, Cochain(g, m, 2), 4096)) {
        const bool lifts = zesting_lift_exists(*n, w);
        all = all && lifts;
        list.push_back({{"class", coords}, {"lifts", lifts}});
    }
    r["invariant_factors"] = h.invariant_factors();
    r["classes"] = list;
    r["all_lift"] = all;
    r["reason"] = all ? "every class lifts" : "some class has a nontrivial center component";
    return {r};
}

Outcome verb_obstruction(const RunConfig& c) {
    GroupPtr g = require_group(c.over, "--over");
    if (c.coefficients.empty()) malformed("--coefficients is required");
    FiniteGroup a = load_group(c.coefficients);
    if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "coefficient group " + a.name() + " is not abelian");
    auto m = share(CoefficientModule::trivial(a));
    Json r{{"over", g->name()}, {"coefficients", a.name()}};
    if (!c.cocycle.empty()) {
        Cochain w = load_cochain(c.cocycle, g);
        if (w.degree() != 2) malformed("--cocycle '" + c.cocycle + "' is not a 2-cochain");
        if (!(w.module().group() == a))
            throw Error(ErrorKind::ParentMismatch, "--cocycle '" + c.cocycle + "' is not valued in " + a.name());
        auto o = fully_faithful_obstruction(w);
        r["vanishes"] = o.vanishes;
        r["splitting_count"] = o.splitting_count;
        r["reason"] = o.vanishes ? "the class vanishes" : "the class is nontrivial";
        return {r};
    }
    CohomologyGroup h = cohomology_group(g, 2, m, budget_or(c, kDefaultCohomologyBudget));
    Json list = Json::array();
    for (auto& [coords, w] : all_classes(h, Cochain(g, m, 2), 4096)) {
        auto o = fully_faithful_obstruction(w);
        list.push_back({{"class", coords}, {"vanishes", o.vanishes}, {"splitting_count", o.splitting_count}});
    }
    r["invariant_factors"] = h.invariant_factors();
    r["classes"] = list;
    r["reason"] = std::to_string(list.size()) + " classes in H^2";
    return {r};
}

Outcome verb_selftest(const RunConfig& c) {
    SelftestReport s = run_selftest(fixture_dir(c), c.seed);
    Json list = Json::array();
    int failed = 0;
    for (const auto& p : s.properties) {
        Json item{{"property", p.name}, {"passed", p.passed}};
        if (!p.passed) {
            item["detail"] = p.detail;
            ++failed;
        }
        list.push_back(item);
    }
    Json r{{"battery", kSelftestBattery}, {"properties", list}, {"passed", s.passed()}};
    r["reason"] = failed == 0 ? "all properties hold" : std::to_string(failed) + " properties fail";
    return {r, s.passed() ? kExitOk : kExitRejected};
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::UnknownBuiltin:
    case ErrorKind::NotAGroup:
    case ErrorKind::InvalidElement:
        return kExitMalformed;
    default:
        return kExitRejected;
    }
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_rows(const Json& rows, std::ostringstream& out, const std::string& indent) {
    std::vector<std::string> columns;
    for (const auto& row : rows)
        for (const auto& [k, v] : row.items())
            if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        width[i] = columns[i].size();
        for (const auto& row : rows)
            if (row.contains(columns[i])) width[i] = std::max(width[i], cell(row.at(columns[i])).size());
    }
    auto line = [&](const std::function<std::string(std::size_t)>& text) {
        std::string s = indent;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            std::string t = text(i);
            s += t + (i + 1 < columns.size() ? std::string(width[i] - t.size() + 2, ' ') : "");
        }
        out << s << '\n';
    };
    line([&](std::size_t i) { return columns[i]; });
    for (const auto& row : rows)
        line([&](std::size_t i) { return row.contains(columns[i]) ? cell(row.at(columns[i])) : std::string("-"); });
}

bool is_row_list(const Json& v) {
    if (!v.is_array() || v.empty()) return false;
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
}

} // namespace

std::string render_table(const Json& report) {
    std::ostringstream out;
    if (is_row_list(report)) {
        render_rows(report, out, "");
        return out.str();
    }
    if (!report.is_object()) return cell(report) + "\n";
    std::size_t key_width = 0;
    for (const auto& [k, v] : report.items())
        if (!is_row_list(v)) key_width = std::max(key_width, k.size());
    for (const auto& [k, v] : report.items())
        if (!is_row_list(v)) out << k << std::string(key_width - k.size() + 2, ' ') << cell(v) << '\n';
    for (const auto& [k, v] : report.items())
        if (is_row_list(v)) {
            out << '\n' << k << ":\n";
            render_rows(v, out, "  ");
        }
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact enumerations for twisted group data, subcategories of the center and crossed braidings", "gxb"};
    app.require_subcommand(1, 1);

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--budget", cfg.budget, "enumeration budget override");
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
        sub->add_option("--fixtures", cfg.fixtures, "directory of stored omega representatives");
    };
    auto with_group = [&](CLI::App* sub) { sub->add_option("--group", cfg.group, "builtin name or group JSON file"); };
    auto with_omega = [&](CLI::App* sub) {
        with_group(sub);
        sub->add_option("--omega", cfg.omega, "trivial, repr:k or a cocycle JSON file");
    };

    const std::map<std::string, std::pair<std::string, std::function<Outcome(const RunConfig&)>>> verbs = {
        {"group", {"group summary", verb_group}},
        {"subgroups", {"list subgroups", verb_subgroups}},
        {"cohomology", {"H^n(G, A) with trivial action", verb_cohomology}},
        {"center-census", {"simple objects of the twisted center", verb_census}},
        {"subcats", {"fusion subcategories of the twisted center", verb_subcats}},
        {"crossed-pointed", {"crossed braidings on Vec(G, omega)", verb_crossed_pointed}},
        {"crossed-rep", {"crossed braidings on Rep(G)", verb_crossed_rep}},
        {"gradings-rep", {"faithful gradings of Rep(G)", verb_gradings_rep}},
        {"fibered", {"extend a fibered enrichment along E -> E/N", verb_fibered}},
        {"zesting", {"lift zesting data through the center", verb_zesting}},
        {"obstruction", {"fully faithful obstruction classes", verb_obstruction}},
        {"selftest", {"property battery", verb_selftest}},
    };
    std::map<CLI::App*, std::string> names;
    for (const auto& [name, entry] : verbs) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        common(sub);
        names[sub] = name;
        if (name == "center-census" || name == "subcats" || name == "crossed-pointed" || name == "crossed-rep")
            with_omega(sub);
        else if (name == "group" || name == "subgroups" || name == "cohomology" || name == "gradings-rep" ||
                 name == "zesting")
            with_group(sub);
        if (name == "subgroups") sub->add_flag("--normal-only", cfg.normal_only, "only normal subgroups");
        if (name == "cohomology") {
            sub->add_option("--degree", cfg.degree, "cohomological degree (0-3)")->check(CLI::Range(0, 3));
            sub->add_option("--modulus", cfg.modulus, "coefficients mu_N (default |G|)");
            sub->add_option("--coefficients", cfg.coefficients, "abelian coefficient group, trivial action");
        }
        if (name == "crossed-pointed") sub->add_option("--grading", cfg.grading, "full or quotient-by:\"ids\"");
        if (name == "crossed-rep")
            sub->add_option("--center-subgroup", cfg.center_subgroup, "full, trivial or \"ids\" in the center");
        if (name == "fibered") {
            sub->add_option("--extension", cfg.extension, "the group E");
            sub->add_option("--normal", cfg.normal, "ids of the normal subgroup N");
        }
        if (name == "zesting" || name == "obstruction") {
            sub->add_option("--over", cfg.over, "the grading group G (default C2)");
            sub->add_option("--cocycle", cfg.cocycle, "a 2-cocycle JSON file; all classes when omitted");
        }
        if (name == "obstruction") sub->add_option("--coefficients", cfg.coefficients, "abelian group A");
    }

    std::vector<std::string> argv_store{"gxb"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitMalformed;
    }
    for (auto* sub : app.get_subcommands()) cfg.verb = names.at(sub);

    Outcome result;
    try {
        result = verbs.at(cfg.verb).second(cfg);
    } catch (const Error& e) {
        result.code = exit_code_for(e.kind());
        result.report = Json{{"error", std::string(to_string(e.kind()))}, {"reason", e.what()}};
        err << "gxb " << cfg.verb << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        result.code = kExitRejected;
        result.report = Json{{"error", "Internal"}, {"reason", e.what()}};
        err << "gxb " << cfg.verb << ": " << e.what() << '\n';
    }
    result.report["verb"] = cfg.verb;
    result.report["exit_code"] = result.code;
    if (cfg.format == "table") out << render_table(result.report);
    else out << result.report.dump(2) << '\n';
    return result.code;
}

} // namespace gxb
