#include "gxb/io.hpp"

#include <fstream>
#include <sstream>

#include "gxb/arith.hpp"

#ifndef GXB_DATA_DIR
#define GXB_DATA_DIR "data"
#endif

namespace gxb {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) malformed("cannot read '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        malformed("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) malformed(where + " lacks \"" + key + "\"");
    return j.at(key);
}

long long as_integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) malformed(where + " must be an integer");
    return j.get<long long>();
}

std::string ids_key(const std::vector<Elem>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
    return out;
}

} // namespace

std::vector<Elem> parse_ids(const std::string& text) {
    std::vector<Elem> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) malformed("empty entry in id list '" + text + "'");
        token = token.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || v < 0 || v > 1'000'000) malformed("'" + token + "' in '" + text + "' is not an element id");
        out.push_back(static_cast<Elem>(v));
    }
    if (out.empty()) malformed("empty id list");
    return out;
}

// ---------------------------------------------------------------- groups

FiniteGroup group_from_json(const Json& j) {
    if (j.is_string()) return builtin_group(j.get<std::string>());
    if (!j.is_object()) malformed("group must be an object or a builtin name");
    std::string name = j.value("name", std::string{});
    FiniteGroup g = [&] {
        if (j.contains("builtin")) {
            if (!j.at("builtin").is_string()) malformed("\"builtin\" must be a string");
            return builtin_group(j.at("builtin").get<std::string>());
        }
        if (j.contains("table")) {
            std::vector<std::vector<int>> table;
            try {
                table = j.at("table").get<std::vector<std::vector<int>>>();
            } catch (const Json::exception&) {
                malformed("\"table\" must be a square array of element ids");
            }
            return FiniteGroup::from_table(table, name);
        }
        if (j.contains("generators")) {
            const int degree = static_cast<int>(as_integer(field(j, "degree", "permutation group"), "\"degree\""));
            std::vector<std::string> gens;
            try {
                gens = j.at("generators").get<std::vector<std::string>>();
            } catch (const Json::exception&) {
                malformed("\"generators\" must be an array of cycle strings");
            }
            return permutation_group(degree, gens);
        }
        malformed("group needs one of \"builtin\", \"table\" or \"generators\"");
    }();
    if (j.contains("order") && as_integer(j.at("order"), "\"order\"") != g.order())
        malformed("declared order " + j.at("order").dump() + " differs from the table order " + std::to_string(g.order()));
    if (!name.empty() && name != g.name()) g = FiniteGroup::from_table(g.table(), name, g.labels());
    return g;
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    if (!g.name().empty()) j["name"] = g.name();
    j["order"] = g.order();
    j["table"] = g.table();
    return j;
}

FiniteGroup load_group(const std::string& spec) {
    if (spec.empty()) malformed("empty group argument");
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return group_from_json(read_json_file(spec));
    if (spec.find('/') != std::string::npos || spec.ends_with(".json")) malformed("group file '" + spec + "' not found");
    return builtin_group(spec);
}

// ---------------------------------------------------------------- cochains

Cochain cochain_from_json(const Json& j, GroupPtr g) {
    const int degree = static_cast<int>(as_integer(field(j, "degree", "cochain"), "\"degree\""));
    if (degree < 0 || degree > 3) throw Error(ErrorKind::DegreeTooHigh, "cochain degree " + std::to_string(degree));
    ModulePtr m;
    const bool has_mod = j.contains("modulus"), has_module = j.contains("module");
    if (has_mod == has_module) malformed("cochain needs exactly one of \"modulus\" and \"module\"");
    if (has_mod) {
        const long long n = as_integer(j.at("modulus"), "\"modulus\"");
        if (n < 1 || n > 1'000'000) malformed("modulus " + std::to_string(n) + " out of range");
        m = share(CoefficientModule::roots_of_unity(static_cast<int>(n)));
    } else {
        FiniteGroup a = group_from_json(j.at("module"));
        if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "coefficient group " + a.name() + " is not abelian");
        m = share(CoefficientModule::trivial(std::move(a)));
    }
    Cochain c(g, m, degree);
    if (j.contains("entries")) {
        const Json& entries = j.at("entries");
        if (!entries.is_object()) malformed("\"entries\" must be an object keyed by \"g,h,k\"");
        for (const auto& [key, value] : entries.items()) {
            const auto args = parse_ids(key);
            if (static_cast<int>(args.size()) != degree)
                malformed("entry \"" + key + "\" has " + std::to_string(args.size()) + " arguments, expected " +
                          std::to_string(degree));
            for (Elem a : args)
                if (!g->valid(a)) throw Error(ErrorKind::InvalidElement, "entry \"" + key + "\" names a non-element");
            long long v = as_integer(value, "entry \"" + key + "\"");
            if (has_mod) v = mod_floor(v, m->group().order());
            else if (!m->group().valid(static_cast<Elem>(v)))
                throw Error(ErrorKind::InvalidElement, "entry \"" + key + "\" is not a coefficient id");
            c.set(args, static_cast<Elem>(v));
        }
    }
    if (j.value("normalized", false) && !c.is_normalized())
        malformed("cochain is declared normalized but has a nonzero degenerate entry");
    return c;
}

Json cochain_to_json(const Cochain& c) {
    Json j;
    j["degree"] = c.degree();
    if (c.module().is_roots_of_unity()) j["modulus"] = c.module().group().order();
    else j["module"] = group_to_json(c.module().group());
    Json entries = Json::object();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.raw(i) != 0) entries[ids_key(c.tuple(i))] = c.raw(i);
    j["entries"] = entries;
    j["normalized"] = c.is_normalized();
    return j;
}

Cochain load_cochain(const std::filesystem::path& path, GroupPtr g) {
    return cochain_from_json(read_json_file(path), std::move(g));
}

// ---------------------------------------------------------------- reports

Json subgroup_to_json(const Subgroup& s) { return s.elements; }

Json subcat_to_json(const SubcatData& s) {
    Json b = Json::object();
    for (Elem l : s.L().elements)
        for (Elem m : s.M().elements) b[std::to_string(l) + "," + std::to_string(m)] = s.B().at(l, m);
    return Json{{"L", s.L().elements}, {"M", s.M().elements}, {"B", b}, {"modulus", s.B().modulus}, {"fpdim", fpdim(s)}};
}

Json grading_to_json(const GradingSpec& g) {
    Json j;
    j["grading_order"] = g.grading_order();
    if (g.kind == GradingSpec::Kind::Pointed) {
        j["kind"] = "pointed";
        j["kernel"] = g.kernel.elements;
        j["projection"] = g.projection.images;
    } else {
        j["kind"] = "rep";
        j["central_subgroup"] = g.central_subgroup.elements;
    }
    return j;
}

Json checks_to_json(const TheoremChecks& c) {
    Json j{{"centralizes", c.centralizes}, {"fpdim", c.fpdim}, {"transverse", c.transverse}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json certificate_to_json(const CrossedBraidingCertificate& c, const Json& ambient) {
    return Json{{"ambient", ambient},
                {"grading", grading_to_json(c.grading)},
                {"witness", subcat_to_json(c.witness)},
                {"checks", checks_to_json(c.checks)}};
}

// ---------------------------------------------------------------- fixtures

std::filesystem::path default_omega_dir() {
    if (const char* env = std::getenv("GXB_DATA_DIR"); env && *env) return std::filesystem::path(env) / "omega";
    return std::filesystem::path(GXB_DATA_DIR) / "omega";
}

Json omega_fixture_to_json(const OmegaFixture& f) {
    Json reps = Json::array();
    for (const auto& r : f.representatives) reps.push_back(cochain_to_json(r));
    return Json{{"group", f.group},
                {"modulus", f.modulus},
                {"invariant_factors", f.invariant_factors},
                {"representatives", reps}};
}

OmegaFixture omega_fixture_from_json(const Json& j, GroupPtr g) {
    OmegaFixture f;
    f.group = field(j, "group", "omega fixture").get<std::string>();
    f.modulus = as_integer(field(j, "modulus", "omega fixture"), "\"modulus\"");
    f.invariant_factors = field(j, "invariant_factors", "omega fixture").get<std::vector<long long>>();
    for (const auto& r : field(j, "representatives", "omega fixture")) {
        Cochain c = cochain_from_json(r, g);
        if (c.degree() != 3 || c.module().group().order() != f.modulus)
            malformed("fixture for " + f.group + " holds a cochain of the wrong shape");
        f.representatives.push_back(std::move(c));
    }
    return f;
}

OmegaFixture compute_omega_fixture(GroupPtr g) {
    auto m = share(CoefficientModule::roots_of_unity(g->order()));
    CohomologyGroup h = cohomology_group(g, 3, m);
    return OmegaFixture{g->name(), g->order(), h.invariant_factors(), h.representatives()};
}

std::optional<OmegaFixture> read_omega_fixture(const std::filesystem::path& dir, const std::string& name, GroupPtr g) {
    const auto path = dir / (name + ".json");
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
    OmegaFixture f = omega_fixture_from_json(read_json_file(path), std::move(g));
    if (f.group != name) malformed("'" + path.string() + "' describes " + f.group + ", not " + name);
    return f;
}

OmegaFixture omega_fixture_for(const std::filesystem::path& dir, GroupPtr g, bool* stored) {
    auto f = g->name().empty() ? std::nullopt : read_omega_fixture(dir, g->name(), g);
    if (stored) *stored = f.has_value();
    return f ? std::move(*f) : compute_omega_fixture(g);
}

} // namespace gxb
