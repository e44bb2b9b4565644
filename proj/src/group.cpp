#include "gxb/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace gxb {

namespace {

std::string join_ids(const std::vector<Elem>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << ',';
        out << ids[i];
    }
    return out.str();
}

std::string cycle_notation(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::string out;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start] || perm[start] == static_cast<int>(start)) continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = static_cast<std::size_t>(perm[x]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

// Builds a group from a closed set of "things" and a product on indices.
template <class Mul>
FiniteGroup table_from(int n, Mul mul, std::string name, std::vector<std::string> labels) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = mul(a, b);
    return FiniteGroup::from_table(table, std::move(name), std::move(labels));
}

std::vector<int> parse_cycles(int degree, const std::string& text) {
    std::vector<int> perm(degree);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(')
            throw Error(ErrorKind::MalformedInput, "bad permutation '" + text + "'");
        auto close = text.find(')', pos);
        if (close == std::string::npos)
            throw Error(ErrorKind::MalformedInput, "unclosed cycle in '" + text + "'");
        std::istringstream body(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cycle;
        std::string token;
        while (body >> token) {
            std::erase(token, ',');
            if (token.empty()) continue;
            int p = 0;
            try {
                p = std::stoi(token);
            } catch (const std::exception&) {
                throw Error(ErrorKind::MalformedInput, "bad point '" + token + "' in '" + text + "'");
            }
            if (p < 0 || p >= degree)
                throw Error(ErrorKind::MalformedInput,
                            "point " + std::to_string(p) + " outside degree " + std::to_string(degree));
            cycle.push_back(p);
        }
        std::vector<int> seen = cycle;
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw Error(ErrorKind::MalformedInput, "repeated point in cycle of '" + text + "'");
        // Cycles within one string compose left to right.
        std::vector<int> step(degree);
        std::iota(step.begin(), step.end(), 0);
        for (std::size_t i = 0; i < cycle.size(); ++i) step[cycle[i]] = cycle[(i + 1) % cycle.size()];
        for (auto& x : perm) x = step[x];
        pos = close + 1;
    }
    return perm;
}

} // namespace

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::string name,
                                    std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw Error(ErrorKind::NotAGroup, "row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                throw Error(ErrorKind::NotAGroup, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                                      ") = " + std::to_string(v) + " out of range");
            g.table_[static_cast<std::size_t>(a) * n + b] = v;
        }
    }
    for (int a = 0; a < n; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            throw Error(ErrorKind::NotAGroup, "element 0 is not the identity (fails at " + std::to_string(a) + ")");
    }
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            row[g.mul(a, b)] = true;
            col[g.mul(b, a)] = true;
        }
        if (std::find(row.begin(), row.end(), false) != row.end() ||
            std::find(col.begin(), col.end(), false) != col.end())
            throw Error(ErrorKind::NotAGroup, "table is not a Latin square at " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = g.mul(a, b);
            for (int c = 0; c < n; ++c)
                if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                    throw Error(ErrorKind::NotAGroup, "associativity fails on (" + std::to_string(a) + "," +
                                                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0) g.inverse_[a] = b;
    g.orders_.assign(n, 0);
    g.exponent_ = 1;
    for (int a = 0; a < n; ++a) {
        int k = 1;
        for (Elem x = a; x != 0; x = g.mul(x, a)) ++k;
        g.orders_[a] = k;
        g.exponent_ = std::lcm(g.exponent_, k);
    }
    g.abelian_ = true;
    for (int a = 0; a < n && g.abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.mul(a, b) != g.mul(b, a)) {
                g.abelian_ = false;
                break;
            }
    g.name_ = std::move(name);
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error(ErrorKind::MalformedInput, "label count does not match order");
    g.labels_ = std::move(labels);
    return g;
}

std::string FiniteGroup::label(Elem a) const {
    if (!labels_.empty()) return labels_[a];
    return std::to_string(a);
}

Elem FiniteGroup::power(Elem a, long long k) const {
    const long long o = orders_[a];
    k %= o;
    if (k < 0) k += o;
    Elem r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

void FiniteGroup::check_element(Elem a) const {
    if (!valid(a))
        throw Error(ErrorKind::InvalidElement,
                    "element id " + std::to_string(a) + " not in group of order " + std::to_string(n_));
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) out[a][b] = mul(a, b);
    return out;
}

bool Subgroup::contains(Elem a) const { return std::binary_search(elements.begin(), elements.end(), a); }

Elem AbelianBasis::element(const std::vector<int>& coords) const {
    std::size_t index = 0, stride = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        int c = coords[i] % orders[i];
        if (c < 0) c += orders[i];
        index += static_cast<std::size_t>(c) * stride;
        stride *= static_cast<std::size_t>(orders[i]);
    }
    return radix_index[index];
}

// ---------------------------------------------------------------- builders

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw Error(ErrorKind::UnknownBuiltin, "cyclic group needs n >= 1");
    return table_from(n, [n](int a, int b) { return (a + b) % n; }, "C" + std::to_string(n), {});
}

FiniteGroup dihedral_group(int order) {
    if (order < 2 || order % 2 != 0) throw Error(ErrorKind::UnknownBuiltin, "D{2n} needs an even order >= 2");
    const int n = order / 2;
    // id = i + n*j is r^i s^j, with s r s = r^-1.
    auto mul = [n](int a, int b) {
        int i = a % n, j = a / n, k = b % n, l = b / n;
        int r = j ? ((i - k) % n + n) % n : (i + k) % n;
        return r + n * (j ^ l);
    };
    std::vector<std::string> labels;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i) {
            std::string s = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
            if (j) s += "s";
            labels.push_back(s.empty() ? "e" : s);
        }
    return table_from(order, mul, "D" + std::to_string(order), std::move(labels));
}

FiniteGroup symmetric_group(int degree) {
    if (degree < 1 || degree > 6) throw Error(ErrorKind::UnknownBuiltin, "S{n} supported for 1 <= n <= 6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    std::vector<std::string> labels;
    for (auto& q : perms) labels.push_back(cycle_notation(q));
    auto mul = [&](int a, int b) {
        std::vector<int> r(degree);
        for (int x = 0; x < degree; ++x) r[x] = perms[b][perms[a][x]];
        return index.at(r);
    };
    return table_from(static_cast<int>(perms.size()), mul, "S" + std::to_string(degree), std::move(labels));
}

FiniteGroup quaternion_group() {
    // ids: 1,-1,i,-i,j,-j,k,-k ; id = 2*unit + negative
    static const int unit_mul[4][4][2] = {
        // {unit, sign}
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    auto mul = [](int a, int b) {
        const auto& r = unit_mul[a / 2][b / 2];
        return 2 * r[0] + ((a % 2) ^ (b % 2) ^ r[1]);
    };
    return table_from(8, mul, "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
    const int m = b.order();
    auto mul = [&](int x, int y) { return a.mul(x / m, y / m) * m + b.mul(x % m, y % m); };
    std::vector<std::string> labels;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < m; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    if (name.empty()) name = (a.name().empty() ? "?" : a.name()) + "x" + (b.name().empty() ? "?" : b.name());
    return table_from(a.order() * m, mul, std::move(name), std::move(labels));
}

FiniteGroup permutation_group(int degree, const std::vector<std::string>& generators) {
    if (degree < 1) throw Error(ErrorKind::MalformedInput, "permutation degree must be positive");
    std::vector<std::vector<int>> gens;
    for (const auto& s : generators) gens.push_back(parse_cycles(degree, s));
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            std::vector<int> r(degree);
            for (int x = 0; x < degree; ++x) r[x] = g[elems[head][x]];
            if (!index.count(r)) {
                if (elems.size() >= 4096)
                    throw Error(ErrorKind::GroupTooLarge, "permutation group exceeds 4096 elements");
                index[r] = static_cast<int>(elems.size());
                elems.push_back(r);
            }
        }
    }
    std::vector<std::string> labels;
    for (auto& e : elems) labels.push_back(cycle_notation(e));
    auto mul = [&](int a, int b) {
        std::vector<int> r(degree);
        for (int x = 0; x < degree; ++x) r[x] = elems[b][elems[a][x]];
        return index.at(r);
    };
    return table_from(static_cast<int>(elems.size()), mul, "", std::move(labels));
}

FiniteGroup builtin_group(const std::string& name) {
    static const std::regex cyc(R"(C(\d+))");
    static const std::regex prod(R"(C\d+(xC\d+)+)");
    static const std::regex dih(R"(D(\d+))");
    static const std::regex sym(R"(S(\d+))");
    std::smatch m;
    auto number = [&](const std::string& s) {
        if (s.size() > 4) throw Error(ErrorKind::UnknownBuiltin, "'" + name + "' is too large");
        return std::stoi(s);
    };
    if (name == "Q8") return quaternion_group();
    if (std::regex_match(name, m, cyc)) return cyclic_group(number(m[1]));
    if (std::regex_match(name, prod)) {
        std::vector<int> factors;
        std::istringstream in(name);
        std::string part;
        while (std::getline(in, part, 'x')) factors.push_back(number(part.substr(1)));
        FiniteGroup g = cyclic_group(factors[0]);
        long long total = factors[0];
        for (std::size_t i = 1; i < factors.size(); ++i) {
            total *= factors[i];
            if (total > 4096) throw Error(ErrorKind::UnknownBuiltin, "'" + name + "' is too large");
            g = direct_product(g, cyclic_group(factors[i]));
        }
        // Rebuild with the requested name.
        return FiniteGroup::from_table(g.table(), name, g.labels());
    }
    if (std::regex_match(name, m, dih)) return dihedral_group(number(m[1]));
    if (std::regex_match(name, m, sym)) return symmetric_group(number(m[1]));
    throw Error(ErrorKind::UnknownBuiltin, "unknown builtin group '" + name + "'");
}

// ---------------------------------------------------------------- queries

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    std::vector<bool> seen(g.order(), false);
    std::vector<ConjugacyClass> out;
    for (Elem a = 0; a < g.order(); ++a) {
        if (seen[a]) continue;
        std::set<Elem> cls;
        for (Elem x = 0; x < g.order(); ++x) cls.insert(g.conj(x, a));
        for (Elem c : cls) seen[c] = true;
        out.push_back({a, std::vector<Elem>(cls.begin(), cls.end())});
    }
    return out;
}

Subgroup centralizer(const FiniteGroup& g, Elem a) {
    g.check_element(a);
    Subgroup s;
    for (Elem x = 0; x < g.order(); ++x)
        if (g.mul(x, a) == g.mul(a, x)) s.elements.push_back(x);
    return s;
}

Subgroup center(const FiniteGroup& g) {
    Subgroup s;
    for (Elem x = 0; x < g.order(); ++x) {
        bool central = true;
        for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
        if (central) s.elements.push_back(x);
    }
    return s;
}

Subgroup whole_group(const FiniteGroup& g) {
    Subgroup s;
    s.elements.resize(g.order());
    std::iota(s.elements.begin(), s.elements.end(), 0);
    return s;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& generators) {
    for (Elem x : generators) g.check_element(x);
    std::vector<bool> in(g.order(), false);
    std::vector<Elem> elems{0};
    in[0] = true;
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (Elem s : generators) {
            Elem y = g.mul(elems[head], s);
            if (!in[y]) {
                in[y] = true;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return Subgroup{std::move(elems)};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements) {
    std::vector<bool> in(g.order(), false);
    for (Elem x : elements) {
        if (!g.valid(x)) return false;
        in[x] = true;
    }
    if (elements.empty() || !in[0]) return false;
    for (Elem x : elements) {
        if (!in[g.inv(x)]) return false;
        for (Elem y : elements)
            if (!in[g.mul(x, y)]) return false;
    }
    return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subgroup(g, elements))
        throw Error(ErrorKind::MalformedInput, "{" + join_ids(elements) + "} is not a subgroup");
    return Subgroup{std::move(elements)};
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem n : s.elements)
            if (!s.contains(g.conj(x, n))) return false;
    return true;
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
    return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup s;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(s.elements));
    return s;
}

bool commute_elementwise(const FiniteGroup& g, const Subgroup& l, const Subgroup& m) {
    for (Elem x : l.elements)
        for (Elem y : m.elements)
            if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
    std::vector<Elem> comms;
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) comms.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    return generated_subgroup(g, comms);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound) {
    if (g.order() > bound)
        throw Error(ErrorKind::GroupTooLarge, "order " + std::to_string(g.order()) + " exceeds subgroup bound " +
                                                  std::to_string(bound));
    // Seed with cyclic subgroups, then close under joins with cyclic ones;
    // every subgroup is a join of cyclic subgroups.
    std::map<std::vector<Elem>, std::vector<Elem>> found;  // elements -> generators
    std::vector<std::pair<Subgroup, Elem>> cyclics;
    for (Elem x = 0; x < g.order(); ++x) {
        Subgroup c = generated_subgroup(g, {x});
        if (!found.count(c.elements)) {
            found[c.elements] = {x};
            cyclics.emplace_back(c, x);
        }
    }
    std::deque<std::vector<Elem>> work;
    for (auto& [elems, gens] : found) work.push_back(elems);
    while (!work.empty()) {
        Subgroup s{work.front()};
        work.pop_front();
        const std::vector<Elem> gens = found[s.elements];
        for (const auto& [c, x] : cyclics) {
            if (is_subset(c, s)) continue;
            std::vector<Elem> jg = gens;
            jg.push_back(x);
            Subgroup j = generated_subgroup(g, jg);
            if (!found.count(j.elements)) {
                found[j.elements] = jg;
                work.push_back(j.elements);
            }
        }
    }
    std::vector<Subgroup> out;
    for (auto& [elems, gens] : found) out.push_back(Subgroup{elems});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int bound) {
    std::vector<Subgroup> out;
    for (auto& s : all_subgroups(g, bound))
        if (is_normal(g, s)) out.push_back(s);
    return out;
}

std::vector<std::pair<Subgroup, Subgroup>> commuting_normal_pairs(const FiniteGroup& g, int bound) {
    auto normals = normal_subgroups(g, bound);
    std::vector<std::pair<Subgroup, Subgroup>> out;
    for (auto& l : normals)
        for (auto& m : normals)
            if (commute_elementwise(g, l, m)) out.emplace_back(l, m);
    return out;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!is_subgroup(g, n.elements))
        throw Error(ErrorKind::MalformedInput, "{" + join_ids(n.elements) + "} is not a subgroup");
    if (!is_normal(g, n))
        throw Error(ErrorKind::NotNormal, "{" + join_ids(n.elements) + "} is not normal in " + g.name());
    std::vector<int> coset(g.order(), -1);
    std::vector<Elem> reps;
    for (Elem x = 0; x < g.order(); ++x) {
        if (coset[x] >= 0) continue;
        const int idx = static_cast<int>(reps.size());
        reps.push_back(x);
        for (Elem y : n.elements) coset[g.mul(x, y)] = idx;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[a][b] = coset[g.mul(reps[a], reps[b])];
    std::vector<std::string> labels;
    for (Elem r : reps) labels.push_back(g.label(r));
    std::string name = g.name().empty() ? "" : g.name() + "/N" + std::to_string(n.order());
    Quotient out{FiniteGroup::from_table(table, name, labels), GroupHom{g.order(), q, coset}, reps};
    return out;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s, std::string name) {
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < s.elements.size(); ++i) local[s.elements[i]] = static_cast<int>(i);
    const int k = s.order();
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> labels;
    for (int a = 0; a < k; ++a) {
        labels.push_back(g.label(s.elements[a]));
        for (int b = 0; b < k; ++b) {
            int v = local[g.mul(s.elements[a], s.elements[b])];
            if (v < 0)
                throw Error(ErrorKind::MalformedInput, "{" + join_ids(s.elements) + "} is not a subgroup");
            table[a][b] = v;
        }
    }
    return SubgroupGroup{FiniteGroup::from_table(table, std::move(name), labels), s.elements, local};
}

AbelianBasis abelian_basis(const FiniteGroup& a) {
    if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "group " + a.name() + " is not abelian");
    AbelianBasis basis;
    Subgroup span = trivial_subgroup();
    while (span.order() < a.order()) {
        auto quotient_order = [&](Elem x) {
            int k = 1;
            for (Elem y = x; !span.contains(y); y = a.mul(y, x)) ++k;
            return k;
        };
        Elem best = -1;
        int best_order = 0;
        for (Elem x = 0; x < a.order(); ++x) {
            int o = quotient_order(x);
            if (o > best_order) {
                best = x;
                best_order = o;
            }
        }
        Elem lift = -1;
        for (Elem s : span.elements) {
            Elem x = a.mul(best, s);
            if (a.element_order(x) == best_order && (lift < 0 || x < lift)) lift = x;
        }
        if (lift < 0) throw std::logic_error("abelian_basis: no order-preserving lift");
        basis.generators.push_back(lift);
        basis.orders.push_back(best_order);
        std::vector<Elem> gens = basis.generators;
        span = generated_subgroup(a, gens);
    }
    long long total = 1;
    for (int o : basis.orders) total *= o;
    if (total != a.order()) throw std::logic_error("abelian_basis: generators are not independent");

    basis.coordinates.assign(a.order(), std::vector<int>(basis.rank(), 0));
    basis.radix_index.assign(a.order(), 0);
    std::vector<int> coords(basis.rank(), 0);
    for (int index = 0; index < a.order(); ++index) {
        Elem x = 0;
        for (int i = 0; i < basis.rank(); ++i) x = a.mul(x, a.power(basis.generators[i], coords[i]));
        basis.coordinates[x] = coords;
        basis.radix_index[index] = x;
        for (int i = 0; i < basis.rank(); ++i) {
            if (++coords[i] < basis.orders[i]) break;
            coords[i] = 0;
        }
    }
    return basis;
}

DualGroup dual_group(const FiniteGroup& a) {
    if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, "dual of non-abelian group " + a.name());
    const AbelianBasis basis = abelian_basis(a);
    const int n = a.order();
    const int e = a.exponent();
    auto decode = [&](int idx) {
        std::vector<int> k(basis.rank());
        for (int i = 0; i < basis.rank(); ++i) {
            k[i] = idx % basis.orders[i];
            idx /= basis.orders[i];
        }
        return k;
    };
    auto encode = [&](const std::vector<int>& k) {
        int idx = 0, stride = 1;
        for (int i = 0; i < basis.rank(); ++i) {
            idx += (k[i] % basis.orders[i]) * stride;
            stride *= basis.orders[i];
        }
        return idx;
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
        auto kx = decode(x);
        std::string lab = "chi[";
        for (int i = 0; i < basis.rank(); ++i) lab += (i ? "," : "") + std::to_string(kx[i]);
        labels.push_back(lab + "]");
        for (int y = 0; y < n; ++y) {
            auto ky = decode(y);
            for (int i = 0; i < basis.rank(); ++i) ky[i] += kx[i];
            table[x][y] = encode(ky);
        }
    }
    DualGroup dual{FiniteGroup::from_table(table, a.name().empty() ? "" : "dual(" + a.name() + ")", labels), {}, e};
    dual.pairing.assign(n, std::vector<int>(n, 0));
    for (int chi = 0; chi < n; ++chi) {
        auto k = decode(chi);
        for (Elem x = 0; x < n; ++x) {
            long long v = 0;
            for (int i = 0; i < basis.rank(); ++i)
                v += static_cast<long long>(k[i]) * basis.coordinates[x][i] * (e / basis.orders[i]);
            dual.pairing[chi][x] = static_cast<int>(v % e);
        }
    }
    return dual;
}

Subgroup annihilator(const FiniteGroup& a, const Subgroup& h) {
    const DualGroup dual = dual_group(a);
    Subgroup out;
    for (int chi = 0; chi < a.order(); ++chi) {
        bool kills = true;
        for (Elem x : h.elements) kills = kills && dual.pairing[chi][x] == 0;
        if (kills) out.elements.push_back(chi);
    }
    return out;
}

Subgroup annihilator_in_group(const DualGroup& dual, const Subgroup& chars) {
    Subgroup out;
    for (Elem x = 0; x < dual.group.order(); ++x) {
        bool kills = true;
        for (Elem chi : chars.elements) kills = kills && dual.pairing[chi][x] == 0;
        if (kills) out.elements.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------- homomorphisms

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<Elem>& images) {
    if (static_cast<int>(images.size()) != src.order()) return false;
    for (Elem x : images)
        if (!dst.valid(x)) return false;
    for (Elem a = 0; a < src.order(); ++a)
        for (Elem b = 0; b < src.order(); ++b)
            if (images[src.mul(a, b)] != dst.mul(images[a], images[b])) return false;
    return true;
}

GroupHom make_hom(const FiniteGroup& src, const FiniteGroup& dst, std::vector<Elem> images) {
    if (!is_homomorphism(src, dst, images))
        throw Error(ErrorKind::NotAHomomorphism, "map [" + join_ids(images) + "] is not a homomorphism");
    return GroupHom{src.order(), dst.order(), std::move(images)};
}

GroupHom identity_hom(const FiniteGroup& g) {
    GroupHom f{g.order(), g.order(), {}};
    f.images.resize(g.order());
    std::iota(f.images.begin(), f.images.end(), 0);
    return f;
}

bool is_surjective(const GroupHom& f) {
    std::vector<bool> hit(f.target_order, false);
    for (Elem x : f.images) hit[x] = true;
    return std::find(hit.begin(), hit.end(), false) == hit.end();
}

Subgroup kernel(const GroupHom& f) {
    Subgroup s;
    for (Elem a = 0; a < f.source_order; ++a)
        if (f.images[a] == 0) s.elements.push_back(a);
    return s;
}

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
    std::vector<Elem> gens;
    Subgroup span = trivial_subgroup();
    for (Elem x = 1; x < g.order() && span.order() < g.order(); ++x) {
        if (span.contains(x)) continue;
        gens.push_back(x);
        span = generated_subgroup(g, gens);
    }
    return gens;
}

namespace {

// Extends generator images along the Cayley graph; empty result if the
// assignment is inconsistent.
std::vector<Elem> extend_from_generators(const FiniteGroup& src, const FiniteGroup& dst,
                                         const std::vector<Elem>& gens, const std::vector<Elem>& imgs) {
    std::vector<Elem> map(src.order(), -1);
    map[0] = 0;
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Elem u = queue[head];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Elem v = src.mul(u, gens[k]);
            Elem w = dst.mul(map[u], imgs[k]);
            if (map[v] < 0) {
                map[v] = w;
                queue.push_back(v);
            } else if (map[v] != w) {
                return {};
            }
        }
    }
    return map;
}

template <class Visit>
void for_each_generator_assignment(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<Elem>& gens,
                                   bool same_order, Visit visit) {
    std::vector<Elem> imgs(gens.size(), 0);
    std::vector<std::vector<Elem>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const int o = src.element_order(gens[k]);
        for (Elem y = 0; y < dst.order(); ++y) {
            const int oy = dst.element_order(y);
            if (same_order ? oy == o : o % oy == 0) candidates[k].push_back(y);
        }
    }
    std::vector<std::size_t> pos(gens.size(), 0);
    for (auto& c : candidates)
        if (c.empty()) return;
    while (true) {
        for (std::size_t k = 0; k < gens.size(); ++k) imgs[k] = candidates[k][pos[k]];
        if (!visit(imgs)) return;
        std::size_t k = 0;
        for (; k < gens.size(); ++k) {
            if (++pos[k] < candidates[k].size()) break;
            pos[k] = 0;
        }
        if (k == gens.size()) return;
    }
}

} // namespace

std::vector<GroupHom> all_homomorphisms(const FiniteGroup& src, const FiniteGroup& dst) {
    const auto gens = small_generating_set(src);
    std::vector<GroupHom> out;
    if (gens.empty()) return {GroupHom{src.order(), dst.order(), std::vector<Elem>(src.order(), 0)}};
    for_each_generator_assignment(src, dst, gens, false, [&](const std::vector<Elem>& imgs) {
        auto map = extend_from_generators(src, dst, gens, imgs);
        if (!map.empty()) out.push_back(GroupHom{src.order(), dst.order(), std::move(map)});
        return true;
    });
    std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
    return out;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return std::nullopt;
    std::vector<int> oa, ob;
    for (Elem x = 0; x < a.order(); ++x) {
        oa.push_back(a.element_order(x));
        ob.push_back(b.element_order(x));
    }
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return std::nullopt;
    const auto gens = small_generating_set(a);
    if (gens.empty()) return identity_hom(a);
    std::optional<GroupHom> found;
    for_each_generator_assignment(a, b, gens, true, [&](const std::vector<Elem>& imgs) {
        auto map = extend_from_generators(a, b, gens, imgs);
        if (map.empty()) return true;
        std::vector<bool> hit(b.order(), false);
        for (Elem y : map) hit[y] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) return true;
        found = GroupHom{a.order(), b.order(), std::move(map)};
        return false;
    });
    return found;
}

} // namespace gxb
