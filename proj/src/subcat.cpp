#include "gxb/subcat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace gxb {

namespace {

int position(const Subgroup& s, Elem x) {
    auto it = std::lower_bound(s.elements.begin(), s.elements.end(), x);
    if (it == s.elements.end() || *it != x)
        throw Error(ErrorKind::InvalidElement, "element " + std::to_string(x) + " is outside the subgroup");
    return static_cast<int>(it - s.elements.begin());
}

std::string tuple_text(const FiniteGroup& g, const std::vector<Elem>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + g.label(t[i]);
    return s + ")";
}

// The offsets of the three axioms, lifted to `modulus`.
struct Offsets {
    const TwistedGroupData& data;
    long long scale;
    long long b(Elem a, Elem g, Elem h) const { return beta_exponent(data, a, g, h) * scale; }
    // x(l, mn) - x(l, m) - x(l, n) = this
    long long first(Elem l, Elem m, Elem n) const { return -b(l, m, n); }
    // x(kl, m) - x(k, m) - x(l, m) = this
    long long second(Elem k, Elem l, Elem m) const { return b(m, k, l); }
    // x(g^-1 l g, m) - x(l, g m g^-1) = this
    long long third(Elem g, Elem l, Elem m) const {
        const FiniteGroup& G = data.group();
        const Elem gi = G.inv(g);
        return b(l, g, m) + b(l, G.mul(g, m), gi) - b(l, g, gi);
    }
};

void require_pair(const FiniteGroup& g, const Subgroup& l, const Subgroup& m) {
    if (!is_subgroup(g, l.elements) || !is_subgroup(g, m.elements))
        throw Error(ErrorKind::MalformedInput, "L and M must be subgroups");
    if (!is_normal(g, l)) throw Error(ErrorKind::NotNormal, "L is not normal");
    if (!is_normal(g, m)) throw Error(ErrorKind::NotNormal, "M is not normal");
}

} // namespace

// ---------------------------------------------------------------- OmegaBicharacter

OmegaBicharacter OmegaBicharacter::trivial(Subgroup l, Subgroup m, long long modulus) {
    OmegaBicharacter b;
    b.exponents.assign(static_cast<std::size_t>(l.order()) * m.order(), 0);
    b.L = std::move(l);
    b.M = std::move(m);
    b.modulus = modulus;
    return b;
}

long long OmegaBicharacter::at(Elem l, Elem m) const {
    return exponents[static_cast<std::size_t>(position(L, l)) * M.order() + position(M, m)];
}

OmegaBicharacter OmegaBicharacter::lift(long long m) const {
    if (m <= 0 || m % modulus != 0)
        throw Error(ErrorKind::MalformedInput, "cannot lift bicharacter values from mu_" + std::to_string(modulus) +
                                                   " into mu_" + std::to_string(m));
    OmegaBicharacter out = *this;
    out.modulus = m;
    for (auto& e : out.exponents) e *= m / modulus;
    return out;
}

OmegaBicharacter OmegaBicharacter::reduced() const {
    long long g = modulus;
    for (long long e : exponents) g = std::gcd(g, e);
    OmegaBicharacter out = *this;
    out.modulus = modulus / g;
    for (auto& e : out.exponents) e /= g;
    return out;
}

long long bicharacter_modulus(const TwistedGroupData& data) {
    const long long e = data.group().exponent();
    return data.untwisted_omega() ? e : checked_mul(data.modulus(), e);
}

// ---------------------------------------------------------------- verification

BicharacterCheck verify_bicharacter(const TwistedGroupData& data, const OmegaBicharacter& input) {
    const FiniteGroup& G = data.group();
    BicharacterCheck out;
    auto fail = [&](int axiom, std::vector<Elem> t, std::string msg) {
        out.ok = false;
        out.axiom = axiom;
        out.message = std::move(msg) + " at " + tuple_text(G, t);
        out.tuple = std::move(t);
        return out;
    };
    if (!is_subgroup(G, input.L.elements) || !is_subgroup(G, input.M.elements)) {
        out.ok = false;
        out.message = "L and M must be subgroups";
        return out;
    }
    if (!is_normal(G, input.L) || !is_normal(G, input.M)) {
        out.ok = false;
        out.message = "L and M must be normal";
        return out;
    }
    if (!commute_elementwise(G, input.L, input.M)) {
        out.ok = false;
        out.message = "L and M do not commute";
        return out;
    }
    if (input.exponents.size() != static_cast<std::size_t>(input.L.order()) * input.M.order()) {
        out.ok = false;
        out.message = "table size does not match |L||M|";
        return out;
    }
    const long long n = std::lcm(input.modulus, data.modulus());
    const OmegaBicharacter b = input.lift(n);
    const Offsets off{data, n / data.modulus()};
    auto eq = [n](long long x, long long y) { return mod_floor(x - y, n) == 0; };
    for (Elem l : b.L.elements)
        for (Elem m : b.M.elements)
            for (Elem k : b.M.elements)
                if (!eq(b.at(l, G.mul(m, k)) - b.at(l, m) - b.at(l, k), off.first(l, m, k)))
                    return fail(1, {l, m, k}, "B(l,mn) != beta_l(m,n)^-1 B(l,m) B(l,n)");
    for (Elem k : b.L.elements)
        for (Elem l : b.L.elements)
            for (Elem m : b.M.elements)
                if (!eq(b.at(G.mul(k, l), m) - b.at(k, m) - b.at(l, m), off.second(k, l, m)))
                    return fail(2, {k, l, m}, "B(kl,m) != beta_m(k,l) B(k,m) B(l,m)");
    for (Elem g = 0; g < G.order(); ++g)
        for (Elem l : b.L.elements)
            for (Elem m : b.M.elements)
                if (!eq(b.at(G.conj(g, l), m) - b.at(l, G.conj(G.inv(g), m)), off.third(g, l, m)))
                    return fail(3, {g, l, m}, "B is not invariant under conjugation");
    return out;
}

// ---------------------------------------------------------------- SubcatData

SubcatData::SubcatData(TwistedDataPtr parent, OmegaBicharacter b) : parent_(std::move(parent)), b_(std::move(b)) {
    auto check = verify_bicharacter(*parent_, b_);
    if (!check.ok) {
        if (check.axiom == 0 && check.message == "L and M must be normal")
            throw Error(ErrorKind::NotNormal, check.message);
        throw Error(ErrorKind::MalformedInput,
                    check.axiom ? "axiom " + std::to_string(check.axiom) + " fails: " + check.message : check.message);
    }
}

bool operator<(const SubcatData& a, const SubcatData& b) {
    if (a.L().order() != b.L().order()) return a.L().order() < b.L().order();
    if (a.M().order() != b.M().order()) return a.M().order() < b.M().order();
    if (a.L().elements != b.L().elements) return a.L().elements < b.L().elements;
    if (a.M().elements != b.M().elements) return a.M().elements < b.M().elements;
    if (a.B().modulus != b.B().modulus) return a.B().modulus < b.B().modulus;
    return a.B().exponents < b.B().exponents;
}

long long fpdim(const SubcatData& s) {
    return static_cast<long long>(s.L().order()) * (s.parent().group().order() / s.M().order());
}

SubcatData centralizer_subcat(const SubcatData& s) {
    const OmegaBicharacter& b = s.B();
    OmegaBicharacter t;
    t.L = b.M;
    t.M = b.L;
    t.modulus = b.modulus;
    t.exponents.resize(b.exponents.size());
    const int lo = b.L.order(), mo = b.M.order();
    for (int i = 0; i < lo; ++i)
        for (int j = 0; j < mo; ++j)
            t.exponents[static_cast<std::size_t>(j) * lo + i] =
                mod_floor(-b.exponents[static_cast<std::size_t>(i) * mo + j], b.modulus);
    return SubcatData(s.parent_ptr(), std::move(t), SubcatData::Trusted{});
}

bool contains(const SubcatData& outer, const SubcatData& inner) {
    if (!(outer.parent() == inner.parent()))
        throw Error(ErrorKind::ParentMismatch, "subcategories of different centers");
    if (!is_subset(inner.L(), outer.L()) || !is_subset(outer.M(), inner.M())) return false;
    const long long n = std::lcm(outer.B().modulus, inner.B().modulus);
    const OmegaBicharacter a = outer.B().lift(n), b = inner.B().lift(n);
    for (Elem l : inner.L().elements)
        for (Elem m : outer.M().elements)
            if (a.at(l, m) != b.at(l, m)) return false;
    return true;
}

// ---------------------------------------------------------------- enumeration

std::vector<OmegaBicharacter> solve_bicharacters(const TwistedGroupData& data, const Subgroup& l, const Subgroup& m,
                                                 double budget) {
    const FiniteGroup& G = data.group();
    require_pair(G, l, m);
    if (!commute_elementwise(G, l, m)) throw Error(ErrorKind::MalformedInput, "L and M do not commute");
    const long long n = bicharacter_modulus(data);
    const Offsets off{data, n / data.modulus()};
    const int lo = l.order(), mo = m.order();
    const int cols = lo * mo;
    auto var = [&](Elem x, Elem y) { return position(l, x) * mo + position(m, y); };

    // Sparse rows, deduplicated; identical left sides with different right
    // sides are kept (they make the system infeasible).
    std::map<std::pair<std::vector<std::pair<int, long long>>, long long>, int> unique_rows;
    auto add_row = [&](std::map<int, long long> coeffs, long long rhs) {
        std::vector<std::pair<int, long long>> sparse;
        for (auto [c, v] : coeffs)
            if (mod_floor(v, n) != 0) sparse.emplace_back(c, mod_floor(v, n));
        rhs = mod_floor(rhs, n);
        if (sparse.empty() && rhs == 0) return;
        unique_rows.emplace(std::make_pair(std::move(sparse), rhs), 0);
    };
    const double estimate = (static_cast<double>(lo) * mo * mo + static_cast<double>(lo) * lo * mo) * cols;
    if (estimate > budget)
        throw Error(ErrorKind::BudgetExceeded, "bicharacter system with " + std::to_string(cols) +
                                                   " unknowns exceeds the enumeration budget");
    for (Elem x : l.elements)
        for (Elem y : m.elements)
            for (Elem z : m.elements) {
                std::map<int, long long> c;
                c[var(x, G.mul(y, z))] += 1;
                c[var(x, y)] -= 1;
                c[var(x, z)] -= 1;
                add_row(std::move(c), off.first(x, y, z));
            }
    for (Elem k : l.elements)
        for (Elem x : l.elements)
            for (Elem y : m.elements) {
                std::map<int, long long> c;
                c[var(G.mul(k, x), y)] += 1;
                c[var(k, y)] -= 1;
                c[var(x, y)] -= 1;
                add_row(std::move(c), off.second(k, x, y));
            }
    IntMatrix a(static_cast<int>(unique_rows.size()), cols);
    std::vector<long long> rhs;
    int r = 0;
    for (const auto& [key, unused] : unique_rows) {
        for (auto [c, v] : key.first) a(r, c) = v;
        rhs.push_back(key.second);
        ++r;
    }
    CongruenceSolution sol = solve_congruences(a, rhs, n);
    if (static_cast<double>(sol.count()) > budget)
        throw Error(ErrorKind::BudgetExceeded, std::to_string(sol.count()) + " candidate bicharacters exceed the budget");

    std::vector<OmegaBicharacter> out;
    sol.for_each([&](const std::vector<long long>& x) {
        for (Elem g = 0; g < G.order(); ++g)
            for (Elem u : l.elements)
                for (Elem v : m.elements)
                    if (mod_floor(x[var(G.conj(g, u), v)] - x[var(u, G.conj(G.inv(g), v))] - off.third(g, u, v), n) != 0)
                        return true;
        OmegaBicharacter b;
        b.L = l;
        b.M = m;
        b.modulus = n;
        b.exponents = x;
        out.push_back(std::move(b));
        return true;
    });
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.exponents < q.exponents; });
    return out;
}

std::vector<SubcatData> enumerate_subcats(TwistedDataPtr data, double budget) {
    std::vector<SubcatData> out;
    for (const auto& [l, m] : commuting_normal_pairs(data->group()))
        for (auto& b : solve_bicharacters(*data, l, m, budget))
            out.push_back(SubcatData(data, std::move(b), SubcatData::Trusted{}));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gxb
