#include "hmv/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hmv/errors.hpp"

namespace hmv {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

int perm_fixed_points(const Perm& a) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] == static_cast<int>(i)) ++c;
    return c;
}

long perm_fixed_subsets(const Perm& a, int m) {
    // exhaustive over subsets; |a| stays small in this project
    int n = static_cast<int>(a.size());
    if (m < 0 || m > n) return 0;
    long count = 0;
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + m, 1);
    std::sort(mask.begin(), mask.end()); // start at the first combination
    do {
        bool fixed = true;
        for (int i = 0; i < n && fixed; ++i)
            if (mask[i] && !mask[a[i]]) fixed = false;
        if (fixed) ++count;
    } while (std::next_permutation(mask.begin(), mask.end()));
    return count;
}

FiniteGroup make_group(std::vector<int> table, std::string name) {
    FiniteGroup g;
    int n = 0;
    while (static_cast<long>(n) * n < static_cast<long>(table.size())) ++n;
    if (static_cast<long>(n) * n != static_cast<long>(table.size()) || n == 0)
        throw bad_input("multiplication table is not square");
    g.order = n;
    g.table = std::move(table);
    g.name = std::move(name);
    for (auto v : g.table)
        if (v < 0 || v >= n) throw bad_input("table entry out of range");

    // identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (g.mul(e, a) != a || g.mul(a, e) != a) ok = false;
        if (ok) { id = e; break; }
    }
    if (id < 0) throw bad_input("group has no identity element");
    g.identity = id;

    // inverses
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == id && g.mul(b, a) == id) { g.inverse[a] = b; break; }
        if (g.inverse[a] < 0) throw bad_input("element without inverse");
    }

    // associativity: exhaustive for small orders, sampled above
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw bad_input("multiplication table is not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 200000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw bad_input("multiplication table is not associative");
        }
    }
    return g;
}

FiniteGroup trivial_group() { return make_group({0}, "C1"); }

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw bad_input("cyclic group order must be >= 1");
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return make_group(std::move(t), "C" + std::to_string(n));
}

static std::vector<Perm> all_perms(int n) {
    Perm p = perm_identity(n);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Perm> symmetric_group_perms(int n) { return all_perms(n); }

int perm_sign(const Perm& a) {
    int inversions = 0;
    int n = static_cast<int>(a.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (a[x] > a[y]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw bad_input("symmetric group supported for 1 <= n <= 5");
    auto perms = all_perms(n);
    std::map<Perm, int> idx;
    for (size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
    int m = static_cast<int>(perms.size());
    std::vector<int> t(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[a * m + b] = idx[perm_compose(perms[a], perms[b])];
    return make_group(std::move(t), "S" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw bad_input("dihedral parameter must be >= 1");
    // elements (i, f): rotation i, flip f; (i,f)*(j,g) = (i + (f? -j : j), f^g)
    int m = 2 * n;
    auto enc = [n](int i, int f) { return f * n + ((i % n + n) % n); };
    std::vector<int> t(m * m);
    for (int f = 0; f < 2; ++f)
        for (int i = 0; i < n; ++i)
            for (int g = 0; g < 2; ++g)
                for (int j = 0; j < n; ++j)
                    t[enc(i, f) * m + enc(j, g)] = enc(f ? i - j : i + j, f ^ g);
    return make_group(std::move(t), "D" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order * b.order;
    auto enc = [&](int x, int y) { return x * b.order + y; };
    std::vector<int> t(n * n);
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    t[enc(x1, y1) * n + enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
    return make_group(std::move(t), a.name + "x" + b.name);
}

FiniteGroup group_by_name(const std::string& name) {
    if (name == "C1" || name == "1") return trivial_group();
    if (name == "A4") {
        // even permutations of S4
        auto s4 = symmetric_group(4);
        auto perms = all_perms(4);
        std::vector<int> evens;
        for (int i = 0; i < s4.order; ++i) {
            int inversions = 0;
            for (int x = 0; x < 4; ++x)
                for (int y = x + 1; y < 4; ++y)
                    if (perms[i][x] > perms[i][y]) ++inversions;
            if (inversions % 2 == 0) evens.push_back(i);
        }
        std::vector<int> pos(s4.order, -1);
        for (size_t i = 0; i < evens.size(); ++i) pos[evens[i]] = static_cast<int>(i);
        int m = static_cast<int>(evens.size());
        std::vector<int> t(m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) t[i * m + j] = pos[s4.mul(evens[i], evens[j])];
        return make_group(std::move(t), "A4");
    }
    auto x = name.find('x');
    if (x != std::string::npos)
        return direct_product(group_by_name(name.substr(0, x)),
                              group_by_name(name.substr(x + 1)));
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S' || name[0] == 'D')) {
        int n = std::stoi(name.substr(1));
        if (name[0] == 'C') return cyclic_group(n);
        if (name[0] == 'S') return symmetric_group(n);
        return dihedral_group(n);
    }
    throw bad_input("unknown group name '" + name + "'");
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    std::set<int> s(elems.begin(), elems.end());
    if (s.empty() || !s.count(g.identity)) return false;
    for (int a : s)
        for (int b : s)
            if (!s.count(g.mul(a, b))) return false;
    for (int a : s)
        if (!s.count(g.inv(a))) return false;
    return true;
}

FiniteGroup subgroup_group(const FiniteGroup& g, std::vector<int> elems, std::string name) {
    if (!is_subgroup(g, elems)) throw not_a_subgroup("element set is not a subgroup");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::map<int, int> idx;
    for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
    int n = static_cast<int>(elems.size());
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = idx.at(g.mul(elems[a], elems[b]));
    return make_group(std::move(t), std::move(name));
}

std::vector<int> left_transversal(const FiniteGroup& g, const std::vector<int>& sub) {
    std::vector<int> reps;
    std::vector<char> seen(g.order, 0);
    // identity coset first
    for (int h : sub) seen[h] = 1;
    reps.push_back(g.identity);
    for (int a = 0; a < g.order; ++a) {
        if (seen[a]) continue;
        reps.push_back(a);
        for (int h : sub) seen[g.mul(a, h)] = 1;
    }
    return reps;
}

int coset_of(const FiniteGroup& g, const std::vector<int>& sub,
             const std::vector<int>& transversal, int element) {
    std::set<int> s(sub.begin(), sub.end());
    for (size_t j = 0; j < transversal.size(); ++j)
        if (s.count(g.mul(g.inv(transversal[j]), element))) return static_cast<int>(j);
    return -1;
}

void verify_action(const FiniteGroup& g, const std::vector<Perm>& action) {
    if (static_cast<int>(action.size()) != g.order)
        throw bad_input("action table size mismatch");
    size_t n = action[g.identity].size();
    for (const auto& p : action) {
        if (p.size() != n) throw bad_input("action permutation size mismatch");
        std::vector<char> seen(n, 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(n) || seen[v])
                throw bad_input("action value is not a permutation");
            seen[v] = 1;
        }
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (perm_compose(action[a], action[b]) != action[g.mul(a, b)])
                throw bad_input("action is not a homomorphism");
}

} // namespace hmv
