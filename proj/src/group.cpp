#include "extremal/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace extremal {

std::string GroupSpec::str() const {
    std::string s;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(orders[i]);
    }
    return s;
}

GroupSpec make_group(const std::vector<long long>& orders) {
    if (orders.empty()) throw std::invalid_argument("make_group: no factors");
    long long n = 1;
    for (long long o : orders) {
        if (o < 2) throw std::invalid_argument("make_group: factor order < 2");
        if (__builtin_mul_overflow(n, o, &n))
            throw std::overflow_error("make_group: group order overflows 64 bits");
    }
    return GroupSpec{orders};
}

static void check_shape(const GroupSpec& g, const Element& a) {
    if (a.size() != g.orders.size())
        throw std::invalid_argument("element shape does not match group");
}

Element zero(const GroupSpec& g) { return Element(g.orders.size(), 0); }

Element add(const GroupSpec& g, const Element& a, const Element& b) {
    check_shape(g, a);
    check_shape(g, b);
    Element r(a.size());
    for (size_t j = 0; j < a.size(); ++j) r[j] = (a[j] + b[j]) % g.orders[j];
    return r;
}

Element neg(const GroupSpec& g, const Element& a) {
    check_shape(g, a);
    Element r(a.size());
    for (size_t j = 0; j < a.size(); ++j) r[j] = (g.orders[j] - a[j]) % g.orders[j];
    return r;
}

Element sub(const GroupSpec& g, const Element& a, const Element& b) {
    return add(g, a, neg(g, b));
}

long long element_index(const GroupSpec& g, const Element& a) {
    check_shape(g, a);
    long long idx = 0;
    for (size_t j = 0; j < a.size(); ++j) {
        long long c = a[j] % g.orders[j];
        if (c < 0) c += g.orders[j];
        idx = idx * g.orders[j] + c;
    }
    return idx;
}

Element element_at(const GroupSpec& g, long long index) {
    Element a(g.orders.size());
    for (size_t j = g.orders.size(); j-- > 0;) {
        a[j] = index % g.orders[j];
        index /= g.orders[j];
    }
    return a;
}

long long add_index(const GroupSpec& g, long long a, long long b) {
    return element_index(g, add(g, element_at(g, a), element_at(g, b)));
}

long long neg_index(const GroupSpec& g, long long a) {
    return element_index(g, neg(g, element_at(g, a)));
}

long long sub_index(const GroupSpec& g, long long a, long long b) {
    return element_index(g, sub(g, element_at(g, a), element_at(g, b)));
}

Turn pairing_turn(const GroupSpec& g, const Character& gamma, const Element& x) {
    check_shape(g, gamma);
    check_shape(g, x);
    Turn t(0, 1);
    for (size_t j = 0; j < x.size(); ++j) t = t + Turn(gamma[j] * x[j], g.orders[j]);
    return t;
}

std::vector<Element> enumerate_elements(const GroupSpec& g, long long cap) {
    long long n = g.order();
    if (n > cap) throw std::invalid_argument("enumerate_elements: cap exceeded");
    std::vector<Element> out;
    out.reserve(n);
    for (long long i = 0; i < n; ++i) out.push_back(element_at(g, i));
    return out;
}

std::vector<long long> units(long long n) {
    if (n < 2) throw std::invalid_argument("units: n < 2");
    std::vector<long long> u;
    for (long long k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) u.push_back(k);
    return u;
}

bool is_subgroup_elements(const GroupSpec& g, const std::vector<Element>& elems) {
    if (elems.empty()) return false;
    std::set<long long> s;
    for (const auto& e : elems) s.insert(element_index(g, e));
    if (!s.count(0)) return false;
    for (long long a : s)
        for (long long b : s)
            if (!s.count(sub_index(g, a, b))) return false;
    return true;
}

namespace {

// Closure of a generator set, as sorted flat indices.
std::vector<long long> closure(const GroupSpec& g, std::vector<long long> gens) {
    std::set<long long> s{0};
    std::vector<long long> frontier{0};
    for (long long x : gens)
        if (s.insert(x).second) frontier.push_back(x);
    while (!frontier.empty()) {
        std::vector<long long> next;
        for (long long a : frontier)
            for (long long x : gens) {
                long long b = add_index(g, a, x);
                if (s.insert(b).second) next.push_back(b);
            }
        frontier.swap(next);
    }
    return {s.begin(), s.end()};
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const GroupSpec& g, std::optional<long long> order) {
    long long n = g.order();
    if (n > 10000) throw std::invalid_argument("enumerate_subgroups: group order cap exceeded");
    std::set<std::vector<long long>> found;
    found.insert({0});
    std::vector<std::vector<long long>> frontier{{0}};
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& sg : frontier) {
            std::set<long long> have(sg.begin(), sg.end());
            for (long long x = 1; x < n; ++x) {
                if (have.count(x)) continue;
                std::vector<long long> gens = sg;
                gens.push_back(x);
                auto cl = closure(g, gens);
                if (found.insert(cl).second) next.push_back(cl);
            }
        }
        frontier.swap(next);
    }
    std::vector<Subgroup> out;
    for (const auto& sg : found) {
        if (order && static_cast<long long>(sg.size()) != *order) continue;
        Subgroup h{g, {}};
        for (long long idx : sg) h.elements.push_back(element_at(g, idx));
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [&](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

namespace {

// Order of a coset (given by rep index) in the quotient's multiplication.
long long coset_order(const GroupSpec& g, const std::vector<long long>& coset_id, long long rep) {
    long long cur = rep, k = 1;
    while (coset_id[cur] != coset_id[0]) {
        cur = add_index(g, cur, rep);
        ++k;
    }
    return k;
}

}  // namespace

Quotient quotient(const GroupSpec& g, const Subgroup& h) {
    if (!is_subgroup_elements(g, h.elements))
        throw std::invalid_argument("quotient: H is not a subgroup of G");
    long long n = g.order();
    std::vector<long long> hidx;
    for (const auto& e : h.elements) hidx.push_back(element_index(g, e));

    // Label each coset by its minimal element.
    std::vector<long long> coset_id(n, -1);
    std::vector<long long> reps;
    for (long long x = 0; x < n; ++x) {
        if (coset_id[x] >= 0) continue;
        reps.push_back(x);
        for (long long hh : hidx) coset_id[add_index(g, x, hh)] = x;
    }
    long long q = static_cast<long long>(reps.size());

    // Extract an invariant-factor basis of the coset group by repeatedly
    // splitting off a maximal-order element and lifting a basis of the
    // quotient by it back up (the usual structure-theorem argument).
    struct BasisVec {
        long long rep;   // element index in G representing the coset
        long long ord;
    };
    std::vector<BasisVec> basis;

    // current subgroup "modded out": starts at H, grows as generators are chosen
    std::vector<long long> mod = hidx;
    auto mod_id = [&](const std::vector<long long>& modset) {
        // coset labels for G / <modset>
        std::vector<long long> id(n, -1);
        for (long long x = 0; x < n; ++x) {
            if (id[x] >= 0) continue;
            for (long long m : modset) id[add_index(g, x, m)] = x;
        }
        return id;
    };

    std::vector<long long> cur_id = mod_id(mod);
    while (true) {
        long long best = -1, best_ord = 1;
        for (long long x = 0; x < n; ++x) {
            if (cur_id[x] != x) continue;  // only canonical reps
            long long o = coset_order(g, cur_id, x);
            if (o > best_ord) {
                best_ord = o;
                best = x;
            }
        }
        if (best < 0) break;  // quotient trivial
        basis.push_back({best, best_ord});
        // grow mod by <best>
        std::set<long long> grown(mod.begin(), mod.end());
        std::vector<long long> multiples;
        long long cur = best;
        for (long long k = 1; k < best_ord + 1; ++k) {
            multiples.push_back(cur);
            cur = add_index(g, cur, best);
        }
        std::vector<long long> newmod;
        for (long long m : mod)
            for (long long mu : multiples) newmod.push_back(add_index(g, m, mu));
        std::set<long long> ms(newmod.begin(), newmod.end());
        ms.insert(0);
        mod.assign(ms.begin(), ms.end());
        cur_id = mod_id(mod);
        if (static_cast<long long>(mod.size()) == n) break;
    }

    // basis comes out largest order first; orders form a divisibility chain.
    GroupSpec qg;
    if (basis.empty()) {
        qg = GroupSpec{{1}};  // trivial quotient; represented as a single coset below
    } else {
        std::vector<long long> orders;
        for (auto it = basis.rbegin(); it != basis.rend(); ++it) orders.push_back(it->ord);
        qg = GroupSpec{orders};
    }

    // Coordinates of every coset with respect to the basis, by enumerating all
    // coefficient combinations.
    std::vector<long long> index_map(n, 0);
    if (!basis.empty()) {
        std::reverse(basis.begin(), basis.end());  // ascending orders, matching qg
        long long combos = 1;
        for (const auto& b : basis) combos *= b.ord;
        std::vector<long long> coset_to_q(n, -1);
        for (long long c = 0; c < combos; ++c) {
            long long rest = c, x = 0;
            Element coords(basis.size());
            for (size_t j = basis.size(); j-- > 0;) {
                long long k = rest % basis[j].ord;
                rest /= basis[j].ord;
                coords[j] = k;
                for (long long t = 0; t < k; ++t) x = add_index(g, x, basis[j].rep);
            }
            long long label = coset_id[x];
            long long qi = element_index(qg, coords);
            if (coset_to_q[label] < 0) coset_to_q[label] = qi;
        }
        for (long long x = 0; x < n; ++x) index_map[x] = coset_to_q[coset_id[x]];
    }
    if (static_cast<long long>(reps.size()) != qg.order() && !(basis.empty() && q == 1))
        throw std::logic_error("quotient: basis extraction mismatch");
    return Quotient{qg, index_map};
}

}  // namespace extremal
