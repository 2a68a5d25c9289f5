#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extremal/rational.hpp"

namespace extremal {

/// A group element as a residue vector, coords[j] in [0, orders[j]).
using Element = std::vector<long long>;

/// A character of the group, identified with an element of the (self-dual)
/// group via the standard pairing.
using Character = std::vector<long long>;

/// A finite abelian group presented as a product of cyclic factors.
struct GroupSpec {
    std::vector<long long> orders;

    long long order() const {
        long long n = 1;
        for (long long o : orders) n *= o;
        return n;
    }
    size_t rank() const { return orders.size(); }
    bool operator==(const GroupSpec& o) const { return orders == o.orders; }
    std::string str() const;
};

/// Validates factor orders (each >= 2, product fits in 64 bits).
GroupSpec make_group(const std::vector<long long>& orders);

Element zero(const GroupSpec& g);
Element add(const GroupSpec& g, const Element& a, const Element& b);
Element neg(const GroupSpec& g, const Element& a);
Element sub(const GroupSpec& g, const Element& a, const Element& b);

/// Mixed-radix flat index of an element; first coordinate most significant,
/// so index order equals lexicographic coordinate order.
long long element_index(const GroupSpec& g, const Element& a);
Element element_at(const GroupSpec& g, long long index);

long long add_index(const GroupSpec& g, long long a, long long b);
long long neg_index(const GroupSpec& g, long long a);
long long sub_index(const GroupSpec& g, long long a, long long b);

/// Exact pairing exponent: <gamma, x> = e^{2 pi i t} with
/// t = sum_j gamma_j x_j / n_j mod 1, returned as a reduced rational.
Turn pairing_turn(const GroupSpec& g, const Character& gamma, const Element& x);

/// All elements in lexicographic coordinate order, identity first.
std::vector<Element> enumerate_elements(const GroupSpec& g, long long cap = 1000000);

/// Units of Z_n: all u in [1, n) coprime to n, ascending.
std::vector<long long> units(long long n);

struct Subgroup {
    GroupSpec parent;
    std::vector<Element> elements;  // sorted by flat index, identity first

    size_t size() const { return elements.size(); }
};

/// Every subgroup of g (optionally only those of the given order), found by
/// closure of generator sets. Requires group order <= 10^4.
std::vector<Subgroup> enumerate_subgroups(const GroupSpec& g,
                                          std::optional<long long> order = std::nullopt);

bool is_subgroup_elements(const GroupSpec& g, const std::vector<Element>& elems);

/// Quotient G/H in invariant-factor form plus the projection map.
struct Quotient {
    GroupSpec group;                     // G/H as a product of invariant factors
    std::vector<long long> index_map;    // flat index in G -> flat index in G/H

    Element project(const GroupSpec& parent, const Element& x) const {
        return element_at(group, index_map[element_index(parent, x)]);
    }
};

Quotient quotient(const GroupSpec& g, const Subgroup& h);

}  // namespace extremal
