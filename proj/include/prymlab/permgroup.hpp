#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymlab {

// A permutation of {0..d-1} stored as its image array.
struct Perm {
    std::vector<int> images;

    Perm() = default;
    explicit Perm(std::vector<int> imgs);
    static Perm identity(int degree);

    int degree() const { return (int)images.size(); }
    int operator()(int x) const { return images[x]; }
    Perm inverse() const;
    bool is_identity() const;

    bool operator==(const Perm &o) const { return images == o.images; }
    bool operator<(const Perm &o) const { return images < o.images; }
};

// (a * b)(x) = a(b(x))
Perm operator*(const Perm &a, const Perm &b);

std::string cycle_notation(const Perm &p);

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(size_t cap)
        : std::runtime_error("group enumeration exceeded cap " + std::to_string(cap)) {}
};

// A finite permutation group with a full element enumeration.
// Identity is always element 0; elements are in BFS discovery order.
struct FiniteGroup {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;
    std::vector<std::vector<int>> mult; // mult[a][b] = index of elements[a]*elements[b]
    std::vector<int> inv;
    std::vector<std::vector<int>> conjugacy_classes; // partition of element indices

    size_t order() const { return elements.size(); }
    int mul(int a, int b) const { return mult[a][b]; }
    int inverse_of(int a) const { return inv[a]; }
    int index_of(const Perm &p) const;
    bool is_abelian() const;
};

FiniteGroup enumerate_group(const std::vector<Perm> &gens, size_t cap = 5000);

// Least k >= 1 with x^k = identity.
int element_order(const FiniteGroup &g, int x);

// Closure of a subset of element indices; returns sorted element indices.
std::vector<int> subgroup_closure(const FiniteGroup &g, const std::vector<int> &seed);

} // namespace prymlab
