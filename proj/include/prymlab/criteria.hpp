#pragma once

#include "prymlab/fpgroup.hpp"
#include "prymlab/matrix.hpp"
#include "prymlab/permgroup.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymlab {

class RelationViolated : public std::runtime_error {
public:
    size_t which;
    explicit RelationViolated(size_t idx)
        : std::runtime_error("orbifold relation " + std::to_string(idx) +
                             " not satisfied by the action"),
          which(idx) {}
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(size_t budget)
        : std::runtime_error("search budget " + std::to_string(budget) + " exceeded") {}
};

// An action of an orbifold group on V = Q^dim, one matrix per generator.
struct ExtensionDatum {
    int genus = 0;
    std::vector<int> multiplicities;
    size_t dim = 0;
    std::vector<QMat> action; // one per generator of the orbifold group
};

// (dim of common fixed space, parity verdict). Verifies the relations first.
std::pair<size_t, bool> evenness_check(const ExtensionDatum &d);

// True iff every irreducible factor of char(M) is cyclotomic.
bool quasi_unipotent_check(const QMat &m);

struct RedundancyResult {
    bool found = false;
    std::vector<Word> witness_words;    // words whose images generate
    std::vector<int> witness_elements;  // their images in G
    bool exact = false;                 // min_generators is exact
    size_t min_generators = 0;          // meaningful when exact
};

RedundancyResult redundancy_witness(int g, const GroupHom &r, std::uint64_t seed = 0);

struct CatalogEntry {
    std::string name;
    std::vector<std::vector<int>> generators; // permutation image arrays
};

struct CoverSearchResult {
    std::string group_name;
    std::vector<int> images; // generator images, element indices
    Int kernel_genus;
};

// First surjection (catalog order, then lexicographic image tuples) whose
// torsion generators map to elements of exact order m_i; the kernel is then
// torsion free of genus h with 2h-2 = |G|(2g-2+sum (m_i-1)/m_i).
std::optional<CoverSearchResult> torsion_free_cover_search(
    int g, const std::vector<int> &m, const std::vector<CatalogEntry> &catalog,
    size_t budget = 2000000, size_t cap = 5000);

struct QuaternionDatum {
    Rat a, b; // relations i^2 = a, j^2 = -b
};

// True iff the algebra is a division algebra, i.e. a x^2 + b y^2 = z^2 has no
// nontrivial rational point (Hilbert symbols at 2 and the odd primes in a, b).
bool quaternion_is_division(const QuaternionDatum &q);

// Brute-force oracle: search primitive solutions with 0 <= x, y <= height.
bool quaternion_split_search(const QuaternionDatum &q, long height);

} // namespace prymlab
