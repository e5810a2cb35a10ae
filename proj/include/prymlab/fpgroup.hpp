#pragma once

#include "prymlab/matrix.hpp"
#include "prymlab/permgroup.hpp"
#include "prymlab/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prymlab {

// A word in a free group: nonzero signed 1-based generator indices,
// letter i = generator i, letter -i = its inverse. Always kept freely reduced.
using Word = std::vector<int>;

namespace word {

Word reduce(Word w);
Word inverse(const Word &w);
Word concat(const Word &a, const Word &b);
// Replace each letter +-i by images[i-1] (resp. its inverse), then reduce.
Word substitute(const Word &w, const std::vector<Word> &images);
// Exponent-sum vector of length num_gens.
std::vector<Int> exponent_vector(const Word &w, int num_gens);
std::string to_string(const Word &w);

} // namespace word

struct Presentation {
    enum class Kind { Surface, Orbifold, Generic };
    Kind kind = Kind::Generic;
    int genus = 0;                   // surface / orbifold only
    std::vector<int> multiplicities; // orbifold only
    int num_generators = 0;
    std::vector<Word> relators;
};

class SomeMultiplicityBelowTwo : public std::runtime_error {
public:
    SomeMultiplicityBelowTwo() : std::runtime_error("orbifold multiplicity below 2") {}
};

class Unsupported : public std::runtime_error {
public:
    explicit Unsupported(const std::string &what) : std::runtime_error("unsupported: " + what) {}
};

class RelatorNotKilled : public std::runtime_error {
public:
    int relator_index;
    explicit RelatorNotKilled(int idx)
        : std::runtime_error("relator " + std::to_string(idx) + " does not map to identity"),
          relator_index(idx) {}
};

class NotSurjective : public std::runtime_error {
public:
    NotSurjective() : std::runtime_error("homomorphism is not surjective") {}
};

// Genus-g surface group: generators a_1,b_1,...,a_g,b_g with a_i at index
// 2i-1 and b_i at index 2i; single relator [a_1,b_1]...[a_g,b_g].
Presentation surface_presentation(int g);

// Orbifold group with 2g+n generators: relator [a_1,b_1]...[a_g,b_g] c_1...c_n
// plus torsion relators c_i^{m_i}.
Presentation orbifold_presentation(int g, const std::vector<int> &m);

// (2g-2 + sum (m_i - 1)/m_i, value > 0).
std::pair<Rat, bool> hyperbolicity_index(int g, const std::vector<int> &m);

// Decides w = 1. Dehn's algorithm for surface genus >= 2, abelianization for
// genus 1, trivial-group shortcuts, and faithful permutation models for the
// finite genus-0 orbifold groups. Throws Unsupported otherwise.
bool word_problem(const Presentation &p, const Word &w);

struct AutDatum {
    std::vector<Word> images;
    std::vector<Word> inverse_images;
    std::string name;
};

// Checks both compositions are the identity on every generator and that each
// relator's image is trivial; throws std::runtime_error on failure.
void verify_aut(const Presentation &p, const AutDatum &a);

// (a o b)(x) = a(b(x)).
AutDatum compose_aut(const AutDatum &a, const AutDatum &b);

// Action on the abelianization: column j = exponent vector of images[j].
ZMat abelianized_matrix(const Presentation &p, const AutDatum &a);

// Humphries generating twists: t_{a_1..a_g}, t_{b_1}, t_{b_2}, and the g-1
// chain twists (2g+1 total for g >= 2; {t_a, t_b} for g = 1). Each is verified.
std::vector<AutDatum> dehn_twist_basis(int g);

struct GroupHom {
    const FiniteGroup *target = nullptr;
    std::vector<int> images; // one element index per generator
    bool surjective = false;
};

int eval_word(const FiniteGroup &g, const std::vector<int> &images, const Word &w);

GroupHom validate_hom(const Presentation &p, const FiniteGroup &g,
                      const std::vector<int> &images, bool require_surjective = true);

bool in_stab(const Presentation &p, const AutDatum &a, const GroupHom &r);

} // namespace prymlab
