#pragma once

#include "prymlab/rational.hpp"

#include <tuple>
#include <utility>
#include <vector>

namespace prymlab {

// Dense univariate polynomials, coefficients in ascending degree order.
// The zero polynomial is the empty vector.
using QPoly = std::vector<Rat>;
using ZPoly = std::vector<Int>;

namespace poly {

QPoly trim(QPoly p);
int degree(const QPoly &p); // -1 for the zero polynomial
QPoly add(const QPoly &a, const QPoly &b);
QPoly sub(const QPoly &a, const QPoly &b);
QPoly mul(const QPoly &a, const QPoly &b);
QPoly scale(const QPoly &a, const Rat &c);
// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b);
QPoly monic(const QPoly &p);
QPoly derivative(const QPoly &p);
QPoly gcd(QPoly a, QPoly b); // monic gcd
// (g, s, t) with s*a + t*b = g, g the monic gcd.
std::tuple<QPoly, QPoly, QPoly> extended_gcd(const QPoly &a, const QPoly &b);
Rat eval(const QPoly &p, const Rat &x);
bool equal(const QPoly &a, const QPoly &b);
std::string to_string(const QPoly &p);

// Irreducible monic factors over Q with multiplicities, sorted
// deterministically (by degree, then lexicographically by coefficients).
std::vector<std::pair<QPoly, int>> factor(const QPoly &p);

// n-th cyclotomic polynomial as a monic rational polynomial.
QPoly cyclotomic(unsigned n);

// Euler's totient.
unsigned totient(unsigned n);

} // namespace poly
} // namespace prymlab
