#include "prymlab/poly.hpp"

#include <doctest.h>

using namespace prymlab;
using namespace prymlab::poly;

namespace {

QPoly p(std::initializer_list<long> coeffs) {
    QPoly out;
    for (long c : coeffs) out.push_back(Rat(c));
    return trim(out);
}

} // namespace

TEST_CASE("arithmetic and divmod") {
    QPoly a = p({-1, 0, 1}); // x^2 - 1
    QPoly b = p({1, 1});     // x + 1
    auto [q, r] = divmod(a, b);
    CHECK(equal(q, p({-1, 1})));
    CHECK(r.empty());
    CHECK(equal(mul(q, b), a));
}

TEST_CASE("gcd and extended gcd") {
    QPoly a = mul(p({1, 1}), p({-2, 1})); // (x+1)(x-2)
    QPoly b = mul(p({1, 1}), p({3, 1}));  // (x+1)(x+3)
    QPoly g = gcd(a, b);
    CHECK(equal(g, p({1, 1})));
    auto [g2, s, t] = extended_gcd(a, b);
    CHECK(equal(g2, g));
    CHECK(equal(add(mul(s, a), mul(t, b)), g));
}

TEST_CASE("factor splits completely over Q") {
    QPoly f = p({0, -1, 0, 0, 0, 1}); // x^5 - x = x(x-1)(x+1)(x^2+1)
    auto fac = factor(f);
    REQUIRE(fac.size() == 4);
    QPoly prod = p({1});
    int total_degree = 0;
    for (const auto &[q, m] : fac) {
        CHECK(m == 1);
        total_degree += degree(q) * m;
        for (int i = 0; i < m; ++i) prod = mul(prod, q);
    }
    CHECK(total_degree == 5);
    CHECK(equal(prod, monic(f)));
}

TEST_CASE("factor keeps irreducibles whole") {
    // x^4 + x^3 + x^2 + x + 1 is the 5th cyclotomic, irreducible
    auto fac = factor(cyclotomic(5));
    REQUIRE(fac.size() == 1);
    CHECK(degree(fac[0].first) == 4);
    CHECK(fac[0].second == 1);
}

TEST_CASE("factor with multiplicities") {
    QPoly f = mul(mul(p({1, 1}), p({1, 1})), p({-1, 1})); // (x+1)^2 (x-1)
    auto fac = factor(f);
    REQUIRE(fac.size() == 2);
    int mult_sum = 0;
    for (const auto &[q, m] : fac) mult_sum += m;
    CHECK(mult_sum == 3);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(equal(cyclotomic(1), p({-1, 1})));
    CHECK(equal(cyclotomic(2), p({1, 1})));
    CHECK(equal(cyclotomic(4), p({1, 0, 1})));
    CHECK(equal(cyclotomic(6), p({1, -1, 1})));
    CHECK(equal(cyclotomic(12), p({1, 0, -1, 0, 1})));
    // x^n - 1 = prod over divisors
    QPoly prod = mul(mul(cyclotomic(1), cyclotomic(2)),
                     mul(cyclotomic(3), cyclotomic(6)));
    CHECK(equal(prod, p({-1, 0, 0, 0, 0, 0, 1})));
}

TEST_CASE("totient") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(97) == 96);
}
