#include "prymlab/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace prymlab {
namespace poly {

QPoly trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const QPoly &p) { return (int)p.size() - 1; }

QPoly add(const QPoly &a, const QPoly &b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

QPoly sub(const QPoly &a, const QPoly &b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

QPoly mul(const QPoly &a, const QPoly &b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return trim(std::move(r));
}

QPoly scale(const QPoly &a, const Rat &c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto &v : r) v *= c;
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b) {
    QPoly bb = trim(b);
    if (bb.empty()) throw std::invalid_argument("polynomial division by zero");
    QPoly rem = trim(a);
    if ((int)rem.size() < (int)bb.size()) return {{}, rem};
    QPoly quo(rem.size() - bb.size() + 1, Rat(0));
    Rat lead = bb.back();
    for (int i = (int)quo.size() - 1; i >= 0; --i) {
        Rat c = rem[bb.size() - 1 + i] / lead;
        if (c == 0) continue;
        quo[i] = c;
        for (size_t j = 0; j < bb.size(); ++j) rem[i + j] -= c * bb[j];
    }
    return {trim(std::move(quo)), trim(std::move(rem))};
}

QPoly monic(const QPoly &p) {
    QPoly t = trim(p);
    if (t.empty()) return t;
    return scale(t, 1 / t.back());
}

QPoly derivative(const QPoly &p) {
    if (p.size() <= 1) return {};
    QPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat((long)i);
    return trim(std::move(r));
}

QPoly gcd(QPoly a, QPoly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::tuple<QPoly, QPoly, QPoly> extended_gcd(const QPoly &a, const QPoly &b) {
    QPoly r0 = trim(a), r1 = trim(b);
    QPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        QPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = trim(std::move(r));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    Rat lead = r0.back();
    return {monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)};
}

Rat eval(const QPoly &p, const Rat &x) {
    Rat v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

bool equal(const QPoly &a, const QPoly &b) { return trim(a) == trim(b); }

std::string to_string(const QPoly &p) {
    QPoly t = trim(p);
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = t.size(); i-- > 0;) {
        if (t[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_to_string(t[i]);
        if (i > 0) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Factorization over Q: reduce to a monic integer polynomial, then
// Berlekamp mod p, Hensel lifting, and subset recombination.
// ---------------------------------------------------------------------------

namespace {

using LPoly = std::vector<long>; // coefficients mod a word-sized prime

long mod_pow(long b, long e, long p) {
    long r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = (long)((__int128)r * b % p);
        b = (long)((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}

long mod_inv(long a, long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

LPoly ltrim(LPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

LPoly lmul(const LPoly &a, const LPoly &b, long p) {
    if (a.empty() || b.empty()) return {};
    LPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (long)(((__int128)a[i] * b[j] + r[i + j]) % p);
    }
    return ltrim(std::move(r));
}

std::pair<LPoly, LPoly> ldivmod(const LPoly &a, const LPoly &b, long p) {
    LPoly rem = ltrim(a), bb = ltrim(b);
    assert(!bb.empty());
    if (rem.size() < bb.size()) return {{}, rem};
    LPoly quo(rem.size() - bb.size() + 1, 0);
    long inv = mod_inv(bb.back(), p);
    for (int i = (int)quo.size() - 1; i >= 0; --i) {
        if (rem.size() < bb.size() + i) continue;
        long c = (long)((__int128)rem[bb.size() - 1 + i] * inv % p);
        if (!c) continue;
        quo[i] = c;
        for (size_t j = 0; j < bb.size(); ++j) {
            rem[i + j] = (long)(((rem[i + j] - (__int128)c * bb[j]) % p + p) % p);
        }
    }
    return {ltrim(std::move(quo)), ltrim(std::move(rem))};
}

LPoly lgcd(LPoly a, LPoly b, long p) {
    a = ltrim(std::move(a));
    b = ltrim(std::move(b));
    while (!b.empty()) {
        LPoly r = ldivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = mod_inv(a.back(), p);
        for (auto &c : a) c = (long)((__int128)c * inv % p);
    }
    return a;
}

LPoly lmod(const LPoly &a, const LPoly &f, long p) { return ldivmod(a, f, p).second; }

LPoly to_lpoly(const ZPoly &f, long p) {
    LPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Int m = f[i] % p;
        if (m < 0) m += p;
        r[i] = m.get_si();
    }
    return ltrim(std::move(r));
}

LPoly lderiv(const LPoly &f, long p) {
    if (f.size() <= 1) return {};
    LPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = (long)((__int128)f[i] * (i % p) % p);
    return ltrim(std::move(r));
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<LPoly> berlekamp(const LPoly &f, long p) {
    int n = (int)f.size() - 1;
    if (n <= 1) return {f};
    // Frobenius matrix: column i = x^{i p} mod f.
    std::vector<LPoly> frob(n);
    LPoly xp{0, 1};
    // x^p mod f by square-and-multiply on exponents.
    {
        LPoly acc{1};
        LPoly base{0, 1};
        long e = p;
        while (e) {
            if (e & 1) acc = lmod(lmul(acc, base, p), f, p);
            base = lmod(lmul(base, base, p), f, p);
            e >>= 1;
        }
        xp = acc;
    }
    LPoly cur{1};
    for (int i = 0; i < n; ++i) {
        frob[i] = cur;
        cur = lmod(lmul(cur, xp, p), f, p);
    }
    // Nullspace of (Frob - I) over F_p, Gauss-Jordan.
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) {
        for (size_t i = 0; i < frob[j].size(); ++i) m[i][j] = frob[j][i];
        m[j][j] = (m[j][j] - 1 + p) % p;
    }
    std::vector<int> pivot_col_of_row(n, -1);
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (m[i][c]) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        long inv = mod_inv(m[r][c], p);
        for (int j = 0; j < n; ++j) m[r][j] = (long)((__int128)m[r][j] * inv % p);
        for (int i = 0; i < n; ++i) {
            if (i == r || !m[i][c]) continue;
            long fmul = m[i][c];
            for (int j = 0; j < n; ++j)
                m[i][j] = (long)(((m[i][j] - (__int128)fmul * m[r][j]) % p + p) % p);
        }
        pivot_col_of_row[r] = c;
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < r; ++i) is_pivot[pivot_col_of_row[i]] = true;
    std::vector<LPoly> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        LPoly v(n, 0);
        v[c] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col_of_row[i]] = (p - m[i][c]) % p;
        basis.push_back(ltrim(std::move(v)));
    }
    // Nullspace dimension (constants included) equals the number of
    // irreducible factors mod p.
    size_t num_factors = basis.size();
    std::vector<LPoly> factors{f};
    if (num_factors <= 1) return factors;
    for (const auto &v : basis) {
        if (factors.size() == num_factors) break;
        std::vector<LPoly> next;
        for (const auto &g : factors) {
            if (g.size() <= 2) {
                next.push_back(g);
                continue;
            }
            LPoly rest = g;
            for (long c = 0; c < p && rest.size() > 1; ++c) {
                LPoly vc = v;
                if (vc.empty()) vc.push_back(0);
                vc[0] = (vc[0] - c % p + p) % p;
                LPoly d = lgcd(rest, ltrim(vc), p);
                if (d.size() > 1 && d.size() < rest.size()) {
                    next.push_back(d);
                    rest = ldivmod(rest, d, p).first;
                }
            }
            if (rest.size() > 1) next.push_back(rest);
        }
        factors = std::move(next);
    }
    return factors;
}

ZPoly ztrim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

ZPoly zmul(const ZPoly &a, const ZPoly &b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return ztrim(std::move(r));
}

ZPoly zmod_reduce(const ZPoly &a, const Int &m) {
    ZPoly r = a;
    for (auto &c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    return ztrim(std::move(r));
}

// Division with remainder modulo m; divisor must be monic.
std::pair<ZPoly, ZPoly> zdivmod_mod(const ZPoly &a, const ZPoly &b, const Int &m) {
    ZPoly rem = zmod_reduce(a, m), bb = ztrim(b);
    assert(!bb.empty() && bb.back() == 1);
    if (rem.size() < bb.size()) return {{}, rem};
    ZPoly quo(rem.size() - bb.size() + 1, Int(0));
    for (int i = (int)quo.size() - 1; i >= 0; --i) {
        if (rem.size() < bb.size() + i) continue;
        Int c = rem[bb.size() - 1 + i] % m;
        if (c < 0) c += m;
        if (c == 0) continue;
        quo[i] = c;
        for (size_t j = 0; j < bb.size(); ++j) {
            rem[i + j] = (rem[i + j] - c * bb[j]) % m;
            if (rem[i + j] < 0) rem[i + j] += m;
        }
    }
    return {ztrim(std::move(quo)), ztrim(std::move(rem))};
}

ZPoly zmul_mod(const ZPoly &a, const ZPoly &b, const Int &m) {
    return zmod_reduce(zmul(a, b), m);
}

ZPoly zadd_mod(const ZPoly &a, const ZPoly &b, const Int &m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zmod_reduce(r, m);
}

ZPoly zsub_mod(const ZPoly &a, const ZPoly &b, const Int &m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zmod_reduce(r, m);
}

// Hensel lift: given f = g h (mod m) with g, h monic and s g + t h = 1 (mod m),
// produce the corresponding data mod m^2.
struct HenselPair {
    ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly &f, const HenselPair &in, const Int &m) {
    Int m2 = m * m;
    ZPoly e = zsub_mod(zmod_reduce(f, m2), zmul_mod(in.g, in.h, m2), m2);
    auto [q, r] = zdivmod_mod(zmul_mod(in.s, e, m2), in.h, m2);
    ZPoly g1 = zadd_mod(zadd_mod(in.g, zmul_mod(in.t, e, m2), m2), zmul_mod(q, in.g, m2), m2);
    ZPoly h1 = zadd_mod(in.h, r, m2);
    ZPoly b = zsub_mod(zadd_mod(zmul_mod(in.s, g1, m2), zmul_mod(in.t, h1, m2), m2), ZPoly{Int(1)}, m2);
    auto [c, d] = zdivmod_mod(zmul_mod(in.s, b, m2), h1, m2);
    ZPoly s1 = zsub_mod(in.s, d, m2);
    ZPoly t1 = zsub_mod(zsub_mod(in.t, zmul_mod(in.t, b, m2), m2), zmul_mod(c, g1, m2), m2);
    return {g1, h1, s1, t1};
}

ZPoly lpoly_to_z(const LPoly &f) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = Int(f[i]);
    return r;
}

// Bezout s g + t h = 1 mod p for coprime g, h mod p.
std::pair<ZPoly, ZPoly> bezout_mod_p(const LPoly &g, const LPoly &h, long p) {
    // Extended Euclid over F_p.
    LPoly r0 = g, r1 = h;
    LPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = ldivmod(r0, r1, p);
        auto combine = [&](const LPoly &a0, const LPoly &a1) {
            // a0 - q*a1 mod p
            LPoly qa = lmul(q, a1, p);
            LPoly res(std::max(a0.size(), qa.size()), 0);
            for (size_t i = 0; i < a0.size(); ++i) res[i] = a0[i];
            for (size_t i = 0; i < qa.size(); ++i) res[i] = ((res[i] - qa[i]) % p + p) % p;
            return ltrim(std::move(res));
        };
        LPoly s2 = combine(s0, s1), t2 = combine(t0, t1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    assert(r0.size() == 1);
    long inv = mod_inv(r0[0], p);
    for (auto &c : s0) c = (long)((__int128)c * inv % p);
    for (auto &c : t0) c = (long)((__int128)c * inv % p);
    return {lpoly_to_z(s0), lpoly_to_z(t0)};
}

// Lift the factorization f = prod(factors) from mod p to mod p^(2^k) >= bound.
std::vector<ZPoly> hensel_lift_all(const ZPoly &f, std::vector<LPoly> lfactors, long p,
                                   const Int &bound, Int &modulus_out) {
    Int modulus(p);
    while (modulus < bound) modulus *= modulus;
    if (lfactors.size() == 1) {
        modulus_out = modulus;
        return {zmod_reduce(f, modulus)};
    }
    // Recursive split: first factor vs product of the rest.
    LPoly rest{1};
    for (size_t i = 1; i < lfactors.size(); ++i) rest = lmul(rest, lfactors[i], p);
    auto [s, t] = bezout_mod_p(lfactors[0], rest, p);
    HenselPair pair{lpoly_to_z(lfactors[0]), lpoly_to_z(rest), s, t};
    Int m(p);
    ZPoly ftarget = f;
    while (m < bound) {
        pair = hensel_step(ftarget, pair, m);
        m = m * m;
    }
    modulus_out = m;
    std::vector<ZPoly> out{pair.g};
    // Recurse on the cofactor with its modular factors.
    std::vector<LPoly> rest_factors(lfactors.begin() + 1, lfactors.end());
    Int sub_modulus;
    // pair.h is monic and congruent mod p to the product of rest_factors.
    std::vector<ZPoly> tail = hensel_lift_all(pair.h, rest_factors, p, bound, sub_modulus);
    for (auto &g : tail) out.push_back(zmod_reduce(g, m));
    return out;
}

Int sym_rep(Int c, const Int &m) {
    c %= m;
    if (c < 0) c += m;
    if (c * 2 > m) c -= m;
    return c;
}

ZPoly sym_poly(const ZPoly &f, const Int &m) {
    ZPoly r = f;
    for (auto &c : r) c = sym_rep(c, m);
    return ztrim(std::move(r));
}

// Exact division of integer polynomials; nullopt if not divisible.
std::optional<ZPoly> zdivide_exact(const ZPoly &a, const ZPoly &b) {
    ZPoly rem = ztrim(a), bb = ztrim(b);
    if (bb.empty()) return std::nullopt;
    if (rem.empty()) return ZPoly{};
    if (rem.size() < bb.size()) return std::nullopt;
    ZPoly quo(rem.size() - bb.size() + 1, Int(0));
    for (int i = (int)quo.size() - 1; i >= 0; --i) {
        Int lead = rem[bb.size() - 1 + i];
        if (lead == 0) continue;
        if (lead % bb.back() != 0) return std::nullopt;
        Int c = lead / bb.back();
        quo[i] = c;
        for (size_t j = 0; j < bb.size(); ++j) rem[i + j] -= c * bb[j];
    }
    for (const auto &c : rem)
        if (c != 0) return std::nullopt;
    return ztrim(std::move(quo));
}

Int norm2_sq(const ZPoly &f) {
    Int s(0);
    for (const auto &c : f) s += c * c;
    return s;
}

// Factor a monic squarefree integer polynomial into monic integer irreducibles.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly &f) {
    int n = (int)f.size() - 1;
    if (n <= 1) return {f};
    // Find a prime where f stays squarefree.
    long p = 3;
    for (;;) {
        // next odd prime
        while (true) {
            bool prime = p > 1;
            for (long d = 2; d * d <= p; ++d)
                if (p % d == 0) {
                    prime = false;
                    break;
                }
            if (prime) break;
            ++p;
        }
        LPoly fp = to_lpoly(f, p);
        if ((int)fp.size() - 1 == n) {
            LPoly g = lgcd(fp, lderiv(fp, p), p);
            if (g.size() == 1) break;
        }
        ++p;
    }
    LPoly fp = to_lpoly(f, p);
    std::vector<LPoly> lfactors = berlekamp(fp, p);
    std::sort(lfactors.begin(), lfactors.end());
    if (lfactors.size() == 1) return {f};

    // Mignotte-style bound on coefficients of monic factors: 2^n * ||f||_2.
    Int bound(1);
    Int nsq = norm2_sq(f);
    Int root(1);
    while (root * root < nsq) ++root; // ceil sqrt
    bound = root + 1;
    for (int i = 0; i < n; ++i) bound *= 2;
    bound = bound * 2 + 1;

    Int modulus;
    std::vector<ZPoly> lifted = hensel_lift_all(f, lfactors, p, bound, modulus);

    // Recombination by subset search over the lifted modular factors.
    std::vector<ZPoly> result;
    std::vector<ZPoly> pool = lifted;
    ZPoly remaining = f;
    size_t k = 1;
    while (remaining.size() > 1 && 2 * k <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand{Int(1)};
            for (size_t i : idx) cand = zmod_reduce(zmul(cand, pool[i]), modulus);
            cand = sym_poly(cand, modulus);
            auto quo = zdivide_exact(remaining, cand);
            if (quo) {
                result.push_back(cand);
                remaining = *quo;
                std::vector<ZPoly> next_pool;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_pool.push_back(pool[i]);
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // next k-subset
            int pos = (int)k - 1;
            while (pos >= 0 && idx[pos] == pool.size() - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++k;
    }
    if (remaining.size() > 1) result.push_back(remaining);
    return result;
}

} // namespace

std::vector<std::pair<QPoly, int>> factor(const QPoly &p) {
    QPoly f = trim(p);
    if ((int)f.size() - 1 < 1) return {};
    f = monic(f);
    // Squarefree decomposition over Q.
    std::vector<std::pair<QPoly, int>> squarefree_parts;
    QPoly cur = f;
    int mult = 1;
    while (degree(cur) >= 1) {
        QPoly g = gcd(cur, derivative(cur));
        QPoly sf = divmod(cur, g).first; // product of distinct irreducible factors of cur
        // factors of sf coprime to g have exact multiplicity `mult` in f
        QPoly exact = divmod(sf, gcd(sf, g)).first;
        if (degree(exact) >= 1) squarefree_parts.push_back({monic(exact), mult});
        cur = g;
        ++mult;
    }

    std::vector<std::pair<QPoly, int>> out;
    for (auto &[sf, m] : squarefree_parts) {
        // Convert monic rational sf to monic integer via y = d*x substitution:
        // with common denominator d, g(y) = d^n sf(y/d) is monic integral.
        Int den(1);
        for (const auto &c : sf) {
            Rat cc = c;
            cc.canonicalize();
            den = lcm(den, Int(cc.get_den()));
        }
        int n = degree(sf);
        ZPoly g(n + 1);
        // coefficient of y^i in d^n sf(y/d): sf_i * d^(n-i)
        for (int i = 0; i <= n; ++i) {
            Rat c = sf[i];
            for (int j = 0; j < n - i; ++j) c *= Rat(den);
            c.canonicalize();
            if (c.get_den() != 1) throw std::logic_error("monicization failed");
            g[i] = c.get_num();
        }
        std::vector<ZPoly> zfactors = factor_monic_squarefree(g);
        for (const auto &zf : zfactors) {
            // map back x = y/d and re-monicize
            QPoly q(zf.size());
            Rat dp(1);
            for (size_t i = 0; i < zf.size(); ++i) {
                q[i] = Rat(zf[i]) * dp;
                dp *= Rat(den);
            }
            out.push_back({monic(q), m});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (size_t i = a.first.size(); i-- > 0;)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    return out;
}

QPoly cyclotomic(unsigned n) {
    // x^n - 1 divided by all proper cyclotomic divisors.
    QPoly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = divmod(num, cyclotomic(d)).first;
    }
    return num;
}

unsigned totient(unsigned n) {
    unsigned r = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

} // namespace poly
} // namespace prymlab
