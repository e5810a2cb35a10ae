#include "prymlab/criteria.hpp"

#include "prymlab/linalg.hpp"
#include "prymlab/poly.hpp"

#include <algorithm>
#include <map>

namespace prymlab {

std::pair<size_t, bool> evenness_check(const ExtensionDatum &d) {
    Presentation p = orbifold_presentation(d.genus, d.multiplicities);
    if ((int)d.action.size() != p.num_generators)
        throw std::invalid_argument("one action matrix per orbifold generator required");
    size_t dim = d.dim;
    for (const QMat &m : d.action) {
        if (m.rows() != m.cols() || m.rows() != dim)
            throw std::invalid_argument("action matrices must be square of the stated size");
    }
    std::vector<QMat> inverses;
    for (const QMat &m : d.action) {
        auto inv = inverse(m);
        if (!inv) throw std::invalid_argument("action matrix not invertible");
        inverses.push_back(*inv);
    }
    for (size_t ri = 0; ri < p.relators.size(); ++ri) {
        QMat prod = QMat::identity(dim);
        for (int l : p.relators[ri])
            prod = prod * (l > 0 ? d.action[l - 1] : inverses[-l - 1]);
        if (!prod.is_identity()) throw RelationViolated(ri);
    }
    size_t inv_dim;
    if (d.action.empty()) {
        inv_dim = dim;
    } else {
        std::vector<QMat> diffs;
        for (const QMat &m : d.action) diffs.push_back(m - QMat::identity(dim));
        inv_dim = common_kernel_dim(diffs);
    }
    return {inv_dim, inv_dim % 2 == 0};
}

bool quasi_unipotent_check(const QMat &m) {
    auto cp = char_poly(m);
    for (const auto &[f, mult] : poly::factor(cp)) {
        int d = poly::degree(f);
        bool cyclo = false;
        for (unsigned n = 1; n <= 4 * (unsigned)d * (unsigned)d + 4 && !cyclo; ++n)
            if (poly::totient(n) == (unsigned)d && poly::equal(poly::cyclotomic(n), f))
                cyclo = true;
        if (!cyclo) return false;
    }
    return true;
}

namespace {

// First subset (by size, then lexicographic) of `pool` whose closure is G.
std::optional<std::vector<size_t>> generating_subset(const FiniteGroup &g,
                                                     const std::vector<int> &pool,
                                                     size_t max_size) {
    for (size_t k = 1; k <= max_size && k <= pool.size(); ++k) {
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::vector<int> seed;
            for (size_t i : idx) seed.push_back(pool[i]);
            if (subgroup_closure(g, seed).size() == g.order()) return idx;
            // next combination
            size_t i = k;
            while (i-- > 0) {
                if (idx[i] + (k - i) < pool.size()) {
                    ++idx[i];
                    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_size;
            }
        }
    next_size:;
    }
    return std::nullopt;
}

} // namespace

RedundancyResult redundancy_witness(int g, const GroupHom &r, std::uint64_t seed) {
    const FiniteGroup &grp = *r.target;
    RedundancyResult out;

    std::vector<Word> pool_words;
    std::vector<int> pool_images;
    for (size_t i = 1; i <= r.images.size(); ++i) {
        pool_words.push_back(Word{(int)i});
        pool_images.push_back(r.images[i - 1]);
    }
    // bounded pool of seeded random words in the generators
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (std::uint64_t)(state >> 33);
    };
    int ngen = (int)r.images.size();
    for (int t = 0; t < 40; ++t) {
        size_t len = 1 + next() % 6;
        Word w;
        for (size_t i = 0; i < len; ++i) {
            int gen = 1 + (int)(next() % ngen);
            w.push_back(next() % 2 ? gen : -gen);
        }
        w = word::reduce(std::move(w));
        if (w.empty()) continue;
        pool_words.push_back(w);
        pool_images.push_back(eval_word(grp, r.images, w));
    }

    if (g >= 2) {
        auto witness = generating_subset(grp, pool_images, (size_t)g - 1);
        if (witness) {
            out.found = true;
            for (size_t i : *witness) {
                out.witness_words.push_back(pool_words[i]);
                out.witness_elements.push_back(pool_images[i]);
            }
        }
    }
    // exact minimal generator count for small groups
    if (grp.order() <= 64) {
        std::vector<int> all;
        for (size_t i = 1; i < grp.order(); ++i) all.push_back((int)i);
        for (size_t k = 1; k <= 3; ++k) {
            if (generating_subset(grp, all, k)) {
                out.exact = true;
                out.min_generators = k;
                break;
            }
        }
        if (grp.order() == 1) {
            out.exact = true;
            out.min_generators = 0;
        }
    }
    return out;
}

std::optional<CoverSearchResult> torsion_free_cover_search(
    int g, const std::vector<int> &m, const std::vector<CatalogEntry> &catalog,
    size_t budget, size_t cap) {
    Presentation p = orbifold_presentation(g, m);
    size_t examined = 0;
    for (const CatalogEntry &entry : catalog) {
        std::vector<Perm> gens;
        for (const auto &im : entry.generators) gens.emplace_back(im);
        FiniteGroup grp;
        try {
            grp = enumerate_group(gens, cap);
        } catch (const CapExceeded &) {
            continue;
        }
        // candidate lists: anything for the alpha/beta handle generators,
        // exact-order elements for the torsion generators
        std::vector<std::vector<int>> candidates(p.num_generators);
        for (int i = 0; i < 2 * g; ++i)
            for (size_t e = 0; e < grp.order(); ++e) candidates[i].push_back((int)e);
        bool feasible = true;
        for (size_t i = 0; i < m.size(); ++i) {
            for (size_t e = 0; e < grp.order(); ++e)
                if (element_order(grp, (int)e) == m[i]) candidates[2 * g + i].push_back((int)e);
            if (candidates[2 * g + i].empty()) feasible = false;
        }
        if (!feasible || p.num_generators == 0) continue;

        std::vector<size_t> odo(p.num_generators, 0);
        for (;;) {
            if (++examined > budget) throw BudgetExceeded(budget);
            std::vector<int> images(p.num_generators);
            for (int i = 0; i < p.num_generators; ++i) images[i] = candidates[i][odo[i]];
            bool ok = true;
            for (const Word &rel : p.relators)
                if (eval_word(grp, images, rel) != 0) {
                    ok = false;
                    break;
                }
            if (ok && subgroup_closure(grp, images).size() == grp.order()) {
                auto [ind, hyp] = hyperbolicity_index(g, m);
                Rat two_h_minus_2 = Rat((long)grp.order()) * ind;
                Rat h = (two_h_minus_2 + 2) / 2;
                if (h.get_den() != 1 || h < 0)
                    throw std::logic_error("kernel genus formula gave a non-integer");
                CoverSearchResult res;
                res.group_name = entry.name;
                res.images = images;
                res.kernel_genus = h.get_num();
                return res;
            }
            int i = p.num_generators;
            while (i-- > 0) {
                if (++odo[i] < candidates[i].size()) break;
                odo[i] = 0;
                if (i == 0) goto next_group;
            }
        }
    next_group:;
    }
    return std::nullopt;
}

namespace {

// squarefree integer representative of the square class of a rational
Int square_class(const Rat &r) {
    Int n = r.get_num() * r.get_den();
    Int out = n < 0 ? Int(-1) : Int(1);
    n = abs(n);
    for (Int d(2); d * d <= n; ++d) {
        int count = 0;
        while (n % d == 0) {
            n /= d;
            ++count;
        }
        if (count % 2 == 1) out *= d;
    }
    return out * n;
}

std::vector<Int> odd_prime_divisors(Int n) {
    std::vector<Int> out;
    n = abs(n);
    while (n % 2 == 0) n /= 2;
    for (Int d(3); d * d <= n; d += 2)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

int legendre(Int u, const Int &p) {
    u %= p;
    if (u < 0) u += p;
    if (u == 0) return 0;
    Int e = (p - 1) / 2, base = u, acc(1);
    while (e > 0) {
        if (e % 2 == 1) acc = acc * base % p;
        base = base * base % p;
        e /= 2;
    }
    return acc == 1 ? 1 : -1;
}

int hilbert_odd(Int a, Int b, const Int &p) {
    int alpha = 0, beta = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    while (b % p == 0) {
        b /= p;
        ++beta;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && (p - 1) / 2 % 2 == 1) s = -s;
    if (beta & 1) s *= legendre(a, p);
    if (alpha & 1) s *= legendre(b, p);
    return s;
}

int hilbert_two(Int a, Int b) {
    int alpha = 0, beta = 0;
    while (a % 2 == 0) {
        a /= 2;
        ++alpha;
    }
    while (b % 2 == 0) {
        b /= 2;
        ++beta;
    }
    auto eps = [](const Int &u) { return (int)mpz_class(((u - 1) / 2) % 2 + 2).get_si() % 2; };
    auto omega = [](const Int &u) { return (int)mpz_class(((u * u - 1) / 8) % 2 + 2).get_si() % 2; };
    int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return e % 2 == 0 ? 1 : -1;
}

} // namespace

bool quaternion_is_division(const QuaternionDatum &q) {
    if (q.a == 0 || q.b == 0) throw std::invalid_argument("quaternion parameters must be nonzero");
    Int a = square_class(q.a), b = square_class(q.b);
    if (a == 1 || b == 1) return false; // the conic has an obvious point
    if (a < 0 && b < 0) return true;    // no real point
    if (hilbert_two(a, b) == -1) return true;
    std::vector<Int> primes = odd_prime_divisors(a);
    for (const Int &p : odd_prime_divisors(b))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    for (const Int &p : primes)
        if (hilbert_odd(a, b, p) == -1) return true;
    return false;
}

bool quaternion_split_search(const QuaternionDatum &q, long height) {
    for (long x = 0; x <= height; ++x)
        for (long y = 0; y <= height; ++y) {
            if (x == 0 && y == 0) continue;
            Rat s = q.a * Rat(x * x) + q.b * Rat(y * y);
            if (s < 0) continue;
            Int num = s.get_num(), den = s.get_den();
            if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t()))
                return true;
        }
    return false;
}

} // namespace prymlab
