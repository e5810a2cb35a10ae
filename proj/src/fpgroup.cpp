#include "prymlab/fpgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prymlab {

namespace word {

Word reduce(Word w) {
    Word out;
    for (int l : w) {
        if (l == 0) throw std::invalid_argument("zero letter in word");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse(const Word &w) {
    Word out(w.rbegin(), w.rend());
    for (int &l : out) l = -l;
    return out;
}

Word concat(const Word &a, const Word &b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce(out);
}

Word substitute(const Word &w, const std::vector<Word> &images) {
    Word out;
    for (int l : w) {
        int idx = (l > 0 ? l : -l) - 1;
        if (idx >= (int)images.size()) throw std::invalid_argument("letter out of range");
        const Word &im = images[idx];
        if (l > 0)
            out.insert(out.end(), im.begin(), im.end());
        else {
            Word iv = inverse(im);
            out.insert(out.end(), iv.begin(), iv.end());
        }
    }
    return reduce(out);
}

std::vector<Int> exponent_vector(const Word &w, int num_gens) {
    std::vector<Int> v(num_gens, 0);
    for (int l : w) {
        int idx = (l > 0 ? l : -l) - 1;
        if (idx >= num_gens) throw std::invalid_argument("letter out of range");
        v[idx] += (l > 0 ? 1 : -1);
    }
    return v;
}

std::string to_string(const Word &w) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << "]";
    return os.str();
}

} // namespace word

namespace {

// [a_1,b_1]...[a_g,b_g] with a_i = 2i-1, b_i = 2i.
Word product_relator(int g) {
    Word r;
    for (int i = 1; i <= g; ++i) {
        int a = 2 * i - 1, b = 2 * i;
        r.push_back(a);
        r.push_back(b);
        r.push_back(-a);
        r.push_back(-b);
    }
    return r;
}

} // namespace

Presentation surface_presentation(int g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    Presentation p;
    p.kind = Presentation::Kind::Surface;
    p.genus = g;
    p.num_generators = 2 * g;
    if (g > 0) p.relators.push_back(product_relator(g));
    return p;
}

Presentation orbifold_presentation(int g, const std::vector<int> &m) {
    if (g < 0) throw std::invalid_argument("negative genus");
    for (int mi : m)
        if (mi < 2) throw SomeMultiplicityBelowTwo();
    Presentation p;
    p.kind = Presentation::Kind::Orbifold;
    p.genus = g;
    p.multiplicities = m;
    int n = (int)m.size();
    p.num_generators = 2 * g + n;
    Word rel = product_relator(g);
    for (int i = 1; i <= n; ++i) rel.push_back(2 * g + i);
    if (!rel.empty()) p.relators.push_back(rel);
    for (int i = 1; i <= n; ++i) {
        Word pw(m[i - 1], 2 * g + i);
        p.relators.push_back(pw);
    }
    return p;
}

std::pair<Rat, bool> hyperbolicity_index(int g, const std::vector<int> &m) {
    for (int mi : m)
        if (mi < 2) throw SomeMultiplicityBelowTwo();
    Rat v(2 * g - 2);
    for (int mi : m) v += Rat(mi - 1) / Rat(mi);
    return {v, v > 0};
}

namespace {

// Dehn's algorithm on a one-relator C'(1/6)-style surface presentation:
// repeatedly replace any subword that is strictly more than half of some
// cyclic rotation of r or r^{-1} by the inverse of the complement.
bool dehn_trivial(const Word &relator, Word w) {
    std::vector<Word> rotations;
    Word r = relator, ri = word::inverse(relator);
    int len = (int)r.size();
    for (int s = 0; s < len; ++s) {
        Word rot(r.begin() + s, r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + s);
        rotations.push_back(rot);
        Word roti(ri.begin() + s, ri.end());
        roti.insert(roti.end(), ri.begin(), ri.begin() + s);
        rotations.push_back(roti);
    }
    int half = len / 2; // need a match of length > half
    w = word::reduce(std::move(w));
    while (!w.empty()) {
        bool replaced = false;
        for (size_t pos = 0; pos < w.size() && !replaced; ++pos) {
            for (const Word &rot : rotations) {
                int k = 0;
                while (pos + k < w.size() && k < len && w[pos + k] == rot[k]) ++k;
                if (k <= half) continue;
                // prefix rot[0..k) = inverse of suffix rot[k..len) in the group
                Word repl = word::inverse(Word(rot.begin() + k, rot.end()));
                Word next(w.begin(), w.begin() + pos);
                next.insert(next.end(), repl.begin(), repl.end());
                next.insert(next.end(), w.begin() + pos + k, w.end());
                w = word::reduce(std::move(next));
                replaced = true;
                break;
            }
        }
        if (!replaced) return false;
    }
    return true;
}

// Faithful permutation model of a finite genus-0 triangle orbifold group.
// Returns generator images (one Perm per c_i) or throws Unsupported.
std::vector<Perm> spherical_triangle_model(const std::vector<int> &m) {
    int p = m[0], q = m[1], r = m[2];
    // spherical iff 1/p + 1/q + 1/r > 1
    Rat curv = Rat(1, p) + Rat(1, q) + Rat(1, r) - 1;
    if (curv <= 0) throw Unsupported("non-spherical genus-0 orbifold word problem");
    Rat order_r = Rat(2) / curv;
    if (order_r.get_den() != 1) throw std::logic_error("bad triangle group order");
    size_t target = order_r.get_num().get_ui();

    std::vector<int> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Perm> gens(3);
    if (sorted[0] == 2 && sorted[1] == 2) {
        int mm = sorted[2];
        if (mm == 2) {
            // Klein four group on 4 points
            gens[0] = Perm({1, 0, 3, 2});
            gens[1] = Perm({2, 3, 0, 1});
            gens[2] = Perm({3, 2, 1, 0});
        } else {
            // dihedral of order 2m on m points
            std::vector<int> rot(mm), refl(mm);
            for (int i = 0; i < mm; ++i) {
                rot[i] = (i + 1) % mm;
                refl[i] = (mm - i) % mm;
            }
            Perm rho(rot), sigma(refl);
            int k = (m[0] != 2) ? 0 : (m[1] != 2 ? 1 : 2);
            if (k == 0) { // (m,2,2): rho * sigma * (rho sigma)^{-1}
                gens = {rho, sigma, (rho * sigma).inverse()};
            } else if (k == 1) { // (2,m,2)
                gens = {sigma, rho, (sigma * rho).inverse()};
            } else { // (2,2,m): sigma * (sigma rho) * rho^{-1}
                gens = {sigma, sigma * rho, rho.inverse()};
            }
        }
    } else {
        // {2,3,3} -> A4, {2,3,4} -> S4 on 4 points; {2,3,5} -> A5 on 5 points
        int degree = (sorted[2] == 5) ? 5 : 4;
        std::vector<int> base(degree);
        std::iota(base.begin(), base.end(), 0);
        std::vector<Perm> all;
        std::vector<int> im = base;
        do {
            all.emplace_back(im);
        } while (std::next_permutation(im.begin(), im.end()));
        auto perm_order = [](const Perm &x) {
            Perm cur = x;
            int k = 1;
            while (!cur.is_identity()) {
                cur = cur * x;
                ++k;
            }
            return k;
        };
        bool found = false;
        for (const Perm &s1 : all) {
            if (perm_order(s1) != p) continue;
            for (const Perm &s2 : all) {
                if (perm_order(s2) != q) continue;
                Perm s3 = (s1 * s2).inverse();
                if (perm_order(s3) != r) continue;
                FiniteGroup grp = enumerate_group({s1, s2});
                if (grp.order() != target) continue;
                gens = {s1, s2, s3};
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) throw std::logic_error("no spherical triangle model found");
    }
    // certify: exact generator orders and total order match the group
    FiniteGroup grp = enumerate_group({gens[0], gens[1]});
    if (grp.order() != target) throw std::logic_error("triangle model has wrong order");
    for (int i = 0; i < 3; ++i)
        if (element_order(grp, grp.index_of(gens[i])) != m[i])
            throw std::logic_error("triangle model generator has wrong order");
    return gens;
}

} // namespace

bool word_problem(const Presentation &p, const Word &w) {
    Word red = word::reduce(w);
    if (p.kind == Presentation::Kind::Surface) {
        if (p.genus == 0) return true;
        if (p.genus == 1) {
            auto v = word::exponent_vector(red, p.num_generators);
            return std::all_of(v.begin(), v.end(), [](const Int &x) { return x == 0; });
        }
        return dehn_trivial(p.relators[0], red);
    }
    if (p.kind == Presentation::Kind::Orbifold) {
        if (p.multiplicities.empty()) return word_problem(surface_presentation(p.genus), red);
        if (p.genus != 0) throw Unsupported("positive-genus orbifold word problem");
        size_t n = p.multiplicities.size();
        if (n == 1) return true; // <c | c, c^m> is trivial
        if (n == 2) {
            // <c1, c2 | c1 c2, c1^m1, c2^m2> = Z/gcd(m1, m2) via c1 -> 1, c2 -> -1
            Int d = gcd(Int(p.multiplicities[0]), Int(p.multiplicities[1]));
            if (d == 1) return true;
            Int s = 0;
            for (int l : red) s += (std::abs(l) == 1) == (l > 0) ? 1 : -1;
            return s % d == 0;
        }
        if (n == 3) {
            auto gens = spherical_triangle_model(p.multiplicities);
            Perm acc = Perm::identity(gens[0].degree());
            for (int l : red) {
                int idx = std::abs(l) - 1;
                acc = acc * (l > 0 ? gens[idx] : gens[idx].inverse());
            }
            return acc.is_identity();
        }
        throw Unsupported("genus-0 orbifold with more than 3 cone points");
    }
    throw Unsupported("generic presentation word problem");
}

void verify_aut(const Presentation &p, const AutDatum &a) {
    if ((int)a.images.size() != p.num_generators ||
        (int)a.inverse_images.size() != p.num_generators)
        throw std::runtime_error("automorphism datum has wrong arity");
    for (int i = 1; i <= p.num_generators; ++i) {
        Word fwd = word::substitute(a.inverse_images[i - 1], a.images);
        Word bwd = word::substitute(a.images[i - 1], a.inverse_images);
        Word gen_inv{-i};
        if (!word_problem(p, word::concat(fwd, gen_inv)))
            throw std::runtime_error("automorphism " + a.name + ": images o inverse != id");
        if (!word_problem(p, word::concat(bwd, gen_inv)))
            throw std::runtime_error("automorphism " + a.name + ": inverse o images != id");
    }
    for (size_t r = 0; r < p.relators.size(); ++r)
        if (!word_problem(p, word::substitute(p.relators[r], a.images)))
            throw std::runtime_error("automorphism " + a.name + " breaks relator " +
                                     std::to_string(r));
}

AutDatum compose_aut(const AutDatum &a, const AutDatum &b) {
    AutDatum c;
    c.name = a.name + "*" + b.name;
    for (const Word &w : b.images) c.images.push_back(word::substitute(w, a.images));
    for (const Word &w : a.inverse_images)
        c.inverse_images.push_back(word::substitute(w, b.inverse_images));
    return c;
}

ZMat abelianized_matrix(const Presentation &p, const AutDatum &a) {
    int n = p.num_generators;
    ZMat m(n, n);
    for (int j = 0; j < n; ++j) {
        auto col = word::exponent_vector(a.images[j], n);
        for (int i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

std::vector<AutDatum> dehn_twist_basis(int g) {
    if (g < 1) throw std::invalid_argument("dehn_twist_basis needs genus >= 1");
    Presentation p = surface_presentation(g);
    auto identity_images = [&]() {
        std::vector<Word> im;
        for (int i = 1; i <= 2 * g; ++i) im.push_back(Word{i});
        return im;
    };
    std::vector<AutDatum> out;
    auto ai = [](int i) { return 2 * i - 1; };
    auto bi = [](int i) { return 2 * i; };

    for (int i = 1; i <= g; ++i) {
        AutDatum t;
        t.name = "ta" + std::to_string(i);
        t.images = identity_images();
        t.inverse_images = identity_images();
        t.images[bi(i) - 1] = Word{bi(i), ai(i)};
        t.inverse_images[bi(i) - 1] = Word{bi(i), -ai(i)};
        out.push_back(std::move(t));
    }
    for (int i = 1; i <= std::min(g, 2); ++i) {
        AutDatum t;
        t.name = "tb" + std::to_string(i);
        t.images = identity_images();
        t.inverse_images = identity_images();
        t.images[ai(i) - 1] = Word{ai(i), bi(i)};
        t.inverse_images[ai(i) - 1] = Word{ai(i), -bi(i)};
        out.push_back(std::move(t));
    }
    for (int i = 1; i + 1 <= g; ++i) {
        int a1 = ai(i), b1 = bi(i), a2 = ai(i + 1), b2 = bi(i + 1);
        Word c{-b1, a2, -b2, -a2, b1, a1, -b1, -a1};
        Word cinv = word::inverse(c);
        AutDatum t;
        t.name = "tc" + std::to_string(i);
        t.images = identity_images();
        t.inverse_images = identity_images();
        t.images[a1 - 1] = word::concat(c, Word{a1});
        t.images[a2 - 1] = word::concat(word::concat(Word{b1}, c), Word{-b1, a2});
        t.inverse_images[a1 - 1] = word::concat(cinv, Word{a1});
        t.inverse_images[a2 - 1] = word::concat(word::concat(Word{b1}, cinv), Word{-b1, a2});
        out.push_back(std::move(t));
    }
    for (const AutDatum &t : out) verify_aut(p, t);
    return out;
}

int eval_word(const FiniteGroup &g, const std::vector<int> &images, const Word &w) {
    int acc = 0;
    for (int l : w) {
        int idx = std::abs(l) - 1;
        if (idx >= (int)images.size()) throw std::invalid_argument("letter out of range");
        int e = images[idx];
        acc = g.mul(acc, l > 0 ? e : g.inverse_of(e));
    }
    return acc;
}

GroupHom validate_hom(const Presentation &p, const FiniteGroup &g,
                      const std::vector<int> &images, bool require_surjective) {
    if ((int)images.size() != p.num_generators)
        throw std::invalid_argument("one image per generator required");
    for (size_t r = 0; r < p.relators.size(); ++r)
        if (eval_word(g, images, p.relators[r]) != 0) throw RelatorNotKilled((int)r);
    GroupHom hom;
    hom.target = &g;
    hom.images = images;
    hom.surjective = subgroup_closure(g, images).size() == g.order();
    if (require_surjective && !hom.surjective) throw NotSurjective();
    return hom;
}

bool in_stab(const Presentation &p, const AutDatum &a, const GroupHom &r) {
    for (int i = 0; i < p.num_generators; ++i)
        if (eval_word(*r.target, r.images, a.images[i]) != r.images[i]) return false;
    return true;
}

} // namespace prymlab
