#include "prymlab/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace prymlab {

Perm::Perm(std::vector<int> imgs) : images(std::move(imgs)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= (int)images.size() || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    Perm p;
    p.images = std::move(im);
    return p;
}

Perm Perm::inverse() const {
    Perm r;
    r.images.resize(images.size());
    for (size_t i = 0; i < images.size(); ++i) r.images[images[i]] = (int)i;
    return r;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < images.size(); ++i)
        if (images[i] != (int)i) return false;
    return true;
}

Perm operator*(const Perm &a, const Perm &b) {
    Perm r;
    r.images.resize(a.images.size());
    for (size_t i = 0; i < b.images.size(); ++i) r.images[i] = a.images[b.images[i]];
    return r;
}

std::string cycle_notation(const Perm &p) {
    std::ostringstream os;
    std::vector<bool> seen(p.images.size(), false);
    bool any = false;
    for (size_t i = 0; i < p.images.size(); ++i) {
        if (seen[i] || p.images[i] == (int)i) continue;
        os << "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            os << j;
            first = false;
            j = p.images[j];
        }
        os << ")";
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

int FiniteGroup::index_of(const Perm &p) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return (int)i;
    throw std::invalid_argument("permutation not in group");
}

bool FiniteGroup::is_abelian() const {
    for (size_t a = 0; a < elements.size(); ++a)
        for (size_t b = a + 1; b < elements.size(); ++b)
            if (mult[a][b] != mult[b][a]) return false;
    return true;
}

FiniteGroup enumerate_group(const std::vector<Perm> &gens, size_t cap) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    int degree = gens[0].degree();
    for (const auto &g : gens)
        if (g.degree() != degree) throw std::invalid_argument("generator degrees differ");

    FiniteGroup g;
    g.degree = degree;
    g.generators = gens;

    std::map<std::vector<int>, int> index;
    Perm id = Perm::identity(degree);
    g.elements.push_back(id);
    index[id.images] = 0;
    for (size_t head = 0; head < g.elements.size(); ++head) {
        for (const auto &gen : gens) {
            Perm nxt = g.elements[head] * gen;
            if (index.count(nxt.images)) continue;
            if (g.elements.size() >= cap) throw CapExceeded(cap);
            index[nxt.images] = (int)g.elements.size();
            g.elements.push_back(nxt);
        }
    }

    size_t n = g.elements.size();
    g.mult.assign(n, std::vector<int>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            g.mult[a][b] = index.at((g.elements[a] * g.elements[b]).images);
    g.inv.resize(n);
    for (size_t a = 0; a < n; ++a) g.inv[a] = index.at(g.elements[a].inverse().images);

    // Conjugacy classes as orbits under conjugation, in index order.
    std::vector<bool> assigned(n, false);
    for (size_t x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        std::vector<int> cls{(int)x};
        assigned[x] = true;
        for (size_t head = 0; head < cls.size(); ++head)
            for (size_t a = 0; a < n; ++a) {
                int y = g.mult[g.mult[a][cls[head]]][g.inv[a]];
                if (!assigned[y]) {
                    assigned[y] = true;
                    cls.push_back(y);
                }
            }
        std::sort(cls.begin(), cls.end());
        g.conjugacy_classes.push_back(std::move(cls));
    }
    return g;
}

int element_order(const FiniteGroup &g, int x) {
    int k = 1, cur = x;
    while (cur != 0) {
        cur = g.mul(cur, x);
        ++k;
    }
    return k;
}

std::vector<int> subgroup_closure(const FiniteGroup &g, const std::vector<int> &seed) {
    std::vector<bool> in(g.order(), false);
    std::vector<int> members{0};
    in[0] = true;
    for (int s : seed)
        if (!in[s]) {
            in[s] = true;
            members.push_back(s);
        }
    for (size_t head = 0; head < members.size(); ++head)
        for (int s : seed) {
            int y = g.mul(members[head], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace prymlab
