#include "triality/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>

namespace triality {

int ElementSet::count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]);
}

bool ElementSet::subset_of(const ElementSet& o) const {
    for (int k = 0; k < 3; ++k)
        if (w[k] & ~o.w[k]) return false;
    return true;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
    ElementSet r;
    for (int k = 0; k < 3; ++k) r.w[k] = w[k] & o.w[k];
    return r;
}

std::vector<int> ElementSet::elements() const {
    std::vector<int> out;
    for (int k = 0; k < 3; ++k) {
        std::uint64_t x = w[k];
        while (x) {
            int b = std::countr_zero(x);
            out.push_back(k * 64 + b);
            x &= x - 1;
        }
    }
    return out;
}

ElementSet make_set(const std::vector<int>& elements) {
    ElementSet s;
    for (int x : elements) s.set(x);
    return s;
}

ElementSet generate(const GroupTable& g, const std::vector<int>& generators) {
    ElementSet s;
    s.set(g.identity());
    std::vector<int> queue{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int gen : generators) {
            int y = g.mul(x, gen);
            if (!s.test(y)) {
                s.set(y);
                queue.push_back(y);
            }
        }
    }
    return s;
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
    if (!s.test(g.identity())) return false;
    auto el = s.elements();
    for (int a : el) {
        if (!s.test(g.inv(a))) return false;
        for (int b : el)
            if (!s.test(g.mul(a, b))) return false;
    }
    return true;
}

ElementSet conjugate_set(const GroupTable& g, const ElementSet& s, int x) {
    ElementSet r;
    int xi = g.inv(x);
    for (int a : s.elements()) r.set(g.mul(g.mul(x, a), xi));
    return r;
}

std::string AbstractFingerprint::str() const {
    std::ostringstream os;
    os << "order=" << order << " abelian=" << abelian << " exponent=" << exponent << " derived=" << derived_order << " orders={";
    bool first = true;
    for (auto [o, c] : order_histogram) {
        os << (first ? "" : ",") << o << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

ElementSet derived_subgroup(const GroupTable& g, const ElementSet& s) {
    std::vector<int> comm;
    auto el = s.elements();
    ElementSet seen;
    for (int a : el)
        for (int b : el) {
            int c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            if (!seen.test(c)) {
                seen.set(c);
                comm.push_back(c);
            }
        }
    return generate(g, comm);
}

AbstractFingerprint fingerprint(const GroupTable& g, const ElementSet& s) {
    AbstractFingerprint f;
    auto el = s.elements();
    f.order = static_cast<int>(el.size());
    f.abelian = true;
    for (int a : el) {
        int o = g.order_of(a);
        ++f.order_histogram[o];
        f.exponent = std::lcm(f.exponent, o);
        for (int b : el)
            if (g.mul(a, b) != g.mul(b, a)) f.abelian = false;
    }
    f.derived_order = derived_subgroup(g, s).count();
    return f;
}

ElementSet centralizer(const GroupTable& g, const ElementSet& s) {
    ElementSet r;
    auto el = s.elements();
    for (int x = 0; x < g.size(); ++x)
        if (std::all_of(el.begin(), el.end(), [&](int a) { return g.mul(x, a) == g.mul(a, x); })) r.set(x);
    return r;
}

ElementSet normalizer(const GroupTable& g, const ElementSet& s) {
    ElementSet r;
    for (int x = 0; x < g.size(); ++x)
        if (conjugate_set(g, s, x) == s) r.set(x);
    return r;
}

bool is_dihedral(const GroupTable& g, const ElementSet& s) {
    // Dihedral of order 2n (n >= 3): an element r of order n and an
    // involution t outside <r> with t r t^{-1} = r^{-1}, generating s.
    const int order = s.count();
    if (order < 6 || order % 2) return false;
    const int n = order / 2;
    auto el = s.elements();
    for (int r : el) {
        if (g.order_of(r) != n) continue;
        ElementSet cyc = generate(g, {r});
        for (int t : el) {
            if (cyc.test(t) || g.order_of(t) != 2) continue;
            if (g.mul(g.mul(t, r), g.inv(t)) == g.inv(r) && generate(g, {r, t}) == s) return true;
        }
    }
    return false;
}

bool is_quaternion8(const GroupTable& g, const ElementSet& s) {
    if (s.count() != 8) return false;
    auto f = fingerprint(g, s);
    return f.order_histogram == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}};
}

ElementSet sylow2(const GroupTable& g, const ElementSet& s) {
    int order = s.count(), p2 = 1;
    while (order % 2 == 0) {
        order /= 2;
        p2 *= 2;
    }
    // Grow a 2-subgroup greedily by 2-elements normalising it.
    ElementSet p = make_set({g.identity()});
    auto el = s.elements();
    bool grew = true;
    while (p.count() < p2 && grew) {
        grew = false;
        for (int x : el) {
            if (p.test(x)) continue;
            int o = g.order_of(x);
            if (o & (o - 1)) continue;
            std::vector<int> gens = p.elements();
            gens.push_back(x);
            ElementSet q = generate(g, gens);
            int c = q.count();
            if ((c & (c - 1)) == 0 && c > p.count()) {
                p = q;
                grew = true;
                break;
            }
        }
    }
    return p;
}

}  // namespace triality
