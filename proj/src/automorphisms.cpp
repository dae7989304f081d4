#include "triality/automorphisms.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace triality {

namespace {

int sorted_index(const std::vector<GroupAutomorphism>& v, const GroupAutomorphism& a) {
    auto it = std::lower_bound(v.begin(), v.end(), a);
    if (it == v.end() || *it != a) return -1;
    return static_cast<int>(it - v.begin());
}

AutomorphismGroup build_automorphism_group() {
    const GroupTable& g = wd4();
    AutomorphismGroup out;

    std::set<GroupAutomorphism> inner;
    for (int w = 0; w < g.size(); ++w) inner.insert(inner_automorphism(g, w));
    out.inner.assign(inner.begin(), inner.end());

    std::vector<GroupAutomorphism> gens;
    for (int w : g.generators()) gens.push_back(inner_automorphism(g, w));
    gens.push_back(mu_tilde());
    gens.push_back(nu_tilde());
    gens.push_back(psi_automorphism(g));

    std::set<GroupAutomorphism> seen{GroupAutomorphism::identity(g)};
    std::deque<GroupAutomorphism> queue{GroupAutomorphism::identity(g)};
    while (!queue.empty()) {
        GroupAutomorphism a = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            GroupAutomorphism b = s * a;
            if (seen.insert(b).second) queue.push_back(b);
        }
    }
    out.elements.assign(seen.begin(), seen.end());

    // Inn is normal, so left cosets are classes of the quotient.
    out.outer_class.assign(out.elements.size(), -1);
    std::vector<int> reps;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        if (out.outer_class[i] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(i));
        for (const auto& inn : out.inner) out.outer_class[sorted_index(out.elements, out.elements[i] * inn)] = id;
    }
    for (int r : reps) {
        GroupAutomorphism p = out.elements[r];
        int k = 1;
        while (!out.is_inner(p)) {
            p = p * out.elements[r];
            ++k;
        }
        ++out.outer_order_histogram[k];
    }
    return out;
}

}  // namespace

int AutomorphismGroup::index_of(const GroupAutomorphism& a) const { return sorted_index(elements, a); }

bool AutomorphismGroup::is_inner(const GroupAutomorphism& a) const { return sorted_index(inner, a) >= 0; }

bool AutomorphismGroup::outer_is_s3_x_c2() const {
    // Among groups of order 12 only Σ3 × C2 has seven involutions.
    return outer_order() == 12 && outer_order_histogram == std::map<int, int>{{1, 1}, {2, 7}, {3, 2}, {6, 2}};
}

bool AutomorphismGroup::commute_mod_inner(const GroupAutomorphism& a, const GroupAutomorphism& b) const {
    return is_inner(a * b * (b * a).inverse());
}

const AutomorphismGroup& automorphism_group() {
    static const AutomorphismGroup g = build_automorphism_group();
    return g;
}

int TrialitarianCensus::class_of(const GroupAutomorphism& a) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int i : classes[c])
            if (automorphisms[i] == a) return static_cast<int>(c);
    return -1;
}

std::vector<int> TrialitarianCensus::class_sizes() const {
    std::vector<int> out;
    for (const auto& c : classes) out.push_back(static_cast<int>(c.size()));
    return out;
}

const TrialitarianCensus& trialitarian_census() {
    static const TrialitarianCensus census = [] {
        const GroupTable& g = wd4();
        const Matrix4 mu = mu_matrix();
        const Matrix4 mu2 = mu * mu;
        const Matrix4 one = Matrix4::identity();
        TrialitarianCensus c;
        for (const Matrix4& coset : {mu, mu2}) {
            for (const auto& w : g.elements()) {
                Matrix4 u = coset * to_matrix(w);
                if (u.pow(3) != one) continue;
                c.matrices.push_back(u);
                c.automorphisms.push_back(conjugation_automorphism(g, u));
            }
        }
        const auto& aut = automorphism_group();
        std::vector<int> cls(c.matrices.size(), -1);
        c.closed_under_conjugation = true;
        for (std::size_t i = 0; i < c.matrices.size(); ++i) {
            if (cls[i] >= 0) continue;
            std::set<GroupAutomorphism> orbit;
            for (const auto& b : aut.elements) orbit.insert(b * c.automorphisms[i] * b.inverse());
            std::vector<int> members;
            for (std::size_t j = 0; j < c.matrices.size(); ++j)
                if (orbit.count(c.automorphisms[j])) {
                    cls[j] = static_cast<int>(c.classes.size());
                    members.push_back(static_cast<int>(j));
                }
            if (members.size() != orbit.size()) c.closed_under_conjugation = false;
            c.classes.push_back(members);
        }
        std::stable_sort(c.classes.begin(), c.classes.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        return c;
    }();
    return census;
}

FixedSubgroupReport analyze_fixed_subgroup(const GroupAutomorphism& a) {
    const GroupTable& g = wd4();
    FixedSubgroupReport r;
    r.group = fixed_subgroup(g, a);
    r.abstract = fingerprint(g, r.group);
    r.dihedral = is_dihedral(g, r.group);
    for (int x : r.group.elements())
        if (g.order_of(x) == 2) ++r.involutions;
    r.sylow2_is_q8 = is_quaternion8(g, sylow2(g, r.group));
    return r;
}

G2PlaneReport g2_plane_analysis() {
    const GroupTable& g = wd4();
    const Matrix4 mu = mu_matrix();
    G2PlaneReport r;
    r.v1 = Vector4::basis(0) + Vector4::basis(2);
    r.v2 = Vector4::basis(1) - Vector4::basis(2);
    r.v1_fixed = mu * r.v1 == r.v1;
    r.v2_fixed = mu * r.v2 == r.v2;

    // v1, v2 restricted to the first two coordinates form the identity, so a
    // vector of the plane has coordinates (w_1, w_2) in this basis.
    auto coords = [&](const Vector4& w, std::array<Rational, 2>& out) {
        out = {w.c[0], w.c[1]};
        return r.v1 * out[0] + r.v2 * out[1] == w;
    };

    ElementSet fix = fixed_subgroup(g, mu_tilde());
    r.fix_order = fix.count();
    r.plane_invariant = true;
    std::set<std::array<Rational, 4>> restricted;
    std::set<Vector4> orbit;
    for (int x : fix.elements()) {
        Matrix4 m = to_matrix(g.element(x));
        Vector4 a = m * r.v1, b = m * r.v2;
        orbit.insert(a);
        orbit.insert(b);
        std::array<Rational, 2> ca, cb;
        if (!coords(a, ca) || !coords(b, cb)) {
            r.plane_invariant = false;
            continue;
        }
        std::array<Rational, 4> q{ca[0], cb[0], ca[1], cb[1]};
        if (restricted.insert(q).second && q[0] * q[3] - q[1] * q[2] == 1) ++r.rotations;
    }
    r.restricted_order = static_cast<int>(restricted.size());
    r.faithful = r.plane_invariant && r.restricted_order == r.fix_order;
    // A faithful copy of a dihedral group whose rotations form the index-2
    // subgroup of determinant one.
    r.dihedral = r.faithful && is_dihedral(g, fix) && 2 * r.rotations == r.restricted_order;
    r.orbit.assign(orbit.begin(), orbit.end());
    return r;
}

std::vector<int> triality_invariant_classes(const Atlas& atlas) {
    std::vector<int> out;
    auto t = atlas.triality_on_classes();
    for (std::size_t c = 0; c < t.size(); ++c)
        if (t[c] == static_cast<int>(c)) out.push_back(static_cast<int>(c));
    return out;
}

std::vector<int> fixed_triple_classes(const Atlas& atlas) {
    std::set<int> hit;
    for (const auto& a : trialitarian_census().automorphisms) {
        ElementSet fix = fixed_subgroup(atlas.group(), a);
        for (const auto& s : atlas.subgroups())
            if (s.subset_of(fix)) hit.insert(atlas.class_of(s));
    }
    std::vector<int> out;
    for (int c : triality_invariant_classes(atlas))
        if (hit.count(c)) out.push_back(c);
    return out;
}

}  // namespace triality
