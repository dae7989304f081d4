#include "triality/automorphism.hpp"

#include <numeric>

namespace triality {

GroupAutomorphism GroupAutomorphism::operator*(const GroupAutomorphism& o) const {
    GroupAutomorphism r;
    r.image.resize(o.image.size());
    for (std::size_t x = 0; x < o.image.size(); ++x) r.image[x] = image[o.image[x]];
    return r;
}

GroupAutomorphism GroupAutomorphism::inverse() const {
    GroupAutomorphism r;
    r.image.resize(image.size());
    for (std::size_t x = 0; x < image.size(); ++x) r.image[image[x]] = static_cast<std::uint8_t>(x);
    return r;
}

bool GroupAutomorphism::is_identity() const {
    for (std::size_t x = 0; x < image.size(); ++x)
        if (image[x] != x) return false;
    return true;
}

int GroupAutomorphism::order() const {
    GroupAutomorphism p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++k;
    }
    return k;
}

ElementSet GroupAutomorphism::apply(const ElementSet& s) const {
    ElementSet r;
    for (int x : s.elements()) r.set(image[x]);
    return r;
}

bool GroupAutomorphism::is_automorphism_of(const GroupTable& g) const {
    if (static_cast<int>(image.size()) != g.size()) return false;
    std::vector<bool> hit(image.size(), false);
    for (auto y : image) {
        if (hit[y]) return false;
        hit[y] = true;
    }
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            if (image[g.mul(a, b)] != g.mul(image[a], image[b])) return false;
    return true;
}

GroupAutomorphism GroupAutomorphism::identity(const GroupTable& g) {
    GroupAutomorphism r;
    r.image.resize(g.size());
    std::iota(r.image.begin(), r.image.end(), 0);
    return r;
}

GroupAutomorphism conjugation_automorphism(const GroupTable& g, const Matrix4& m) {
    Matrix4 minv = m.inverse();
    GroupAutomorphism r;
    r.image.resize(g.size());
    for (int x = 0; x < g.size(); ++x)
        r.image[x] = static_cast<std::uint8_t>(g.index_of(from_matrix(m * to_matrix(g.element(x)) * minv)));
    return r;
}

GroupAutomorphism inner_automorphism(const GroupTable& g, int w) {
    GroupAutomorphism r;
    r.image.resize(g.size());
    int wi = g.inv(w);
    for (int x = 0; x < g.size(); ++x) r.image[x] = static_cast<std::uint8_t>(g.mul(g.mul(w, x), wi));
    return r;
}

GroupAutomorphism psi_automorphism(const GroupTable& g) {
    GroupAutomorphism r;
    r.image.resize(g.size());
    for (int x = 0; x < g.size(); ++x) r.image[x] = static_cast<std::uint8_t>(g.index_of(psi(g.element(x))));
    return r;
}

GroupAutomorphism mu_tilde() {
    static const GroupAutomorphism a = conjugation_automorphism(wd4(), mu_matrix());
    return a;
}

GroupAutomorphism rho_tilde() {
    static const GroupAutomorphism a = conjugation_automorphism(wd4(), rho_matrix());
    return a;
}

GroupAutomorphism nu_tilde() {
    static const GroupAutomorphism a = conjugation_automorphism(wd4(), nu_matrix());
    return a;
}

ElementSet fixed_subgroup(const GroupTable& g, const GroupAutomorphism& a) {
    ElementSet s;
    for (int x = 0; x < g.size(); ++x)
        if (a(x) == x) s.set(x);
    return s;
}

}  // namespace triality
