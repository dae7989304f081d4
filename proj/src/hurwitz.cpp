#include "triality/hurwitz.hpp"

#include <algorithm>
#include <sstream>

namespace triality {

Quaternion Quaternion::one() { return unit(0); }

Quaternion Quaternion::unit(int i) {
    Quaternion q;
    q.c[i] = 1;
    return q;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    const auto& [a1, b1, c1, d1] = c;
    const auto& [a2, b2, c2, d2] = o.c;
    Quaternion r;
    r.c[0] = a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2;
    r.c[1] = a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2;
    r.c[2] = a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2;
    r.c[3] = a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2;
    return r;
}

Quaternion Quaternion::operator-() const {
    Quaternion r;
    for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
    return r;
}

Quaternion Quaternion::conjugate() const {
    Quaternion r = -*this;
    r.c[0] = c[0];
    return r;
}

Rational Quaternion::norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

Quaternion Quaternion::inverse() const {
    Quaternion r = conjugate();
    Rational n = norm();
    for (auto& x : r.c) x /= n;
    return r;
}

Vector4 Quaternion::as_vector() const { return Vector4{c}; }

std::string Quaternion::str() const {
    std::ostringstream os;
    const char* names[] = {"", "i", "j", "k"};
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        Rational x = c[i];
        if (!first) os << (x < 0 ? " - " : " + ");
        else if (x < 0) os << "-";
        if (x < 0) x = -x;
        if (i == 0 || x != 1) os << to_string(x);
        os << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

Quaternion rho_hat() {
    Quaternion q;
    for (auto& x : q.c) x = Rational(-1, 2);
    return q;
}

int HurwitzGroup::index_of(const Quaternion& q) const {
    auto it = std::find(elements.begin(), elements.end(), q);
    return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

bool HurwitzGroup::closed() const {
    for (const auto& row : table)
        for (int x : row)
            if (x < 0) return false;
    return true;
}

HurwitzGroup hurwitz_group() {
    HurwitzGroup g;
    for (int i = 0; i < 4; ++i) {
        g.elements.push_back(Quaternion::unit(i));
        g.elements.push_back(-Quaternion::unit(i));
    }
    for (int mask = 0; mask < 16; ++mask) {
        Quaternion q;
        for (int i = 0; i < 4; ++i) q.c[i] = Rational((mask >> (3 - i)) & 1 ? -1 : 1, 2);
        g.elements.push_back(q);
    }
    g.table.assign(g.elements.size(), std::vector<int>(g.elements.size(), -1));
    for (std::size_t a = 0; a < g.elements.size(); ++a)
        for (std::size_t b = 0; b < g.elements.size(); ++b) g.table[a][b] = g.index_of(g.elements[a] * g.elements[b]);
    return g;
}

Matrix4 left_multiplication_matrix(const Quaternion& p) {
    Matrix4 m;
    for (int j = 0; j < 4; ++j) {
        Quaternion col = p * Quaternion::unit(j);
        for (int i = 0; i < 4; ++i) m.m[i][j] = col.c[i];
    }
    return m;
}

}  // namespace triality
