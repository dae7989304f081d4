#include "triality/linear.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace triality {

Vector4 Vector4::basis(int i) {
    Vector4 v;
    v.c[i] = 1;
    return v;
}

Vector4 Vector4::operator+(const Vector4& o) const {
    Vector4 r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Vector4 Vector4::operator-(const Vector4& o) const {
    Vector4 r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Vector4 Vector4::operator-() const {
    Vector4 r;
    for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
    return r;
}

Vector4 Vector4::operator*(const Rational& s) const {
    Vector4 r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] * s;
    return r;
}

Rational Vector4::dot(const Vector4& o) const {
    Rational s = 0;
    for (int i = 0; i < 4; ++i) s += c[i] * o.c[i];
    return s;
}

std::string Vector4::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

Matrix4 Matrix4::identity() {
    Matrix4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
    return r;
}

Matrix4 Matrix4::zero() { return Matrix4{}; }

Matrix4 Matrix4::from_ints(const std::array<std::array<int, 4>, 4>& e, int den) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = Rational(e[i][j], den);
    return r;
}

Matrix4 Matrix4::operator*(const Matrix4& o) const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Vector4 Matrix4::operator*(const Vector4& v) const {
    Vector4 r;
    for (int i = 0; i < 4; ++i) {
        Rational s = 0;
        for (int k = 0; k < 4; ++k) s += m[i][k] * v.c[k];
        r.c[i] = s;
    }
    return r;
}

Matrix4 Matrix4::operator*(const Rational& s) const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] * s;
    return r;
}

Matrix4 Matrix4::operator-() const { return *this * Rational(-1); }

Matrix4 Matrix4::transpose() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

Rational Matrix4::determinant() const {
    auto a = m;
    Rational det = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return det;
}

bool Matrix4::invertible() const { return determinant() != 0; }

Matrix4 Matrix4::inverse() const {
    auto a = m;
    auto inv = identity().m;
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("Matrix4::inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (int k = 0; k < 4; ++k) { a[col][k] /= p; inv[col][k] /= p; }
        for (int r = 0; r < 4; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int k = 0; k < 4; ++k) {
                a[r][k] -= f * a[col][k];
                inv[r][k] -= f * inv[col][k];
            }
        }
    }
    Matrix4 r;
    r.m = inv;
    return r;
}

Matrix4 Matrix4::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Matrix4 r = identity();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool Matrix4::is_orthogonal() const { return transpose() * *this == identity(); }

std::string Matrix4::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix4& m) {
    os << '[';
    for (int i = 0; i < 4; ++i) {
        if (i) os << ", ";
        os << '[';
        for (int j = 0; j < 4; ++j) {
            if (j) os << ", ";
            os << to_string(m.m[i][j]);
        }
        os << ']';
    }
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, const Vector4& v) {
    os << '(';
    for (int i = 0; i < 4; ++i) {
        if (i) os << ", ";
        os << to_string(v.c[i]);
    }
    return os << ')';
}

}  // namespace triality
