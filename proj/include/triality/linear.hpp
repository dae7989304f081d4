#pragma once

#include "triality/rational.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace triality {

struct Vector4 {
    std::array<Rational, 4> c{};

    static Vector4 basis(int i);  // 0-based e_{i+1}

    Vector4 operator+(const Vector4& o) const;
    Vector4 operator-(const Vector4& o) const;
    Vector4 operator-() const;
    Vector4 operator*(const Rational& s) const;
    bool operator==(const Vector4& o) const = default;
    auto operator<=>(const Vector4& o) const {
        for (int i = 0; i < 4; ++i) {
            if (c[i] < o.c[i]) return std::strong_ordering::less;
            if (o.c[i] < c[i]) return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    Rational dot(const Vector4& o) const;
    std::string str() const;
};

struct Matrix4 {
    std::array<std::array<Rational, 4>, 4> m{};

    static Matrix4 identity();
    static Matrix4 zero();
    /// Entries given as integers divided by a common denominator.
    static Matrix4 from_ints(const std::array<std::array<int, 4>, 4>& e, int den = 1);

    Rational& operator()(int r, int c) { return m[r][c]; }
    const Rational& operator()(int r, int c) const { return m[r][c]; }

    Matrix4 operator*(const Matrix4& o) const;
    Vector4 operator*(const Vector4& v) const;
    Matrix4 operator*(const Rational& s) const;
    Matrix4 operator-() const;
    bool operator==(const Matrix4& o) const = default;

    Matrix4 transpose() const;
    Rational determinant() const;
    bool invertible() const;
    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    Matrix4 inverse() const;
    Matrix4 pow(int k) const;
    bool is_orthogonal() const;

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Matrix4& m);
std::ostream& operator<<(std::ostream& os, const Vector4& v);

}  // namespace triality
