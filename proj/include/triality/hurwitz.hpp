#pragma once

#include "triality/linear.hpp"

#include <string>
#include <vector>

namespace triality {

/// q = a + b i + c j + d k.
struct Quaternion {
    std::array<Rational, 4> c{};

    static Quaternion one();
    static Quaternion unit(int i);  // 0 -> 1, 1 -> i, 2 -> j, 3 -> k

    Quaternion operator*(const Quaternion& o) const;
    Quaternion operator-() const;
    Quaternion conjugate() const;
    Rational norm() const;
    Quaternion inverse() const;
    bool operator==(const Quaternion&) const = default;

    Vector4 as_vector() const;
    std::string str() const;
};

Quaternion rho_hat();  // -(1+i+j+k)/2

struct HurwitzGroup {
    std::vector<Quaternion> elements;  // canonical order
    std::vector<std::vector<int>> table;  // -1 where a product leaves the set
    int index_of(const Quaternion& q) const;  // -1 if absent
    bool closed() const;
};

HurwitzGroup hurwitz_group();

/// Matrix of q -> p q on the basis (1, i, j, k).
Matrix4 left_multiplication_matrix(const Quaternion& p);

}  // namespace triality
