#pragma once

#include "triality/linear.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triality {

/// A permutation of {1,2,3,4}, stored 0-based in one-line form: p[j] = pi(j).
struct Perm4 {
    std::array<std::uint8_t, 4> p{0, 1, 2, 3};

    static Perm4 identity() { return {}; }
    /// Parses 1-based cycle notation such as "(1 2)(3 4)", "(1234)" or "()".
    static Perm4 parse_cycles(std::string_view text);
    static Perm4 from_rank(int rank);

    std::uint8_t operator()(int j) const { return p[j]; }
    /// (a*b)(j) = a(b(j)).
    Perm4 operator*(const Perm4& o) const;
    Perm4 inverse() const;
    int sign() const;
    int order() const;
    /// Position in lexicographic order of one-line forms (0..23).
    int rank() const;
    std::string cycles() const;

    bool operator==(const Perm4&) const = default;
    auto operator<=>(const Perm4&) const = default;
};

/// D * P(pi) with D = diag(signs). The matrix convention is P(pi) e_j = e_{pi(j)}.
struct SignedPermutation {
    std::array<std::int8_t, 4> signs{1, 1, 1, 1};
    Perm4 perm{};

    static SignedPermutation identity() { return {}; }
    static SignedPermutation diagonal(std::array<int, 4> s);
    static SignedPermutation permutation(const Perm4& p);

    int sign_product() const;
    bool in_wd4() const { return sign_product() == 1; }
    /// 0..383; lexicographic on (signs with + before -, one-line perm).
    int key() const;
    static SignedPermutation from_key(int key);

    std::string str() const;

    bool operator==(const SignedPermutation&) const = default;
};

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& a);
Matrix4 to_matrix(const SignedPermutation& a);
/// Throws NotSignedMonomial unless m is monomial with nonzero entries +-1.
SignedPermutation from_matrix(const Matrix4& m);
Perm4 beta(const SignedPermutation& a);
int determinant(const SignedPermutation& a);
/// D P(pi) -> D P(pi) w0^{sgn pi}; throws NotInWD4 outside W(D4).
SignedPermutation psi(const SignedPermutation& a);
/// from_matrix(m a m^-1); throws NotSignedMonomial if the conjugate leaves the group.
SignedPermutation conjugate_by_matrix(const Matrix4& m, const SignedPermutation& a);

SignedPermutation w0();
SignedPermutation w1();
SignedPermutation w2();
SignedPermutation w3();

Matrix4 mu_matrix();
Matrix4 rho_matrix();
Matrix4 nu_matrix();

/// A finite group of signed permutations with full multiplication table.
class GroupTable {
public:
    GroupTable(std::vector<SignedPermutation> generators);

    int size() const { return static_cast<int>(elements_.size()); }
    const SignedPermutation& element(int i) const { return elements_[i]; }
    const std::vector<SignedPermutation>& elements() const { return elements_; }
    const std::vector<int>& generators() const { return generators_; }

    std::optional<int> find(const SignedPermutation& a) const;
    /// Like find() but throws std::out_of_range for non-members.
    int index_of(const SignedPermutation& a) const;

    int mul(int a, int b) const { return table_[a * size() + b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return 0; }
    int order_of(int a) const;

    /// FNV-1a over the multiplication table; used to key caches.
    std::uint64_t content_hash() const;

private:
    std::vector<SignedPermutation> elements_;
    std::array<std::int16_t, 384> pos_{};
    std::vector<int> generators_;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inverse_;
};

GroupTable enumerate_wd4();
GroupTable enumerate_wreath();

/// Shared instance, built once.
const GroupTable& wd4();

}  // namespace triality
