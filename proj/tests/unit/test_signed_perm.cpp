#include "doctest.h"

#include "triality/errors.hpp"
#include "triality/signed_perm.hpp"

#include <array>
#include <set>

using namespace triality;

namespace {

using IntMatrix = std::array<std::array<int, 4>, 4>;

// Built from the definition D P(pi) e_j = s_{pi(j)} e_{pi(j)}, without Matrix4.
IntMatrix int_matrix(const SignedPermutation& a) {
    IntMatrix m{};
    for (int j = 0; j < 4; ++j) m[a.perm(j)][j] = a.signs[a.perm(j)];
    return m;
}

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

bool agrees(const Matrix4& m, const IntMatrix& e) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m(i, j) != e[i][j]) return false;
    return true;
}

}  // namespace

TEST_SUITE("signed_perm") {

TEST_CASE("cycle parsing and Perm4 arithmetic") {
    Perm4 p = Perm4::parse_cycles("(1 2)(3 4)");
    CHECK(p(0) == 1);
    CHECK(p(2) == 3);
    CHECK(p.order() == 2);
    CHECK(p.sign() == 1);
    CHECK(Perm4::parse_cycles("(1234)").order() == 4);
    CHECK(Perm4::parse_cycles("(1234)").sign() == -1);
    CHECK(Perm4::parse_cycles("()") == Perm4::identity());
    for (int r = 0; r < 24; ++r) {
        Perm4 q = Perm4::from_rank(r);
        CHECK(q.rank() == r);
        CHECK(q * q.inverse() == Perm4::identity());
        CHECK(Perm4::parse_cycles(q.cycles()) == q);
    }
}

TEST_CASE("key round trip covers the wreath product") {
    std::set<int> keys;
    for (int k = 0; k < 384; ++k) {
        auto a = SignedPermutation::from_key(k);
        CHECK(a.key() == k);
        keys.insert(a.key());
    }
    CHECK(keys.size() == 384);
}

TEST_CASE("group orders") {
    CHECK(enumerate_wd4().size() == 192);
    CHECK(enumerate_wreath().size() == 384);
    CHECK(wd4().size() == 192);
    for (const auto& a : wd4().elements()) CHECK(a.in_wd4());
}

TEST_CASE("to_matrix is a homomorphism on all 384^2 products") {
    int failures = 0;
    for (int x = 0; x < 384; ++x) {
        auto a = SignedPermutation::from_key(x);
        CHECK(agrees(to_matrix(a), int_matrix(a)));
        for (int y = 0; y < 384; ++y) {
            auto b = SignedPermutation::from_key(y);
            if (!agrees(to_matrix(compose(a, b)), int_product(int_matrix(a), int_matrix(b)))) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("from_matrix inverts to_matrix and rejects other matrices") {
    for (int k = 0; k < 384; ++k) {
        auto a = SignedPermutation::from_key(k);
        CHECK(from_matrix(to_matrix(a)) == a);
        CHECK(compose(a, inverse(a)) == SignedPermutation::identity());
        CHECK(determinant(a) == to_matrix(a).determinant());
    }
    CHECK_THROWS_AS(from_matrix(mu_matrix()), NotSignedMonomial);
    CHECK_THROWS_AS(from_matrix(Matrix4::identity() * Rational(2)), NotSignedMonomial);
}

TEST_CASE("beta kernel and centre") {
    const auto& g = wd4();
    int kernel = 0;
    std::vector<int> centre;
    for (int x = 0; x < g.size(); ++x) {
        if (beta(g.element(x)) == Perm4::identity()) ++kernel;
        bool central = true;
        for (int y = 0; y < g.size() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
        if (central) centre.push_back(x);
    }
    CHECK(kernel == 8);
    REQUIRE(centre.size() == 2);
    CHECK(g.element(centre[0]) == SignedPermutation::identity());
    CHECK(g.element(centre[1]) == w0());
}

TEST_CASE("multiplication table matches compose") {
    const auto& g = wd4();
    for (int x = 0; x < g.size(); x += 7)
        for (int y = 0; y < g.size(); ++y) {
            CHECK(g.element(g.mul(x, y)) == compose(g.element(x), g.element(y)));
            CHECK(g.mul(x, g.inv(x)) == g.identity());
        }
    CHECK_THROWS_AS(g.index_of(SignedPermutation::diagonal({-1, 1, 1, 1})), std::out_of_range);
    CHECK_FALSE(g.find(SignedPermutation::diagonal({-1, 1, 1, 1})).has_value());
}

TEST_CASE("triality matrices as displayed") {
    const Matrix4 mu = Matrix4::from_ints({{{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {1, -1, -1, -1}}}, 2);
    const Matrix4 rho = Matrix4::from_ints({{{-1, 1, 1, 1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}, {-1, 1, -1, -1}}}, 2);
    const Matrix4 nu = Matrix4::from_ints({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}});
    CHECK(mu_matrix() == mu);
    CHECK(rho_matrix() == rho);
    CHECK(nu_matrix() == nu);
    CHECK(mu.pow(3) == Matrix4::identity());
    CHECK_FALSE(mu == Matrix4::identity());
    CHECK(rho.pow(3) == Matrix4::identity());
    CHECK(nu.pow(2) == Matrix4::identity());
    CHECK(mu.is_orthogonal());
    CHECK(rho.is_orthogonal());
    CHECK(nu.is_orthogonal());
    const Matrix4 w = -Matrix4::from_ints({{{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}}});
    CHECK(rho * mu.inverse() == w);
    CHECK(from_matrix(w).in_wd4());
}

TEST_CASE("mu permutes the simple roots as the diagram automorphism") {
    auto v = [](std::array<int, 4> c) {
        Vector4 r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i];
        return r;
    };
    const Vector4 a1 = v({1, -1, 0, 0}), a2 = v({0, 1, -1, 0}), a3 = v({0, 0, 1, -1}), a4 = v({0, 0, 1, 1});
    const Matrix4 mu = mu_matrix();
    CHECK(mu * a1 == a4);
    CHECK(mu * a4 == a3);
    CHECK(mu * a3 == a1);
    CHECK(mu * a2 == a2);
    CHECK(nu_matrix() * a3 == a4);
}

TEST_CASE("psi is x -> x det(x) on W(D4)") {
    for (const auto& a : wd4().elements()) {
        auto p = psi(a);
        CHECK(to_matrix(p) == to_matrix(a) * Rational(determinant(a)));
        CHECK(psi(p) == a);
    }
    CHECK_THROWS_AS(psi(SignedPermutation::diagonal({-1, 1, 1, 1})), NotInWD4);
}

TEST_CASE("conjugation by mu normalises W(D4)") {
    for (const auto& a : wd4().elements()) {
        auto b = conjugate_by_matrix(mu_matrix(), a);
        CHECK(b.in_wd4());
        CHECK(to_matrix(b) == mu_matrix() * to_matrix(a) * mu_matrix().inverse());
    }
    CHECK_THROWS_AS(conjugate_by_matrix(mu_matrix(), SignedPermutation::diagonal({-1, 1, 1, 1})),
                    NotSignedMonomial);
}

}
