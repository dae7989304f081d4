#include "doctest.h"

#include "triality/errors.hpp"
#include "triality/resolvents.hpp"

#include <random>

using namespace triality;

namespace {

RationalPolynomial from_roots(const std::vector<Rational>& roots) {
    RationalPolynomial p({Rational(1)});
    for (const auto& r : roots) p = p * RationalPolynomial({-r, Rational(1)});
    return p;
}

Rational r(long long n, long long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("arithmetic and printing") {
    RationalPolynomial p({r(1, 4), r(0), r(3), r(0), r(1)});
    CHECK(p.degree() == 4);
    CHECK(p.is_monic());
    CHECK(p.str() == "x^4 + 3x^2 + 1/4");
    CHECK(RationalPolynomial({r(1, 4), r(0), r(-3), r(0), r(1)}).str() == "x^4 - 3x^2 + 1/4");
    CHECK(p(r(1)) == r(17, 4));
    CHECK(p.derivative() == RationalPolynomial({r(0), r(6), r(0), r(4)}));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(RationalPolynomial::monomial(r(2), 3).str() == "2x^3");
    CHECK(doubled_polynomial(RationalPolynomial({r(1), r(2), r(3)})) ==
          RationalPolynomial({r(1), r(0), r(2), r(0), r(3)}));
}

TEST_CASE("resultant and discriminant from known roots") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> roots;
        for (int i = 0; i < 4; ++i) roots.push_back(r(d(rng), 1 + (trial % 3)));
        auto f = from_roots(roots);
        RationalPolynomial g({r(d(rng)), r(d(rng)), r(1)});
        Rational prod = 1;
        for (const auto& x : roots) prod *= g(x);
        CHECK(resultant(f, g) == prod);
        Rational disc = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) disc *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
        CHECK(poly_discriminant(f) == disc);
    }
    CHECK(poly_discriminant(RationalPolynomial({r(-1), r(0), r(1)})) == 4);
    CHECK_THROWS_AS(poly_discriminant(RationalPolynomial({r(3)})), std::invalid_argument);
}

TEST_CASE("determinant") {
    CHECK(determinant({{r(1), r(2)}, {r(3), r(4)}}) == -2);
    CHECK(determinant({{r(0), r(1)}, {r(1), r(0)}}) == -1);
    CHECK(determinant({{r(1, 2), r(0), r(0)}, {r(7), r(2), r(0)}, {r(1), r(1), r(3)}}) == 3);
}

}

TEST_SUITE("resolvents") {

TEST_CASE("x^4 + 1") {
    auto p = resolvent_pair(r(0), r(0), r(0), r(1));
    CHECK(p.f4_prime.str() == "x^4 + 3x^2 + 1/4");
    CHECK(p.f4_second.str() == "x^4 - 3x^2 + 1/4");
    CHECK(quartic(r(0), r(0), r(0), r(1)).str() == "x^4 + 1");
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(resolvent_pair(r(1), r(2), r(3), r(0)), ZeroConstant);
    // (x - 1)^2 (x - 4)^2 has repeated roots.
    auto f = from_roots({r(1), r(1), r(4), r(4)});
    CHECK_FALSE(doubled_is_separable(f));
    CHECK_THROWS_AS(resolvent_pair(f.coeff(3), f.coeff(2), f.coeff(1), r(4)), NotSeparable);
}

TEST_CASE("roots of a companion matrix") {
    auto f = from_roots({r(1), r(-2), r(3, 2), r(5)});
    auto roots = polynomial_roots(f);
    REQUIRE(roots.size() == 4);
    for (const auto& z : roots) {
        std::complex<double> v = 0;
        for (int i = f.degree(); i >= 0; --i) v = v * z + to_double(f.coeff(i));
        CHECK(std::abs(v) < 1e-9);
    }
}

TEST_CASE("formulas against the root-transport oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
    int tested = 0;
    while (tested < 100) {
        Rational a = r(num(rng), den(rng)), b = r(num(rng), den(rng)), c = r(num(rng), den(rng));
        Rational e = r(num(rng), den(rng));
        if (e == 0) continue;
        ResolventPair p;
        try {
            p = resolvent_pair(a, b, c, e);
        } catch (const NotSeparable&) {
            continue;
        }
        ++tested;
        CHECK(max_relative_error(numeric_triality_oracle(a, b, c, e, 1), p.f4_prime) <= 1e-6);
        CHECK(max_relative_error(numeric_triality_oracle(a, b, c, e, 2), p.f4_second) <= 1e-6);
        // The wrong branch pairing is detectably wrong for generic input.
        auto swapped = resolvent_pair(a, b, c, -e);
        CHECK(swapped.f4_prime == p.f4_second);
        CHECK(swapped.f4_second == p.f4_prime);
        auto f = quartic(a, b, c, e);
        Rational d4 = poly_discriminant(f);
        CHECK(poly_discriminant(doubled_polynomial(f)) == e * e * (16 * d4) * (16 * d4));
    }
}

}
