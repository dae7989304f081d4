#include "doctest.h"

#include "triality/errors.hpp"
#include "triality/gamma_sets.hpp"

#include <algorithm>
#include <set>

using namespace triality;

namespace {

// Swap fibers i and j of the 2/n covering, fixing orientation of each pair.
PointMap swap_fibers(int n, int i, int j) {
    PointMap g = identity_map(2 * n);
    g[2 * i] = 2 * j;
    g[2 * i + 1] = 2 * j + 1;
    g[2 * j] = 2 * i;
    g[2 * j + 1] = 2 * i + 1;
    return g;
}

PointMap flip_fiber(int n, int i) {
    PointMap g = identity_map(2 * n);
    std::swap(g[2 * i], g[2 * i + 1]);
    return g;
}

// Number of fibers on which two sections pick different points.
int switches(const DoubleCovering& cov, const Section& a, const Section& b) {
    int k = 0;
    for (const auto& [x, y] : cov.fibers()) {
        (void)y;
        bool in_a = std::binary_search(a.members.begin(), a.members.end(), x);
        bool in_b = std::binary_search(b.members.begin(), b.members.end(), x);
        k += in_a != in_b;
    }
    return k;
}

}  // namespace

TEST_SUITE("gamma_sets") {

TEST_CASE("point maps") {
    PointMap a{1, 2, 0}, b{0, 2, 1};
    CHECK(compose_maps(a, invert_map(a)) == identity_map(3));
    CHECK(compose_maps(a, b) == PointMap{1, 0, 2});
    CHECK(map_sign(a) == 1);
    CHECK(map_sign(b) == -1);
}

TEST_CASE("finite action closure and orbits") {
    FiniteAction x(4, {PointMap{1, 0, 2, 3}, PointMap{0, 1, 3, 2}});
    CHECK(x.group_elements().size() == 4);
    CHECK(x.group_elements().front() == identity_map(4));
    CHECK(x.orbit_sizes() == std::vector<int>{2, 2});
    FiniteAction s4(4, {PointMap{1, 0, 2, 3}, PointMap{1, 2, 3, 0}});
    CHECK(s4.group_elements().size() == 24);
}

TEST_CASE("discriminant character") {
    FiniteAction odd(3, {PointMap{1, 0, 2}});
    CHECK_FALSE(character_is_trivial(odd));
    auto chi = discriminant_character(odd);
    CHECK(std::count(chi.begin(), chi.end(), -1) == 1);
    FiniteAction even(3, {PointMap{1, 2, 0}});
    CHECK(character_is_trivial(even));
    CHECK_THROWS_AS(character_is_trivial(FiniteAction(1, {})), CarrierTooSmall);
    CHECK_THROWS_AS(discriminant_character(FiniteAction(0, {})), CarrierTooSmall);
}

TEST_CASE("double covering validation") {
    auto cov = trivial_double_covering(4);
    CHECK(cov.base_size() == 4);
    CHECK(cov.fibers().size() == 4);
    CHECK_THROWS_AS(DoubleCovering(FiniteAction(4, {}), PointMap{0, 1, 3, 2}), InvalidCovering);
    CHECK_THROWS_AS(DoubleCovering(FiniteAction(4, {}), PointMap{1, 2, 3, 0}), InvalidCovering);
    CHECK_THROWS_AS(DoubleCovering(FiniteAction(3, {}), PointMap{1, 0, 2}), InvalidCovering);
    // A generator that does not commute with sigma.
    CHECK_THROWS_AS(DoubleCovering(FiniteAction(4, {PointMap{0, 2, 1, 3}}), PointMap{1, 0, 3, 2}), InvalidCovering);
}

TEST_CASE("sections and complements") {
    for (int n = 1; n <= 5; ++n) {
        auto cov = trivial_double_covering(n);
        auto all = sections(cov);
        CHECK(all.size() == (std::size_t{1} << n));
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& w : all) {
            CHECK(cov.is_section(w));
            auto c = complement(cov, w);
            CHECK(cov.is_section(c));
            CHECK(complement(cov, c) == w);
            CHECK(switches(cov, w, c) == n);
        }
    }
}

TEST_CASE("delta parity agrees with the count of fiber switches") {
    for (int n = 2; n <= 5; ++n) {
        auto cov = trivial_double_covering(n);
        auto all = sections(cov);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK((delta_parity(cov, a, b) == Parity::Same) == (switches(cov, a, b) % 2 == 0));
    }
}

TEST_CASE("clifford covering of a 2/n covering") {
    const int n = 4;
    DoubleCovering cov(FiniteAction(2 * n, {swap_fibers(n, 0, 1), flip_fiber(n, 2)}),
                       trivial_double_covering(n).sigma());
    auto cl = clifford_covering(cov);
    CHECK(cl.total().carrier_size() == 16);
    CHECK(cl.base_size() == 8);
    CHECK(cl.total().group_elements().size() == cov.total().group_elements().size());
    auto b = cov.base();
    CHECK(b.orbit_sizes() == std::vector<int>{1, 1, 2});
}

TEST_CASE("orientation and spinor halves") {
    const int n = 4;
    auto triv = trivial_double_covering(n);
    // Swapping two fibers is an even permutation of Z (two transpositions).
    DoubleCovering cov(FiniteAction(2 * n, {swap_fibers(n, 0, 1)}), triv.sigma());
    auto all = sections(cov);
    auto o = orientation_from_section(cov, all.front());
    CHECK(o.label(cov, all.front()) == 1);
    auto [one, two] = split_spinor(cov, o);
    CHECK(one.members.size() == 8);
    CHECK(two.members.size() == 8);
    for (const auto& w : one.members) CHECK(o.label(cov, w) == 1);
    for (const auto& w : two.members) CHECK(o.label(cov, w) == 2);
    // For n = 4 the complement of a section stays in its half.
    for (const auto& w : one.members)
        CHECK(std::binary_search(one.members.begin(), one.members.end(), complement(cov, w)));

    OrientedCovering oc{cov, o};
    auto k = kappa(oc);
    CHECK(k.orientation.label(cov, all.front()) == 2);
    CHECK(kappa(k).orientation.label(cov, all.front()) == 1);

    // A single fiber flip acts by a transposition: not orientable.
    DoubleCovering odd(FiniteAction(2 * n, {flip_fiber(n, 0)}), triv.sigma());
    CHECK_THROWS_AS(orientation_from_section(odd, sections(odd).front()), NotOrientable);
    auto three = trivial_double_covering(3);
    CHECK_THROWS_AS(split_spinor(three, Orientation{sections(three).front()}), OddDegreeBase);
}

TEST_CASE("unions, products and equivariant bijections") {
    auto a = trivial_double_covering(2);
    auto u = disjoint_union(a, a);
    CHECK(u.base_size() == 4);
    FiniteAction p = product_action(FiniteAction(2, {PointMap{1, 0}}), FiniteAction(3, {PointMap{1, 2, 0}}));
    CHECK(p.carrier_size() == 6);
    CHECK(p.group_elements().size() == 6);

    FiniteAction x(3, {PointMap{1, 2, 0}}), y(3, {PointMap{2, 0, 1}});
    auto f = find_equivariant_bijection(x, y);
    REQUIRE(f.has_value());
    for (int i = 0; i < 3; ++i) CHECK((*f)[x.generators()[0][i]] == y.generators()[0][(*f)[i]]);
    FiniteAction z(3, {PointMap{1, 0, 2}});
    CHECK_FALSE(find_equivariant_bijection(x, z).has_value());
}

}
