#include "doctest.h"

#include "triality/errors.hpp"
#include "triality/triality_model.hpp"

#include <algorithm>
#include <numeric>

using namespace triality;

namespace {

// Exhaustive oracle: some bijection of the 8 points commutes with every
// generator and the antipode and carries the class-1 half of `a` to that of `b`.
bool isomorphic_by_search(const OrientedModel& a, const OrientedModel& b) {
    const auto ca = a.covering(), cb = b.covering();
    std::vector<PointMap> ga, gb;
    for (const auto& g : a.generators) ga.push_back(a.point_map(g));
    for (const auto& g : b.generators) gb.push_back(b.point_map(g));
    PointMap f(8);
    std::iota(f.begin(), f.end(), 0);
    do {
        bool ok = true;
        for (int z = 0; z < 8 && ok; ++z) {
            ok = f[ca.sigma()[z]] == cb.sigma()[f[z]];
            for (std::size_t k = 0; k < ga.size() && ok; ++k) ok = f[ga[k][z]] == gb[k][f[z]];
        }
        if (!ok) continue;
        Section image;
        for (int z : a.reference.members) image.members.push_back(f[z]);
        std::sort(image.members.begin(), image.members.end());
        if (b.orientation().label(cb, image) == 1) return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

}  // namespace

TEST_SUITE("triality_model") {

TEST_CASE("standard model") {
    auto m = standard_model({});
    CHECK(m.points.size() == 8);
    CHECK_NOTHROW(m.validate());
    CHECK(m.frame() == Matrix4::identity());
    auto bad = m;
    bad.points[1] = bad.points[0];
    CHECK_THROWS_AS(bad.validate(), InvalidCovering);
}

TEST_CASE("C1+ consists of section vectors and carries the frame mu") {
    auto m = standard_model({});
    auto c1 = c1_plus(m);
    CHECK_NOTHROW(c1.validate());
    for (const auto& p : c1.points) {
        CHECK(p.dot(p) == 1);
        for (int i = 0; i < 4; ++i) CHECK((p.c[i] == Rational(1, 2) || p.c[i] == Rational(-1, 2)));
    }
    for (int i = 0; i < 4; ++i) {
        CHECK(std::find(c1.points.begin(), c1.points.end(), f_vector(i)) != c1.points.end());
        CHECK(f_vector(i) == mu_matrix() * Vector4::basis(i));
        CHECK(g_vector(i) == mu_matrix() * f_vector(i));
    }
    // f_1 = (e1+e2+e3+e4)/2 is a section vector of the class-1 half.
    Section w{{0, 2, 4, 6}};
    CHECK(section_vector(m, w) == f_vector(0));
}

TEST_CASE("kappa flips the orientation") {
    auto m = standard_model({});
    auto k = kappa(m);
    CHECK(k.orientation().label(m.covering(), m.reference) == 2);
    CHECK(kappa(k).orientation().label(m.covering(), m.reference) == 1);
    // Flipping one fiber is equivariant for the trivial action and reverses the orientation.
    CHECK(find_isomorphism(m, k).has_value());
    // For the whole of W(D4) the centraliser is {1, w0}, which preserves it.
    std::vector<SignedPermutation> gens;
    for (int x : wd4().generators()) gens.push_back(wd4().element(x));
    auto full = standard_model(gens);
    CHECK_FALSE(find_isomorphism(full, kappa(full)).has_value());
    CHECK_FALSE(isomorphic_by_search(full, kappa(full)));
    CHECK(isomorphic_by_search(full, kappa(kappa(full))));
}

TEST_CASE("triality laws for the trivial action") {
    auto r = verify_triality_laws(standard_model({}));
    REQUIRE(r.laws.size() == 3);
    CHECK(r.all_passed());
}

TEST_CASE("triality laws against an exhaustive bijection search") {
    auto g = compose(w1(), SignedPermutation::permutation(Perm4::parse_cycles("(1 2)(3 4)")));
    auto m = standard_model({g});
    auto c1 = c1_plus(m);
    auto c2 = c2_plus(m);
    CHECK(isomorphic_by_search(c1_plus(c1_plus(c1)), m));
    CHECK(isomorphic_by_search(c1_plus(c1), c2));
    CHECK(isomorphic_by_search(c1_plus(kappa(m)), kappa(c2)));
    CHECK(verify_triality_laws(m).all_passed());
}

TEST_CASE("triality laws for every cyclic subgroup") {
    int failures = 0;
    for (const auto& g : wd4().elements())
        if (!verify_triality_laws(standard_model({g})).all_passed()) ++failures;
    CHECK(failures == 0);
}

TEST_CASE("frame coordinates stay in W(D4)") {
    auto m = standard_model({w1()});
    auto c1 = c1_plus(m);
    std::vector<Vector4> cols, fs;
    for (int j = 0; j < 4; ++j) {
        Vector4 v;
        for (int i = 0; i < 4; ++i) v.c[i] = c1.frame()(i, j);
        cols.push_back(v);
        fs.push_back(f_vector(j));
    }
    std::sort(cols.begin(), cols.end());
    std::sort(fs.begin(), fs.end());
    CHECK(cols == fs);
    for (const auto& g : wd4().elements()) CHECK(frame_coordinates(c1, to_matrix(g)).in_wd4());
}

}
