#include "doctest.h"

#include "triality/automorphisms.hpp"
#include "triality/table1.hpp"

#include <set>

using namespace triality;

TEST_SUITE("automorphisms") {

TEST_CASE("inner automorphisms are |W| / |Z| = 96") {
    const auto& g = wd4();
    std::set<GroupAutomorphism> inner;
    for (int w = 0; w < g.size(); ++w) inner.insert(inner_automorphism(g, w));
    CHECK(inner.size() == 96);
    const auto& aut = automorphism_group();
    CHECK(aut.inner.size() == 96);
    for (const auto& a : inner) CHECK(aut.is_inner(a));
}

TEST_CASE("Aut(W(D4)) has order 1152 and Aut/Inn ~ S3 x C2") {
    const auto& aut = automorphism_group();
    CHECK(aut.size() == 1152);
    CHECK(aut.outer_order() == 12);
    CHECK(aut.outer_is_s3_x_c2());
    for (const auto& a : aut.elements) CHECK(a.is_automorphism_of(wd4()));
    auto mu = mu_tilde(), nu = nu_tilde(), ps = psi_automorphism(wd4());
    CHECK_FALSE(aut.is_inner(mu));
    CHECK_FALSE(aut.is_inner(ps));
    CHECK((mu * mu * mu).is_identity());
    CHECK(nu.order() == 2);
    CHECK(aut.commute_mod_inner(ps, mu));
    CHECK(aut.commute_mod_inner(ps, nu));
    CHECK_FALSE(aut.commute_mod_inner(mu, nu));
}

TEST_CASE("rho = Int(w) mu for the displayed w") {
    const auto& g = wd4();
    auto w = from_matrix(rho_matrix() * mu_matrix().inverse());
    CHECK(rho_tilde() == inner_automorphism(g, g.index_of(w)) * mu_tilde());
}

TEST_CASE("trialitarian census") {
    const auto& c = trialitarian_census();
    CHECK(c.matrices.size() == 48);
    CHECK(c.closed_under_conjugation);
    CHECK(c.class_sizes() == std::vector<int>{16, 32});
    CHECK(c.classes[c.class_of(rho_tilde())].size() == 16);
    CHECK(c.classes[c.class_of(mu_tilde())].size() == 32);
    for (const auto& m : c.matrices) {
        CHECK(m.pow(3) == Matrix4::identity());
        CHECK(m.is_orthogonal());
    }
    for (const auto& a : c.automorphisms) CHECK(a.order() == 3);
}

TEST_CASE("fixed subgroups") {
    auto fm = analyze_fixed_subgroup(mu_tilde());
    CHECK(fm.group.count() == 12);
    CHECK(fm.dihedral);
    auto fr = analyze_fixed_subgroup(rho_tilde());
    CHECK(fr.group.count() == 24);
    CHECK(fr.involutions == 1);
    CHECK(fr.sylow2_is_q8);
    CHECK_FALSE(is_dihedral(wd4(), fr.group));
    // Brute force on the table.
    int fixed = 0;
    auto mu = mu_tilde();
    for (int x = 0; x < wd4().size(); ++x) fixed += mu(x) == x;
    CHECK(fixed == 12);
}

TEST_CASE("the G2 plane") {
    auto r = g2_plane_analysis();
    CHECK(r.v1_fixed);
    CHECK(r.v2_fixed);
    CHECK(r.plane_invariant);
    CHECK(r.fix_order == 12);
    CHECK(r.restricted_order == 12);
    CHECK(r.rotations == 6);
    CHECK(r.faithful);
    CHECK(r.dihedral);
    CHECK(mu_matrix() * r.v1 == r.v1);
    CHECK(mu_matrix() * r.v2 == r.v2);
}

TEST_CASE("classes with a representative fixed by a trialitarian automorphism") {
    const Atlas& a = Atlas::standard();
    const auto& m = standard_table1_match();
    std::set<int> triples, invariant;
    for (int c : fixed_triple_classes(a)) triples.insert(m.row_of_class[c]);
    for (int c : triality_invariant_classes(a)) invariant.insert(m.row_of_class[c]);
    CHECK(triples == std::set<int>{1, 2, 6, 7, 8, 20, 29, 30, 31, 32, 36, 61, 85});
    std::set<int> excluded;
    for (int r : invariant)
        if (!triples.count(r)) excluded.insert(r);
    CHECK(excluded == std::set<int>{24, 39, 53, 56, 65, 70, 86, 96, 97, 98});
    CHECK(invariant.size() == 23);
}

TEST_CASE("fixed triples by the conjugation criterion") {
    // G is fixed by some trialitarian u iff G lies in Fix(Int(a)^-1 mu) for
    // some a, up to conjugacy and up to the class of rho.
    const auto& g = wd4();
    const Atlas& atlas = Atlas::standard();
    std::set<int> found;
    const auto& census = trialitarian_census();
    for (const auto& u : census.automorphisms) {
        auto fix = fixed_subgroup(g, u);
        for (std::size_t i = 0; i < atlas.subgroups().size(); ++i)
            if (atlas.subgroups()[i].subset_of(fix)) found.insert(atlas.class_of(atlas.subgroups()[i]));
    }
    std::set<int> expected;
    for (int c : fixed_triple_classes(atlas)) expected.insert(c);
    CHECK(found == expected);
}

}
