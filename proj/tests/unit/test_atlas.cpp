#include "doctest.h"

#include "triality/atlas.hpp"
#include "triality/errors.hpp"
#include "triality/table1.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

using namespace triality;

namespace {

std::vector<int> rows_of(const std::vector<int>& classes, const Table1Match& m) {
    std::vector<int> out;
    for (int c : classes) out.push_back(m.row_of_class[c]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("atlas") {

TEST_CASE("subgroup generation") {
    const auto& g = wd4();
    auto all = generate(g, {});
    CHECK(all.count() == 1);
    std::vector<int> gens;
    for (int x = 0; x < g.size(); ++x) gens.push_back(x);
    CHECK(generate(g, gens).count() == 192);
    CHECK(is_subgroup(g, generate(g, {5, 17})));
}

TEST_CASE("98 classes and brute-force counts") {
    const Atlas& a = Atlas::standard();
    const auto& g = a.group();
    CHECK(a.classes().size() == 98);

    int total = 0;
    for (const auto& c : a.classes()) total += c.class_size;
    CHECK(total == static_cast<int>(a.subgroups().size()));

    // Subgroups of order 2 are the involutions; cyclic subgroups are counted by φ.
    int involutions = 0;
    std::set<ElementSet> cyclic;
    for (int x = 0; x < g.size(); ++x) {
        if (g.order_of(x) == 2) ++involutions;
        cyclic.insert(generate(g, {x}));
    }
    int order_two = 0, cyclic_found = 0;
    for (const auto& s : a.subgroups()) {
        order_two += s.count() == 2;
        cyclic_found += cyclic.count(s);
    }
    CHECK(order_two == involutions);
    CHECK(cyclic_found == static_cast<int>(cyclic.size()));

    // Every subgroup is closed and conjugates stay in the list.
    for (const auto& s : a.subgroups()) {
        CHECK(is_subgroup(g, s));
        CHECK(a.subgroup_index(conjugate_set(g, s, 37)) >= 0);
    }
    // ℓ = |W| / |N(G)|.
    for (const auto& c : a.classes()) CHECK(c.class_size * c.normalizer_order == 192);
}

TEST_CASE("the (|G|, l) multiset against the table") {
    const Atlas& a = Atlas::standard();
    std::map<std::pair<int, int>, int> computed, corrected, printed;
    for (const auto& c : a.classes()) ++computed[{c.order, c.class_size}];
    for (const auto& r : table1_corrected()) ++corrected[{r.order, r.ell}];
    for (const auto& r : table1_printed()) ++printed[{r.order, r.ell}];
    CHECK(computed == corrected);
    // The printed ℓ column has five entries that cannot hold.
    std::set<int> ell_errata;
    for (const auto& e : table1_errata())
        if (e.column == "l") ell_errata.insert(e.row);
    CHECK(ell_errata == std::set<int>{2, 20, 50, 61, 85});
    // Row 2 is the centre {1, w0}, a normal subgroup.
    CHECK(table1_row(table1_printed(), 2).ell == 6);
    CHECK(table1_row(table1_corrected(), 2).ell == 1);
}

TEST_CASE("assignment to rows") {
    const Atlas& a = Atlas::standard();
    const auto& m = standard_table1_match();
    CHECK(m.best_solutions >= 1);
    CHECK(m.ambiguities_within_t_orbits(table1_corrected()));
    for (int n = 1; n <= 98; ++n) {
        const auto& c = a.classes()[m.class_of_row[n - 1]];
        const auto& r = table1_row(table1_corrected(), n);
        CHECK(c.order == r.order);
        CHECK(c.class_size == r.ell);
        CHECK(c.g1_order == r.g1_order());
        CHECK(c.g0 == r.g0);
        CHECK(rows_of(c.maximal_subgroup_classes, m) ==
              [&] {
                  auto v = r.ms;
                  std::sort(v.begin(), v.end());
                  v.erase(std::unique(v.begin(), v.end()), v.end());
                  return v;
              }());
    }
}

TEST_CASE("maximal subgroups at spot rows match the printed table") {
    const Atlas& a = Atlas::standard();
    const auto& m = standard_table1_match();
    for (int n : {35, 36, 98}) {
        CAPTURE(n);
        auto printed = table1_row(table1_printed(), n).ms;
        std::sort(printed.begin(), printed.end());
        CHECK(rows_of(a.classes()[m.class_of_row[n - 1]].maximal_subgroup_classes, m) == printed);
    }
    // Row 1 prints the trivial group as its own maximal subgroup; a maximal
    // subgroup is proper here, so the computed list is empty.
    CHECK(table1_row(table1_printed(), 1).ms == std::vector<int>{1});
    CHECK(a.classes()[m.class_of_row[0]].maximal_subgroup_classes.empty());
}

TEST_CASE("triality on classes") {
    const Atlas& a = Atlas::standard();
    const auto& m = standard_table1_match();
    auto t = a.triality_on_classes();
    int fixed = 0;
    for (int c = 0; c < 98; ++c) {
        CHECK(t[t[t[c]]] == c);
        fixed += t[c] == c;
        CHECK(a.classes()[t[c]].order == a.classes()[c].order);
    }
    CHECK(fixed == 23);
    auto image = [&](int row) { return m.row_of_class[t[m.class_of_row[row - 1]]]; };
    CHECK(image(9) == 11);
    CHECK(image(33) == 34);
    CHECK(image(76) == 79);
    CHECK(table1_row(table1_printed(), 9).t[0] == 11);
    CHECK(table1_row(table1_printed(), 33).t[0] == 34);
    CHECK(table1_row(table1_printed(), 76).t[0] == 79);
}

TEST_CASE("matching fails loudly on a broken table") {
    auto rows = table1_corrected();
    rows[0].ell = 2;
    rows[1].ell = 1;
    rows[1].order = 3;
    CHECK_THROWS_AS(match_table1(Atlas::standard(), rows), FingerprintMismatch);
}

TEST_CASE("subgroup cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "triality_atlas_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    Atlas first(wd4(), dir.string());
    CHECK_FALSE(first.loaded_from_cache());
    Atlas second(wd4(), dir.string());
    CHECK(second.loaded_from_cache());
    CHECK(second.subgroups() == first.subgroups());
    CHECK(second.classes().size() == 98);
    std::filesystem::remove_all(dir);
}

}
