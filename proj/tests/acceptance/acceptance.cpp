// One line per acceptance criterion; exit status 0 only when all pass.

#include "triality/automorphisms.hpp"
#include "triality/errors.hpp"
#include "triality/hurwitz.hpp"
#include "triality/hypercube.hpp"
#include "triality/resolvents.hpp"
#include "triality/table1.hpp"
#include "triality/triality_model.hpp"
#include "triality/witt.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace triality;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::vector<int> rows_of(const std::vector<int>& classes, const Table1Match& m) {
    std::vector<int> out;
    for (int c : classes) out.push_back(m.row_of_class[c]);
    std::sort(out.begin(), out.end());
    return out;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (;;) {
        int n = num(rng);
        if (!nonzero || n != 0) return make_rational(n, den(rng));
    }
}

Outcome group_core() {
    Outcome o;
    const auto& g = wd4();
    o.require(g.size() == 192, "|W(D4)| = 192");
    o.require(enumerate_wreath().size() == 384, "|S2 wr S4| = 384");
    int kernel = 0;
    std::vector<int> centre;
    for (int x = 0; x < g.size(); ++x) {
        kernel += beta(g.element(x)) == Perm4::identity();
        bool central = true;
        for (int y = 0; y < g.size() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
        if (central) centre.push_back(x);
    }
    o.require(kernel == 8, "beta kernel of size 8");
    o.require(centre.size() == 2 && g.element(centre[1]) == w0(), "centre {1, w0}");
    int bad = 0;
    for (int x = 0; x < 384; ++x) {
        auto a = SignedPermutation::from_key(x);
        Matrix4 ma = to_matrix(a);
        for (int y = 0; y < 384; ++y) {
            auto b = SignedPermutation::from_key(y);
            bad += !(to_matrix(compose(a, b)) == ma * to_matrix(b));
        }
    }
    o.require(bad == 0, "to_matrix homomorphism on 384^2 products");
    return o;
}

Outcome triality_matrices() {
    Outcome o;
    const Matrix4 mu = mu_matrix(), rho = rho_matrix(), nu = nu_matrix();
    o.require(mu.pow(3) == Matrix4::identity(), "mu^3 = I");
    o.require(rho.pow(3) == Matrix4::identity(), "rho^3 = I");
    o.require(nu.pow(2) == Matrix4::identity(), "nu^2 = I");
    o.require(mu.is_orthogonal() && rho.is_orthogonal() && nu.is_orthogonal(), "orthogonality");
    const Matrix4 w = -Matrix4::from_ints({{{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}}});
    o.require(rho * mu.inverse() == w, "rho mu^-1 entrywise");
    return o;
}

Outcome atlas_criterion() {
    Outcome o;
    const Atlas& atlas = Atlas::standard();
    o.require(atlas.classes().size() == 98, "98 classes");

    std::map<std::pair<int, int>, int> computed, printed, corrected;
    for (const auto& c : atlas.classes()) ++computed[{c.order, c.class_size}];
    for (const auto& r : table1_printed()) ++printed[{r.order, r.ell}];
    for (const auto& r : table1_corrected()) ++corrected[{r.order, r.ell}];
    if (computed != printed) {
        std::ostringstream s;
        s << "(|G|, l) multiset differs from the printed table:";
        for (const auto& [k, n] : computed) {
            int p = printed.count(k) ? printed.at(k) : 0;
            if (p != n) s << " (" << k.first << "," << k.second << ") computed " << n << " printed " << p << ";";
        }
        for (const auto& [k, n] : printed)
            if (!computed.count(k)) s << " (" << k.first << "," << k.second << ") computed 0 printed " << n << ";";
        o.note(s.str());
    }
    o.require(computed == printed, "(|G|, l) multiset equals the printed table");
    o.note(std::string("(|G|, l) multiset against the table with the listed errata: ") +
           (computed == corrected ? "equal" : "different"));

    const Table1Match* match = nullptr;
    try {
        match = &standard_table1_match();
    } catch (const FingerprintMismatch& e) {
        o.require(false, std::string("fingerprint assignment: ") + e.what());
        return o;
    }
    for (int n : {1, 35, 36, 98}) {
        auto ms = table1_row(table1_printed(), n).ms;
        std::sort(ms.begin(), ms.end());
        auto got = rows_of(atlas.classes()[match->class_of_row[n - 1]].maximal_subgroup_classes, *match);
        o.require(got == ms, "MS of row " + std::to_string(n) + " (" + join(got) + " vs " + join(ms) + ")");
    }
    o.require(match->ambiguities_within_t_orbits(table1_corrected()), "ambiguities inside triality orbits");
    o.note("assignment: " + std::to_string(match->solutions) + " consistent, " +
           std::to_string(match->best_solutions) + " best");
    return o;
}

Outcome triality_on_classes() {
    Outcome o;
    const Atlas& atlas = Atlas::standard();
    const auto& m = standard_table1_match();
    auto t = atlas.triality_on_classes();
    int fixed = 0, moved = 0;
    bool order3 = true;
    for (int c = 0; c < static_cast<int>(t.size()); ++c) {
        order3 &= t[t[t[c]]] == c;
        (t[c] == c ? fixed : moved)++;
    }
    o.require(order3, "order 3");
    o.require(fixed == 23, "23 fixed points, got " + std::to_string(fixed));
    o.require(moved == 75, "25 three-cycles, got " + std::to_string(moved / 3));
    for (auto [row, expect] : {std::pair{9, 11}, {33, 34}, {76, 79}}) {
        int img = m.row_of_class[t[m.class_of_row[row - 1]]];
        o.require(img == expect && table1_row(table1_printed(), row).t[0] == expect,
                  "row " + std::to_string(row) + " -> " + std::to_string(img));
    }
    return o;
}

Outcome fixed_triples() {
    Outcome o;
    const Atlas& atlas = Atlas::standard();
    const auto& m = standard_table1_match();
    auto triples = rows_of(fixed_triple_classes(atlas), m);
    auto invariant = rows_of(triality_invariant_classes(atlas), m);
    std::vector<int> excluded;
    std::set_difference(invariant.begin(), invariant.end(), triples.begin(), triples.end(),
                        std::back_inserter(excluded));
    o.require(triples == std::vector<int>{1, 2, 6, 7, 8, 20, 29, 30, 31, 32, 36, 61, 85},
              "fixed triples: " + join(triples));
    o.require(excluded == std::vector<int>{24, 39, 53, 56, 65, 70, 86, 96, 97, 98},
              "invariant but excluded: " + join(excluded));
    return o;
}

Outcome automorphisms() {
    Outcome o;
    const auto& aut = automorphism_group();
    o.require(aut.size() == 1152, "|Aut| = 1152");
    o.require(aut.outer_order() == 12, "|Aut/Inn| = 12");
    const auto& census = trialitarian_census();
    o.require(census.matrices.size() == 48, "census of 48");
    o.require(census.class_sizes() == std::vector<int>{16, 32}, "classes of sizes 16 and 32");
    auto fm = analyze_fixed_subgroup(mu_tilde());
    o.require(fm.abstract.order == 12 && fm.dihedral, "Fix(mu) dihedral of order 12");
    auto fr = analyze_fixed_subgroup(rho_tilde());
    o.require(fr.abstract.order == 24 && fr.involutions == 1 && fr.sylow2_is_q8,
              "Fix(rho) of order 24 with one involution and Sylow-2 Q8");
    return o;
}

Outcome functor_laws() {
    Outcome o;
    o.require(verify_triality_laws(standard_model({})).all_passed(), "trivial action");
    int failures = 0;
    for (const auto& g : wd4().elements()) failures += !verify_triality_laws(standard_model({g})).all_passed();
    o.require(failures == 0, std::to_string(failures) + " cyclic subgroups fail");
    return o;
}

Outcome hypercube_hurwitz() {
    Outcome o;
    auto h = hypercube_model();
    auto mismatches = check_hypercube_tables(h);
    for (const auto& s : mismatches) o.note(s);
    o.require(mismatches.empty(), "hypercube tables");
    auto one = h.cell_names(h.vertex_cells[h.vertex_index("1")]);
    std::sort(one.begin(), one.end());
    o.require(one == std::vector<std::string>{"A", "Bbar", "C", "D"}, "vertex 1 = {A, Bbar, C, D}");
    auto q = hurwitz_group();
    o.require(q.elements.size() == 24 && q.closed(), "24 Hurwitz units closed under multiplication");
    auto r = rho_hat();
    o.require(!(r == Quaternion::one()) && r * r * r == Quaternion::one(), "rho_hat of order 3");
    bool cycles = true;
    for (int u = 1; u <= 3; ++u) cycles &= r * Quaternion::unit(u) * r.inverse() == Quaternion::unit(u % 3 + 1);
    o.require(cycles, "conjugation by rho_hat cycles i, j, k");
    return o;
}

Outcome resolvents() {
    Outcome o;
    std::mt19937_64 rng(2024);
    int tested = 0;
    double worst = 0;
    bool swap = true, disc = true;
    while (tested < 100) {
        Rational a = random_rational(rng, false), b = random_rational(rng, false), c = random_rational(rng, false);
        Rational e = random_rational(rng, true);
        ResolventPair p;
        try {
            p = resolvent_pair(a, b, c, e);
        } catch (const NotSeparable&) {
            continue;
        }
        ++tested;
        worst = std::max(worst, max_relative_error(numeric_triality_oracle(a, b, c, e, 1), p.f4_prime));
        worst = std::max(worst, max_relative_error(numeric_triality_oracle(a, b, c, e, 2), p.f4_second));
        auto q = resolvent_pair(a, b, c, -e);
        swap &= q.f4_prime == p.f4_second && q.f4_second == p.f4_prime;
        auto f = quartic(a, b, c, e);
        Rational d = poly_discriminant(f);
        disc &= poly_discriminant(doubled_polynomial(f)) == f.coeff(0) * (16 * d) * (16 * d);
    }
    std::ostringstream s;
    s << "worst relative error " << worst;
    o.note(s.str());
    o.require(worst <= 1e-6, "oracle agreement");
    o.require(swap, "e -> -e swap");
    o.require(disc, "discriminant identity");
    return o;
}

Outcome witt() {
    Outcome o;
    std::mt19937_64 rng(2025);
    int reciprocity = 0;
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng, true), b = random_rational(rng, true);
        int prod = 1;
        for (const auto& v : support(DiagonalForm({a, b}))) prod *= hilbert_symbol(a, b, v);
        reciprocity += prod != 1;
    }
    o.require(reciprocity == 0, "Hilbert reciprocity");
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        Rational x = random_rational(rng, true), y = random_rational(rng, true), z = random_rational(rng, true),
                 t = random_rational(rng, true);
        for (const auto& r : verify_basis_relations(x, y, z, t)) failures += !(r.symbolic && r.rational);
    }
    o.require(failures == 0, "basis relations");
    auto f = biquadratic_family_symbolic();
    o.require(f.q == SymbolicForm::of({"x", "y", "z", "t"}) && f.q1 == SymbolicForm::of({"1", "1", "xy", "zt"}) &&
                  f.q2 == SymbolicForm::of({"1", "1", "xz", "yt"}) &&
                  f.q3 == SymbolicForm::of({"1", "1", "xt", "yz"}),
              "biquadratic family");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"group core", group_core},
        {"triality matrices", triality_matrices},
        {"atlas", atlas_criterion},
        {"triality on classes", triality_on_classes},
        {"fixed triples", fixed_triples},
        {"automorphisms", automorphisms},
        {"functor laws", functor_laws},
        {"hypercube and Hurwitz", hypercube_hurwitz},
        {"resolvents", resolvents},
        {"Witt relations", witt},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << " (" << secs
                  << " s)\n";
        for (const auto& n : o.notes) std::cout << "      " << n << "\n";
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
