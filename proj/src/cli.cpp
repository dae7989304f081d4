#include "triality/cli.hpp"

#include "triality/automorphisms.hpp"
#include "triality/errors.hpp"
#include "triality/hurwitz.hpp"
#include "triality/hypercube.hpp"
#include "triality/resolvents.hpp"
#include "triality/triality_model.hpp"
#include "triality/witt.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace triality::cli {

namespace {

std::string join(const std::vector<int>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::vector<int> rows_of(const std::vector<int>& classes, const Table1Match& m) {
    std::vector<int> out;
    for (int c : classes) out.push_back(m.row_of_class[c]);
    std::sort(out.begin(), out.end());
    return out;
}

const char* pass(bool ok) { return ok ? "PASS" : "FAIL"; }

/// Seeded nonzero rationals with small numerators and denominators.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
    Rational nonzero(int bound = 20, int den_bound = 9) {
        std::uniform_int_distribution<int> num(-bound, bound - 1), den(1, den_bound);
        int n = num(rng_);
        if (n >= 0) ++n;  // skip zero without rejection
        return make_rational(n, den(rng_));
    }
    Rational any(int bound = 20, int den_bound = 9) {
        std::uniform_int_distribution<int> num(-bound, bound), den(1, den_bound);
        return make_rational(num(rng_), den(rng_));
    }

private:
    std::mt19937_64 rng_;
};

nlohmann::ordered_json coeff_json(const RationalPolynomial& p) {
    auto j = nlohmann::ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) j.push_back(to_string(p.coeff(i)));
    return j;
}

std::map<std::pair<int, int>, int> order_ell_multiset(const std::vector<Table1Row>& rows) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& r : rows) ++m[{r.order, r.ell}];
    return m;
}

std::map<std::pair<int, int>, int> order_ell_multiset(const Atlas& atlas) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& c : atlas.classes()) ++m[{c.order, c.class_size}];
    return m;
}

}  // namespace

nlohmann::ordered_json atlas_json(const Atlas& atlas, const Table1Match& match) {
    auto arr = nlohmann::ordered_json::array();
    for (int n = 1; n <= static_cast<int>(match.class_of_row.size()); ++n) {
        const auto& c = atlas.classes()[match.class_of_row[n - 1]];
        nlohmann::ordered_json j;
        j["row"] = n;
        j["class_id"] = c.class_id;
        j["order"] = c.order;
        j["class_size"] = c.class_size;
        j["g1_order"] = c.g1_order;
        j["g0"] = {{"type", g0_name(c.g0)}, {"in_v4", c.g0_in_v4}};
        j["maximal_subgroup_classes"] = c.maximal_subgroup_classes;
        j["maximal_subgroup_rows"] = rows_of(c.maximal_subgroup_classes, match);
        j["triality_images"] = c.triality_images;
        j["triality_rows"] = {match.row_of_class[c.triality_images[0]], match.row_of_class[c.triality_images[1]]};
        j["orbit_shape_z"] = c.orbit_shape_z;
        j["orbit_shape_z0"] = c.orbit_shape_z0;
        j["normalizer_order"] = c.normalizer_order;
        j["abstract"] = {{"abelian", c.abstract.abelian},
                         {"exponent", c.abstract.exponent},
                         {"derived_order", c.abstract.derived_order}};
        nlohmann::ordered_json hist;
        for (const auto& [o, k] : c.abstract.order_histogram) hist[std::to_string(o)] = k;
        j["abstract"]["order_histogram"] = hist;
        j["row_candidates"] = match.ambiguity[c.class_id];
        arr.push_back(j);
    }
    return arr;
}

std::string atlas_csv(const Atlas& atlas, const Table1Match& match) {
    std::ostringstream os;
    os << "N,|G|,l,|G1|,G0,MS,T,orbit_shape_z,orbit_shape_z0\n";
    for (int n = 1; n <= static_cast<int>(match.class_of_row.size()); ++n) {
        const auto& c = atlas.classes()[match.class_of_row[n - 1]];
        os << n << ',' << c.order << ',' << c.class_size << ',' << c.g1_order << ",\"" << g0_name(c.g0) << "\",\""
           << join(rows_of(c.maximal_subgroup_classes, match), " ") << "\",\""
           << match.row_of_class[c.triality_images[0]] << ',' << match.row_of_class[c.triality_images[1]] << "\",\""
           << join(c.orbit_shape_z, " ") << "\",\"" << join(c.orbit_shape_z0, " ") << "\"\n";
    }
    return os.str();
}

std::string atlas_text(const Atlas& atlas, const Table1Match& match) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "N" << std::setw(5) << "|G|" << std::setw(4) << "l" << std::setw(5) << "|G1|"
       << std::setw(14) << "G0" << std::setw(26) << "MS" << std::setw(8) << "T"
       << "Z shape\n";
    for (int n = 1; n <= static_cast<int>(match.class_of_row.size()); ++n) {
        const auto& c = atlas.classes()[match.class_of_row[n - 1]];
        os << std::setw(4) << n << std::setw(5) << c.order << std::setw(4) << c.class_size << std::setw(5)
           << c.g1_order << std::setw(14) << g0_name(c.g0) << std::setw(26)
           << join(rows_of(c.maximal_subgroup_classes, match), " ") << std::setw(8)
           << (std::to_string(match.row_of_class[c.triality_images[0]]) + "," +
               std::to_string(match.row_of_class[c.triality_images[1]]))
           << join(c.orbit_shape_z, " ") << "\n";
    }
    return os.str();
}

bool verify_atlas(std::ostream& out) {
    const Atlas& atlas = Atlas::standard();
    const auto& match = standard_table1_match();
    const auto& printed = table1_printed();
    const auto& corrected = table1_corrected();
    bool ok = true;

    const int n = static_cast<int>(atlas.classes().size());
    out << "atlas: " << atlas.subgroups().size() << " subgroups in " << n << " conjugacy classes: " << pass(n == 98)
        << "\n";
    ok &= n == 98;

    const auto computed = order_ell_multiset(atlas);
    const bool corrected_ok = computed == order_ell_multiset(corrected);
    out << "atlas: (|G|, l) multiset against the corrected table: " << pass(corrected_ok) << "\n";
    ok &= corrected_ok;
    if (computed != order_ell_multiset(printed)) {
        out << "atlas: the printed l column differs in rows";
        for (const auto& e : table1_errata())
            if (e.column == "l") out << " " << e.row << " (" << e.printed << " -> " << e.corrected << ")";
        out << "\n";
    }

    out << "atlas: assignment to rows: " << match.solutions << " consistent, " << match.best_solutions
        << " best; triality direction agrees for " << match.t_direction_agreements
        << " classes; S shape agrees for " << match.s_shape_agreements << " of " << match.s_shape_known << "\n";
    const bool within = match.ambiguities_within_t_orbits(corrected);
    out << "atlas: ambiguities confined to triality orbits: " << pass(within) << "\n";
    ok &= within;

    auto t = atlas.triality_on_classes();
    int fixed = 0, moved = 0;
    bool order3 = true;
    for (int c = 0; c < n; ++c) {
        if (t[c] == c)
            ++fixed;
        else
            ++moved;
        order3 &= t[t[t[c]]] == c;
    }
    out << "atlas: triality on classes has " << fixed << " fixed points and " << moved / 3
        << " three-cycles: " << pass(order3 && fixed == 23 && moved == 75) << "\n";
    ok &= order3 && fixed == 23 && moved == 75;
    return ok;
}

bool verify_functors(std::ostream& out) {
    bool ok = true;
    auto trivial = verify_triality_laws(standard_model({}));
    for (const auto& law : trivial.laws) out << "functors: trivial action: " << law.name << ": " << pass(law.passed) << "\n";
    ok &= trivial.all_passed();

    const GroupTable& g = wd4();
    std::map<std::string, int> passed;
    for (int x = 0; x < g.size(); ++x) {
        auto r = verify_triality_laws(standard_model({g.element(x)}));
        for (const auto& law : r.laws) passed[law.name] += law.passed;
        if (!r.all_passed()) {
            ok = false;
            out << "functors: failure for the cyclic group of " << g.element(x).str() << "\n";
        }
    }
    for (const auto& law : trivial.laws)
        out << "functors: cyclic subgroups: " << law.name << ": " << passed[law.name] << "/" << g.size() << "\n";

    const auto h = hypercube_model();
    out << "functors: class-1 half of {e1..e4} is the hypercube class " << h.class_one_is << "\n";
    return ok;
}

bool verify_witt(const VerifyOptions& opt, std::ostream& out) {
    RationalSampler rs(opt.seed);
    bool ok = true;

    int reciprocity_failures = 0;
    for (int i = 0; i < 2 * opt.iterations; ++i) {
        Rational a = rs.nonzero(), b = rs.nonzero();
        int prod = 1;
        for (const auto& v : support(DiagonalForm({a, b}))) prod *= hilbert_symbol(a, b, v);
        if (prod != 1) {
            if (reciprocity_failures++ == 0)
                out << "witt: reciprocity counterexample (" << to_string(a) << ", " << to_string(b) << ")\n";
        }
    }
    out << "witt: Hilbert reciprocity on " << 2 * opt.iterations << " pairs: " << pass(reciprocity_failures == 0)
        << "\n";
    ok &= reciprocity_failures == 0;

    std::map<std::string, int> good;
    std::vector<std::string> names;
    for (int i = 0; i < opt.iterations; ++i) {
        Rational x = rs.nonzero(), y = rs.nonzero(), z = rs.nonzero(), t = rs.nonzero();
        for (const auto& r : verify_basis_relations(x, y, z, t)) {
            if (!good.count(r.name)) names.push_back(r.name);
            const bool pass_both = r.symbolic && r.rational;
            good[r.name] += pass_both;
            if (!pass_both) {
                ok = false;
                out << "witt: " << r.name << " fails at (" << to_string(x) << ", " << to_string(y) << ", "
                    << to_string(z) << ", " << to_string(t) << ")\n";
            }
        }
    }
    for (const auto& name : names)
        out << "witt: " << name << ": " << good[name] << "/" << opt.iterations << " "
            << pass(good[name] == opt.iterations) << "\n";

    const auto tf = trace_form_split(Rational(2), Rational(3), Rational(5), Rational(7));
    out << "witt: trace form at (2,3,5,7): Q+ ~ <1,1,xy,zt> is " << (tf.plus_matches_q1 ? "true" : "false")
        << ", Q- ~ <x,y,z,t> is " << (tf.minus_matches_q ? "true" : "false") << " (the <2> factor)\n";
    return ok;
}

bool verify_automorphisms(std::ostream& out) {
    bool ok = true;
    const auto& aut = automorphism_group();
    const bool aut_ok = aut.size() == 1152 && aut.inner.size() == 96 && aut.outer_is_s3_x_c2();
    out << "automorphisms: |Aut| = " << aut.size() << ", |Inn| = " << aut.inner.size()
        << ", Aut/Inn of order " << aut.outer_order() << (aut.outer_is_s3_x_c2() ? " ~ S3 x C2" : "") << ": "
        << pass(aut_ok) << "\n";
    ok &= aut_ok;

    const auto& census = trialitarian_census();
    auto sizes = census.class_sizes();
    const bool census_ok = census.matrices.size() == 48 && sizes == std::vector<int>{16, 32} &&
                           census.classes[census.class_of(rho_tilde())].size() == 16 &&
                           census.classes[census.class_of(mu_tilde())].size() == 32;
    out << "automorphisms: trialitarian census " << census.matrices.size() << " in classes of sizes "
        << join(sizes, ", ") << ": " << pass(census_ok) << "\n";
    ok &= census_ok;

    auto fm = analyze_fixed_subgroup(mu_tilde());
    const bool fm_ok = fm.abstract.order == 12 && fm.dihedral;
    out << "automorphisms: Fix(mu) " << fm.abstract.str() << (fm.dihedral ? ", dihedral" : "") << ": "
        << pass(fm_ok) << "\n";
    ok &= fm_ok;

    auto fr = analyze_fixed_subgroup(rho_tilde());
    const bool fr_ok = fr.abstract.order == 24 && fr.involutions == 1 && fr.sylow2_is_q8;
    out << "automorphisms: Fix(rho) " << fr.abstract.str() << ", " << fr.involutions << " involution(s)"
        << (fr.sylow2_is_q8 ? ", Sylow-2 Q8" : "") << ": " << pass(fr_ok) << "\n";
    ok &= fr_ok;

    auto g2 = g2_plane_analysis();
    const bool g2_ok = g2.v1_fixed && g2.v2_fixed && g2.plane_invariant && g2.faithful && g2.dihedral;
    out << "automorphisms: plane <e1+e3, e2-e3> fixed by mu, Fix(mu) acts faithfully as a dihedral group of order "
        << g2.restricted_order << ": " << pass(g2_ok) << "\n";
    out << "automorphisms: orbit of the two vectors:";
    for (const auto& v : g2.orbit) out << " " << v.str();
    out << "\n";
    ok &= g2_ok;

    const Atlas& atlas = Atlas::standard();
    const auto& match = standard_table1_match();
    auto triples = rows_of(fixed_triple_classes(atlas), match);
    auto invariant = rows_of(triality_invariant_classes(atlas), match);
    std::vector<int> excluded;
    std::set_difference(invariant.begin(), invariant.end(), triples.begin(), triples.end(),
                        std::back_inserter(excluded));
    out << "automorphisms: rows fixed by a trialitarian automorphism: " << join(triples, " ") << "\n";
    out << "automorphisms: invariant rows without such a representative: " << join(excluded, " ") << "\n";
    return ok;
}

bool verify_hurwitz(std::ostream& out) {
    auto h = hurwitz_group();
    bool ok = h.elements.size() == 24 && h.closed();
    out << "hurwitz: " << h.elements.size() << " units, closed under multiplication: " << pass(ok) << "\n";

    const Quaternion r = rho_hat();
    const Quaternion r3 = r * r * r;
    const bool order3 = !(r == Quaternion::one()) && !(r * r == Quaternion::one()) && r3 == Quaternion::one();
    out << "hurwitz: rho_hat has order 3: " << pass(order3) << "\n";
    ok &= order3;

    const char* names[] = {"1", "i", "j", "k"};
    std::string cycle;
    bool permutes = true;
    for (int u = 1; u <= 3; ++u) {
        Quaternion img = r * Quaternion::unit(u) * r.inverse();
        int hit = 0;
        for (int w = 1; w <= 3; ++w)
            if (img == Quaternion::unit(w)) hit = w;
        permutes &= hit != 0 && hit != u;
        cycle += std::string(names[u]) + "->" + (hit ? names[hit] : "?") + (u < 3 ? " " : "");
    }
    out << "hurwitz: conjugation by rho_hat: " << cycle << ": " << pass(permutes) << "\n";
    ok &= permutes;

    const bool matrix = left_multiplication_matrix(r) == rho_matrix();
    out << "hurwitz: left multiplication by rho_hat is the matrix rho: " << pass(matrix) << "\n";
    ok &= matrix;
    return ok;
}

bool verify_resolvents(const VerifyOptions& opt, std::ostream& out) {
    RationalSampler rs(opt.seed);
    bool ok = true;
    int tested = 0, skipped = 0;
    double worst = 0;
    bool swap_ok = true, disc_ok = true;
    while (tested < opt.iterations) {
        Rational a = rs.any(), b = rs.any(), c = rs.any(), e = rs.nonzero();
        ResolventPair p;
        try {
            p = resolvent_pair(a, b, c, e);
        } catch (const NotSeparable&) {
            ++skipped;
            continue;
        }
        ++tested;
        worst = std::max(worst, max_relative_error(numeric_triality_oracle(a, b, c, e, 1), p.f4_prime));
        worst = std::max(worst, max_relative_error(numeric_triality_oracle(a, b, c, e, 2), p.f4_second));
        ResolventPair q = resolvent_pair(a, b, c, -e);
        swap_ok &= q.f4_prime == p.f4_second && q.f4_second == p.f4_prime;
        RationalPolynomial f = quartic(a, b, c, e);
        Rational d4 = poly_discriminant(f);
        disc_ok &= poly_discriminant(doubled_polynomial(f)) == f.coeff(0) * (16 * d4) * (16 * d4);
    }
    out << "resolvents: " << tested << " separable inputs (" << skipped << " skipped), worst relative error "
        << worst << ": " << pass(worst <= 1e-6) << "\n";
    out << "resolvents: e -> -e swaps the pair: " << pass(swap_ok) << "\n";
    out << "resolvents: disc f(x^2) = a0 (16 disc f)^2: " << pass(disc_ok) << "\n";
    ok = worst <= 1e-6 && swap_ok && disc_ok;
    return ok;
}

namespace {

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        err << "cannot write " << path << "\n";
        return 1;
    }
    f << text;
    return 0;
}

int cmd_atlas(const std::string& format, const std::string& path, std::ostream& out, std::ostream& err) {
    const Atlas& atlas = Atlas::standard();
    const auto& match = standard_table1_match();
    std::string text;
    if (format == "json")
        text = atlas_json(atlas, match).dump(2) + "\n";
    else if (format == "csv")
        text = atlas_csv(atlas, match);
    else
        text = atlas_text(atlas, match);
    return emit(text, path, out, err);
}

int cmd_triality_orbit(int row, std::ostream& out, std::ostream& err) {
    const Atlas& atlas = Atlas::standard();
    const auto& match = standard_table1_match();
    const int rows = static_cast<int>(match.class_of_row.size());
    if (row != 0 && (row < 1 || row > rows)) {
        err << "row must lie in 1.." << rows << "\n";
        return 2;
    }
    std::set<int> seen;
    for (int n = 1; n <= rows; ++n) {
        if (row != 0 && n != row) continue;
        if (seen.count(n)) continue;
        const auto& c = atlas.classes()[match.class_of_row[n - 1]];
        std::vector<int> orbit{n};
        for (int img : c.triality_images) {
            int r = match.row_of_class[img];
            if (std::find(orbit.begin(), orbit.end(), r) == orbit.end()) orbit.push_back(r);
        }
        for (int r : orbit) seen.insert(r);
        out << (orbit.size() == 1 ? "fixed " : "cycle ") << join(orbit, " -> ");
        if (orbit.size() == 3) out << " -> " << n;
        out << "   |G| = " << c.order << ", l = " << c.class_size << "\n";
    }
    return 0;
}

int cmd_resolvent(const std::vector<std::string>& coeffs, bool json, bool residuals, std::ostream& out,
                  std::ostream& err) {
    if (coeffs.size() != 4) {
        err << "--coeffs needs four values a b c e\n";
        return 2;
    }
    std::array<Rational, 4> v;
    try {
        for (int i = 0; i < 4; ++i) v[i] = parse_rational(coeffs[i]);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    const auto& [a, b, c, e] = v;
    ResolventPair p;
    try {
        p = resolvent_pair(a, b, c, e);
    } catch (const TrialityError& ex) {
        err << ex.what() << "\n";
        return 1;
    }
    RationalPolynomial f4 = quartic(a, b, c, e);
    RationalPolynomial f8 = doubled_polynomial(f4);
    double r1 = 0, r2 = 0;
    if (residuals) {
        try {
            r1 = max_relative_error(numeric_triality_oracle(a, b, c, e, 1), p.f4_prime);
            r2 = max_relative_error(numeric_triality_oracle(a, b, c, e, 2), p.f4_second);
        } catch (const RootFindingFailure& ex) {
            err << ex.what() << "\n";
            return 1;
        }
    }
    if (json) {
        nlohmann::ordered_json j;
        j["input"] = {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"e", to_string(e)}};
        j["f4"] = {{"text", f4.str()}, {"coefficients", coeff_json(f4)}};
        j["f8"] = {{"text", f8.str()}, {"coefficients", coeff_json(f8)}};
        j["f4_prime"] = {{"text", p.f4_prime.str()}, {"coefficients", coeff_json(p.f4_prime)}};
        j["f4_second"] = {{"text", p.f4_second.str()}, {"coefficients", coeff_json(p.f4_second)}};
        if (residuals) j["residuals"] = {{"f4_prime", r1}, {"f4_second", r2}};
        out << j.dump(2) << "\n";
    } else {
        out << "f4  = " << f4.str() << "\n";
        out << "f8  = " << f8.str() << "\n";
        out << "f4' = " << p.f4_prime.str() << "\n";
        out << "f4\" = " << p.f4_second.str() << "\n";
        if (residuals) out << "oracle residuals: " << r1 << " " << r2 << "\n";
    }
    return residuals && (r1 > 1e-6 || r2 > 1e-6) ? 1 : 0;
}

int cmd_hypercube(const std::string& format, const std::string& path, std::ostream& out, std::ostream& err) {
    auto h = hypercube_model();
    auto mismatches = check_hypercube_tables(h);
    std::string text;
    if (format == "json") {
        text = hypercube_to_json(h).dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (std::size_t v = 0; v < h.vertex_labels.size(); ++v) {
            os << std::left << std::setw(6) << h.vertex_labels[v] << h.vertices[v].str() << "  cells";
            for (const auto& name : h.cell_names(h.vertex_cells[v])) os << " " << name;
            os << "  class " << (h.vertex_class[v] == 0 ? 'X' : 'Y') << "\n";
        }
        os << "class-1 half of {e1..e4}: " << h.class_one_is << "\n";
        os << "tables: " << (mismatches.empty() ? "match" : "MISMATCH") << "\n";
        text = os.str();
    }
    int rc = emit(text, path, out, err);
    for (const auto& m : mismatches) err << m << "\n";
    return rc ? rc : (mismatches.empty() ? 0 : 1);
}

int cmd_verify(const std::string& what, const VerifyOptions& opt, std::ostream& out) {
    bool ok = true;
    const bool all = what == "all";
    if (all || what == "atlas") ok &= verify_atlas(out);
    if (all || what == "functors") ok &= verify_functors(out);
    if (all || what == "automorphisms") ok &= verify_automorphisms(out);
    if (all || what == "hurwitz") ok &= verify_hurwitz(out);
    if (all || what == "resolvents") ok &= verify_resolvents(opt, out);
    if (all || what == "witt") ok &= verify_witt(opt, out);
    out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Triality workbench for the Weyl group W(D4)", "triality"};
    app.require_subcommand(1);

    std::string format = "text", path;
    auto* atlas = app.add_subcommand("atlas", "Subgroup classes of W(D4) in classical table order");
    atlas->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    atlas->add_option("--out", path, "Write to this file instead of stdout");

    int row = 0;
    auto* orbit = app.add_subcommand("triality-orbit", "Triality orbits of subgroup classes");
    orbit->add_option("--row", row, "Only the orbit of this table row");

    std::vector<std::string> coeffs;
    bool json = false, residuals = false;
    auto* resolvent = app.add_subcommand("resolvent", "Trialitarian resolvents of x^4+ax^3+bx^2+cx+e^2");
    resolvent->add_option("--coeffs", coeffs, "a b c e as integers, p/q or decimals")->required()->expected(4);
    resolvent->add_flag("--json", json, "JSON output");
    resolvent->add_flag("--residuals", residuals, "Compare with the numeric root transport");

    std::string hformat = "text", hpath;
    auto* hyper = app.add_subcommand("hypercube", "Vertices, cells and identifications of the 4-cube");
    hyper->add_option("--format", hformat, "json or text")->check(CLI::IsMember({"json", "text"}));
    hyper->add_option("--out", hpath, "Write to this file instead of stdout");

    std::string what;
    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", what, "functors, witt, automorphisms, hurwitz, resolvents, atlas or all")
        ->required()
        ->check(CLI::IsMember({"functors", "witt", "automorphisms", "hurwitz", "resolvents", "atlas", "all"}));
    verify->add_option("--seed", vopt.seed, "Seed for random samples");
    verify->add_option("--iterations", vopt.iterations, "Random samples per check")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*atlas) return cmd_atlas(format, path, out, err);
        if (*orbit) return cmd_triality_orbit(row, out, err);
        if (*resolvent) return cmd_resolvent(coeffs, json, residuals, out, err);
        if (*hyper) return cmd_hypercube(hformat, hpath, out, err);
        if (*verify) return cmd_verify(what, vopt, out);
    } catch (const TrialityError& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace triality::cli
