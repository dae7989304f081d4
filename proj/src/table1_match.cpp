#include "triality/errors.hpp"
#include "triality/table1.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace triality {

namespace {

std::vector<std::vector<int>> class_orbits(const Atlas& atlas) {
    const auto& cls = atlas.classes();
    std::vector<bool> seen(cls.size(), false);
    std::vector<std::vector<int>> out;
    for (const auto& c : cls) {
        if (seen[c.class_id]) continue;
        std::vector<int> orbit{c.class_id};
        for (int img : c.triality_images)
            if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
        for (int x : orbit) seen[x] = true;
        out.push_back(orbit);
    }
    // Smallest groups first so that maximal subgroups are always placed.
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return cls[a[0]].order < cls[b[0]].order;
    });
    return out;
}

std::vector<std::vector<int>> row_orbits(const std::vector<Table1Row>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> owner(n + 1, -1);
    std::vector<std::vector<int>> out;
    for (const auto& r : rows) {
        if (owner[r.n] >= 0) continue;
        std::vector<int> orbit{r.n};
        for (int t : r.t)
            if (std::find(orbit.begin(), orbit.end(), t) == orbit.end()) orbit.push_back(t);
        for (int x : orbit) {
            if (x < 1 || x > n || owner[x] >= 0)
                throw FingerprintMismatch("column T does not split the rows into orbits at row " + std::to_string(r.n));
            owner[x] = static_cast<int>(out.size());
        }
        out.push_back(orbit);
    }
    for (const auto& orbit : out) {
        if (orbit.size() != 1 && orbit.size() != 3)
            throw FingerprintMismatch("triality orbit of size " + std::to_string(orbit.size()) + " in column T");
        if (orbit.size() == 3) {
            const auto& a = rows[orbit[0] - 1];
            const auto& b = rows[orbit[1] - 1];
            const auto& c = rows[orbit[2] - 1];
            if (b.t[0] != c.n || b.t[1] != a.n || c.t[0] != a.n || c.t[1] != b.n)
                throw FingerprintMismatch("column T is not a 3-cycle at row " + std::to_string(a.n));
        }
    }
    return out;
}

struct Search {
    const Atlas& atlas;
    const std::vector<Table1Row>& rows;
    const MatchOptions& opt;
    std::vector<std::vector<int>> corbits;
    std::vector<std::vector<int>> rorbits;
    std::vector<std::vector<bool>> local;  // [class][row-1]
    std::vector<int> row_of_class;
    std::vector<bool> row_used;
    std::vector<bool> rorbit_used;

    Table1Match result;
    std::vector<int> best;
    std::vector<std::set<int>> amb;
    std::size_t deepest = 0;

    bool locally_compatible(const SubgroupClassRecord& c, const Table1Row& r) const {
        if (c.order != r.order || c.class_size != r.ell || c.g1_order != r.g1_order() || c.g0 != r.g0) return false;
        if (c.orbit_shape_z0 != g0_orbit_shape(r.g0)) return false;
        if (auto h = expected_order_histogram(r.g); h && *h != c.abstract.order_histogram) return false;
        return true;
    }

    bool ms_compatible(int cls, int row) const {
        std::set<int> mapped;
        for (int m : atlas.classes()[cls].maximal_subgroup_classes) {
            if (row_of_class[m] == 0) return false;
            mapped.insert(row_of_class[m]);
        }
        const auto& ms = rows[row - 1].ms;
        return mapped == std::set<int>(ms.begin(), ms.end());
    }

    int score() const {
        int s = 0;
        for (const auto& c : atlas.classes()) {
            const auto& r = rows[row_of_class[c.class_id] - 1];
            if (c.triality_images[0] != c.class_id && row_of_class[c.triality_images[0]] == r.t[0]) ++s;
            if (!r.s_shape.empty() && r.s_shape == c.orbit_shape_z) ++s;
        }
        return s;
    }

    void leaf() {
        ++result.solutions;
        int s = score();
        if (best.empty() || s > result.best_score) {
            result.best_score = s;
            result.best_solutions = 0;
            best.clear();
            for (auto& a : amb) a.clear();
        }
        if (s < result.best_score) return;
        ++result.best_solutions;
        if (best.empty() || row_of_class < best) best = row_of_class;
        for (std::size_t c = 0; c < row_of_class.size(); ++c) amb[c].insert(row_of_class[c]);
    }

    void run(std::size_t k) {
        deepest = std::max(deepest, k);
        if (result.solutions >= opt.max_solutions) {
            result.truncated = true;
            return;
        }
        if (k == corbits.size()) {
            leaf();
            return;
        }
        const auto& co = corbits[k];
        for (std::size_t ro = 0; ro < rorbits.size(); ++ro) {
            if (rorbit_used[ro] || rorbits[ro].size() != co.size()) continue;
            std::vector<int> perm = rorbits[ro];
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (std::size_t i = 0; i < co.size() && ok; ++i) ok = local[co[i]][perm[i] - 1];
                // Members of one triality orbit have the same order, so their
                // maximal subgroups are placed already.
                for (std::size_t i = 0; i < co.size() && ok; ++i) ok = ms_compatible(co[i], perm[i]);
                if (!ok) continue;
                for (std::size_t i = 0; i < co.size(); ++i) row_of_class[co[i]] = perm[i];
                rorbit_used[ro] = true;
                run(k + 1);
                rorbit_used[ro] = false;
                for (int c : co) row_of_class[c] = 0;
                if (result.truncated) return;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
};

}  // namespace

bool Table1Match::ambiguities_within_t_orbits(const std::vector<Table1Row>& rows) const {
    for (std::size_t c = 0; c < ambiguity.size(); ++c) {
        if (ambiguity[c].size() <= 1) continue;
        const auto& r = rows.at(row_of_class[c] - 1);
        for (int x : ambiguity[c])
            if (x != r.n && x != r.t[0] && x != r.t[1]) return false;
    }
    return true;
}

Table1Match match_table1(const Atlas& atlas, const std::vector<Table1Row>& rows, const MatchOptions& opt) {
    const auto& cls = atlas.classes();
    if (cls.size() != rows.size())
        throw FingerprintMismatch(std::to_string(cls.size()) + " classes against " + std::to_string(rows.size()) +
                                  " rows");
    Search s{atlas, rows, opt, class_orbits(atlas), row_orbits(rows), {}, {}, {}, {}, {}, {}, {}};
    s.local.assign(cls.size(), std::vector<bool>(rows.size(), false));
    for (const auto& c : cls)
        for (const auto& r : rows) s.local[c.class_id][r.n - 1] = s.locally_compatible(c, r);
    s.row_of_class.assign(cls.size(), 0);
    s.row_used.assign(rows.size() + 1, false);
    s.rorbit_used.assign(s.rorbits.size(), false);
    s.amb.assign(cls.size(), {});
    s.run(0);
    if (s.result.solutions == 0) {
        std::string msg = "no assignment of classes to rows respects the table; stuck at classes";
        for (int c : s.corbits[s.deepest]) msg += " " + std::to_string(c);
        throw FingerprintMismatch(msg);
    }

    Table1Match m = std::move(s.result);
    m.row_of_class = s.best;
    m.class_of_row.assign(rows.size(), -1);
    for (std::size_t c = 0; c < m.row_of_class.size(); ++c) m.class_of_row[m.row_of_class[c] - 1] = static_cast<int>(c);
    for (const auto& a : s.amb) m.ambiguity.emplace_back(a.begin(), a.end());
    for (const auto& c : cls) {
        const auto& r = rows[m.row_of_class[c.class_id] - 1];
        if (c.triality_images[0] != c.class_id) {
            ++m.max_score;
            if (m.row_of_class[c.triality_images[0]] == r.t[0]) ++m.t_direction_agreements;
        }
        if (!r.s_shape.empty()) {
            ++m.max_score;
            ++m.s_shape_known;
            if (r.s_shape == c.orbit_shape_z) ++m.s_shape_agreements;
        }
    }
    return m;
}

const Table1Match& standard_table1_match() {
    static const Table1Match m = match_table1(Atlas::standard(), table1_corrected());
    return m;
}

}  // namespace triality
