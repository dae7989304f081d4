#include "triality/gamma_sets.hpp"

#include "triality/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace triality {

PointMap compose_maps(const PointMap& a, const PointMap& b) {
    PointMap r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

PointMap invert_map(const PointMap& a) {
    PointMap r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

PointMap identity_map(int m) {
    PointMap r(m);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

int map_sign(const PointMap& a) {
    // Parity from the cycle count: sign = (-1)^(m - #cycles).
    std::vector<bool> seen(a.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int x = static_cast<int>(s); !seen[x]; x = a[x]) seen[x] = true;
    }
    return ((static_cast<int>(a.size()) - cycles) % 2) ? -1 : 1;
}

// ---------------------------------------------------------- FiniteAction

FiniteAction::FiniteAction(int carrier_size, std::vector<PointMap> generators, std::vector<std::string> labels)
    : size_(carrier_size), generators_(std::move(generators)), labels_(std::move(labels)) {
    if (carrier_size < 0) throw InvalidCovering("negative carrier size");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != size_)
        throw InvalidCovering("label table size does not match the carrier");
    for (const auto& g : generators_) {
        if (static_cast<int>(g.size()) != size_) throw InvalidCovering("generator has the wrong length");
        std::vector<bool> hit(size_, false);
        for (int x : g) {
            if (x < 0 || x >= size_ || hit[x]) throw InvalidCovering("generator is not a bijection of the carrier");
            hit[x] = true;
        }
    }
    std::set<PointMap> seen;
    PointMap id = identity_map(size_);
    seen.insert(id);
    std::deque<PointMap> queue{id};
    while (!queue.empty()) {
        PointMap x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators_) {
            PointMap y = compose_maps(g, x);
            if (seen.insert(y).second) {
                if (seen.size() > kMaxGroupOrder) throw InvalidCovering("generated group is too large to close eagerly");
                queue.push_back(std::move(y));
            }
        }
    }
    seen.erase(id);
    elements_.reserve(seen.size() + 1);
    elements_.push_back(id);
    elements_.insert(elements_.end(), seen.begin(), seen.end());
}

std::string FiniteAction::label(int x) const {
    return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::vector<std::vector<int>> FiniteAction::orbits() const {
    std::vector<int> parent(size_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (const auto& g : generators_)
        for (int x = 0; x < size_; ++x) {
            int a = root(x), b = root(g[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(size_, -1);
    for (int x = 0; x < size_; ++x) {
        int r = root(x);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(x);
    }
    return out;
}

std::vector<int> FiniteAction::orbit_sizes() const {
    std::vector<int> s;
    for (const auto& o : orbits()) s.push_back(static_cast<int>(o.size()));
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<int> discriminant_character(const FiniteAction& x) {
    if (x.carrier_size() < 2)
        throw CarrierTooSmall("the discriminant needs at least two points, carrier has " + std::to_string(x.carrier_size()));
    std::vector<int> chi;
    chi.reserve(x.group_elements().size());
    for (const auto& g : x.group_elements()) chi.push_back(map_sign(g));
    return chi;
}

bool character_is_trivial(const FiniteAction& x) {
    if (x.carrier_size() < 2)
        throw CarrierTooSmall("the discriminant needs at least two points, carrier has " + std::to_string(x.carrier_size()));
    // A character is trivial iff it is trivial on generators.
    for (const auto& g : x.generators())
        if (map_sign(g) != 1) return false;
    return true;
}

TrivialCovering trivial_covering(int n, int d) {
    if (n < 1 || d < 1) throw InvalidCovering("trivial_covering needs n >= 1 and d >= 1");
    std::vector<int> proj(n * d);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) proj[i * d + k] = i;
    return TrivialCovering{FiniteAction(n * d, {}), FiniteAction(n, {}), proj, d};
}

// -------------------------------------------------------- DoubleCovering

DoubleCovering::DoubleCovering(FiniteAction total, PointMap sigma) : total_(std::move(total)), sigma_(std::move(sigma)) {
    const int m = total_.carrier_size();
    if (static_cast<int>(sigma_.size()) != m) throw InvalidCovering("involution has the wrong length");
    if (m % 2) throw InvalidCovering("a double covering needs an even carrier");
    for (int z = 0; z < m; ++z) {
        if (sigma_[z] < 0 || sigma_[z] >= m) throw InvalidCovering("involution out of range");
        if (sigma_[z] == z) throw InvalidCovering("involution has a fixed point at " + total_.label(z));
        if (sigma_[sigma_[z]] != z) throw InvalidCovering("sigma is not an involution");
    }
    for (const auto& g : total_.generators())
        for (int z = 0; z < m; ++z)
            if (g[sigma_[z]] != sigma_[g[z]]) throw InvalidCovering("a generator does not commute with the involution");
    fiber_index_.assign(m, -1);
    for (int z = 0; z < m; ++z) {
        if (z < sigma_[z]) {
            fiber_index_[z] = fiber_index_[sigma_[z]] = static_cast<int>(fibers_.size());
            fibers_.emplace_back(z, sigma_[z]);
        }
    }
}

FiniteAction DoubleCovering::base() const {
    std::vector<PointMap> gens;
    for (const auto& g : total_.generators()) {
        PointMap b(fibers_.size());
        for (std::size_t i = 0; i < fibers_.size(); ++i) b[i] = fiber_index_[g[fibers_[i].first]];
        gens.push_back(std::move(b));
    }
    return FiniteAction(base_size(), std::move(gens));
}

bool DoubleCovering::is_section(const Section& w) const {
    if (static_cast<int>(w.members.size()) != base_size()) return false;
    std::vector<bool> hit(base_size(), false);
    for (int z : w.members) {
        if (z < 0 || z >= total_.carrier_size()) return false;
        int f = fiber_index_[z];
        if (hit[f]) return false;
        hit[f] = true;
    }
    return std::is_sorted(w.members.begin(), w.members.end());
}

DoubleCovering trivial_double_covering(int n) {
    auto t = trivial_covering(n, 2);
    PointMap sigma(2 * n);
    for (int i = 0; i < n; ++i) {
        sigma[2 * i] = 2 * i + 1;
        sigma[2 * i + 1] = 2 * i;
    }
    return DoubleCovering(t.total, sigma);
}

std::vector<Section> sections(const DoubleCovering& cov) {
    const int n = cov.base_size();
    if (n > 20) throw InvalidCovering("too many sections to enumerate");
    std::vector<Section> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Section s;
        for (int i = 0; i < n; ++i) s.members.push_back((mask >> i) & 1u ? cov.fibers()[i].second : cov.fibers()[i].first);
        std::sort(s.members.begin(), s.members.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Section apply_to_section(const PointMap& g, const Section& w) {
    Section r;
    r.members.reserve(w.members.size());
    for (int z : w.members) r.members.push_back(g[z]);
    std::sort(r.members.begin(), r.members.end());
    return r;
}

Section complement(const DoubleCovering& cov, const Section& w) { return apply_to_section(cov.sigma(), w); }

std::string section_label(const FiniteAction& action, const Section& w) {
    std::string s = "{";
    for (std::size_t i = 0; i < w.members.size(); ++i) {
        if (i) s += ",";
        s += action.label(w.members[i]);
    }
    return s + "}";
}

namespace {

int section_position(const std::vector<Section>& all, const Section& w) {
    auto it = std::lower_bound(all.begin(), all.end(), w);
    if (it == all.end() || !(*it == w)) throw InvalidCovering("not a section of this covering");
    return static_cast<int>(it - all.begin());
}

FiniteAction section_action(const DoubleCovering& cov, const std::vector<Section>& members) {
    std::vector<PointMap> gens;
    for (const auto& g : cov.total().generators()) {
        PointMap m(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) m[i] = section_position(members, apply_to_section(g, members[i]));
        gens.push_back(std::move(m));
    }
    std::vector<std::string> labels;
    for (const auto& s : members) labels.push_back(section_label(cov.total(), s));
    return FiniteAction(static_cast<int>(members.size()), std::move(gens), std::move(labels));
}

PointMap complement_map(const DoubleCovering& cov, const std::vector<Section>& members) {
    PointMap sig(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) sig[i] = section_position(members, complement(cov, members[i]));
    return sig;
}

}  // namespace

DoubleCovering clifford_covering(const DoubleCovering& cov) {
    auto all = sections(cov);
    FiniteAction act = section_action(cov, all);
    return DoubleCovering(std::move(act), complement_map(cov, all));
}

Parity delta_parity(const DoubleCovering& cov, const Section& w, const Section& w2) {
    if (!cov.is_section(w) || !cov.is_section(w2)) throw InvalidCovering("delta_parity needs two sections");
    std::vector<int> common;
    std::set_intersection(w.members.begin(), w.members.end(), w2.members.begin(), w2.members.end(), std::back_inserter(common));
    int k = static_cast<int>(common.size());
    return (k % 2) == (cov.base_size() % 2) ? Parity::Same : Parity::Different;
}

int Orientation::label(const DoubleCovering& cov, const Section& w) const {
    return delta_parity(cov, reference, w) == Parity::Same ? 1 : 2;
}

Orientation orientation_from_section(const DoubleCovering& cov, const Section& w) {
    if (!cov.is_section(w)) throw InvalidCovering("orientation needs a section");
    if (!character_is_trivial(cov.total())) throw NotOrientable("the discriminant character is nontrivial");
    return Orientation{w};
}

std::pair<SpinorHalf, SpinorHalf> split_spinor(const DoubleCovering& cov, const Orientation& o) {
    if (cov.base_size() % 2) throw OddDegreeBase("spinor split needs an even base, got n = " + std::to_string(cov.base_size()));
    if (!cov.is_section(o.reference)) throw InvalidCovering("orientation reference is not a section");
    std::vector<Section> one, two;
    for (auto& s : sections(cov)) (o.label(cov, s) == 1 ? one : two).push_back(std::move(s));
    auto make = [&](std::vector<Section> members) {
        FiniteAction act = section_action(cov, members);
        PointMap sig = complement_map(cov, members);
        return SpinorHalf{DoubleCovering(std::move(act), std::move(sig)), std::move(members)};
    };
    return {make(std::move(one)), make(std::move(two))};
}

OrientedCovering kappa(const OrientedCovering& x) {
    // Switching one fiber leaves an intersection of n-1 points, which is
    // always of the opposite parity class.
    Section ref = x.orientation.reference;
    const auto& fib = x.cov.fibers().at(x.cov.fiber_of(ref.members.at(0)));
    for (int& z : ref.members)
        if (z == fib.first || z == fib.second) z = (z == fib.first) ? fib.second : fib.first;
    std::sort(ref.members.begin(), ref.members.end());
    return OrientedCovering{x.cov, Orientation{ref}};
}

DoubleCovering disjoint_union(const DoubleCovering& a, const DoubleCovering& b) {
    const auto& ga = a.total().generators();
    const auto& gb = b.total().generators();
    if (ga.size() != gb.size()) throw InvalidCovering("disjoint union needs matching generator lists");
    const int ma = a.total().carrier_size(), mb = b.total().carrier_size();
    std::vector<PointMap> gens;
    for (std::size_t k = 0; k < ga.size(); ++k) {
        PointMap g(ma + mb);
        for (int z = 0; z < ma; ++z) g[z] = ga[k][z];
        for (int z = 0; z < mb; ++z) g[ma + z] = ma + gb[k][z];
        gens.push_back(std::move(g));
    }
    PointMap sig(ma + mb);
    for (int z = 0; z < ma; ++z) sig[z] = a.sigma()[z];
    for (int z = 0; z < mb; ++z) sig[ma + z] = ma + b.sigma()[z];
    return DoubleCovering(FiniteAction(ma + mb, std::move(gens)), std::move(sig));
}

FiniteAction product_action(const FiniteAction& a, const FiniteAction& b) {
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    if (ga.size() != gb.size()) throw InvalidCovering("product needs matching generator lists");
    const int ma = a.carrier_size(), mb = b.carrier_size();
    std::vector<PointMap> gens;
    for (std::size_t k = 0; k < ga.size(); ++k) {
        PointMap g(ma * mb);
        for (int i = 0; i < ma; ++i)
            for (int j = 0; j < mb; ++j) g[i * mb + j] = ga[k][i] * mb + gb[k][j];
        gens.push_back(std::move(g));
    }
    return FiniteAction(ma * mb, std::move(gens));
}

std::optional<PointMap> find_equivariant_bijection(const FiniteAction& x, const FiniteAction& y,
                                                   const std::vector<std::pair<PointMap, PointMap>>& extra,
                                                   const std::function<bool(const PointMap&)>& accept) {
    const int m = x.carrier_size();
    if (y.carrier_size() != m || x.generators().size() != y.generators().size()) return std::nullopt;
    std::vector<std::pair<PointMap, PointMap>> pairs;
    for (std::size_t k = 0; k < x.generators().size(); ++k) pairs.emplace_back(x.generators()[k], y.generators()[k]);
    for (const auto& e : extra) {
        if (static_cast<int>(e.first.size()) != m || static_cast<int>(e.second.size()) != m) return std::nullopt;
        pairs.push_back(e);
    }

    // Orbits under all constraint maps; the image of one point per orbit
    // determines the whole candidate on that orbit.
    std::vector<PointMap> xmaps;
    for (const auto& p : pairs) xmaps.push_back(p.first);
    auto orbit_list = FiniteAction(m, xmaps).orbits();

    PointMap f(m, -1);
    std::vector<bool> used(m, false);
    std::optional<PointMap> found;

    std::function<bool(std::size_t)> search = [&](std::size_t oi) -> bool {
        if (oi == orbit_list.size()) {
            if (!accept || accept(f)) {
                found = f;
                return true;
            }
            return false;
        }
        const int rep = orbit_list[oi].front();
        for (int target = 0; target < m; ++target) {
            if (used[target]) continue;
            std::vector<int> assigned;
            bool ok = true;
            auto assign = [&](int p, int q) {
                if (f[p] >= 0) return f[p] == q;
                if (used[q]) return false;
                f[p] = q;
                used[q] = true;
                assigned.push_back(p);
                return true;
            };
            std::deque<int> queue;
            if (assign(rep, target)) queue.push_back(rep); else ok = false;
            while (ok && !queue.empty()) {
                int p = queue.front();
                queue.pop_front();
                for (const auto& [g, h] : pairs) {
                    int gp = g[p];
                    bool fresh = f[gp] < 0;
                    if (!assign(gp, h[f[p]])) { ok = false; break; }
                    if (fresh) queue.push_back(gp);
                }
            }
            if (ok && search(oi + 1)) return true;
            for (int p : assigned) {
                used[f[p]] = false;
                f[p] = -1;
            }
        }
        return false;
    };
    search(0);
    return found;
}

PointMap induced_section_map(const DoubleCovering& from, const DoubleCovering& to, const PointMap& f) {
    auto src = sections(from);
    auto dst = sections(to);
    PointMap r(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) r[i] = section_position(dst, apply_to_section(f, src[i]));
    return r;
}

}  // namespace triality
