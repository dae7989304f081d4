#include "triality/atlas.hpp"

#include "triality/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace triality {

std::string g0_name(G0Type t) {
    switch (t) {
        case G0Type::Trivial: return "1";
        case G0Type::C2InV4: return "S2 in V4";
        case G0Type::C2NotInV4: return "S2 not in V4";
        case G0Type::C3: return "C3";
        case G0Type::V4: return "V4";
        case G0Type::S2Squared: return "S2^2";
        case G0Type::C4: return "C4";
        case G0Type::S3: return "S3";
        case G0Type::D4: return "D4";
        case G0Type::A4: return "A4";
        case G0Type::S4: return "S4";
    }
    return "?";
}

int g0_order(G0Type t) {
    switch (t) {
        case G0Type::Trivial: return 1;
        case G0Type::C2InV4:
        case G0Type::C2NotInV4: return 2;
        case G0Type::C3: return 3;
        case G0Type::V4:
        case G0Type::S2Squared:
        case G0Type::C4: return 4;
        case G0Type::S3: return 6;
        case G0Type::D4: return 8;
        case G0Type::A4: return 12;
        case G0Type::S4: return 24;
    }
    return 0;
}

namespace {

bool in_klein(const Perm4& p) {
    static const std::array<Perm4, 4> klein{Perm4::identity(), Perm4::parse_cycles("(1 2)(3 4)"),
                                            Perm4::parse_cycles("(1 3)(2 4)"), Perm4::parse_cycles("(1 4)(2 3)")};
    return std::find(klein.begin(), klein.end(), p) != klein.end();
}

}  // namespace

G0Type classify_g0(const std::vector<Perm4>& image) {
    std::set<int> ranks;
    bool has4 = false, all_klein = true;
    for (const auto& p : image) {
        ranks.insert(p.rank());
        if (p.order() == 4) has4 = true;
        if (!in_klein(p)) all_klein = false;
    }
    switch (ranks.size()) {
        case 1: return G0Type::Trivial;
        case 2: return all_klein ? G0Type::C2InV4 : G0Type::C2NotInV4;
        case 3: return G0Type::C3;
        case 4: return has4 ? G0Type::C4 : (all_klein ? G0Type::V4 : G0Type::S2Squared);
        case 6: return G0Type::S3;
        case 8: return G0Type::D4;
        case 12: return G0Type::A4;
        case 24: return G0Type::S4;
        default: throw std::logic_error("not a subgroup of S4");
    }
}

namespace {

std::vector<int> union_find_shape(int n, const std::vector<std::vector<int>>& maps) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (const auto& m : maps)
        for (int x = 0; x < n; ++x) parent[root(x)] = root(m[x]);
    std::vector<int> count(n, 0);
    for (int x = 0; x < n; ++x) ++count[root(x)];
    std::vector<int> shape;
    for (int c : count)
        if (c) shape.push_back(c);
    std::sort(shape.begin(), shape.end());
    return shape;
}

}  // namespace

std::vector<int> orbit_shape_on_z(const GroupTable& g, const ElementSet& s) {
    // Point 2j + b stands for (-1)^b e_j.
    std::vector<std::vector<int>> maps;
    for (int x : s.elements()) {
        const auto& e = g.element(x);
        std::vector<int> m(8);
        for (int j = 0; j < 4; ++j) {
            int i = e.perm.p[j];
            int neg = e.signs[i] < 0 ? 1 : 0;
            m[2 * j] = 2 * i + neg;
            m[2 * j + 1] = 2 * i + (1 - neg);
        }
        maps.push_back(std::move(m));
    }
    return union_find_shape(8, maps);
}

std::vector<int> orbit_shape_on_z0(const GroupTable& g, const ElementSet& s) {
    std::vector<std::vector<int>> maps;
    for (int x : s.elements()) {
        const auto& e = g.element(x);
        maps.push_back({e.perm.p[0], e.perm.p[1], e.perm.p[2], e.perm.p[3]});
    }
    return union_find_shape(4, maps);
}

Atlas::Atlas(const GroupTable& g, std::optional<std::string> cache_dir) : group_(&g) {
    std::string path;
    if (cache_dir && !cache_dir->empty()) {
        char name[64];
        std::snprintf(name, sizeof name, "subgroups-%016llx.json", static_cast<unsigned long long>(g.content_hash()));
        path = (std::filesystem::path(*cache_dir) / name).string();
        from_cache_ = load_cache(path);
    }
    if (!from_cache_) {
        enumerate();
        if (!path.empty()) save_cache(path);
    }
    for (std::size_t i = 0; i < subgroups_.size(); ++i) subgroup_index_[subgroups_[i]] = static_cast<int>(i);
    classify();
}

const Atlas& Atlas::standard() {
    static const Atlas atlas = [] {
        const char* dir = std::getenv("TRIALITY_ATLAS_CACHE");
        return Atlas(wd4(), dir ? std::optional<std::string>(dir) : std::nullopt);
    }();
    return atlas;
}

void Atlas::enumerate() {
    const GroupTable& g = *group_;
    // Distinct cyclic subgroups, each with one generator.
    std::vector<std::pair<ElementSet, int>> cyclic;
    {
        std::set<ElementSet> seen;
        for (int x = 0; x < g.size(); ++x) {
            ElementSet c = generate(g, {x});
            if (seen.insert(c).second) cyclic.emplace_back(c, x);
        }
    }
    std::unordered_map<ElementSet, int, ElementSetHash> index;
    std::vector<std::pair<ElementSet, std::vector<int>>> found;
    ElementSet trivial = make_set({g.identity()});
    found.emplace_back(trivial, std::vector<int>{});
    index[trivial] = 0;
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (const auto& [c, x] : cyclic) {
            const ElementSet h = found[head].first;
            if (c.subset_of(h)) continue;
            std::vector<int> gens = found[head].second;
            gens.push_back(x);
            ElementSet j = generate(g, gens);
            if (index.emplace(j, static_cast<int>(found.size())).second) found.emplace_back(j, std::move(gens));
        }
    }
    subgroups_.clear();
    for (auto& f : found) subgroups_.push_back(f.first);
    std::sort(subgroups_.begin(), subgroups_.end(), [](const ElementSet& a, const ElementSet& b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
}

bool Atlas::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (!j.is_array()) return false;
        std::vector<ElementSet> subs;
        std::set<ElementSet> seen;
        for (const auto& list : j) {
            ElementSet s;
            for (const auto& x : list) {
                int v = x.get<int>();
                if (v < 0 || v >= group_->size()) return false;
                s.set(v);
            }
            if (!s.test(group_->identity()) || group_->size() % s.count() != 0 || !seen.insert(s).second) return false;
            subs.push_back(s);
        }
        std::sort(subs.begin(), subs.end(), [](const ElementSet& a, const ElementSet& b) {
            int ca = a.count(), cb = b.count();
            return ca != cb ? ca < cb : a < b;
        });
        subgroups_ = std::move(subs);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void Atlas::save_cache(const std::string& path) const {
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : subgroups_) j.push_back(s.elements());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
}

void Atlas::classify() {
    const GroupTable& g = *group_;
    const int ns = static_cast<int>(subgroups_.size());
    subgroup_class_.assign(ns, -1);

    struct Proto {
        ElementSet canonical;
        std::vector<int> members;
    };
    std::vector<Proto> protos;
    for (int i = 0; i < ns; ++i) {
        if (subgroup_class_[i] >= 0) continue;
        Proto p{subgroups_[i], {}};
        std::set<int> members;
        for (int x = 0; x < g.size(); ++x) {
            ElementSet c = conjugate_set(g, subgroups_[i], x);
            auto it = subgroup_index_.find(c);
            if (it == subgroup_index_.end()) throw std::logic_error("subgroup list is not closed under conjugation");
            members.insert(it->second);
            p.canonical = std::min(p.canonical, c);
        }
        p.members.assign(members.begin(), members.end());
        for (int m : p.members) subgroup_class_[m] = static_cast<int>(protos.size());
        protos.push_back(std::move(p));
    }

    // Canonical class order: by order, then by the smallest member bitset.
    std::vector<int> perm(protos.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        int ca = protos[a].canonical.count(), cb = protos[b].canonical.count();
        return ca != cb ? ca < cb : protos[a].canonical < protos[b].canonical;
    });
    std::vector<int> rename(protos.size());
    for (std::size_t k = 0; k < perm.size(); ++k) rename[perm[k]] = static_cast<int>(k);
    for (int& c : subgroup_class_) c = rename[c];

    const GroupAutomorphism mu = conjugation_automorphism(g, mu_matrix());
    const GroupAutomorphism mu2 = mu * mu;

    classes_.clear();
    for (std::size_t k = 0; k < perm.size(); ++k) {
        const Proto& p = protos[perm[k]];
        SubgroupClassRecord r;
        r.class_id = static_cast<int>(k);
        r.representative = p.canonical;
        r.order = p.canonical.count();
        r.class_size = static_cast<int>(p.members.size());
        r.normalizer_order = normalizer(g, p.canonical).count();

        std::vector<Perm4> image;
        for (int x : p.canonical.elements()) {
            const auto& e = g.element(x);
            if (e.perm == Perm4::identity()) ++r.g1_order;
            image.push_back(beta(e));
        }
        r.g0 = classify_g0(image);
        r.g0_in_v4 = std::all_of(image.begin(), image.end(), in_klein);
        r.orbit_shape_z = orbit_shape_on_z(g, p.canonical);
        r.orbit_shape_z0 = orbit_shape_on_z0(g, p.canonical);
        r.abstract = fingerprint(g, p.canonical);
        classes_.push_back(std::move(r));
    }

    // Maximal subgroups of each representative.
    for (auto& r : classes_) {
        std::vector<int> proper;
        for (int i = 0; i < ns; ++i) {
            const ElementSet& h = subgroups_[i];
            if (h.count() < r.order && r.order % h.count() == 0 && h.subset_of(r.representative)) proper.push_back(i);
        }
        std::set<int> ms;
        for (int i : proper) {
            bool maximal = true;
            for (int j : proper)
                if (j != i && subgroups_[j].count() > subgroups_[i].count() && subgroups_[i].subset_of(subgroups_[j])) {
                    maximal = false;
                    break;
                }
            if (maximal) ms.insert(subgroup_class_[i]);
        }
        r.maximal_subgroup_classes.assign(ms.begin(), ms.end());
        r.triality_images = {class_of(mu.apply(r.representative)), class_of(mu2.apply(r.representative))};
    }
}

int Atlas::subgroup_index(const ElementSet& s) const {
    auto it = subgroup_index_.find(s);
    if (it == subgroup_index_.end()) throw std::out_of_range("not a subgroup in the atlas");
    return it->second;
}

int Atlas::class_of(const ElementSet& s) const { return subgroup_class_[subgroup_index(s)]; }

std::vector<int> Atlas::triality_on_classes() const {
    std::vector<int> t;
    for (const auto& c : classes_) t.push_back(c.triality_images[0]);
    return t;
}

std::vector<int> Atlas::act_on_classes(const GroupAutomorphism& a) const {
    std::vector<int> t;
    for (const auto& c : classes_) t.push_back(class_of(a.apply(c.representative)));
    return t;
}

std::pair<std::vector<int>, std::vector<int>> Atlas::orbit_shapes(const SubgroupClassRecord& c) const {
    return {orbit_shape_on_z(*group_, c.representative), orbit_shape_on_z0(*group_, c.representative)};
}

}  // namespace triality
