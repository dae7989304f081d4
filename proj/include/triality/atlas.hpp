#pragma once

#include "triality/automorphism.hpp"
#include "triality/subgroup.hpp"

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace triality {

/// Conjugacy type of the image β(G) in Σ4.
enum class G0Type { Trivial, C2InV4, C2NotInV4, C3, V4, S2Squared, C4, S3, D4, A4, S4 };

std::string g0_name(G0Type t);
int g0_order(G0Type t);
G0Type classify_g0(const std::vector<Perm4>& image);

struct SubgroupClassRecord {
    int class_id = 0;
    ElementSet representative;
    int order = 0;
    int class_size = 0;  // ℓ
    int g1_order = 0;    // |G ∩ Σ2³|
    G0Type g0 = G0Type::Trivial;
    bool g0_in_v4 = false;
    std::vector<int> maximal_subgroup_classes;  // distinct class ids, ascending
    std::array<int, 2> triality_images{};       // classes of μ̃(G) and μ̃²(G)
    std::vector<int> orbit_shape_z;             // on {±e_i}, ascending
    std::vector<int> orbit_shape_z0;            // on the four fibers, ascending
    AbstractFingerprint abstract;
    int normalizer_order = 0;
};

class Atlas {
public:
    /// Enumerates every subgroup of `g` and groups them into conjugacy
    /// classes. When `cache_dir` is set the subgroup list is read from or
    /// written to a JSON file named after the table's content hash.
    explicit Atlas(const GroupTable& g, std::optional<std::string> cache_dir = std::nullopt);

    /// Built once from wd4(); honours TRIALITY_ATLAS_CACHE.
    static const Atlas& standard();

    const GroupTable& group() const { return *group_; }
    /// Sorted by (order, element bitset).
    const std::vector<ElementSet>& subgroups() const { return subgroups_; }
    const std::vector<SubgroupClassRecord>& classes() const { return classes_; }
    int class_of(const ElementSet& s) const;
    int subgroup_index(const ElementSet& s) const;

    /// class -> class of μ̃(G).
    std::vector<int> triality_on_classes() const;
    /// class -> class of a(G) for any automorphism.
    std::vector<int> act_on_classes(const GroupAutomorphism& a) const;

    std::pair<std::vector<int>, std::vector<int>> orbit_shapes(const SubgroupClassRecord& c) const;

    bool loaded_from_cache() const { return from_cache_; }

private:
    void enumerate();
    bool load_cache(const std::string& path);
    void save_cache(const std::string& path) const;
    void classify();

    const GroupTable* group_;
    std::vector<ElementSet> subgroups_;
    std::unordered_map<ElementSet, int, ElementSetHash> subgroup_index_;
    std::vector<int> subgroup_class_;
    std::vector<SubgroupClassRecord> classes_;
    bool from_cache_ = false;
};

/// Orbit sizes of a set of signed permutations acting on {±e_i} (8 points)
/// and on the four fibers.
std::vector<int> orbit_shape_on_z(const GroupTable& g, const ElementSet& s);
std::vector<int> orbit_shape_on_z0(const GroupTable& g, const ElementSet& s);

}  // namespace triality
