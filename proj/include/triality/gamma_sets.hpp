#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace triality {

/// A bijection of {0..m-1}, stored as the image list.
using PointMap = std::vector<int>;

PointMap compose_maps(const PointMap& a, const PointMap& b);  // a after b
PointMap invert_map(const PointMap& a);
PointMap identity_map(int m);
int map_sign(const PointMap& a);

/// A finitely generated group acting on an indexed carrier. The generated
/// group is closed eagerly at construction.
class FiniteAction {
public:
    FiniteAction(int carrier_size, std::vector<PointMap> generators, std::vector<std::string> labels = {});

    int carrier_size() const { return size_; }
    const std::vector<PointMap>& generators() const { return generators_; }
    /// Every element of the generated group; identity first, rest sorted.
    const std::vector<PointMap>& group_elements() const { return elements_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int x) const;

    std::vector<std::vector<int>> orbits() const;
    std::vector<int> orbit_sizes() const;  // sorted ascending

    static constexpr std::size_t kMaxGroupOrder = 200000;

private:
    int size_;
    std::vector<PointMap> generators_;
    std::vector<PointMap> elements_;
    std::vector<std::string> labels_;
};

/// Sign of the permutation each group element induces; aligned with group_elements().
/// Throws CarrierTooSmall when the carrier has fewer than two points.
std::vector<int> discriminant_character(const FiniteAction& x);
bool character_is_trivial(const FiniteAction& x);

/// A degree-d covering with trivial action: total point i*d + k lies over base point i.
struct TrivialCovering {
    FiniteAction total;
    FiniteAction base;
    std::vector<int> projection;
    int degree;
};
TrivialCovering trivial_covering(int n, int d);

struct Section {
    std::vector<int> members;  // sorted
    bool operator==(const Section&) const = default;
    auto operator<=>(const Section&) const = default;
};

class DoubleCovering {
public:
    /// Throws InvalidCovering if sigma is not a fixed-point-free involution
    /// commuting with every generator.
    DoubleCovering(FiniteAction total, PointMap sigma);

    const FiniteAction& total() const { return total_; }
    const PointMap& sigma() const { return sigma_; }
    int base_size() const { return static_cast<int>(fibers_.size()); }
    /// Fibers {z, sigma(z)} with z < sigma(z), ordered by z.
    const std::vector<std::pair<int, int>>& fibers() const { return fibers_; }
    int fiber_of(int z) const { return fiber_index_[z]; }
    /// The induced action on the base Z/sigma.
    FiniteAction base() const;

    bool is_section(const Section& w) const;

private:
    FiniteAction total_;
    PointMap sigma_;
    std::vector<std::pair<int, int>> fibers_;
    std::vector<int> fiber_index_;
};

/// The 2/n trivial double covering.
DoubleCovering trivial_double_covering(int n);

/// All 2^n sections in canonical (sorted) order.
std::vector<Section> sections(const DoubleCovering& cov);
Section apply_to_section(const PointMap& g, const Section& w);
Section complement(const DoubleCovering& cov, const Section& w);
std::string section_label(const FiniteAction& action, const Section& w);

/// The covering of sections by complementary pairs; carrier order = sections(cov).
DoubleCovering clifford_covering(const DoubleCovering& cov);

enum class Parity { Same, Different };
/// "Same" iff |w ∩ w2| ≡ n (mod 2).
Parity delta_parity(const DoubleCovering& cov, const Section& w, const Section& w2);

struct Orientation {
    Section reference;  // a member of the class labelled 1
    /// 1 or 2.
    int label(const DoubleCovering& cov, const Section& w) const;
};

/// Throws NotOrientable when the discriminant character of the action is nontrivial.
Orientation orientation_from_section(const DoubleCovering& cov, const Section& w);

struct OrientedCovering {
    DoubleCovering cov;
    Orientation orientation;
};

struct SpinorHalf {
    DoubleCovering covering;        // carrier = members, sigma = complement
    std::vector<Section> members;   // canonical order
};

/// The two delta-parity halves, labelled 1 and 2 by the orientation.
/// Throws OddDegreeBase when n is odd.
std::pair<SpinorHalf, SpinorHalf> split_spinor(const DoubleCovering& cov, const Orientation& o);

/// Swap the orientation labels.
OrientedCovering kappa(const OrientedCovering& x);

/// Componentwise actions; both inputs need the same number of generators.
DoubleCovering disjoint_union(const DoubleCovering& a, const DoubleCovering& b);
FiniteAction product_action(const FiniteAction& a, const FiniteAction& b);

/// Search for a bijection f : X -> Y with f∘g_k = h_k∘f for all generator
/// pairs (g_k, h_k). Additional pairs of maps may be supplied (for example
/// the covering involutions). `accept` vets complete candidates.
std::optional<PointMap> find_equivariant_bijection(
    const FiniteAction& x, const FiniteAction& y,
    const std::vector<std::pair<PointMap, PointMap>>& extra = {},
    const std::function<bool(const PointMap&)>& accept = {});

/// Bijection of section sets induced by a point bijection between coverings.
PointMap induced_section_map(const DoubleCovering& from, const DoubleCovering& to, const PointMap& f);

}  // namespace triality
