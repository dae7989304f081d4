#pragma once

#include "triality/signed_perm.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace triality {

/// A subset of the 192 elements of W(D4), indexed by GroupTable position.
struct ElementSet {
    std::array<std::uint64_t, 3> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    int count() const;
    bool subset_of(const ElementSet& o) const;
    ElementSet operator&(const ElementSet& o) const;
    std::vector<int> elements() const;

    bool operator==(const ElementSet&) const = default;
    auto operator<=>(const ElementSet&) const = default;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const {
        return std::hash<std::uint64_t>{}(s.w[0] * 0x9E3779B97F4A7C15ULL ^ s.w[1] * 0xC2B2AE3D27D4EB4FULL ^ s.w[2]);
    }
};

ElementSet make_set(const std::vector<int>& elements);

/// The subgroup of `g` generated by the given positions.
ElementSet generate(const GroupTable& g, const std::vector<int>& generators);
bool is_subgroup(const GroupTable& g, const ElementSet& s);

/// x S x^{-1}.
ElementSet conjugate_set(const GroupTable& g, const ElementSet& s, int x);

/// Abstract invariants of a finite group given as a subset of a table.
struct AbstractFingerprint {
    int order = 0;
    bool abelian = false;
    int exponent = 1;
    std::map<int, int> order_histogram;  // element order -> count
    int derived_order = 1;

    bool operator==(const AbstractFingerprint&) const = default;
    std::string str() const;
};

AbstractFingerprint fingerprint(const GroupTable& g, const ElementSet& s);
ElementSet derived_subgroup(const GroupTable& g, const ElementSet& s);
ElementSet centralizer(const GroupTable& g, const ElementSet& s);
ElementSet normalizer(const GroupTable& g, const ElementSet& s);

/// Recognisers that only use element-order data and small searches.
bool is_dihedral(const GroupTable& g, const ElementSet& s);
bool is_quaternion8(const GroupTable& g, const ElementSet& s);
/// All Sylow 2-subgroups have the same type; returns one of them.
ElementSet sylow2(const GroupTable& g, const ElementSet& s);

}  // namespace triality
