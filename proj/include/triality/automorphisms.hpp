#pragma once

#include "triality/atlas.hpp"
#include "triality/automorphism.hpp"
#include "triality/linear.hpp"

#include <map>
#include <string>
#include <vector>

namespace triality {

/// Aut(W(D4)) as a list of image tables, closed under composition.
struct AutomorphismGroup {
    std::vector<GroupAutomorphism> elements;  // sorted
    std::vector<GroupAutomorphism> inner;     // Int(w), sorted
    /// Coset of Inn containing each element, numbered 0..|Out|-1.
    std::vector<int> outer_class;
    /// Element-order histogram of Aut/Inn.
    std::map<int, int> outer_order_histogram;

    int size() const { return static_cast<int>(elements.size()); }
    int outer_order() const { return inner.empty() ? 0 : size() / static_cast<int>(inner.size()); }
    int index_of(const GroupAutomorphism& a) const;
    bool is_inner(const GroupAutomorphism& a) const;
    /// Aut/Inn has the order histogram of Σ3 × C2.
    bool outer_is_s3_x_c2() const;
    /// a b ≡ b a modulo Inn.
    bool commute_mod_inner(const GroupAutomorphism& a, const GroupAutomorphism& b) const;
};

/// Generated by every Int(w), μ̃, ν̃ and ψ. Built once.
const AutomorphismGroup& automorphism_group();

/// Elements u of μW ∪ μ²W with u³ = 1 and the automorphisms they induce.
struct TrialitarianCensus {
    std::vector<Matrix4> matrices;
    std::vector<GroupAutomorphism> automorphisms;  // parallel to matrices
    /// Aut-conjugacy classes as index lists into `matrices`, smallest first.
    std::vector<std::vector<int>> classes;
    bool closed_under_conjugation = false;

    int class_of(const GroupAutomorphism& a) const;
    std::vector<int> class_sizes() const;
};

const TrialitarianCensus& trialitarian_census();

struct FixedSubgroupReport {
    ElementSet group;
    AbstractFingerprint abstract;
    bool dihedral = false;
    int involutions = 0;
    bool sylow2_is_q8 = false;
};

FixedSubgroupReport analyze_fixed_subgroup(const GroupAutomorphism& a);

struct G2PlaneReport {
    Vector4 v1;  // e1 + e3
    Vector4 v2;  // e2 - e3
    bool v1_fixed = false;
    bool v2_fixed = false;
    bool plane_invariant = false;
    int fix_order = 0;
    int restricted_order = 0;  // distinct 2x2 matrices
    int rotations = 0;         // restricted elements of determinant +1
    bool faithful = false;
    bool dihedral = false;
    std::vector<Vector4> orbit;  // Fix(μ̃)-orbit of {v1, v2}, sorted
};

G2PlaneReport g2_plane_analysis();

/// Triality-invariant classes with a representative inside Fix(u) for some
/// trialitarian u. Class ids of the atlas, ascending.
std::vector<int> fixed_triple_classes(const Atlas& atlas);
/// Triality-invariant classes, ascending.
std::vector<int> triality_invariant_classes(const Atlas& atlas);

}  // namespace triality
