#pragma once

#include "triality/gamma_sets.hpp"
#include "triality/linear.hpp"
#include "triality/signed_perm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace triality {

/// An oriented 8/4 covering realised inside Q^4: eight points forming four
/// antipodal pairs (stored at positions 2k, 2k+1), a group acting through
/// matrices that permute the points, and a reference section of class 1.
struct OrientedModel {
    std::vector<Vector4> points;
    std::vector<Matrix4> generators;
    Section reference;

    /// Throws InvalidCovering when the points are not antipodal pairs or a
    /// generator does not permute them.
    void validate() const;

    PointMap point_map(const Matrix4& g) const;
    FiniteAction action() const;
    DoubleCovering covering() const;
    Orientation orientation() const { return Orientation{reference}; }
    /// Columns are the reference points in ascending index order.
    Matrix4 frame() const;

    /// Same points in canonical order (sorted pairs) and the reference
    /// replaced by the smallest section of its class. Two models with the
    /// same generators are equal as oriented coverings iff their
    /// canonical forms coincide.
    OrientedModel canonical() const;
};

/// Z = {±e_i} with reference {e1..e4}; the group acts through the given elements.
OrientedModel standard_model(const std::vector<SignedPermutation>& generators);

/// Model on ±(columns of B) with reference the columns of B.
OrientedModel model_from_frame(const Matrix4& frame, const std::vector<Matrix4>& generators);

/// (1/2) Σ_{z in w} z.
Vector4 section_vector(const OrientedModel& m, const Section& w);

OrientedModel c1_plus(const OrientedModel& m);
OrientedModel c2_plus(const OrientedModel& m);
OrientedModel kappa(const OrientedModel& m);

/// A point bijection commuting with the generators and the antipode and
/// carrying the orientation of `a` to that of `b`.
std::optional<PointMap> find_isomorphism(const OrientedModel& a, const OrientedModel& b);

struct LawCheck {
    std::string name;
    bool passed = false;
    PointMap witness;  // empty when no isomorphism exists
};

struct TrialityReport {
    std::vector<LawCheck> laws;
    bool all_passed() const;
};

TrialityReport verify_triality_laws(const OrientedModel& m);

/// The element of W(D4) sending e_i to the i-th frame column of the model,
/// composed with g: B^{-1} g B. Throws NotSignedMonomial if it leaves W(D4).
SignedPermutation frame_coordinates(const OrientedModel& m, const Matrix4& g);

/// f_i = μ e_i and g_i = μ² e_i.
Vector4 f_vector(int i);
Vector4 g_vector(int i);

}  // namespace triality
