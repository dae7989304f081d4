#pragma once

#include "triality/subgroup.hpp"

#include <cstdint>
#include <vector>

namespace triality {

/// An automorphism of W(D4) stored as the image of every table position.
struct GroupAutomorphism {
    std::vector<std::uint8_t> image;

    int operator()(int x) const { return image[x]; }
    bool operator==(const GroupAutomorphism&) const = default;
    auto operator<=>(const GroupAutomorphism&) const = default;

    /// (a*b)(x) = a(b(x)).
    GroupAutomorphism operator*(const GroupAutomorphism& o) const;
    GroupAutomorphism inverse() const;
    bool is_identity() const;
    int order() const;
    ElementSet apply(const ElementSet& s) const;
    bool is_automorphism_of(const GroupTable& g) const;

    static GroupAutomorphism identity(const GroupTable& g);
};

/// x -> m x m^{-1}; throws NotSignedMonomial if the group is not normalised.
GroupAutomorphism conjugation_automorphism(const GroupTable& g, const Matrix4& m);
/// Int(w): x -> w x w^{-1}.
GroupAutomorphism inner_automorphism(const GroupTable& g, int w);
GroupAutomorphism psi_automorphism(const GroupTable& g);

GroupAutomorphism mu_tilde();
GroupAutomorphism rho_tilde();
GroupAutomorphism nu_tilde();

ElementSet fixed_subgroup(const GroupTable& g, const GroupAutomorphism& a);

}  // namespace triality
