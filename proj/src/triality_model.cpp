#include "triality/triality_model.hpp"

#include "triality/errors.hpp"

#include <algorithm>

namespace triality {

void OrientedModel::validate() const {
    if (points.size() != 8) throw InvalidCovering("an oriented model has eight points");
    for (int k = 0; k < 4; ++k)
        if (!(points[2 * k + 1] == -points[2 * k])) throw InvalidCovering("points must come in antipodal pairs");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw InvalidCovering("points must be distinct");
    for (const auto& g : generators) point_map(g);
    if (!covering().is_section(reference)) throw InvalidCovering("reference is not a section");
}

PointMap OrientedModel::point_map(const Matrix4& g) const {
    PointMap out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Vector4 image = g * points[i];
        auto it = std::find(points.begin(), points.end(), image);
        if (it == points.end()) throw InvalidCovering("generator does not preserve the point set");
        out[i] = static_cast<int>(it - points.begin());
    }
    return out;
}

FiniteAction OrientedModel::action() const {
    std::vector<PointMap> gens;
    for (const auto& g : generators) gens.push_back(point_map(g));
    std::vector<std::string> labels;
    for (const auto& p : points) labels.push_back(p.str());
    return FiniteAction(static_cast<int>(points.size()), std::move(gens), std::move(labels));
}

DoubleCovering OrientedModel::covering() const {
    PointMap sigma(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) sigma[i] = static_cast<int>(i ^ 1u);
    return DoubleCovering(action(), std::move(sigma));
}

Matrix4 OrientedModel::frame() const {
    Matrix4 b;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) b.m[i][j] = points[reference.members[j]].c[i];
    return b;
}

OrientedModel OrientedModel::canonical() const {
    // Order pairs by their larger member, positive representative first.
    std::vector<Vector4> reps;
    for (int k = 0; k < 4; ++k) reps.push_back(std::max(points[2 * k], points[2 * k + 1]));
    std::sort(reps.begin(), reps.end());
    OrientedModel out;
    for (const auto& r : reps) {
        out.points.push_back(r);
        out.points.push_back(-r);
    }
    out.generators = generators;
    Section ref;
    for (int z : reference.members) {
        auto it = std::find(out.points.begin(), out.points.end(), points[z]);
        ref.members.push_back(static_cast<int>(it - out.points.begin()));
    }
    std::sort(ref.members.begin(), ref.members.end());
    auto cov = out.covering();
    Orientation o{ref};
    for (const auto& s : sections(cov))
        if (o.label(cov, s) == 1) {
            out.reference = s;
            break;
        }
    return out;
}

OrientedModel model_from_frame(const Matrix4& frame, const std::vector<Matrix4>& generators) {
    OrientedModel m;
    for (int j = 0; j < 4; ++j) {
        Vector4 col;
        for (int i = 0; i < 4; ++i) col.c[i] = frame.m[i][j];
        m.points.push_back(col);
        m.points.push_back(-col);
    }
    m.generators = generators;
    m.reference.members = {0, 2, 4, 6};
    m.validate();
    return m;
}

OrientedModel standard_model(const std::vector<SignedPermutation>& generators) {
    std::vector<Matrix4> mats;
    for (const auto& g : generators) {
        if (!g.in_wd4()) throw NotInWD4("model generators must lie in W(D4): " + g.str());
        mats.push_back(to_matrix(g));
    }
    return model_from_frame(Matrix4::identity(), mats);
}

Vector4 section_vector(const OrientedModel& m, const Section& w) {
    Vector4 s;
    for (int z : w.members) s = s + m.points[z];
    return s * Rational(1, 2);
}

namespace {

Vector4 column(const Matrix4& b, int j) {
    Vector4 v;
    for (int i = 0; i < 4; ++i) v.c[i] = b.m[i][j];
    return v;
}

/// The spinor half with the given label, realised by section vectors, and
/// oriented by the frame B·t.
OrientedModel spinor_model(const OrientedModel& m, int label, const Matrix4& t) {
    m.validate();
    auto cov = m.covering();
    auto halves = split_spinor(cov, m.orientation());
    const auto& half = label == 1 ? halves.first : halves.second;

    OrientedModel out;
    out.generators = m.generators;
    std::vector<bool> taken(half.members.size(), false);
    const auto& sig = half.covering.sigma();
    for (std::size_t i = 0; i < half.members.size(); ++i) {
        if (taken[i]) continue;
        taken[i] = taken[sig[i]] = true;
        out.points.push_back(section_vector(m, half.members[i]));
        out.points.push_back(section_vector(m, half.members[sig[i]]));
    }

    Matrix4 target = m.frame() * t;
    for (int j = 0; j < 4; ++j) {
        Vector4 v = column(target, j);
        auto it = std::find(out.points.begin(), out.points.end(), v);
        if (it == out.points.end()) throw InvalidCovering("transported frame is not contained in the spinor half");
        out.reference.members.push_back(static_cast<int>(it - out.points.begin()));
    }
    std::sort(out.reference.members.begin(), out.reference.members.end());
    out.validate();
    return out;
}

}  // namespace

OrientedModel c1_plus(const OrientedModel& m) { return spinor_model(m, 1, mu_matrix()); }

OrientedModel c2_plus(const OrientedModel& m) { return spinor_model(m, 2, mu_matrix() * mu_matrix()); }

OrientedModel kappa(const OrientedModel& m) {
    OrientedCovering oc{m.covering(), m.orientation()};
    OrientedModel out = m;
    out.reference = triality::kappa(oc).orientation.reference;
    return out;
}

std::optional<PointMap> find_isomorphism(const OrientedModel& a, const OrientedModel& b) {
    auto ca = a.covering();
    auto cb = b.covering();
    auto accept = [&](const PointMap& f) {
        Section img = apply_to_section(f, a.reference);
        return b.orientation().label(cb, img) == 1;
    };
    return find_equivariant_bijection(ca.total(), cb.total(), {{ca.sigma(), cb.sigma()}}, accept);
}

bool TrialityReport::all_passed() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.passed; });
}

TrialityReport verify_triality_laws(const OrientedModel& m) {
    TrialityReport r;
    auto record = [&](std::string name, const OrientedModel& lhs, const OrientedModel& rhs) {
        LawCheck law{std::move(name), false, {}};
        if (auto f = find_isomorphism(lhs, rhs)) {
            law.passed = true;
            law.witness = *f;
        }
        r.laws.push_back(std::move(law));
    };
    OrientedModel c1 = c1_plus(m);
    OrientedModel c11 = c1_plus(c1);
    record("(C1+)^3 = id", c1_plus(c11), m);
    record("(C1+)^2 = C2+", c11, c2_plus(m));
    record("C1+ kappa = kappa C2+", c1_plus(kappa(m)), kappa(c2_plus(m)));
    return r;
}

SignedPermutation frame_coordinates(const OrientedModel& m, const Matrix4& g) {
    Matrix4 b = m.frame();
    return from_matrix(b.inverse() * g * b);
}

Vector4 f_vector(int i) { return mu_matrix() * Vector4::basis(i); }

Vector4 g_vector(int i) { return mu_matrix() * mu_matrix() * Vector4::basis(i); }

}  // namespace triality
