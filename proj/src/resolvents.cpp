#include "triality/resolvents.hpp"

#include "triality/errors.hpp"
#include "triality/linear.hpp"
#include "triality/signed_perm.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace triality {

RationalPolynomial quartic(const Rational& a, const Rational& b, const Rational& c, const Rational& e) {
    return RationalPolynomial({e * e, c, b, a, Rational(1)});
}

bool doubled_is_separable(const RationalPolynomial& f) { return poly_discriminant(doubled_polynomial(f)) != 0; }

ResolventPair resolvent_pair(const Rational& a, const Rational& b, const Rational& c, const Rational& e) {
    if (e == 0) throw ZeroConstant("the constant term e^2 must be nonzero");
    if (!doubled_is_separable(quartic(a, b, c, e)))
        throw NotSeparable("f(x^2) has a repeated root for (" + to_string(a) + ", " + to_string(b) + ", " +
                           to_string(c) + ", " + to_string(e) + ")");
    auto build = [&](const Rational& s) {
        const Rational x2 = Rational(3, 8) * a * a - b / 2 + 3 * s;
        const Rational x1 = a * a * a / 16 - a * b / 4 + c + a * s / 2;
        const Rational half = a * a / 16 - b / 4 - s / 2;
        return RationalPolynomial({half * half, x1, x2, a, Rational(1)});
    };
    return {build(e), build(-e)};
}

std::vector<ComplexApprox> polynomial_roots(const RationalPolynomial& f, double tol) {
    const int n = f.degree();
    if (n < 1) return {};
    std::vector<ComplexApprox> coef(n + 1);
    for (int i = 0; i <= n; ++i) coef[i] = to_double(f.coeff(i) / f.leading());

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -coef[i].real();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success) throw RootFindingFailure("eigenvalue iteration did not converge");

    auto eval = [&](ComplexApprox z, ComplexApprox& dz, double& scale) {
        ComplexApprox p = 0;
        dz = 0;
        scale = 0;
        for (int i = n; i >= 0; --i) {
            dz = dz * z + p;
            p = p * z + coef[i];
            scale = scale * std::abs(z) + std::abs(coef[i]);
        }
        return p;
    };

    std::vector<ComplexApprox> roots;
    for (int k = 0; k < n; ++k) {
        ComplexApprox z = es.eigenvalues()[k];
        ComplexApprox dz;
        double scale = 0;
        for (int it = 0; it < 50; ++it) {
            ComplexApprox p = eval(z, dz, scale);
            if (std::abs(dz) == 0.0) break;
            ComplexApprox step = p / dz;
            z -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
        }
        ComplexApprox p = eval(z, dz, scale);
        if (!(std::abs(p) <= tol * scale)) throw RootFindingFailure("root did not reach the requested tolerance");
        roots.push_back(z);
    }
    return roots;
}

std::array<double, 5> numeric_triality_oracle(const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& e, int power) {
    if (power != 1 && power != 2) throw std::invalid_argument("power must be 1 or 2");
    auto y = polynomial_roots(quartic(a, b, c, e));
    std::array<ComplexApprox, 4> x;
    ComplexApprox prod = 1;
    for (int i = 0; i < 4; ++i) {
        x[i] = std::sqrt(y[i]);
        prod *= x[i];
    }
    // prod = ±e; flip one branch to reach prod = e.
    const double ed = to_double(e);
    if (std::abs(prod - ed) > std::abs(prod + ed)) x[0] = -x[0];

    Matrix4 m = mu_matrix().pow(power);
    std::vector<ComplexApprox> poly{1};  // highest degree first
    for (int i = 0; i < 4; ++i) {
        ComplexApprox xi = 0;
        for (int j = 0; j < 4; ++j) xi += to_double(m(i, j)) * x[j];
        const ComplexApprox r = xi * xi;
        std::vector<ComplexApprox> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= r * poly[k];
        }
        poly = next;
    }
    std::array<double, 5> out{};
    for (int k = 0; k <= 4; ++k) out[k] = poly[4 - k].real();
    return out;
}

double max_relative_error(const std::array<double, 5>& approx, const RationalPolynomial& exact) {
    double worst = 0;
    for (int k = 0; k <= 4; ++k) {
        const double ex = to_double(exact.coeff(k));
        worst = std::max(worst, std::abs(approx[k] - ex) / std::max(1.0, std::abs(ex)));
    }
    return worst;
}

}  // namespace triality
