#pragma once

#include "triality/polynomial.hpp"

#include <array>
#include <complex>
#include <vector>

namespace triality {

using ComplexApprox = std::complex<double>;

/// x^4 + a x^3 + b x^2 + c x + e^2.
RationalPolynomial quartic(const Rational& a, const Rational& b, const Rational& c, const Rational& e);

struct ResolventPair {
    RationalPolynomial f4_prime;   // transported by μ
    RationalPolynomial f4_second;  // transported by μ²
};

/// The trialitarian pair of x^4 + a x^3 + b x^2 + c x + e^2.
/// Throws ZeroConstant when e = 0 and NotSeparable when f(x^2) has a
/// repeated root.
ResolventPair resolvent_pair(const Rational& a, const Rational& b, const Rational& c, const Rational& e);

/// Exact separability of f(x^2), decided by its discriminant.
bool doubled_is_separable(const RationalPolynomial& f);

/// Companion-matrix eigenvalues polished by Newton's method. Throws
/// RootFindingFailure when a root does not reach the tolerance.
std::vector<ComplexApprox> polynomial_roots(const RationalPolynomial& f, double tol = 1e-10);

/// Transports the roots of f(x^2) by μ^power and returns the coefficients,
/// constant first, of the monic quartic whose roots are the squared images.
/// Square roots x_i of the roots of f are chosen with x1 x2 x3 x4 = e; with
/// this branch power 1 gives f4_prime and power 2 gives f4_second.
std::array<double, 5> numeric_triality_oracle(const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& e, int power);

/// Largest coefficient error |approx - exact| / max(1, |exact|).
double max_relative_error(const std::array<double, 5>& approx, const RationalPolynomial& exact);

}  // namespace triality
