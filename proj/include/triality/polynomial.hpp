#pragma once

#include "triality/rational.hpp"

#include <string>
#include <vector>

namespace triality {

/// Dense univariate polynomial over the rationals, constant term first.
/// Trailing zero coefficients are always trimmed.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial monomial(const Rational& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;
    bool is_monic() const;

    Rational operator()(const Rational& x) const;
    RationalPolynomial derivative() const;

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& s) const;
    bool operator==(const RationalPolynomial& o) const = default;

    /// Highest degree first, e.g. "x^4 - 3x^2 + 1/4".
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// f(x^2).
RationalPolynomial doubled_polynomial(const RationalPolynomial& f);

/// Determinant of the Sylvester matrix.
Rational resultant(const RationalPolynomial& f, const RationalPolynomial& g);

/// (-1)^{d(d-1)/2} Res(f, f') / lead(f). Requires degree >= 1.
Rational poly_discriminant(const RationalPolynomial& f);

/// Exact determinant of a square rational matrix by fraction-exact elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace triality
