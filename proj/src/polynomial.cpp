#include "triality/polynomial.hpp"

#include <stdexcept>

namespace triality {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

Rational RationalPolynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

bool RationalPolynomial::is_monic() const { return !c_.empty() && c_.back() == 1; }

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RationalPolynomial RationalPolynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<int>(i));
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const { return *this + o * Rational(-1); }

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return RationalPolynomial(std::move(r));
}

std::string RationalPolynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        Rational mag = a < 0 ? Rational(-a) : a;
        if (out.empty())
            out += a < 0 ? "-" : "";
        else
            out += a < 0 ? " - " : " + ";
        if (mag != 1 || i == 0) out += to_string(mag);
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

RationalPolynomial doubled_polynomial(const RationalPolynomial& f) {
    std::vector<Rational> r(f.is_zero() ? 0 : 2 * f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) r[2 * i] = f.coeff(i);
    return RationalPolynomial(std::move(r));
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

namespace {

Rational ipow(const Rational& a, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= a;
    return r;
}

}  // namespace

Rational resultant(const RationalPolynomial& f, const RationalPolynomial& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) return ipow(f.coeff(0), n);
    if (n == 0) return ipow(g.coeff(0), m);
    const int size = m + n;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    // Rows hold coefficients from the leading one down.
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
    return determinant(std::move(s));
}

Rational poly_discriminant(const RationalPolynomial& f) {
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant needs degree at least 1");
    Rational r = resultant(f, f.derivative()) / f.leading();
    return (d * (d - 1) / 2) % 2 ? Rational(-r) : r;
}

}  // namespace triality
