#include "triality/witt.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace triality {

namespace {

Integer abs_int(const Integer& n) { return n < 0 ? Integer(-n) : n; }

// Integer in the same square class: p/q ~ p q.
Integer integral_rep(const Rational& a) {
    return boost::multiprecision::numerator(a) * boost::multiprecision::denominator(a);
}

// n = p^k u with p not dividing u.
int split_valuation(Integer& n, long long p) {
    int k = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

int legendre(const Integer& u, long long p) {
    Integer r = u % p;
    if (r < 0) r += p;
    Integer e = boost::multiprecision::powm(r, Integer((p - 1) / 2), Integer(p));
    return e == 1 ? 1 : -1;
}

int mod8(const Integer& u) {
    Integer r = u % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r);
}

}  // namespace

std::vector<long long> prime_divisors(const Integer& n) {
    std::vector<long long> out;
    Integer m = abs_int(n);
    for (long long p = 2; Integer(p) * p <= m; ++p) {
        if (m % p != 0) continue;
        out.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) out.push_back(static_cast<long long>(m));
    return out;
}

Integer square_class(const Rational& a) {
    if (a == 0) throw std::invalid_argument("zero has no square class");
    Integer n = integral_rep(a);
    Integer out = n < 0 ? -1 : 1;
    Integer m = abs_int(n);
    for (long long p : prime_divisors(m)) {
        int k = split_valuation(m, p);
        if (k % 2) out *= p;
    }
    return out;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
    if (v.is_real()) return a < 0 && b < 0 ? -1 : 1;
    Integer u = square_class(a), w = square_class(b);
    const long long p = v.p;
    const int alpha = split_valuation(u, p), beta = split_valuation(w, p);
    if (p == 2) {
        const int eu = (mod8(u) % 4 == 3), ew = (mod8(w) % 4 == 3);
        const int ou = (mod8(u) == 3 || mod8(u) == 5), ow = (mod8(w) == 3 || mod8(w) == 5);
        return ((eu * ew + alpha * ow + beta * ou) % 2) ? -1 : 1;
    }
    int s = (alpha * beta % 2 && (p - 1) / 2 % 2) ? -1 : 1;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(w, p);
    return s;
}

DiagonalForm::DiagonalForm(std::vector<Rational> entries) : entries_(std::move(entries)) {
    for (const auto& a : entries_)
        if (a == 0) throw std::invalid_argument("diagonal form with a zero entry");
}

DiagonalForm DiagonalForm::operator+(const DiagonalForm& o) const {
    auto e = entries_;
    e.insert(e.end(), o.entries_.begin(), o.entries_.end());
    return DiagonalForm(std::move(e));
}

DiagonalForm DiagonalForm::operator*(const DiagonalForm& o) const {
    std::vector<Rational> e;
    for (const auto& a : entries_)
        for (const auto& b : o.entries_) e.push_back(a * b);
    return DiagonalForm(std::move(e));
}

DiagonalForm DiagonalForm::scaled(const Rational& s) const {
    auto e = entries_;
    for (auto& a : e) a *= s;
    return DiagonalForm(std::move(e));
}

Rational DiagonalForm::determinant() const {
    Rational d = 1;
    for (const auto& a : entries_) d *= a;
    return d;
}

std::string DiagonalForm::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + to_string(entries_[i]);
    return s + ">";
}

DiagonalForm repeated(const Rational& c, int n) { return DiagonalForm(std::vector<Rational>(n, c)); }

std::vector<Place> support(const DiagonalForm& q) {
    std::set<Place> s{Place::real(), Place{2}};
    for (const auto& a : q.entries())
        for (long long p : prime_divisors(square_class(a))) s.insert(Place{p});
    return {s.begin(), s.end()};
}

int hasse_invariant(const DiagonalForm& q, const Place& v) {
    int h = 1;
    const auto& e = q.entries();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) h *= hilbert_symbol(e[i], e[j], v);
    return h;
}

WittInvariants witt_invariants(const DiagonalForm& q) {
    WittInvariants w;
    const int n = q.dim();
    w.dim_mod2 = n % 2;
    Rational d = q.determinant();
    if ((n * (n - 1) / 2) % 2) d = -d;
    w.signed_disc = n == 0 ? Integer(1) : square_class(d);
    for (const auto& a : q.entries()) w.signature += a > 0 ? 1 : -1;
    for (const auto& v : support(q)) w.hasse[v] = hasse_invariant(q, v);
    return w;
}

bool is_witt_trivial(const DiagonalForm& q) {
    const int n = q.dim();
    if (n % 2) return false;
    WittInvariants w = witt_invariants(q);
    if (w.signature != 0 || w.signed_disc != 1) return false;
    // The split form m<1,-1> has Hasse invariant (-1,-1)^{m(m-1)/2}, which
    // is -1 exactly at 2 and the real place when that exponent is odd.
    const int m = n / 2;
    const bool odd = (m * (m - 1) / 2) % 2;
    for (const auto& [v, h] : w.hasse) {
        const int split = odd && (v.is_real() || v.p == 2) ? -1 : 1;
        if (h != split) return false;
    }
    return true;
}

bool is_witt_equivalent(const DiagonalForm& a, const DiagonalForm& b) { return is_witt_trivial(a + b.negated()); }

DiagonalForm lambda2(const DiagonalForm& q) {
    std::vector<Rational> e;
    const auto& a = q.entries();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) e.push_back(a[i] * a[j]);
    return DiagonalForm(std::move(e));
}

SymbolicForm::SymbolicForm(std::vector<std::uint8_t> monomials) : m_(std::move(monomials)) {
    for (auto& x : m_) x &= 0xF;
    std::sort(m_.begin(), m_.end());
}

SymbolicForm SymbolicForm::of(const std::vector<std::string>& words) {
    std::vector<std::uint8_t> m;
    for (const auto& w : words) {
        std::uint8_t bits = 0;
        for (char ch : w) {
            switch (ch) {
                case '1': break;
                case 'x': bits ^= 1; break;
                case 'y': bits ^= 2; break;
                case 'z': bits ^= 4; break;
                case 't': bits ^= 8; break;
                default: throw std::invalid_argument("unknown symbol in " + w);
            }
        }
        m.push_back(bits);
    }
    return SymbolicForm(std::move(m));
}

SymbolicForm SymbolicForm::operator+(const SymbolicForm& o) const {
    auto m = m_;
    m.insert(m.end(), o.m_.begin(), o.m_.end());
    return SymbolicForm(std::move(m));
}

SymbolicForm SymbolicForm::operator*(const SymbolicForm& o) const {
    std::vector<std::uint8_t> m;
    for (auto a : m_)
        for (auto b : o.m_) m.push_back(a ^ b);
    return SymbolicForm(std::move(m));
}

std::uint8_t SymbolicForm::determinant() const {
    std::uint8_t d = 0;
    for (auto a : m_) d ^= a;
    return d;
}

SymbolicForm SymbolicForm::without(std::uint8_t mono) const {
    auto m = m_;
    auto it = std::find(m.begin(), m.end(), mono);
    if (it == m.end()) throw std::invalid_argument("monomial " + monomial_str(mono) + " not in form");
    m.erase(it);
    return SymbolicForm(std::move(m));
}

SymbolicForm SymbolicForm::permuted(const std::array<int, 4>& perm) const {
    std::vector<std::uint8_t> m;
    for (auto a : m_) {
        std::uint8_t b = 0;
        for (int k = 0; k < 4; ++k)
            if (a >> k & 1) b |= static_cast<std::uint8_t>(1u << perm[k]);
        m.push_back(b);
    }
    return SymbolicForm(std::move(m));
}

DiagonalForm SymbolicForm::evaluate(const std::array<Rational, 4>& values) const {
    std::vector<Rational> e;
    for (auto a : m_) {
        Rational v = 1;
        for (int k = 0; k < 4; ++k)
            if (a >> k & 1) v *= values[k];
        e.push_back(v);
    }
    return DiagonalForm(std::move(e));
}

std::string monomial_str(std::uint8_t m) {
    if (m == 0) return "1";
    std::string s;
    const char names[] = {'x', 'y', 'z', 't'};
    for (int k = 0; k < 4; ++k)
        if (m >> k & 1) s += names[k];
    return s;
}

std::string SymbolicForm::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? "," : "") + monomial_str(m_[i]);
    return s + ">";
}

SymbolicForm lambda2(const SymbolicForm& q) {
    std::vector<std::uint8_t> m;
    const auto& a = q.monomials();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) m.push_back(a[i] ^ a[j]);
    return SymbolicForm(std::move(m));
}

BiquadraticFamily<SymbolicForm> biquadratic_family_symbolic() {
    BiquadraticFamily<SymbolicForm> f;
    f.q = SymbolicForm::of({"x", "y", "z", "t"});
    f.q1 = SymbolicForm::of({"1", "1", "xy", "zt"});
    f.q2 = SymbolicForm::of({"1", "1", "xz", "yt"});
    f.q3 = SymbolicForm::of({"1", "1", "xt", "yz"});
    f.l1 = f.q1.without(0);
    f.l2 = f.q2.without(0);
    f.l3 = f.q3.without(0);
    f.d = SymbolicForm::of({"xyzt"});
    return f;
}

BiquadraticFamily<DiagonalForm> biquadratic_family(const Rational& x, const Rational& y, const Rational& z,
                                                   const Rational& t) {
    const std::array<Rational, 4> v{x, y, z, t};
    auto s = biquadratic_family_symbolic();
    return {s.q.evaluate(v),  s.q1.evaluate(v), s.q2.evaluate(v), s.q3.evaluate(v),
            s.l1.evaluate(v), s.l2.evaluate(v), s.l3.evaluate(v), s.d.evaluate(v)};
}

std::vector<RelationCheck> verify_basis_relations(const Rational& x, const Rational& y, const Rational& z,
                                                  const Rational& t) {
    const auto s = biquadratic_family_symbolic();
    const auto r = biquadratic_family(x, y, z, t);
    const auto one3s = SymbolicForm::of({"1", "1", "1"});
    const auto one3 = repeated(Rational(1), 3);
    std::vector<RelationCheck> out;

    out.push_back({"lambda2 q = l1 + l2 + l3 - <1,1,1>", lambda2(s.q) + one3s == s.l1 + s.l2 + s.l3,
                   is_witt_equivalent(lambda2(r.q) + one3, r.l1 + r.l2 + r.l3)});

    const SymbolicForm one_d_s = SymbolicForm::of({"1"}) + s.d;
    const DiagonalForm one_d = repeated(Rational(1), 1) + r.d;
    const SymbolicForm* ls[] = {&s.l1, &s.l2, &s.l3};
    const DiagonalForm* lr[] = {&r.l1, &r.l2, &r.l3};
    for (int i = 0; i < 3; ++i) {
        out.push_back({"<1,d> q = q (l" + std::to_string(i + 1) + " - <1>)", one_d_s * s.q + s.q == s.q * *ls[i],
                       is_witt_equivalent(one_d * r.q + r.q, r.q * *lr[i])});
    }

    const SymbolicForm* qs[] = {&s.q1, &s.q2, &s.q3};
    const DiagonalForm* qr[] = {&r.q1, &r.q2, &r.q3};
    for (int i = 0; i < 3; ++i) {
        const bool sym = s.q.determinant() == qs[i]->determinant() && s.d.determinant() == s.q.determinant();
        const bool rat = witt_invariants(r.q).signed_disc == witt_invariants(*qr[i]).signed_disc &&
                         witt_invariants(r.q).signed_disc == square_class(r.d.entries()[0]);
        out.push_back({"<d> = disc q = disc q" + std::to_string(i + 1), sym, rat});
    }
    return out;
}

TraceFormSplit trace_form_split(const Rational& x, const Rational& y, const Rational& z, const Rational& t) {
    // Tr(s^2) over the octic picks up the degree 4 of each factor; with the
    // 1/8 normalisation every basis vector contributes <a/2> ~ <2a>.
    const Rational two = 2;
    TraceFormSplit r;
    const DiagonalForm first({Rational(1), x, y, x * y});
    const DiagonalForm second({Rational(1), z, t, z * t});
    r.q = (first + second).scaled(two);
    r.q_plus = DiagonalForm({Rational(1), x * y, Rational(1), z * t}).scaled(two);
    r.q_minus = DiagonalForm({x, y, z, t}).scaled(two);
    r.plus_matches_q1 = is_witt_equivalent(r.q_plus, DiagonalForm({Rational(1), Rational(1), x * y, z * t}));
    r.minus_matches_q = is_witt_equivalent(r.q_minus, DiagonalForm({x, y, z, t}));
    return r;
}

}  // namespace triality
