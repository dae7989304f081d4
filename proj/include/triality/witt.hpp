#pragma once

#include "triality/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace triality {

/// A prime p, or the real place when p == 0.
struct Place {
    long long p = 0;

    static Place real() { return {0}; }
    bool is_real() const { return p == 0; }
    std::string str() const { return p == 0 ? "inf" : std::to_string(p); }
    auto operator<=>(const Place&) const = default;
};

/// Squarefree integer in the square class of a nonzero rational, sign kept.
Integer square_class(const Rational& a);
/// Prime divisors of |n| by trial division.
std::vector<long long> prime_divisors(const Integer& n);

/// Local Hilbert symbol (a, b)_v for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// A nonsingular diagonal quadratic form <a1, ..., an>.
class DiagonalForm {
public:
    DiagonalForm() = default;
    /// Throws std::invalid_argument on a zero entry.
    explicit DiagonalForm(std::vector<Rational> entries);

    int dim() const { return static_cast<int>(entries_.size()); }
    const std::vector<Rational>& entries() const { return entries_; }

    /// Orthogonal sum.
    DiagonalForm operator+(const DiagonalForm& o) const;
    /// Tensor product.
    DiagonalForm operator*(const DiagonalForm& o) const;
    DiagonalForm scaled(const Rational& s) const;
    DiagonalForm negated() const { return scaled(Rational(-1)); }
    Rational determinant() const;
    std::string str() const;

private:
    std::vector<Rational> entries_;
};

/// n copies of <c>.
DiagonalForm repeated(const Rational& c, int n);

struct WittInvariants {
    int dim_mod2 = 0;
    Integer signed_disc = 1;  // square class of (-1)^{n(n-1)/2} det
    int signature = 0;
    /// prod_{i<j} (a_i, a_j)_v over 2, the real place and primes dividing
    /// any entry; +1 at every other place.
    std::map<Place, int> hasse;
};

WittInvariants witt_invariants(const DiagonalForm& q);
int hasse_invariant(const DiagonalForm& q, const Place& v);
/// Places where some entry is not a unit, plus 2 and the real place.
std::vector<Place> support(const DiagonalForm& q);

bool is_witt_trivial(const DiagonalForm& q);
bool is_witt_equivalent(const DiagonalForm& a, const DiagonalForm& b);

/// Pairwise products a_i a_j, i < j.
DiagonalForm lambda2(const DiagonalForm& q);

/// A form whose entries are square-class monomials in x, y, z, t; bit k of
/// a monomial is the exponent (mod 2) of the k-th symbol.
class SymbolicForm {
public:
    SymbolicForm() = default;
    explicit SymbolicForm(std::vector<std::uint8_t> monomials);
    /// Parses words such as "1", "xy", "yzt".
    static SymbolicForm of(const std::vector<std::string>& words);

    int dim() const { return static_cast<int>(m_.size()); }
    /// Sorted, so equality is multiset equality.
    const std::vector<std::uint8_t>& monomials() const { return m_; }

    SymbolicForm operator+(const SymbolicForm& o) const;
    SymbolicForm operator*(const SymbolicForm& o) const;
    bool operator==(const SymbolicForm& o) const = default;

    /// Product of all entries; the signed discriminant when dim ≡ 0, 1 mod 4.
    std::uint8_t determinant() const;
    /// Removes one occurrence of `m`; throws std::invalid_argument if absent.
    SymbolicForm without(std::uint8_t m) const;
    /// Applies a permutation of the symbols: symbol k becomes perm[k].
    SymbolicForm permuted(const std::array<int, 4>& perm) const;

    DiagonalForm evaluate(const std::array<Rational, 4>& values) const;
    std::string str() const;

private:
    std::vector<std::uint8_t> m_;
};

std::string monomial_str(std::uint8_t m);
SymbolicForm lambda2(const SymbolicForm& q);

template <class Form>
struct BiquadraticFamily {
    Form q, q1, q2, q3;
    Form l1, l2, l3;  // q_i with one <1> removed
    Form d;           // <xyzt>
};

BiquadraticFamily<SymbolicForm> biquadratic_family_symbolic();
BiquadraticFamily<DiagonalForm> biquadratic_family(const Rational& x, const Rational& y, const Rational& z,
                                                   const Rational& t);

struct RelationCheck {
    std::string name;
    bool symbolic = false;
    bool rational = false;
};

/// λ²q = ℓ1 + ℓ2 + ℓ3 - <1,1,1>, <1,d>q = q(ℓ_i - <1>) for i = 1, 2, 3,
/// and disc q = disc q_i, each checked as a multiset identity and through
/// Witt invariants at the given values.
std::vector<RelationCheck> verify_basis_relations(const Rational& x, const Rational& y, const Rational& z,
                                                  const Rational& t);

struct TraceFormSplit {
    DiagonalForm q;        // (1/8) Tr(s^2) on F(√x,√y) × F(√z,√t)
    DiagonalForm q_plus;   // symmetric part
    DiagonalForm q_minus;  // skew part
    /// Witt-class comparison of the literal diagonalisation with the forms
    /// <1,1,xy,zt> and <x,y,z,t>; reported, not asserted.
    bool plus_matches_q1 = false;
    bool minus_matches_q = false;
};

TraceFormSplit trace_form_split(const Rational& x, const Rational& y, const Rational& z, const Rational& t);

}  // namespace triality
