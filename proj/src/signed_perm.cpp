#include "triality/signed_perm.hpp"

#include "triality/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace triality {

// ---------------------------------------------------------------- Perm4

Perm4 Perm4::parse_cycles(std::string_view text) {
    Perm4 result;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && (text.substr(i) == "id" || text.substr(i) == "e")) return result;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw ParseError("cycle notation must use parentheses: '" + std::string(text) + "'");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i == text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
            if (text[i] == ')') { ++i; break; }
            if (text[i] == ',') { ++i; continue; }
            char ch = text[i++];
            if (ch < '1' || ch > '4') throw ParseError("points must be 1..4 in '" + std::string(text) + "'");
            cyc.push_back(ch - '1');
        }
        std::vector<bool> seen(4, false);
        for (int x : cyc) {
            if (seen[x]) throw ParseError("repeated point in cycle '" + std::string(text) + "'");
            seen[x] = true;
        }
        // Cycles are applied right to left, so the new cycle acts first.
        Perm4 c;
        for (std::size_t k = 0; k < cyc.size(); ++k) c.p[cyc[k]] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
        result = result * c;
    }
    return result;
}

Perm4 Perm4::from_rank(int rank) {
    std::vector<int> pool{0, 1, 2, 3};
    Perm4 r;
    int fact[] = {6, 2, 1, 1};
    for (int i = 0; i < 4; ++i) {
        int q = rank / fact[i];
        rank %= fact[i];
        r.p[i] = static_cast<std::uint8_t>(pool[q]);
        pool.erase(pool.begin() + q);
    }
    return r;
}

Perm4 Perm4::operator*(const Perm4& o) const {
    Perm4 r;
    for (int j = 0; j < 4; ++j) r.p[j] = p[o.p[j]];
    return r;
}

Perm4 Perm4::inverse() const {
    Perm4 r;
    for (int j = 0; j < 4; ++j) r.p[p[j]] = static_cast<std::uint8_t>(j);
    return r;
}

int Perm4::sign() const {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

int Perm4::order() const {
    Perm4 x = *this;
    int k = 1;
    while (!(x == identity())) { x = x * *this; ++k; }
    return k;
}

int Perm4::rank() const {
    int fact[] = {6, 2, 1, 1};
    int r = 0;
    for (int i = 0; i < 4; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < 4; ++j)
            if (p[j] < p[i]) ++smaller;
        r += smaller * fact[i];
    }
    return r;
}

std::string Perm4::cycles() const {
    std::string out;
    std::array<bool, 4> seen{};
    for (int s = 0; s < 4; ++s) {
        if (seen[s] || p[s] == s) continue;
        out += '(';
        int x = s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ' ';
            out += static_cast<char>('1' + x);
            first = false;
            x = p[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

// ---------------------------------------------------- SignedPermutation

SignedPermutation SignedPermutation::diagonal(std::array<int, 4> s) {
    SignedPermutation r;
    for (int i = 0; i < 4; ++i) {
        if (s[i] != 1 && s[i] != -1) throw std::invalid_argument("signs must be +-1");
        r.signs[i] = static_cast<std::int8_t>(s[i]);
    }
    return r;
}

SignedPermutation SignedPermutation::permutation(const Perm4& p) {
    SignedPermutation r;
    r.perm = p;
    return r;
}

int SignedPermutation::sign_product() const { return signs[0] * signs[1] * signs[2] * signs[3]; }

int SignedPermutation::key() const {
    int code = 0;
    for (int i = 0; i < 4; ++i) code = code * 2 + (signs[i] < 0 ? 1 : 0);
    return code * 24 + perm.rank();
}

SignedPermutation SignedPermutation::from_key(int key) {
    SignedPermutation r;
    int code = key / 24;
    r.perm = Perm4::from_rank(key % 24);
    for (int i = 3; i >= 0; --i) {
        r.signs[i] = (code & 1) ? -1 : 1;
        code >>= 1;
    }
    return r;
}

std::string SignedPermutation::str() const {
    std::ostringstream os;
    os << "diag(";
    for (int i = 0; i < 4; ++i) os << (i ? "," : "") << int(signs[i]);
    os << ")*P" << perm.cycles();
    return os.str();
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    // D_a P_a D_b P_b = D_a (P_a D_b P_a^-1) P_a P_b
    SignedPermutation r;
    Perm4 ainv = a.perm.inverse();
    for (int i = 0; i < 4; ++i) r.signs[i] = static_cast<std::int8_t>(a.signs[i] * b.signs[ainv.p[i]]);
    r.perm = a.perm * b.perm;
    return r;
}

SignedPermutation inverse(const SignedPermutation& a) {
    // (D P)^-1 = P^-1 D = (P^-1 D P) P^-1
    SignedPermutation r;
    r.perm = a.perm.inverse();
    for (int i = 0; i < 4; ++i) r.signs[i] = a.signs[a.perm.p[i]];
    return r;
}

Matrix4 to_matrix(const SignedPermutation& a) {
    Matrix4 m;
    for (int j = 0; j < 4; ++j) {
        int i = a.perm.p[j];
        m.m[i][j] = a.signs[i];
    }
    return m;
}

SignedPermutation from_matrix(const Matrix4& m) {
    SignedPermutation r;
    std::array<bool, 4> row_used{};
    for (int j = 0; j < 4; ++j) {
        int found = -1;
        for (int i = 0; i < 4; ++i) {
            const Rational& x = m.m[i][j];
            if (x == 0) continue;
            if (x != 1 && x != -1)
                throw NotSignedMonomial("entry " + to_string(x) + " at (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") is not 0 or +-1");
            if (found >= 0) throw NotSignedMonomial("column " + std::to_string(j + 1) + " has two nonzero entries");
            found = i;
        }
        if (found < 0) throw NotSignedMonomial("column " + std::to_string(j + 1) + " is zero");
        if (row_used[found]) throw NotSignedMonomial("row " + std::to_string(found + 1) + " has two nonzero entries");
        row_used[found] = true;
        r.perm.p[j] = static_cast<std::uint8_t>(found);
        r.signs[found] = m.m[found][j] > 0 ? 1 : -1;
    }
    return r;
}

Perm4 beta(const SignedPermutation& a) { return a.perm; }

int determinant(const SignedPermutation& a) { return a.sign_product() * a.perm.sign(); }

SignedPermutation psi(const SignedPermutation& a) {
    if (!a.in_wd4()) throw NotInWD4("psi is only defined on W(D4); got " + a.str());
    return a.perm.sign() == 1 ? a : compose(a, w0());
}

SignedPermutation conjugate_by_matrix(const Matrix4& m, const SignedPermutation& a) {
    return from_matrix(m * to_matrix(a) * m.inverse());
}

SignedPermutation w0() { return SignedPermutation::diagonal({-1, -1, -1, -1}); }
SignedPermutation w1() { return SignedPermutation::diagonal({1, -1, 1, -1}); }
SignedPermutation w2() { return SignedPermutation::diagonal({1, -1, -1, 1}); }
SignedPermutation w3() { return SignedPermutation::diagonal({-1, -1, 1, 1}); }

Matrix4 mu_matrix() {
    return Matrix4::from_ints({{{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {1, -1, -1, -1}}}, 2);
}

Matrix4 rho_matrix() {
    return Matrix4::from_ints({{{-1, 1, 1, 1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}, {-1, 1, -1, -1}}}, 2);
}

Matrix4 nu_matrix() { return to_matrix(SignedPermutation::diagonal({1, 1, 1, -1})); }

// ------------------------------------------------------------ GroupTable

GroupTable::GroupTable(std::vector<SignedPermutation> generators) {
    std::vector<bool> member(384, false);
    std::vector<int> keys;
    std::deque<SignedPermutation> queue{SignedPermutation::identity()};
    member[0] = true;
    keys.push_back(0);
    while (!queue.empty()) {
        SignedPermutation x = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            SignedPermutation y = compose(x, g);
            int k = y.key();
            if (!member[k]) {
                member[k] = true;
                keys.push_back(k);
                queue.push_back(y);
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    pos_.fill(-1);
    for (int k : keys) {
        pos_[k] = static_cast<std::int16_t>(elements_.size());
        elements_.push_back(SignedPermutation::from_key(k));
    }
    for (const auto& g : generators) generators_.push_back(index_of(g));

    const int n = size();
    table_.resize(static_cast<std::size_t>(n) * n);
    inverse_.resize(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) table_[a * n + b] = static_cast<std::uint16_t>(pos_[compose(elements_[a], elements_[b]).key()]);
        inverse_[a] = static_cast<std::uint16_t>(pos_[triality::inverse(elements_[a]).key()]);
    }
}

std::optional<int> GroupTable::find(const SignedPermutation& a) const {
    int p = pos_[a.key()];
    if (p < 0) return std::nullopt;
    return p;
}

int GroupTable::index_of(const SignedPermutation& a) const {
    auto p = find(a);
    if (!p) throw std::out_of_range("element " + a.str() + " is not in the group");
    return *p;
}

int GroupTable::order_of(int a) const {
    int x = a, k = 1;
    while (x != identity()) { x = mul(x, a); ++k; }
    return k;
}

std::uint64_t GroupTable::content_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](std::uint64_t v) {
        for (int b = 0; b < 2; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& e : elements_) feed(static_cast<std::uint64_t>(e.key()));
    for (auto v : table_) feed(v);
    return h;
}

namespace {

std::vector<SignedPermutation> wd4_generators() {
    // Simple reflections of D4.
    return {SignedPermutation::permutation(Perm4::parse_cycles("(1 2)")),
            SignedPermutation::permutation(Perm4::parse_cycles("(2 3)")),
            SignedPermutation::permutation(Perm4::parse_cycles("(3 4)")),
            compose(SignedPermutation::diagonal({1, 1, -1, -1}), SignedPermutation::permutation(Perm4::parse_cycles("(3 4)")))};
}

}  // namespace

GroupTable enumerate_wd4() { return GroupTable(wd4_generators()); }

GroupTable enumerate_wreath() {
    auto gens = wd4_generators();
    gens.push_back(SignedPermutation::diagonal({1, 1, 1, -1}));
    return GroupTable(gens);
}

const GroupTable& wd4() {
    static const GroupTable table = enumerate_wd4();
    return table;
}

}  // namespace triality
