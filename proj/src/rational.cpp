#include "triality/rational.hpp"

#include "triality/errors.hpp"

#include <cctype>

namespace triality {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& r) {
    const Integer num = mp::numerator(r);
    const Integer den = mp::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
    Integer v{std::string(s)};
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
        Integer den(std::string{den_text});
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw ParseError("not a rational number: '" + std::string(text) + "'");
        Integer scale = mp::pow(Integer(10), static_cast<unsigned>(fp.size()));
        Integer num = ip.empty() ? Integer(0) : Integer(std::string(ip));
        num *= scale;
        if (!fp.empty()) num += Integer(std::string(fp));
        Rational r(num, scale);
        return neg ? Rational(-r) : r;
    }
    return Rational(parse_integer(text, text));
}

Rational make_rational(long long num, long long den) {
    return Rational(Integer(num), Integer(den));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r < 0) return false;
    Integer n = mp::numerator(r), d = mp::denominator(r);
    Integer sn = mp::sqrt(n), sd = mp::sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    root = Rational(sn, sd);
    return true;
}

}  // namespace triality
