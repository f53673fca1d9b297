#include "quasigeo/rational.hpp"

#include <cctype>

namespace qg {

std::optional<Rational> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
        if (t.empty()) return std::nullopt;
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '-' || t[0] == '+') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) return std::nullopt;
        BigInt v = 0;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
            v = v * 10 + (t[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    };

    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto p = parse_int(s);
        if (!p) return std::nullopt;
        return Rational(*p);
    }
    auto p = parse_int(s.substr(0, slash));
    auto q = parse_int(s.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return Rational(*p) / Rational(*q);
}

std::string to_decimal(const Rational& r, int digits) {
    BigInt n = num(r);
    BigInt d = den(r);
    bool neg = n < 0;
    if (neg) n = -n;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = n * scale;
    BigInt q = scaled / d;
    BigInt rem = scaled % d;
    if (2 * rem >= d) ++q;  // round half away from zero
    BigInt ip = q / scale;
    BigInt fp = q % scale;
    std::string out = (neg && (ip != 0 || fp != 0)) ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

}  // namespace qg
