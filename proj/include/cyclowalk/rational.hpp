#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cyclowalk/error.hpp"

namespace cyclowalk {

using Integer = mpz_class;
/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p/q" or "p" (no decimals). The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + s + "'");
    Integer n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace cyclowalk
