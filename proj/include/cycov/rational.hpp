#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>
#include <string_view>

#include "cycov/errors.hpp"

namespace cycov {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Floor division for machine integers, any sign of a, b != 0.
inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);  // d > 0 canonically
    Int quo = n / d;
    if (n % d != 0 && n < 0) --quo;
    return quo;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

/// Parses "p" or "p/q" with optional leading sign. Throws SpecError on junk.
inline Rat rat_from_string(std::string_view s) {
    auto bad = [&] { throw SpecError("malformed rational literal: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    std::string num, den;
    size_t slash = s.find('/');
    num = std::string(s.substr(0, slash));
    if (slash != std::string_view::npos) {
        den = std::string(s.substr(slash + 1));
        if (den.empty()) bad();
    }
    auto check_int = [&](std::string& t) {
        if (t.empty()) bad();
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) bad();
        for (size_t j = i; j < t.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(t[j]))) bad();
        if (t[0] == '+') t.erase(0, 1);  // cpp_int rejects an explicit plus
    };
    check_int(num);
    if (!den.empty()) check_int(den);
    Int n(num), d = den.empty() ? Int(1) : Int(den);
    if (d == 0) throw SpecError("zero denominator in rational literal: '" + std::string(s) + "'");
    return Rat(n, d);
}

}  // namespace cycov
