#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

// Boost 1.74's templated rational-vs-integer comparisons recurse forever once
// C++20 adds rewritten (reversed) candidates. Exact-match overloads win
// overload resolution and go through rational-vs-rational instead.
namespace boost {

#define CURVLAB_RATIONAL_MIXED_CMP(Int)                                                                    \
    inline bool operator==(const rational<std::int64_t>& a, Int b) { return a == rational<std::int64_t>(b); } \
    inline bool operator!=(const rational<std::int64_t>& a, Int b) { return !(a == b); }                     \
    inline bool operator<(const rational<std::int64_t>& a, Int b) { return a < rational<std::int64_t>(b); }   \
    inline bool operator>(const rational<std::int64_t>& a, Int b) { return rational<std::int64_t>(b) < a; }   \
    inline bool operator<=(const rational<std::int64_t>& a, Int b) { return !(a > b); }                      \
    inline bool operator>=(const rational<std::int64_t>& a, Int b) { return !(a < b); }                      \
    inline bool operator==(Int a, const rational<std::int64_t>& b) { return b == a; }                        \
    inline bool operator!=(Int a, const rational<std::int64_t>& b) { return !(b == a); }                     \
    inline bool operator<(Int a, const rational<std::int64_t>& b) { return b > a; }                          \
    inline bool operator>(Int a, const rational<std::int64_t>& b) { return b < a; }                          \
    inline bool operator<=(Int a, const rational<std::int64_t>& b) { return !(b < a); }                      \
    inline bool operator>=(Int a, const rational<std::int64_t>& b) { return !(b > a); }

CURVLAB_RATIONAL_MIXED_CMP(int)
CURVLAB_RATIONAL_MIXED_CMP(long)
CURVLAB_RATIONAL_MIXED_CMP(long long)

#undef CURVLAB_RATIONAL_MIXED_CMP

}  // namespace boost

namespace curvlab {

using Rational = boost::rational<std::int64_t>;

// Canonical "p/q": lowest terms, positive denominator, integers keep "/1".
std::string to_string(const Rational& r);

// Accepts "p/q" or a bare integer.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace curvlab
