#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed-type operator== recurses forever under C++20 rewritten
// comparisons (rational<long> == int picks its own reversed candidate). Exact
// non-template overloads win overload resolution and are found by ADL.
namespace boost {
#define PEJM_RATIONAL_EQ(T)                                                           \
  inline bool operator==(const rational<std::int64_t>& a, T b) {                      \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);     \
  }                                                                                   \
  inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }
PEJM_RATIONAL_EQ(int)
PEJM_RATIONAL_EQ(unsigned)
PEJM_RATIONAL_EQ(long long)
PEJM_RATIONAL_EQ(unsigned long)
#undef PEJM_RATIONAL_EQ
}  // namespace boost

namespace pejm {

using Rational = boost::rational<std::int64_t>;

// Literals are "p", "-p" or "p/q". Numerators and denominators are limited to
// 32 bits so that intermediate products stay inside int64.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

// Representative of r modulo m (m > 0) in [0, m).
Rational floor_mod(const Rational& r, const Rational& m);

std::int64_t floor_to_int(const Rational& r);

}  // namespace pejm
