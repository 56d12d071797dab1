#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace nilsec {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);
/// Accepts "p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace nilsec

// Boost 1.74 compares rational<T> with a different integer type through a template that
// C++20 rewritten candidates turn into infinite recursion. Exact overloads for int win
// overload resolution and avoid it.
namespace boost {
#define NILSEC_RATIONAL_INT_CMP(op)                                                     \
  inline bool operator op(const rational<std::int64_t>& a, int b) {                     \
    return a op rational<std::int64_t>(b);                                             \
  }                                                                                     \
  inline bool operator op(int a, const rational<std::int64_t>& b) {                     \
    return rational<std::int64_t>(a) op b;                                             \
  }
NILSEC_RATIONAL_INT_CMP(==)
NILSEC_RATIONAL_INT_CMP(!=)
NILSEC_RATIONAL_INT_CMP(<)
NILSEC_RATIONAL_INT_CMP(>)
NILSEC_RATIONAL_INT_CMP(<=)
NILSEC_RATIONAL_INT_CMP(>=)
#undef NILSEC_RATIONAL_INT_CMP
}  // namespace boost
