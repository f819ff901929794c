#pragma once

#include <gmpxx.h>

#include <string>

namespace opkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q", including integers ("3/1") and zero ("0/1").
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Shortest form: "3", "-1/2".
inline std::string to_short_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Integer factorial(int n);

}  // namespace opkit
