#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystfib {

// All arithmetic in this library is exact.  Int is an arbitrary-precision
// integer and Rat a rational kept in lowest terms with positive denominator
// (both invariants are maintained by boost::multiprecision).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("rational is not an integer");
  return rat_num(q);
}

// Floor division for Int (C++ '/' truncates toward zero).
inline Int int_floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& q) { return int_floor_div(rat_num(q), rat_den(q)); }

// Reduces q into [0,1).
inline Rat mod1(const Rat& q) { return q - Rat(rat_floor(q)); }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g, g >= 0.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    if (a < 0) { x = -1; y = 0; return -a; }
    x = 1; y = 0;
    return a;
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline Int lcm_denominators(const RatVec& v) {
  Int l = 1;
  for (const Rat& q : v) l = int_lcm(l, rat_den(q));
  return l;
}

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline std::string rat_to_string(const Rat& q) {
  std::string s = rat_num(q).str();
  if (rat_den(q) != 1) s += "/" + rat_den(q).str();
  return s;
}

}  // namespace crystfib
