#pragma once

#include "minq/quiver.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace minq {

// Exact arithmetic only; no floating point in this module.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool rational_is_integer(const Rational& r);
// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

bool is_gorenstein(const Quiver& q);

// coh(i) = h(w) - h(i) for a Gorenstein quiver; zero exactly on the pics.
std::vector<int> coheights(const Quiver& q);

// e_st = prod over vertices of (1 + 1/(1 + coh(i))).
Rational stringy_euler(const Quiver& q);

struct CrepantObstruction {
  bool gorenstein = false;
  std::optional<Rational> e_st;
  std::optional<bool> obstructed;  // e_st not an integer
};

// A non-integral stringy Euler number rules out crepant, hence IH-small,
// resolutions; cross-checked against the minimal-model search.
CrepantObstruction crepant_obstruction(const Quiver& q);

}  // namespace minq
