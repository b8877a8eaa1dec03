#pragma once

#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "dhecke/core/integer.hpp"

namespace dhecke {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Open interval (lo, hi) with rational endpoints containing exactly one
/// real root of a square-free polynomial; neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Sign (-1, 0, +1) of an integer polynomial (little-endian) at a rational.
int sign_at(const std::vector<Integer>& poly, const Rational& t);

/// Number of distinct real roots of a square-free polynomial in (a, b],
/// counted with its Sturm sequence.
int sturm_count(const std::vector<Integer>& poly, const Rational& a, const Rational& b);

/// Isolating intervals for all real roots of a square-free integer
/// polynomial with no rational roots, ordered by descending root.
std::vector<RootInterval> isolate_real_roots(const std::vector<Integer>& poly);

/// Halves an isolating interval of `poly`, keeping the half with the root.
void refine(const std::vector<Integer>& poly, RootInterval& iv);

/// Sign of g(α) where α is the root of `poly` isolated by `iv` and g is an
/// integer polynomial with g(α) != 0. Refines a local copy of the interval
/// until exact interval evaluation of g excludes zero.
int sign_at_root(const std::vector<Integer>& poly, RootInterval iv, const std::vector<Integer>& g);

}  // namespace dhecke
