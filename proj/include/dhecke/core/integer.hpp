#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace dhecke {

/// Arbitrary-precision signed integer. Expression templates are disabled so
/// the type behaves as a plain value inside Eigen containers.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

}  // namespace dhecke

namespace Eigen {

template <>
struct NumTraits<dhecke::Integer> : GenericNumTraits<dhecke::Integer> {
  using Real = dhecke::Integer;
  using NonInteger = dhecke::Integer;
  using Nested = dhecke::Integer;
  using Literal = dhecke::Integer;

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace dhecke {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/// Floor division (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Representative of a modulo m in [0, |m|).
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += (m < 0 ? Integer(-m) : m);
  return r;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline std::int64_t to_i64(const Integer& a) { return a.convert_to<std::int64_t>(); }

inline std::string to_string(const Integer& a) { return a.str(); }

/// Integer power with non-negative exponent.
inline Integer ipow(Integer base, unsigned exp) {
  Integer result = 1;
  while (exp) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a x + b y = g.
inline Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline IntVector int_vector(std::initializer_list<long> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v(i++) = Integer(x);
  return v;
}

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols = n_rows == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(n_rows, n_cols);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = Integer(x);
    ++i;
  }
  return m;
}

}  // namespace dhecke
