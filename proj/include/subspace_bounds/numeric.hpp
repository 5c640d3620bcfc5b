#pragma once

// Scalar types for the interior-point solver: double and IEEE quad
// precision (boost float128 over libquadmath), both usable with Eigen.

#include "subspace_bounds/exact.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/float128.hpp>

namespace subspace_bounds {
using quad = boost::multiprecision::float128;
}

namespace Eigen {
template <>
struct NumTraits<subspace_bounds::quad> : GenericNumTraits<subspace_bounds::quad> {
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return std::numeric_limits<subspace_bounds::quad>::epsilon(); }
  static inline Real dummy_precision() { return Real(1e-28); }
  static inline int digits10() { return 33; }
};
}  // namespace Eigen

namespace subspace_bounds {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// Rounds an exact rational into T. For quad, three successive doubles
/// (value, remainder, remainder of remainder) carry about 159 bits.
template <class T>
T from_rational(const Rational& value);

template <>
inline double from_rational<double>(const Rational& value) {
  return to_double(value);
}

template <>
inline quad from_rational<quad>(const Rational& value) {
  const double hi = to_double(value);
  const Rational rest = value - rational_from_double(hi);
  const double mid = to_double(rest);
  const double lo = to_double(rest - rational_from_double(mid));
  return quad(hi) + quad(mid) + quad(lo);
}

inline double to_double(double v) { return v; }
inline double to_double(const quad& v) { return v.convert_to<double>(); }

}  // namespace subspace_bounds
