#ifndef ACSV_CRITICAL_HPP
#define ACSV_CRITICAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "acsv/groebner.hpp"
#include "acsv/numeric.hpp"
#include "acsv/polynomial.hpp"

namespace acsv {

/// Thrown when a system expected to be zero-dimensional is not.
class PositiveDimensional : public std::runtime_error {
 public:
  explicit PositiveDimensional(int dimension)
      : std::runtime_error("solution set has dimension " + std::to_string(dimension)),
        dimension_(dimension) {}
  int dimension() const { return dimension_; }

 private:
  int dimension_;
};

/// A solution of a polynomial system. Each coordinate carries a certified
/// ball, a squarefree univariate polynomial over Q that it is a root of, and
/// its exact value when rational.
struct AlgebraicPoint {
  std::vector<Ball> coords;
  std::vector<UPoly> min_polys;
  std::vector<std::optional<Rational>> exact;
  std::optional<Interval> height;

  std::size_t size() const { return coords.size(); }
};

/// Squarefree generator of I intersected with Q[x_var]; zero if that
/// intersection is the zero ideal.
UPoly eliminant(const Ideal& ideal, std::size_t var);

/// All solutions of a zero-dimensional ideal (each once), coordinates in the
/// ring's variable order with balls of radius at most 2^-precision relative.
std::vector<AlgebraicPoint> solve_zero_dim(const Ideal& ideal,
                                           unsigned precision = kDefaultPrecision);

/// -sum r_j log|z_j| enclosed from the coordinate balls; throws
/// std::domain_error when a coordinate may be zero.
Interval height(const AlgebraicPoint& point, const Direction& r);

/// <Q, r_b z_a Q_a - r_a z_b Q_b> saturated by z_1 ... z_d.
Ideal critical_system(const Polynomial& q, const Direction& r);

/// Critical points of Q in direction r on the complex torus, sorted by
/// descending height, ties broken by coordinates (real part, then imaginary).
std::vector<AlgebraicPoint> affine_critical_points(const Polynomial& q,
                                                   const Direction& r,
                                                   unsigned precision = kDefaultPrecision);

}  // namespace acsv

#endif  // ACSV_CRITICAL_HPP
