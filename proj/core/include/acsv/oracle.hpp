#ifndef ACSV_ORACLE_HPP
#define ACSV_ORACLE_HPP

#include <span>
#include <vector>

#include "acsv/polynomial.hpp"

namespace acsv {

inline constexpr long kDefaultDegreeCap = 400;

struct SeriesRequest {
  Polynomial numerator;
  Polynomial denominator;
  Direction direction;
  std::size_t count = 0;
  long degree_cap = kDefaultDegreeCap;
};

/// Exact coefficients [z^{n r}] P/Q for n = 0..count of the power series at
/// the origin. Requires Q(0) != 0 and a nonnegative direction.
std::vector<Rational> coefficients(const SeriesRequest& request);

struct GrowthEstimate {
  double rate = 0;
  double poly_order = 0;
  /// Set when the tail is identically zero; rate and poly_order are then 0.
  bool zero = false;
};

/// Least-squares fit of log|a_n| ~ c + n log(rate) + poly_order log n over the
/// second half of the sequence (index = n). Needs 8 nonzero tail values.
GrowthEstimate growth_estimate(std::span<const Rational> values);

}  // namespace acsv

#endif  // ACSV_ORACLE_HPP
