#ifndef ACSV_ASYMPT_HPP
#define ACSV_ASYMPT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "acsv/critical.hpp"
#include "acsv/numeric.hpp"
#include "acsv/polynomial.hpp"

namespace acsv {

/// The gradient of Q vanishes at the point.
class NotSmooth : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The phase Hessian is singular at the point.
class DegenerateSaddle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The point lies on a repeated factor of Q (pole of order >= 2).
class HigherOrderPole : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// base^n * n^poly_order * constant, times an integer weight.
struct AsymptoticTerm {
  Ball base;
  Rational poly_order;
  Ball constant;
  std::optional<int> weight;
  AlgebraicPoint source;
  /// Index of the variable eliminated by the residue.
  std::size_t distinguished = 0;

  /// base^n n^poly_order constant at the given n, without the weight.
  Complex evaluate(long n) const;
};

/// Exact coefficients a_{n r} for n = start, start+1, ...
struct SeriesWindow {
  Direction direction;
  std::size_t start = 0;
  std::vector<Rational> values;
};

/// (d-1)x(d-1) matrix of second derivatives of the phase in log-coordinates,
/// with the distinguished variable removed.
struct PhaseHessian {
  std::size_t distinguished = 0;
  std::vector<std::vector<Ball>> entries;
};

/// Coordinate maximizing |z_j dQ/dz_j| at the point.
std::size_t distinguished_variable(const Polynomial& q, const AlgebraicPoint& point);

PhaseHessian phase_hessian(const Polynomial& q, const AlgebraicPoint& point, const Direction& r);

/// Central finite differences of the phase on V(Q), parametrized by
/// z_j = w_j exp(i t_j) with z_k solved by Newton's method. Used to validate
/// phase_hessian.
std::vector<std::vector<Complex>> finite_difference_hessian(const Polynomial& q,
                                                            const AlgebraicPoint& point,
                                                            const Direction& r,
                                                            unsigned precision);

AsymptoticTerm smooth_leading_term(const Polynomial& num, const Polynomial& q,
                                   const AlgebraicPoint& point, const Direction& r,
                                   unsigned precision = kDefaultPrecision);

struct Selection {
  /// Terms with nonzero weight; empty when inconclusive.
  std::vector<AsymptoticTerm> terms;
  bool conclusive = false;
  /// Root-mean-square relative error over the window tail of the best
  /// assignment found.
  double relative_error = 0;
  /// Relative error at the last index of the window.
  double final_error = 0;
};

/// Searches integer weights in [-max_weight, max_weight] for the terms.
/// Terms must be sorted by descending |base|; window needs 8 values.
Selection select_contributions(const std::vector<AsymptoticTerm>& terms,
                               const SeriesWindow& window, double tolerance,
                               int max_weight = 4);

}  // namespace acsv

#endif  // ACSV_ASYMPT_HPP
