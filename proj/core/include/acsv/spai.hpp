#ifndef ACSV_SPAI_HPP
#define ACSV_SPAI_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "acsv/critical.hpp"
#include "acsv/groebner.hpp"
#include "acsv/numeric.hpp"
#include "acsv/polynomial.hpp"

namespace acsv {

/// A stratum given by generators of a prime component and its codimension.
struct StratumSpec {
  std::vector<Polynomial> generators;
  int codimension = 1;
};

/// A stratum failed validation; `index` is its position in the input list.
class StratumError : public std::invalid_argument {
 public:
  StratumError(std::size_t index, const std::string& what)
      : std::invalid_argument("stratum " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Checks 1 <= c <= d and dimension(<generators>) = d - c.
void check_stratum(const StratumSpec& stratum, std::size_t index = 0);

/// Stratum generators plus the (c+1)-minors of the matrix whose rows are
/// (z_j df/dz_j)_j for each generator f and the direction row y. The ring is
/// the stratum's ring extended by y1..yd (fresh names), y_j at position d + j.
Ideal critical_ideal_symbolic(const StratumSpec& stratum);
/// Same with the direction row fixed to `y`; lives in the stratum's ring.
Ideal critical_ideal(const StratumSpec& stratum, std::span<const Rational> y);

struct SpaiProblem {
  Polynomial q;
  Direction direction;
  /// Affine generators of a locus to saturate away (homogenized internally).
  std::vector<Polynomial> exclude;
  /// Keep the direction symbolic: no y-substitution, no eta, no verdict.
  bool symbolic_direction = false;
};

/// Solution of the z0 = 0 slice on the chart z_chart = 1 (with z_k = 0 for
/// k < chart). `point` covers (z0, ..., zd, eta), or (z0, ..., zd) when eta
/// is not determined; a positive-dimensional chart has no point.
struct Witness {
  std::size_t chart = 0;
  int dimension = 0;
  std::optional<AlgebraicPoint> point;
  bool has_eta = false;
};

struct EtaValue {
  Root eta;
  UPoly min_poly;
  Interval height;  // -log|eta|
};

struct HeightsAtInfinity {
  bool unconstrained = false;
  UPoly eliminant;
  std::vector<EtaValue> values;
};

struct SpaiReport {
  /// In the ring (z0, z1..zd, eta), or (z0, z1..zd, y1..yd) in symbolic mode.
  Ideal saturated_ideal;
  std::optional<bool> exists;
  std::vector<Witness> witnesses;
  HeightsAtInfinity heights;
  /// The homogenized critical generators with y = r, in the report ring.
  std::vector<Polynomial> critical_generators;
};

/// Heights of the eta-values of a z0 = 0 slice whose last variable is eta and
/// whose first d+1 variables are z0..zd.
HeightsAtInfinity heights_at_infinity(const Ideal& saturated,
                                      unsigned precision = kDefaultPrecision);

SpaiReport algorithm1(const SpaiProblem& problem, unsigned precision = kDefaultPrecision);

/// One report per stratum; each critical ideal is also saturated by the
/// homogenized generators of every stratum of higher codimension. Strata of
/// codimension d consist of isolated points and use their generators as the
/// critical ideal.
std::vector<SpaiReport> algorithm2(const std::vector<StratumSpec>& strata,
                                   const Direction& direction,
                                   unsigned precision = kDefaultPrecision);

}  // namespace acsv

#endif  // ACSV_SPAI_HPP
