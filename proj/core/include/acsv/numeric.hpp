#ifndef ACSV_NUMERIC_HPP
#define ACSV_NUMERIC_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "acsv/bigfloat.hpp"
#include "acsv/polynomial.hpp"

namespace acsv {

inline constexpr unsigned kDefaultPrecision = 128;
inline constexpr unsigned kMaxPrecision = 2048;

/// Raised when certification still fails at kMaxPrecision.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed complex disk: every value it stands for lies within `radius` of
/// `center`.
struct Ball {
  Complex center;
  BigFloat radius;

  explicit Ball(unsigned precision = kDefaultPrecision)
      : center(precision), radius(precision) {}
  Ball(Complex c, BigFloat r) : center(std::move(c)), radius(std::move(r)) {}
  static Ball exact(const Rational& q, unsigned precision);

  unsigned precision() const { return center.precision(); }
  bool contains(const Complex& z) const;
  /// Every point of `inner` lies in *this.
  bool contains(const Ball& inner) const;
  bool overlaps(const Ball& other) const;
  bool contains_zero() const;

  Ball& operator+=(const Ball& o);
  Ball& operator-=(const Ball& o);
  Ball& operator*=(const Ball& o);
  friend Ball operator+(Ball a, const Ball& b) { return a += b; }
  friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
  friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
};

/// Enclosure of p over the product of coordinate balls.
Ball evaluate(const Polynomial& p, std::span<const Ball> point);
/// Rounded evaluation at exact-center coordinates (no enclosure).
Complex evaluate(const Polynomial& p, std::span<const Complex> point);

/// Real interval [lo, hi].
struct Interval {
  BigFloat lo;
  BigFloat hi;
  BigFloat mid() const;
  bool contains(const BigFloat& x) const { return lo <= x && x <= hi; }
};

/// Enclosure of log|z| over the ball; throws if the ball contains 0.
Interval log_abs(const Ball& z);

/// Dense univariate polynomial over Q, coefficients from degree 0 upward,
/// no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  /// `p` must involve no variable other than `var`.
  static UPoly from(const Polynomial& p, std::size_t var);
  Polynomial to_polynomial(const RingPtr& ring, std::size_t var) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients, content 1, positive leading coefficient.
  UPoly primitive() const;

  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  /// Quotient and remainder.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);
/// Number of distinct real roots (Sturm).
int count_real_roots(const UPoly& p);

/// A root of a univariate polynomial with its certified disk. `rational`
/// is set when the root was recognized as an exact rational number.
struct Root {
  Ball ball;
  bool real = false;
  std::optional<Rational> rational;
};

/// All distinct complex roots of p (nonzero, nonconstant) with disks of
/// radius at most 2^-precision * max(1, |root|), pairwise disjoint. Real roots
/// have zero imaginary part and agree in number with the Sturm count. Order:
/// by real part, then imaginary part.
std::vector<Root> isolate_roots(const UPoly& p, unsigned precision);

}  // namespace acsv

#endif  // ACSV_NUMERIC_HPP
