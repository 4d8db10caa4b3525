#ifndef ACSV_BIGFLOAT_HPP
#define ACSV_BIGFLOAT_HPP

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace acsv {

/// MPFR value with its own precision. Binary operations round to the larger
/// operand precision, so no global precision state is involved.
class BigFloat {
 public:
  explicit BigFloat(unsigned precision = 128);
  BigFloat(double v, unsigned precision);
  BigFloat(long v, unsigned precision);
  BigFloat(const mpq_class& q, unsigned precision);
  BigFloat(const mpz_class& z, unsigned precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(unsigned precision);
  /// 2^e at the given precision.
  static BigFloat exp2(long e, unsigned precision);
  static BigFloat from_string(const std::string& text, unsigned precision);

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  BigFloat with_precision(unsigned precision) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact conversion of the binary value.
  mpq_class to_rational() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

 private:
  unsigned common(const BigFloat& o) const;
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// Rounded upward; used for error radii.
BigFloat add_up(const BigFloat& a, const BigFloat& b);
BigFloat mul_up(const BigFloat& a, const BigFloat& b);

/// Complex number over BigFloat.
struct Complex {
  BigFloat re;
  BigFloat im;

  explicit Complex(unsigned precision = 128) : re(precision), im(precision) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(BigFloat r) : re(std::move(r)), im(re.precision()) {}

  unsigned precision() const { return re.precision(); }
  Complex with_precision(unsigned precision) const {
    return {re.with_precision(precision), im.with_precision(precision)};
  }

  Complex conj() const { return {re, -im}; }
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const BigFloat& s);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const BigFloat& s) { return a *= s; }

  std::string to_string(int digits = 20) const;
};

BigFloat abs(const Complex& z);
BigFloat norm(const Complex& z);  // |z|^2
BigFloat arg(const Complex& z);
Complex sqrt(const Complex& z);   // principal branch
Complex log(const Complex& z);    // principal branch
Complex exp(const Complex& z);
Complex pow(const Complex& z, long n);

}  // namespace acsv

#endif  // ACSV_BIGFLOAT_HPP
