#include "acsv/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace acsv {

BigFloat::BigFloat(unsigned precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, unsigned precision) {
  mpfr_init2(v_, precision);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, unsigned precision) {
  mpfr_init2(v_, precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& q, unsigned precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& z, unsigned precision) {
  mpfr_init2(v_, precision);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(unsigned precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp2(long e, unsigned precision) {
  BigFloat r(precision);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_string(const std::string& text, unsigned precision) {
  BigFloat r(precision);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("invalid number: " + text);
  }
  return r;
}

BigFloat BigFloat::with_precision(unsigned precision) const {
  BigFloat r(precision);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

mpq_class BigFloat::to_rational() const {
  if (!is_finite()) throw std::domain_error("non-finite value");
  if (is_zero()) return 0;
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpz_class s;
    mpz_mul_2exp(s.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q = s;
  } else {
    mpz_class den;
    mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    q = mpq_class(m, den);
    q.canonicalize();
  }
  return q;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

long BigFloat::exponent() const {
  if (is_zero()) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_));
}

unsigned BigFloat::common(const BigFloat& o) const {
  return std::max(precision(), o.precision());
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define ACSV_BIGFLOAT_OP(op, fn)                       \
  BigFloat& BigFloat::operator op(const BigFloat& o) { \
    unsigned p = common(o);                            \
    if (p != precision()) mpfr_prec_round(v_, p, MPFR_RNDN); \
    fn(v_, v_, o.v_, MPFR_RNDN);                       \
    return *this;                                      \
  }
ACSV_BIGFLOAT_OP(+=, mpfr_add)
ACSV_BIGFLOAT_OP(-=, mpfr_sub)
ACSV_BIGFLOAT_OP(*=, mpfr_mul)
ACSV_BIGFLOAT_OP(/=, mpfr_div)
#undef ACSV_BIGFLOAT_OP

namespace {

template <typename F>
BigFloat unary(const BigFloat& x, F fn) {
  BigFloat r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

template <typename F>
BigFloat binary(const BigFloat& a, const BigFloat& b, F fn, mpfr_rnd_t rnd = MPFR_RNDN) {
  BigFloat r(std::max(a.precision(), b.precision()));
  fn(r.get(), a.get(), b.get(), rnd);
  return r;
}

}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binary(y, x, mpfr_atan2); }
BigFloat hypot(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_hypot); }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat add_up(const BigFloat& a, const BigFloat& b) {
  return binary(a, b, mpfr_add, MPFR_RNDU);
}
BigFloat mul_up(const BigFloat& a, const BigFloat& b) {
  return binary(a, b, mpfr_mul, MPFR_RNDU);
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  BigFloat den = o.re * o.re + o.im * o.im;
  if (den.is_zero()) throw std::domain_error("complex division by zero");
  BigFloat r = (re * o.re + im * o.im) / den;
  BigFloat i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const BigFloat& s) {
  re *= s;
  im *= s;
  return *this;
}

std::string Complex::to_string(int digits) const {
  if (im.is_zero()) return re.to_string(digits);
  std::string s = re.to_string(digits);
  s += im.sign() < 0 ? " - " : " + ";
  s += abs(im).to_string(digits) + "*I";
  return s;
}

BigFloat abs(const Complex& z) { return hypot(z.re, z.im); }
BigFloat norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
BigFloat arg(const Complex& z) { return atan2(z.im, z.re); }

Complex sqrt(const Complex& z) {
  unsigned p = z.precision();
  if (z.re.is_zero() && z.im.is_zero()) return Complex(p);
  BigFloat m = abs(z);
  BigFloat half(0.5, p);
  BigFloat a = sqrt((m + abs(z.re)) * half);
  if (z.re.sign() >= 0) {
    return {a, z.im / (a + a)};
  }
  BigFloat b = z.im.sign() < 0 ? -a : a;
  return {abs(z.im) / (a + a), b};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex exp(const Complex& z) {
  BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    Complex one(BigFloat(1L, z.precision()));
    return one / pow(z, -n);
  }
  Complex result(BigFloat(1L, z.precision()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace acsv
