#include "acsv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace acsv {

namespace {

// Rounding allowance for a value of magnitude |x| at precision p.
BigFloat ulps(const BigFloat& magnitude, unsigned p, long k = 2) {
  return mul_up(abs(magnitude), BigFloat::exp2(k - static_cast<long>(p), p));
}

}  // namespace

Ball Ball::exact(const Rational& q, unsigned precision) {
  BigFloat c(q, precision);
  BigFloat r = ulps(c, precision, 1);
  return Ball(Complex(c), r);
}

bool Ball::contains(const Complex& z) const {
  return abs(z - center) <= radius;
}

bool Ball::contains(const Ball& inner) const {
  return add_up(abs(inner.center - center), inner.radius) <= radius;
}

bool Ball::overlaps(const Ball& other) const {
  return abs(center - other.center) <= add_up(radius, other.radius);
}

bool Ball::contains_zero() const { return abs(center) <= radius; }

Ball& Ball::operator+=(const Ball& o) {
  center += o.center;
  unsigned p = std::max(precision(), o.precision());
  radius = add_up(add_up(radius, o.radius), ulps(abs(center), p));
  return *this;
}

Ball& Ball::operator-=(const Ball& o) {
  center -= o.center;
  unsigned p = std::max(precision(), o.precision());
  radius = add_up(add_up(radius, o.radius), ulps(abs(center), p));
  return *this;
}

Ball& Ball::operator*=(const Ball& o) {
  unsigned p = std::max(precision(), o.precision());
  BigFloat a = abs(center);
  BigFloat b = abs(o.center);
  BigFloat r = add_up(add_up(mul_up(a, o.radius), mul_up(b, radius)),
                      mul_up(radius, o.radius));
  center *= o.center;
  radius = add_up(r, ulps(abs(center), p, 3));
  return *this;
}

Ball evaluate(const Polynomial& p, std::span<const Ball> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("evaluate: arity");
  unsigned prec = point.empty() ? kDefaultPrecision : point[0].precision();
  Ball total(prec);
  std::vector<std::vector<Ball>> powers(point.size());
  for (const auto& t : p.terms()) {
    Ball term = Ball::exact(t.coefficient, prec);
    for (std::size_t v = 0; v < point.size(); ++v) {
      unsigned e = t.monomial[v];
      if (e == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(point[v]);
      while (pw.size() < e) pw.push_back(pw.back() * point[v]);
      term *= pw[e - 1];
    }
    total += term;
  }
  return total;
}

Complex evaluate(const Polynomial& p, std::span<const Complex> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("evaluate: arity");
  unsigned prec = point.empty() ? kDefaultPrecision : point[0].precision();
  Complex total(prec);
  for (const auto& t : p.terms()) {
    Complex term(BigFloat(t.coefficient, prec));
    for (std::size_t v = 0; v < point.size(); ++v) {
      if (t.monomial[v]) term *= pow(point[v], t.monomial[v]);
    }
    total += term;
  }
  return total;
}

BigFloat Interval::mid() const {
  BigFloat s = lo + hi;
  return s * BigFloat(0.5, s.precision());
}

Interval log_abs(const Ball& z) {
  unsigned p = z.precision();
  BigFloat m = abs(z.center);
  BigFloat lo = m - z.radius;
  BigFloat hi = add_up(m, z.radius);
  lo -= ulps(m, p);
  if (lo.sign() <= 0) throw std::domain_error("log of a ball containing zero");
  BigFloat llo = log(lo);
  BigFloat lhi = log(hi);
  BigFloat slack = BigFloat::exp2(3 - static_cast<long>(p), p);
  return {llo - slack - ulps(llo, p), lhi + slack + ulps(lhi, p)};
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from(const Polynomial& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() != t.monomial[var]) {
      throw std::invalid_argument("polynomial is not univariate in " +
                                  p.ring()->name(var));
    }
    std::size_t e = t.monomial[var];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += t.coefficient;
  }
  return UPoly(std::move(c));
}

Polynomial UPoly::to_polynomial(const RingPtr& ring, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Monomial m;
    m.set(var, static_cast<unsigned>(i));
    terms.push_back({m, c_[i]});
  }
  return Polynomial(ring, std::move(terms));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  Rational lc = leading();
  for (auto& x : c) x /= lc;
  return UPoly(std::move(c));
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den = 1;
  for (const auto& x : c_) den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_class v = x.get_num() * (den / x.get_den());
    ints.push_back(v);
    g = gcd(g, v);
  }
  if (leading() < 0) g = -g;
  std::vector<Rational> c;
  for (auto& v : ints) c.emplace_back(v / g);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> r = a.c_;
  int db = b.degree();
  std::vector<Rational> q(std::max(0, a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[k] / b.leading();
    if (f == 0) continue;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  auto ring = make_ring({var});
  return to_polynomial(ring, 0).to_string();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = UPoly::divmod(x, y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() < 1) return p;
  UPoly g = gcd(p, p.derivative());
  return UPoly::divmod(p, g).first.primitive();
}

int count_real_roots(const UPoly& p) {
  UPoly s = squarefree_part(p);
  if (s.degree() < 1) return 0;
  std::vector<UPoly> seq{s, s.derivative()};
  while (seq.back().degree() > 0) {
    UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    Rational scale = -1 / abs(r.leading());
    std::vector<Rational> next;
    for (const auto& c : r.coeffs()) next.push_back(c * scale);
    seq.push_back(UPoly(std::move(next)));
  }
  auto changes = [&](bool at_plus) {
    int count = 0, last = 0;
    for (const auto& q : seq) {
      int sign = sgn(q.leading());
      if (!at_plus && q.degree() % 2 == 1) sign = -sign;
      if (sign == 0) continue;
      if (last != 0 && sign != last) ++count;
      last = sign;
    }
    return count;
  };
  return changes(false) - changes(true);
}

namespace {

struct Workspace {
  unsigned wp;
  std::vector<Complex> a;  // coefficients
  std::vector<BigFloat> abs_a;
  int n;
};

// p(z), p'(z) and the Horner bound sum |a_k||z|^k.
void horner(const Workspace& w, const Complex& z, Complex& pz, Complex& dz,
            BigFloat& bound) {
  pz = w.a[w.n];
  dz = Complex(w.wp);
  bound = w.abs_a[w.n];
  BigFloat az = abs(z);
  for (int k = w.n - 1; k >= 0; --k) {
    dz = dz * z + pz;
    pz = pz * z + w.a[k];
    bound = bound * az + w.abs_a[k];
  }
}

std::optional<std::vector<Root>> attempt(const UPoly& p, unsigned precision, unsigned wp,
                                         std::vector<Complex>& z) {
  Workspace w{wp, {}, {}, p.degree()};
  for (const auto& c : p.coeffs()) {
    w.a.emplace_back(BigFloat(c, wp));
    w.abs_a.push_back(abs(BigFloat(c, wp)));
  }
  const int n = w.n;
  if (z.size() != static_cast<std::size_t>(n)) {
    z.clear();
    BigFloat radius(1L, wp);
    if (p[0] != 0) {
      double ratio = abs(BigFloat(p[0] / p.leading(), 64)).to_double();
      radius = BigFloat(std::pow(ratio, 1.0 / n), wp);
    }
    BigFloat two_pi = BigFloat::pi(wp) * BigFloat(2L, wp);
    for (int k = 0; k < n; ++k) {
      BigFloat theta = two_pi * BigFloat(static_cast<long>(k), wp) /
                           BigFloat(static_cast<long>(n), wp) +
                       BigFloat(0.7, wp);
      z.emplace_back(radius * cos(theta), radius * sin(theta));
    }
  } else {
    for (auto& x : z) x = x.with_precision(wp);
  }

  const BigFloat tol = BigFloat::exp2(-static_cast<long>(wp * 3 / 4), wp);
  const int max_iter = 400 + 20 * n;
  int settled = -1;
  Complex pz(wp), dz(wp);
  BigFloat bound(wp);
  for (int it = 0; it < max_iter; ++it) {
    bool small = true;
    for (int k = 0; k < n; ++k) {
      horner(w, z[k], pz, dz, bound);
      if (pz.re.is_zero() && pz.im.is_zero()) continue;
      if (dz.re.is_zero() && dz.im.is_zero()) dz = Complex(BigFloat(1L, wp));
      Complex ratio = pz / dz;
      Complex s(wp);
      Complex one(BigFloat(1L, wp));
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        if (diff.re.is_zero() && diff.im.is_zero()) {
          diff = Complex(BigFloat::exp2(-static_cast<long>(wp / 2), wp));
        }
        s += one / diff;
      }
      Complex step = ratio / (one - ratio * s);
      z[k] -= step;
      if (abs(step) > tol * max(BigFloat(1L, wp), abs(z[k]))) small = false;
    }
    if (small) {
      if (settled < 0) settled = it;
      if (it - settled >= 2) break;
    }
  }
  if (settled < 0) return std::nullopt;

  std::vector<Root> roots(n);
  const BigFloat fudge = BigFloat(1L, wp) + BigFloat::exp2(-16, wp);
  const BigFloat err_scale =
      BigFloat(static_cast<long>(4 * n + 4), wp) * BigFloat::exp2(-static_cast<long>(wp), wp);
  BigFloat lead = abs(w.a[n].re);
  for (int i = 0; i < n; ++i) {
    horner(w, z[i], pz, dz, bound);
    BigFloat num = add_up(abs(pz), mul_up(err_scale, bound));
    BigFloat den = lead;
    for (int j = 0; j < n; ++j) {
      if (j != i) den *= abs(z[i] - z[j]);
    }
    if (den.is_zero()) return std::nullopt;
    BigFloat r = mul_up(BigFloat(static_cast<long>(n), wp), num) / den;
    roots[i].ball = Ball(z[i], mul_up(r, fudge));
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (roots[i].ball.overlaps(roots[j].ball)) return std::nullopt;
    }
  }

  // A reflected disk meeting only its own disk holds a real root; otherwise
  // it meets exactly the disk of the conjugate root, and the pair is
  // recentered to be exactly conjugate.
  int real_count = 0;
  std::vector<int> partner(n, -1);
  for (int i = 0; i < n; ++i) {
    Ball reflected(roots[i].ball.center.conj(), roots[i].ball.radius);
    std::vector<int> hits;
    for (int j = 0; j < n; ++j) {
      if (reflected.overlaps(roots[j].ball)) hits.push_back(j);
    }
    if (hits.size() != 1) return std::nullopt;
    if (hits[0] == i) {
      roots[i].real = true;
      roots[i].ball.center.im = BigFloat(wp);
      ++real_count;
    } else {
      partner[i] = hits[0];
    }
  }
  if (real_count != count_real_roots(p)) return std::nullopt;
  const BigFloat half(0.5, wp);
  for (int i = 0; i < n; ++i) {
    int j = partner[i];
    if (j < i) continue;
    if (partner[j] != i) return std::nullopt;
    Complex c = (roots[i].ball.center + roots[j].ball.center.conj()) * half;
    if (c.im.sign() < 0) c = c.conj();
    BigFloat r = max(roots[i].ball.radius, roots[j].ball.radius);
    roots[i].ball = Ball(c, r);
    roots[j].ball = Ball(c.conj(), r);
  }

  // Reported radius 2^(e - precision) with 2^e >= max(1, |z|); the certified
  // radius must be four times smaller so that disks nest across precisions.
  std::vector<BigFloat> reported;
  for (int i = 0; i < n; ++i) {
    long e = std::max(0L, abs(roots[i].ball.center).exponent() - 1);
    reported.push_back(BigFloat::exp2(e - static_cast<long>(precision), wp));
    if (roots[i].ball.radius > BigFloat::exp2(e - static_cast<long>(precision) - 2, wp)) {
      return std::nullopt;
    }
  }

  mpz_class lc = p.leading().get_num();
  for (auto& root : roots) {
    if (!root.real) continue;
    // p/q with q | lc is a continued-fraction convergent of any value within
    // 1/(2 q^2) of it.
    BigFloat scale(mpz_class(2 * lc * lc), wp);
    if (!(mul_up(scale, root.ball.radius) < BigFloat(1L, wp))) continue;
    mpq_class x = root.ball.center.re.to_rational();
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    mpq_class rest = x;
    for (int step = 0; step < 64; ++step) {
      mpz_class a;
      mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
      mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
      h0 = h1; h1 = h2; k0 = k1; k1 = k2;
      if (abs(k1) > abs(lc)) break;
      mpq_class cand(h1, k1);
      cand.canonicalize();
      if (p(cand) == 0 && root.ball.contains(Complex(BigFloat(cand, wp)))) {
        root.rational = cand;
        root.ball.center = Complex(BigFloat(cand, wp));
        break;
      }
      mpq_class frac = rest - mpq_class(a);
      if (frac == 0) break;
      rest = 1 / frac;
    }
  }

  for (int i = 0; i < n; ++i) roots[i].ball.radius = reported[i];

  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    const auto& x = a.ball.center;
    const auto& y = b.ball.center;
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  });
  return roots;
}

}  // namespace

std::vector<Root> isolate_roots(const UPoly& p, unsigned precision) {
  UPoly s = squarefree_part(p);
  if (s.degree() < 1) throw std::invalid_argument("isolate_roots: constant polynomial");
  std::vector<Complex> z;
  unsigned limit = std::max(precision, kMaxPrecision) + 64;
  for (unsigned wp = std::max(precision + 32, 96u);; wp *= 2) {
    wp = std::min(wp, limit);
    if (auto roots = attempt(s, precision, wp, z)) return *roots;
    if (wp == limit) break;
  }
  throw PrecisionExhausted("root isolation did not certify at " +
                           std::to_string(limit) + " bits");
}

}  // namespace acsv
