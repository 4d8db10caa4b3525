#include "acsv/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace acsv {

namespace {

BigFloat slack(const BigFloat& magnitude, unsigned p) {
  return mul_up(abs(magnitude), BigFloat::exp2(3 - static_cast<long>(p), p));
}

Ball constant_ball(const BigFloat& x) {
  unsigned p = x.precision();
  return Ball(Complex(x), slack(x, p));
}

Ball inverse(const Ball& b) {
  unsigned p = b.precision();
  BigFloat m = abs(b.center);
  if (m <= b.radius) throw std::domain_error("inverse: ball contains zero");
  Complex one(BigFloat(1L, p));
  Complex c = one / b.center;
  // |1/z - 1/c| <= r / (|c| (|c| - r))
  BigFloat r = b.radius / (m * (m - b.radius));
  r = add_up(mul_up(r, BigFloat(1.0 + 1e-12, p)), slack(abs(c), p));
  return Ball(std::move(c), std::move(r));
}

Ball divide(const Ball& a, const Ball& b) { return a * inverse(b); }

// Principal square root; a ball straddling the negative real axis uses the
// branch i*sqrt(-z), which is continuous there.
Ball square_root(const Ball& b) {
  unsigned p = b.precision();
  BigFloat m = abs(b.center);
  if (b.radius + b.radius >= m) throw std::domain_error("sqrt: ball too close to zero");
  Complex c;
  if (b.center.re.sign() < 0 && abs(b.center.im) <= b.radius) {
    Complex s = sqrt(-b.center);
    c = Complex(-s.im, s.re);
  } else {
    c = sqrt(b.center);
  }
  // |sqrt z - sqrt c| = |z - c| / |sqrt z + sqrt c| and |sqrt z + sqrt c| >= sqrt(|c| / 2)
  // whenever |z - c| <= |c| / 2 on a continuous branch.
  BigFloat r = b.radius / sqrt(m / BigFloat(2L, p));
  r = add_up(mul_up(r, BigFloat(1.0 + 1e-12, p)), slack(abs(c), p));
  return Ball(std::move(c), std::move(r));
}

Ball power(const Ball& b, long e) {
  if (e < 0) return inverse(power(b, -e));
  unsigned p = b.precision();
  Ball result = Ball::exact(1, p);
  Ball base = b;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Ball scale(const Ball& b, const Rational& q) { return b * Ball::exact(q, b.precision()); }

// Determinant by cofactor expansion along the first row; only ring operations.
Ball determinant(const std::vector<std::vector<Ball>>& m, unsigned p) {
  const std::size_t n = m.size();
  if (n == 0) return Ball::exact(1, p);
  if (n == 1) return m[0][0];
  Ball total = Ball::exact(0, p);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Ball>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Ball> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    Ball t = m[0][c] * determinant(minor, p);
    if (c % 2) {
      total -= t;
    } else {
      total += t;
    }
  }
  return total;
}

struct Derivatives {
  std::vector<Ball> phi1;               // z_i Q_i
  std::vector<std::vector<Ball>> phi2;  // z_i z_j Q_ij + [i=j] z_i Q_i
};

Derivatives log_derivatives(const Polynomial& q, std::span<const Ball> z) {
  const std::size_t d = q.nvars();
  Derivatives out;
  std::vector<Polynomial> first;
  for (std::size_t i = 0; i < d; ++i) {
    first.push_back(partial(q, i));
    out.phi1.push_back(z[i] * evaluate(first[i], z));
  }
  out.phi2.assign(d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (j < i) {
        out.phi2[i].push_back(out.phi2[j][i]);
        continue;
      }
      Ball v = z[i] * z[j] * evaluate(partial(first[i], j), z);
      if (i == j) v += out.phi1[i];
      out.phi2[i].push_back(std::move(v));
    }
  }
  return out;
}

void check_smooth(const Polynomial& q, const AlgebraicPoint& point) {
  const std::size_t d = q.nvars();
  auto zero_gradient = [&](const Polynomial& f) {
    for (std::size_t i = 0; i < d; ++i) {
      if (!evaluate(partial(f, i), point.coords).contains_zero()) return false;
    }
    return true;
  };
  if (!zero_gradient(q)) return;
  Polynomial sf = squarefree_part(q);
  if (sf.total_degree() < q.total_degree() && !zero_gradient(sf)) {
    throw HigherOrderPole("point lies on a repeated factor of Q");
  }
  throw NotSmooth("gradient of Q vanishes at the point");
}

std::vector<std::size_t> others(std::size_t d, std::size_t k) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < d; ++j) {
    if (j != k) idx.push_back(j);
  }
  return idx;
}

}  // namespace

Complex AsymptoticTerm::evaluate(long n) const {
  unsigned p = base.precision();
  Complex value = pow(base.center, n) * constant.center;
  BigFloat alpha(poly_order, p);
  BigFloat scale = exp(alpha * log(BigFloat(n, p)));
  return value * scale;
}

std::size_t distinguished_variable(const Polynomial& q, const AlgebraicPoint& point) {
  std::size_t best = 0;
  BigFloat best_mag(point.coords.empty() ? kDefaultPrecision : point.coords[0].precision());
  for (std::size_t j = 0; j < q.nvars(); ++j) {
    Ball v = point.coords[j] * evaluate(partial(q, j), point.coords);
    BigFloat m = abs(v.center);
    if (j == 0 || m > best_mag) {
      best = j;
      best_mag = m;
    }
  }
  return best;
}

PhaseHessian phase_hessian(const Polynomial& q, const AlgebraicPoint& point, const Direction& r) {
  const std::size_t d = q.nvars();
  if (point.size() != d || r.size() != d) throw std::invalid_argument("phase_hessian: arity");
  check_smooth(q, point);
  const std::size_t k = distinguished_variable(q, point);
  Derivatives D = log_derivatives(q, point.coords);
  if (D.phi1[k].contains_zero()) throw NotSmooth("distinguished partial vanishes");
  Ball inv_k = inverse(D.phi1[k]);
  auto idx = others(d, k);
  std::vector<Ball> g;
  for (std::size_t i : idx) g.push_back(scale(D.phi1[i] * inv_k, -1));
  PhaseHessian H;
  H.distinguished = k;
  Rational rk(r.r()[k]);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    std::vector<Ball> row;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      std::size_t i = idx[a], j = idx[b];
      Ball s = D.phi2[i][j] + D.phi2[i][k] * g[b] + D.phi2[j][k] * g[a] +
               D.phi2[k][k] * g[a] * g[b];
      // H_ij = -r_k h_ij with h_ij = -s / Phi_k
      row.push_back(scale(s * inv_k, rk));
    }
    H.entries.push_back(std::move(row));
  }
  return H;
}

std::vector<std::vector<Complex>> finite_difference_hessian(const Polynomial& q,
                                                            const AlgebraicPoint& point,
                                                            const Direction& r,
                                                            unsigned precision) {
  const std::size_t d = q.nvars();
  const unsigned wp = precision + 64;
  const std::size_t k = distinguished_variable(q, point);
  const Polynomial qk = partial(q, k);
  std::vector<Complex> w;
  for (const auto& c : point.coords) {
    w.push_back(Complex(c.center.re.with_precision(wp), c.center.im.with_precision(wp)));
  }
  auto idx = others(d, k);
  const BigFloat tol = BigFloat::exp2(16 - static_cast<long>(wp), wp);

  // v(t) with Q(w_j e^{i t_j}, w_k e^{v}) = 0 near v = 0.
  auto solve_v = [&](const std::vector<BigFloat>& t) {
    std::vector<Complex> z = w;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      z[idx[a]] = w[idx[a]] * exp(Complex(BigFloat(wp), t[a]));
    }
    Complex v(wp);
    for (int it = 0; it < 200; ++it) {
      z[k] = w[k] * exp(v);
      Complex f = evaluate(q, std::span<const Complex>(z));
      Complex df = z[k] * evaluate(qk, std::span<const Complex>(z));
      Complex step = f / df;
      v -= step;
      if (abs(step) <= tol * (BigFloat(1L, wp) + abs(v))) break;
    }
    return v;
  };

  const std::size_t m = idx.size();
  const BigFloat eps = BigFloat::exp2(-static_cast<long>(precision) / 3, wp);
  std::vector<BigFloat> zero(m, BigFloat(wp));
  Complex v0 = solve_v(zero);
  Complex rk(BigFloat(r.r()[k], wp));
  std::vector<std::vector<Complex>> H(m, std::vector<Complex>(m, Complex(wp)));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      Complex second(wp);
      if (a == b) {
        auto tp = zero, tm = zero;
        tp[a] = eps;
        tm[a] = -eps;
        second = (solve_v(tp) - v0 - v0 + solve_v(tm)) / Complex(eps * eps);
      } else {
        auto pp = zero, pm = zero, mp = zero, mm = zero;
        pp[a] = eps, pp[b] = eps;
        pm[a] = eps, pm[b] = -eps;
        mp[a] = -eps, mp[b] = eps;
        mm[a] = -eps, mm[b] = -eps;
        BigFloat four(4L, wp);
        second = (solve_v(pp) - solve_v(pm) - solve_v(mp) + solve_v(mm)) /
                 Complex(four * eps * eps);
      }
      H[a][b] = rk * second;
      H[b][a] = H[a][b];
    }
  }
  return H;
}

AsymptoticTerm smooth_leading_term(const Polynomial& num, const Polynomial& q,
                                   const AlgebraicPoint& point, const Direction& r,
                                   unsigned precision) {
  const std::size_t d = q.nvars();
  if (num.nvars() != d) throw std::invalid_argument("smooth_leading_term: arity");
  const unsigned p = point.coords.empty() ? precision : point.coords[0].precision();
  PhaseHessian H = phase_hessian(q, point, r);
  const std::size_t k = H.distinguished;

  AsymptoticTerm term;
  term.source = point;
  term.distinguished = k;
  term.poly_order = Rational(1 - static_cast<long>(d), 2);
  term.poly_order.canonicalize();

  Ball base = Ball::exact(1, p);
  for (std::size_t j = 0; j < d; ++j) base *= power(point.coords[j], -r.r()[j]);
  term.base = base;

  Ball det = determinant(H.entries, p);
  if (det.contains_zero()) throw DegenerateSaddle("phase Hessian is singular");
  Ball residue = divide(evaluate(num, point.coords),
                        point.coords[k] * evaluate(partial(q, k), point.coords));
  residue = scale(residue, -1);
  Ball two_pi = constant_ball(BigFloat::pi(p) * BigFloat(2L, p));
  Ball factor = power(inverse(square_root(two_pi)), static_cast<long>(d) - 1);
  term.constant = factor * residue * inverse(square_root(det));
  return term;
}

Selection select_contributions(const std::vector<AsymptoticTerm>& terms,
                               const SeriesWindow& window, double tolerance, int max_weight) {
  if (terms.empty()) throw std::invalid_argument("no candidates");
  if (window.values.size() < 8) throw std::invalid_argument("window needs at least 8 values");

  // Tail of the window with nonzero coefficients and n >= 1.
  std::vector<long> ns;
  std::vector<std::size_t> pos;
  for (std::size_t i = window.values.size() / 2; i < window.values.size(); ++i) {
    long n = static_cast<long>(window.start + i);
    if (n < 1 || window.values[i] == 0) continue;
    ns.push_back(n);
    pos.push_back(i);
  }
  if (ns.size() < 3) throw std::invalid_argument("window tail has too few nonzero values");

  // Search at most kMaxSearch assignments: the leading terms only.
  constexpr double kMaxSearch = 2e5;
  std::size_t active = 0;
  double count = 1;
  while (active < terms.size() && count * (2 * max_weight + 1) <= kMaxSearch) {
    count *= 2 * max_weight + 1;
    ++active;
  }

  const unsigned p = terms[0].base.precision();
  // Normalized values t_i(n) / a_n and a_n / |a_n|.
  std::vector<std::vector<std::complex<double>>> t(active);
  std::vector<std::complex<double>> target;
  for (std::size_t s = 0; s < ns.size(); ++s) {
    BigFloat a(window.values[pos[s]], p);
    BigFloat mag = abs(a);
    target.emplace_back(a.sign() > 0 ? 1.0 : -1.0, 0.0);
    for (std::size_t i = 0; i < active; ++i) {
      Complex v = terms[i].evaluate(ns[s]);
      t[i].emplace_back((v.re / mag).to_double(), (v.im / mag).to_double());
    }
  }

  // Terms too small to show in the window cannot be resolved; their weight
  // stays 0.
  std::vector<bool> visible(active);
  for (std::size_t i = 0; i < active; ++i) {
    for (const auto& v : t[i]) visible[i] = visible[i] || std::abs(v) > 1e-6;
  }

  std::vector<int> w(active, 0), best;
  for (std::size_t i = 0; i < active; ++i) {
    if (visible[i]) w[i] = -max_weight;
  }
  double best_err = INFINITY;
  int best_norm = 0;
  while (true) {
    int norm = 0;
    for (int x : w) norm += std::abs(x);
    if (norm > 0) {
      double sum = 0;
      for (std::size_t s = 0; s < ns.size(); ++s) {
        std::complex<double> pred = 0;
        for (std::size_t i = 0; i < active; ++i) pred += static_cast<double>(w[i]) * t[i][s];
        sum += std::norm(pred - target[s]);
      }
      double err = std::sqrt(sum / static_cast<double>(ns.size()));
      if (err < best_err * (1 - 1e-9) || (err <= best_err * (1 + 1e-9) && norm < best_norm)) {
        best_err = err;
        best = w;
        best_norm = norm;
      }
    }
    std::size_t i = 0;
    while (i < active && (!visible[i] || w[i] == max_weight)) {
      if (visible[i]) w[i] = -max_weight;
      ++i;
    }
    if (i == active) break;
    ++w[i];
  }

  Selection sel;
  if (best.empty()) {
    sel.relative_error = sel.final_error = 1;
    return sel;
  }
  sel.relative_error = best_err;
  std::complex<double> last = 0;
  for (std::size_t i = 0; i < active; ++i) last += static_cast<double>(best[i]) * t[i].back();
  sel.final_error = std::abs(last - target.back());
  sel.conclusive = best_err <= tolerance;
  if (!sel.conclusive) return sel;
  for (std::size_t i = 0; i < active; ++i) {
    if (best[i] == 0) continue;
    AsymptoticTerm term = terms[i];
    // A negative weight is the other square-root branch of the Hessian.
    if (best[i] < 0) {
      term.constant = scale(term.constant, -1);
      best[i] = -best[i];
    }
    term.weight = best[i];
    sel.terms.push_back(std::move(term));
  }
  return sel;
}

}  // namespace acsv
