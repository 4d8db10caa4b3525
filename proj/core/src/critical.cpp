#include "acsv/critical.hpp"

#include <algorithm>
#include <random>

namespace acsv {

namespace {

Ball evaluate(const UPoly& p, const Ball& x) {
  unsigned prec = x.precision();
  if (p.is_zero()) return Ball(prec);
  Ball acc = Ball::exact(p.leading(), prec);
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc *= x;
    acc += Ball::exact(p[k], prec);
  }
  return acc;
}

// Coefficients of x_j - h_j(s) for a lex basis in shape position, or nothing.
struct Shape {
  UPoly g;
  std::vector<UPoly> h;
};

std::optional<Shape> shape_of(const std::vector<Polynomial>& basis, std::size_t n) {
  const std::size_t s = n;
  if (basis.size() != n + 1) return std::nullopt;
  Shape out;
  out.h.resize(n);
  for (const auto& b : basis) {
    bool only_s = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (b.involves(v)) only_s = false;
    }
    if (only_s) {
      if (!out.g.is_zero()) return std::nullopt;
      out.g = UPoly::from(b, s);
      continue;
    }
    // Leading term must be x_j alone; the remainder a polynomial in s.
    std::optional<std::size_t> lead;
    std::vector<Term> rest;
    for (const auto& t : b.terms()) {
      bool pure_x = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (t.monomial[v] == 1 && t.monomial.degree() == 1) {
          if (lead || t.coefficient != 1) return std::nullopt;
          lead = v;
          pure_x = true;
        } else if (t.monomial[v] != 0) {
          return std::nullopt;
        }
      }
      if (!pure_x) rest.push_back(t);
    }
    if (!lead || !out.h[*lead].is_zero()) return std::nullopt;
    Polynomial r(b.ring(), std::move(rest));
    out.h[*lead] = UPoly::from(-r, s);
  }
  if (out.g.degree() < 1) return std::nullopt;
  return out;
}

long scale_exponent(const Ball& b) {
  return std::max(0L, abs(b.center).exponent() - 1);
}

}  // namespace

UPoly eliminant(const Ideal& ideal, std::size_t var) {
  if (ideal.is_unit()) return UPoly({Rational(1)});
  std::vector<std::size_t> keep{var};
  Ideal e = eliminate(ideal, keep);
  const auto& basis = e.basis();
  if (basis.empty()) return UPoly();
  return squarefree_part(UPoly::from(basis.front(), var));
}

std::vector<AlgebraicPoint> solve_zero_dim(const Ideal& ideal, unsigned precision) {
  if (ideal.is_unit()) return {};
  int dim = dimension(ideal);
  if (dim != 0) throw PositiveDimensional(dim);
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->size();

  std::vector<UPoly> elim(n);
  std::vector<Polynomial> radical = ideal.generators();
  for (std::size_t v = 0; v < n; ++v) {
    elim[v] = eliminant(ideal, v);
    radical.push_back(elim[v].to_polynomial(ring, v));
  }

  RingPtr ext = extend_ring(ring, {ring->fresh_name("s")});
  std::vector<Polynomial> base;
  for (const auto& g : radical) base.push_back(g.mapped_to(ext));

  std::vector<std::vector<long>> candidates;
  for (std::size_t k = n; k-- > 0;) {
    std::vector<long> c(n, 0);
    c[k] = 1;
    candidates.push_back(c);
  }
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 24; ++trial) {
    std::uniform_int_distribution<long> dist(-3 - 2 * trial, 3 + 2 * trial);
    std::vector<long> c(n);
    for (auto& x : c) x = dist(rng);
    candidates.push_back(c);
  }

  std::optional<Shape> shape;
  for (const auto& c : candidates) {
    Polynomial form = Polynomial::variable(ext, n);
    for (std::size_t v = 0; v < n; ++v) {
      if (c[v] != 0) form -= Polynomial::variable(ext, v) * Rational(c[v]);
    }
    std::vector<Polynomial> gens = base;
    gens.push_back(form);
    shape = shape_of(groebner_basis(gens, TermOrder::lex(n + 1)), n);
    if (shape) break;
  }
  if (!shape) throw std::runtime_error("solve_zero_dim: no separating linear form found");

  std::vector<std::vector<Root>> coord_roots(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (elim[v].degree() >= 1) coord_roots[v] = isolate_roots(elim[v], precision);
  }

  const unsigned limit = std::max(precision, kMaxPrecision) + 64;
  for (unsigned wp = precision + 32;; wp *= 2) {
    wp = std::min(wp, limit);
    auto roots = isolate_roots(shape->g, wp);
    std::vector<AlgebraicPoint> points;
    bool ok = true;
    for (const auto& root : roots) {
      AlgebraicPoint pt;
      for (std::size_t v = 0; v < n && ok; ++v) {
        const UPoly& h = shape->h[v];
        std::optional<Rational> exact;
        Ball b(wp);
        if (h.degree() <= 0) {
          exact = h.is_zero() ? Rational(0) : h[0];
          b = Ball::exact(*exact, wp);
        } else {
          b = evaluate(h, root.ball);
          if (root.rational) exact = h(*root.rational);
        }
        long e = scale_exponent(b);
        if (!exact && b.radius > BigFloat::exp2(e - static_cast<long>(precision) - 2, wp)) {
          ok = false;
          break;
        }
        b.radius = exact ? Ball::exact(*exact, wp).radius
                         : BigFloat::exp2(e - static_cast<long>(precision), wp);
        UPoly mp = elim[v];
        if (!exact) {
          int hits = 0;
          const Root* hit = nullptr;
          for (const auto& cr : coord_roots[v]) {
            if (cr.ball.overlaps(b)) {
              ++hits;
              hit = &cr;
            }
          }
          if (hits == 1 && hit->rational) exact = hit->rational;
        }
        if (exact) {
          mp = UPoly({-*exact, Rational(1)}).primitive();
        } else {
          for (const auto& cr : coord_roots[v]) {
            if (cr.rational) {
              mp = UPoly::divmod(mp, UPoly({-*cr.rational, Rational(1)})).first;
            }
          }
          mp = mp.primitive();
        }
        pt.coords.push_back(std::move(b));
        pt.min_polys.push_back(std::move(mp));
        pt.exact.push_back(exact);
      }
      if (!ok) break;
      points.push_back(std::move(pt));
    }
    if (ok) return points;
    if (wp == limit) break;
  }
  throw PrecisionExhausted("solve_zero_dim: coordinates did not certify");
}

Interval height(const AlgebraicPoint& point, const Direction& r) {
  if (point.size() != r.size()) throw std::invalid_argument("height: arity mismatch");
  unsigned prec = point.coords.empty() ? kDefaultPrecision : point.coords[0].precision();
  Interval total{BigFloat(prec), BigFloat(prec)};
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (r.r()[j] == 0) continue;
    if ((point.exact[j] && *point.exact[j] == 0) || point.coords[j].contains_zero()) {
      throw std::domain_error("infinite height: coordinate " + std::to_string(j) +
                              " is zero");
    }
    Interval l = log_abs(point.coords[j]);
    BigFloat k(-r.r()[j], prec);
    BigFloat a = l.lo * k, b = l.hi * k;
    if (b < a) std::swap(a, b);
    total.lo += a;
    total.hi += b;
  }
  BigFloat slack = BigFloat::exp2(4 - static_cast<long>(prec), prec) *
                   max(BigFloat(1L, prec), abs(total.hi) + abs(total.lo));
  total.lo -= slack;
  total.hi += slack;
  return total;
}

Ideal critical_system(const Polynomial& q, const Direction& r) {
  const RingPtr& ring = q.ring();
  const std::size_t d = ring->size();
  if (r.size() != d) throw std::invalid_argument("direction length differs from ring size");
  if (q.is_zero()) throw std::invalid_argument("Q must be nonzero");
  Polynomial sq = squarefree_part(q);
  std::vector<Polynomial> rows;
  for (std::size_t j = 0; j < d; ++j) rows.push_back(Polynomial::variable(ring, j) * partial(sq, j));
  std::vector<Polynomial> gens{sq};
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      Polynomial m = rows[a] * Rational(r.r()[b]) - rows[b] * Rational(r.r()[a]);
      if (!m.is_zero()) gens.push_back(std::move(m));
    }
  }
  std::vector<Polynomial> vars;
  for (std::size_t j = 0; j < d; ++j) vars.push_back(Polynomial::variable(ring, j));
  return saturate_product(Ideal(ring, std::move(gens)), vars);
}

std::vector<AlgebraicPoint> affine_critical_points(const Polynomial& q, const Direction& r,
                                                   unsigned precision) {
  Ideal sys = critical_system(q, r);
  std::vector<AlgebraicPoint> out;
  for (auto& pt : solve_zero_dim(sys, precision)) {
    bool torus = true;
    for (std::size_t j = 0; j < pt.size(); ++j) {
      if ((pt.exact[j] && *pt.exact[j] == 0) || pt.coords[j].contains_zero()) torus = false;
    }
    if (!torus) continue;
    pt.height = height(pt, r);
    out.push_back(std::move(pt));
  }
  // Heights are compared on a grid coarser than the enclosure width.
  const long grid = static_cast<long>(precision / 2);
  auto key = [&](const AlgebraicPoint& p) {
    BigFloat m = p.height->mid() * BigFloat::exp2(grid, precision + 64);
    mpfr_rint(m.get(), m.get(), MPFR_RNDN);
    return m;
  };
  std::stable_sort(out.begin(), out.end(), [&](const AlgebraicPoint& a, const AlgebraicPoint& b) {
    BigFloat ka = key(a), kb = key(b);
    if (ka != kb) return kb < ka;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto& x = a.coords[j].center;
      const auto& y = b.coords[j].center;
      if (x.re != y.re) return x.re < y.re;
      if (x.im != y.im) return x.im < y.im;
    }
    return false;
  });
  return out;
}

}  // namespace acsv
