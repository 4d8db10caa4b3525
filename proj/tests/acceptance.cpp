// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "acsv/asympt.hpp"
#include "acsv/critical.hpp"
#include "acsv/groebner.hpp"
#include "acsv/oracle.hpp"
#include "acsv/parse.hpp"
#include "acsv/spai.hpp"
#include "test_support.hpp"

using namespace acsv;
using namespace acsv::testing;

namespace {

constexpr unsigned kPrec = 256;
// Reference values are computed with more bits than the enclosures they test.
constexpr unsigned kRef = 512;

// Collects the failed checks of one criterion.
class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

BigFloat big(long v) { return BigFloat(v, kRef); }

double rel(const Complex& got, const Complex& want) {
  return (abs(got - want) / abs(want)).to_double();
}

bool close(const Complex& a, const Complex& b, double tol) {
  return abs(a - b).to_double() <= tol;
}

Ideal expected(const SpaiReport& rep, const std::string& gens) {
  const auto& ring = rep.saturated_ideal.ring();
  return Ideal(ring, parse_polynomial_list(gens, ring));
}

bool only_trivial_solution(const SpaiReport& rep) {
  const Ideal& s = rep.saturated_ideal;
  const std::size_t d = s.ring()->size() - 2;
  for (std::size_t j = 0; j <= d; ++j) {
    if (!radical_member(Polynomial::variable(s.ring(), j), s)) return false;
  }
  return true;
}

bool heights_are_zero(const SpaiReport& rep) {
  if (rep.heights.values.size() != 1) return false;
  const auto& h = rep.heights.values[0].height;
  return h.lo.is_zero() && h.hi.is_zero();
}

SpaiReport spai(const RingPtr& ring, const std::string& q, std::vector<long> r,
                std::vector<Polynomial> exclude = {}) {
  return algorithm1({poly(ring, q), Direction(std::move(r)), std::move(exclude), false}, kPrec);
}

// Every basis the criteria produce, for the S-polynomial property.
std::vector<Ideal>& bases() {
  static std::vector<Ideal> all;
  return all;
}

void record(const SpaiReport& rep) { bases().push_back(rep.saturated_ideal); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Rational> diagonal(const RingPtr& ring, const std::string& q, std::size_t n) {
  std::vector<long> r(ring->size(), 1);
  return coefficients({poly(ring, "1"), poly(ring, q), Direction(r), n});
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

// Certified enclosure of a known real value.
bool encloses(const Ball& b, const BigFloat& exact, double max_radius) {
  return b.contains(Complex(exact)) && b.radius.to_double() <= max_radius;
}

bool hessian_matches(const Polynomial& q, const AlgebraicPoint& pt, const Direction& r) {
  auto h = phase_hessian(q, pt, r);
  auto fd = finite_difference_hessian(q, pt, r, 128);
  for (std::size_t i = 0; i < fd.size(); ++i) {
    for (std::size_t j = 0; j < fd.size(); ++j) {
      if (rel(fd[i][j], h.entries[i][j].center) > 1e-6) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

void criterion1(Check& check) {
  auto t0 = std::chrono::steady_clock::now();
  auto ring = ring_of({"x", "y"});
  auto rep = spai(ring, "2 - x*y^2 - 2*x*y - x + y", {1, 1});
  record(rep);
  check(rep.saturated_ideal == expected(rep, "(eta - 1)^2; z0; y*(eta - 1); x"), "ideal");
  check(rep.exists == true, "exists");
  check(heights_are_zero(rep), "heights {0}");
  check(seconds_since(t0) < 5, "runtime");
}

void criterion2(Check& check) {
  auto t0 = std::chrono::steady_clock::now();
  auto ring = ring_of({"x", "y"});
  auto rep = spai(ring, "1 - x - y - x*y^2", {1, 1});
  record(rep);
  check(rep.saturated_ideal == expected(rep, "(eta + 1)*(4*eta^2 + 4*eta - 1); z0; y*(eta + 1); x"),
        "ideal");
  check(heights_are_zero(rep), "heights {0}");
  auto pts = affine_critical_points(poly(ring, "1 - x - y - x*y^2"), Direction({1, 1}), kPrec);
  BigFloat half(Rational(1, 2), kRef);
  BigFloat s = sqrt(big(2)) - big(1);
  bool found = false;
  for (const auto& p : pts) {
    if (encloses(p.coords[0], half, 1e-30) && encloses(p.coords[1], s, 1e-30)) found = true;
  }
  check(found, "affine point (1/2, sqrt2 - 1)");
  check(seconds_since(t0) < 5, "runtime");
}

void criterion3(Check& check) {
  auto ring = ring_of({"x", "y"});
  const std::string q = "-x^2*y - 10*x*y^2 - x^2 - 20*x*y - 9*x + 10*y + 20";
  auto rep = spai(ring, q, {1, 1});
  record(rep);
  check(rep.saturated_ideal ==
            expected(rep, "(2*eta^4 - 11*eta^3 + 171*eta^2 - 1382*eta + 3220)*(eta - 1)^2; z0; "
                          "y*(eta - 1); x"),
        "ideal");
  check(heights_are_zero(rep), "heights {0}");

  auto pts = affine_critical_points(poly(ring, q), Direction({1, 1}), kPrec);
  check(pts.size() == 4, "4 affine points");
  int big_pairs = 0, small_pairs = 0;
  for (const auto& p : pts) {
    if (p.coords[0].center.im.is_zero()) check(false, "non-real points");
    double m = abs(p.coords[0].center * p.coords[1].center).to_double();
    if (std::abs(m - 9.486) <= 1e-3) ++big_pairs;
    if (std::abs(m - 4.230) <= 1e-3) ++small_pairs;
    bool has_conj = false;
    for (const auto& o : pts) {
      has_conj = has_conj || (close(o.coords[0].center, p.coords[0].center.conj(), 1e-30) &&
                              close(o.coords[1].center, p.coords[1].center.conj(), 1e-30));
    }
    check(has_conj, "conjugate pairs");
  }
  check(big_pairs == 2 && small_pairs == 2, "|xy| in {9.486, 4.230}");

  auto g = growth_estimate(diagonal(ring, q, 40));
  check(std::abs(g.rate - 1.0) <= 0.05, "rate " + std::to_string(g.rate));
  check(std::abs(g.poly_order + 0.5) <= 0.15, "poly order " + std::to_string(g.poly_order));
}

void criterion4(Check& check) {
  auto t0 = std::chrono::steady_clock::now();
  auto ring = ring_of({"x", "y", "z"});
  auto q = poly(ring, "1 - x - y - z - x*y");
  Direction r({1, 1, 1});
  auto rep = algorithm1({q, r, {}, false}, kPrec);
  record(rep);
  check(rep.exists == false, "exists = false");

  auto pts = affine_critical_points(q, r, kPrec);
  check(pts.size() == 2, "2 affine points");
  BigFloat s17 = sqrt(big(17));
  int matched = 0;
  const AlgebraicPoint* positive = nullptr;
  for (int sign : {1, -1}) {
    BigFloat sq = sign > 0 ? s17 : -s17;
    BigFloat xy = -(big(3) + sq) / big(4);
    BigFloat z = (big(7) + sq) / big(8);
    for (const auto& p : pts) {
      if (close(p.coords[0].center, Complex(xy), 1e-30) &&
          close(p.coords[1].center, Complex(xy), 1e-30) &&
          close(p.coords[2].center, Complex(z), 1e-30)) {
        ++matched;
        if (sign < 0) positive = &p;
      }
    }
  }
  check(matched == 2, "sigma1/sigma2 coordinates");
  if (!positive) return;

  auto term = smooth_leading_term(poly(ring, "1"), q, *positive, r, kPrec);
  BigFloat h = (big(3) + s17) / big(2);
  BigFloat base = h * h * (big(7) + s17) / big(4);
  check(rel(term.base.center, Complex(base)) <= 1e-9, "base");
  BigFloat c = big(2) / (BigFloat::pi(kRef) * sqrt(big(26) * s17 - big(102)));
  check(rel(term.constant.center, Complex(c)) <= 1e-6, "constant");

  std::vector<AsymptoticTerm> terms;
  for (const auto& p : pts) terms.push_back(smooth_leading_term(poly(ring, "1"), q, p, r, kPrec));
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return abs(a.base.center) > abs(b.base.center);
  });
  SeriesWindow w{r, 0, diagonal(ring, "1 - x - y - z - x*y", 12)};
  auto sel = select_contributions(terms, w, 0.1);
  bool weight_one = sel.conclusive && sel.terms.size() == 1 && sel.terms[0].weight == 1 &&
                    sel.terms[0].base.overlaps(term.base);
  check(weight_one, "weight 1 on the positive point");
  check(sel.final_error <= 0.03, "error at n = 12: " + std::to_string(sel.final_error));
  check(seconds_since(t0) < 60, "runtime");
}

void criterion5(Check& check) {
  auto t0 = std::chrono::steady_clock::now();
  auto ring = ring_of({"x", "y", "z", "w"});
  std::vector<Polynomial> point{poly(ring, "3*x - 1"), poly(ring, "3*y - 1"),
                                poly(ring, "3*z - 1"), poly(ring, "3*w - 1")};
  auto rep = spai(ring, "1 - x - y - z - w + 27*x*y*z*w", {1, 1, 1, 1}, point);
  record(rep);
  check(only_trivial_solution(rep), "only the trivial solution");
  check(rep.saturated_ideal == expected(rep, "z0; z^4; y - z; x - z; w - z"),
        "ideal equality (got " + rep.saturated_ideal.to_string() + ")");
  check(rep.exists == false, "exists = false");
  check(seconds_since(t0) < 120, "runtime");
}

void criterion6(Check& check) {
  auto ring = ring_of({"x", "y", "z"});
  auto q = poly(ring, "1 - x + y - z - 2*x*y^2*z");
  Direction r({1, 1, 1});
  auto rep = algorithm1({q, r, {}, false}, kPrec);
  record(rep);
  BigFloat log2 = log(big(2));
  bool height_ok = rep.heights.values.size() == 1 && rep.heights.values[0].height.contains(log2) &&
                   (rep.heights.values[0].height.hi - rep.heights.values[0].height.lo) <
                       BigFloat::exp2(-200, kPrec);
  check(height_ok, "height log 2");
  bool minus_half = false;
  for (const auto& v : rep.heights.values) {
    minus_half = minus_half || (v.eta.rational && *v.eta.rational == Rational(-1, 2));
  }
  check(minus_half, "eta = -1/2 as exact rational root (got " +
                        (rep.heights.values.empty() || !rep.heights.values[0].eta.rational
                             ? std::string("none")
                             : rep.heights.values[0].eta.rational->get_str()) +
                        ")");

  auto pts = affine_critical_points(q, r, kPrec);
  check(pts.size() == 2, "2 affine points");
  BigFloat third(Rational(1, 3), kRef);
  BigFloat s105 = sqrt(big(105));
  const AlgebraicPoint* dominant = nullptr;
  for (int sign : {1, -1}) {
    BigFloat y = (big(9) + (sign > 0 ? s105 : -s105)) / big(4);
    bool found = false;
    for (const auto& p : pts) {
      if (encloses(p.coords[0], third, 1e-30) && encloses(p.coords[1], y, 1e-30) &&
          encloses(p.coords[2], third, 1e-30)) {
        found = true;
        if (sign < 0) dominant = &p;
      }
    }
    check(found, sign > 0 ? "point x+" : "point x-");
  }
  if (!dominant) return;
  auto term = smooth_leading_term(poly(ring, "1"), q, *dominant, r, kPrec);
  BigFloat base = -(big(27) + big(3) * s105) / big(2);
  check(rel(term.base.center, Complex(base)) <= 1e-9, "base");
  BigFloat c = sqrt(big(3)) / (big(2) * BigFloat::pi(kRef));
  check(rel(term.constant.center, Complex(c)) <= 1e-6, "constant");
  check(dominant->height->lo > log2, "affine height exceeds log 2");
}

void criterion7(Check& check) {
  auto ring = ring_of({"x", "y"});
  auto a = diagonal(ring, "2 - x*y^2 - 2*x*y - x + y", 20);
  // (1 - z)^(-1/2) / 2 = sum C(2n, n) 4^-n z^n / 2
  for (unsigned n = 0; n <= 20; ++n) {
    Rational want = binomial(2 * n, n) / Rational(mpz_class(1) << (2 * n)) / 2;
    check(a[n] == want, "n = " + std::to_string(n));
  }
}

void criterion8(Check& check) {
  auto ring = ring_of({"x", "y"});
  auto g = growth_estimate(diagonal(ring, "1 - x - y - x*y^2", 40));
  const double target = 2 + 2 * std::sqrt(2.0);
  check(std::abs(g.rate - target) / target <= 0.03, "rate " + std::to_string(g.rate));
  auto pts = affine_critical_points(poly(ring, "1 - x - y - x*y^2"), Direction({1, 1}), kPrec);
  check(!pts.empty(), "affine point");
  if (pts.empty()) return;
  BigFloat want = big(2) + big(2) * sqrt(big(2));
  BigFloat got = exp(pts[0].height->mid());
  check((abs(got - want) / want).to_double() <= 1e-9, "exp(height) = 2 + 2 sqrt 2");
}

void criterion9(Check& check) {
  // S-polynomials of every basis reduce to zero.
  for (const auto& ideal : bases()) {
    const auto& b = ideal.basis();
    check(is_groebner_basis(b, TermOrder::grevlex(ideal.ring()->size())),
          "S-polynomials of " + ideal.to_string());
  }

  // Saturation is idempotent.
  {
    auto ring = ring_of({"x", "y"});
    Ideal crit = critical_system(poly(ring, "1 - x - y - x*y^2"), Direction({1, 1}));
    for (std::size_t j = 0; j < 2; ++j) {
      auto v = Polynomial::variable(ring, j);
      check(saturate(crit, v) == crit, "critical system saturated");
    }
    Ideal i(ring, parse_polynomial_list("x^2*y - x*y; x^3 - x^2", ring));
    Ideal once = saturate(i, poly(ring, "x"));
    check(saturate(once, poly(ring, "x")) == once, "saturation idempotent");
  }

  // Direction scaling keeps exists flags and point sets.
  struct Case {
    std::vector<std::string> vars;
    std::string q;
    long max_k;
  };
  std::vector<Case> cases{{{"x", "y"}, "2 - x*y^2 - 2*x*y - x + y", 3},
                          {{"x", "y"}, "1 - x - y - x*y^2", 3},
                          {{"x", "y"}, "-x^2*y - 10*x*y^2 - x^2 - 20*x*y - 9*x + 10*y + 20", 2},
                          {{"x", "y", "z"}, "1 - x - y - z - x*y", 3},
                          {{"x", "y", "z"}, "1 - x + y - z - 2*x*y^2*z", 3}};
  auto same_witnesses = [](const SpaiReport& a, const SpaiReport& b, std::size_t n) {
    auto covered = [n](const SpaiReport& from, const SpaiReport& in) {
      for (const auto& w : from.witnesses) {
        if (!w.point) continue;
        bool found = false;
        for (const auto& v : in.witnesses) {
          if (!v.point) continue;
          bool all = true;
          for (std::size_t j = 0; j < n; ++j) {
            all = all && w.point->coords[j].overlaps(v.point->coords[j]);
          }
          found = found || all;
        }
        if (!found) return false;
      }
      return true;
    };
    return covered(a, b) && covered(b, a);
  };
  for (const auto& c : cases) {
    auto ring = ring_of(c.vars);
    auto q = poly(ring, c.q);
    Direction r(std::vector<long>(c.vars.size(), 1));
    auto base_rep = algorithm1({q, r, {}, false}, 128);
    auto base_pts = affine_critical_points(q, r, 128);
    for (long k = 2; k <= c.max_k; ++k) {
      auto rep = algorithm1({q, r.scaled(k), {}, false}, 128);
      check(rep.exists == base_rep.exists, "exists under scaling by " + std::to_string(k));
      check(same_witnesses(base_rep, rep, c.vars.size() + 1),
            "witnesses under scaling by " + std::to_string(k) + " for " + c.q);
      auto pts = affine_critical_points(q, r.scaled(k), 128);
      bool same = pts.size() == base_pts.size();
      for (std::size_t i = 0; same && i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts[i].size(); ++j) {
          same = same && pts[i].coords[j].overlaps(base_pts[i].coords[j]);
        }
      }
      check(same, "point set under scaling by " + std::to_string(k) + " for " + c.q);
    }
  }

  // Homogenize then dehomogenize.
  {
    std::mt19937 rng(2024);
    auto ring = ring_of({"x", "y", "z"});
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      Polynomial p = random_nonzero(rng, ring, 6, 6);
      Polynomial h = homogenize(p, "h");
      if (!h.is_homogeneous()) ++bad;
      if (dehomogenize(h, h.nvars() - 1, ring) != p) ++bad;
    }
    check(bad == 0, "homogenize roundtrip");
  }

  // Phase Hessian against finite differences.
  for (const auto& c : {cases[3], cases[4]}) {
    auto ring = ring_of(c.vars);
    auto q = poly(ring, c.q);
    Direction r({1, 1, 1});
    for (const auto& p : affine_critical_points(q, r, 128)) {
      check(hessian_matches(q, p, r), "Hessian finite differences for " + c.q);
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> all{
      {1, "SPAI at eta = 1 with zero height", criterion1},
      {2, "SPAI at eta = -1 and the affine minimal point", criterion2},
      {3, "SPAI dominating two conjugate critical pairs", criterion3},
      {4, "no SPAI, smooth leading term and selection", criterion4},
      {5, "GRZ with the singular point excluded", criterion5},
      {6, "height log 2 at infinity and leading term", criterion6},
      {7, "diagonal coefficients of 2 - x*y^2 - 2*x*y - x + y", criterion7},
      {8, "growth rate of 1 - x - y - x*y^2", criterion8},
      {9, "property suites", criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    Check check;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (check.ok() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " ("
              << timing << ")";
    if (!check.ok()) {
      std::cout << ": " << check.summary();
      ++failed;
    }
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
