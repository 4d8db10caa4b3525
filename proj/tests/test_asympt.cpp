#include <doctest.h>

#include "acsv/asympt.hpp"
#include "acsv/oracle.hpp"
#include "test_support.hpp"

using namespace acsv;
using namespace acsv::testing;

namespace {

constexpr unsigned kP = 256;

BigFloat num(long v) { return BigFloat(v, kP); }

double rel(const Complex& got, const Complex& want) {
  return (abs(got - want) / abs(want)).to_double();
}

const AlgebraicPoint& positive_point(const std::vector<AlgebraicPoint>& pts) {
  for (const auto& p : pts) {
    bool pos = true;
    for (const auto& c : p.coords) pos = pos && c.center.im.is_zero() && c.center.re.sign() > 0;
    if (pos) return p;
  }
  throw std::runtime_error("no positive point");
}

SeriesWindow window(const Polynomial& num_p, const Polynomial& q, const Direction& r,
                    std::size_t n) {
  return {r, 0, coefficients({num_p, q, r, n})};
}

std::vector<AsymptoticTerm> all_terms(const Polynomial& p, const Polynomial& q,
                                      const Direction& r) {
  std::vector<AsymptoticTerm> out;
  for (const auto& pt : affine_critical_points(q, r, kP)) {
    out.push_back(smooth_leading_term(p, q, pt, r, kP));
  }
  return out;
}

void check_hessian(const Polynomial& q, const AlgebraicPoint& pt, const Direction& r) {
  auto H = phase_hessian(q, pt, r);
  auto F = finite_difference_hessian(q, pt, r, 128);
  REQUIRE(F.size() == H.entries.size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = 0; j < F.size(); ++j) {
      CHECK(rel(F[i][j], H.entries[i][j].center) <= 1e-6);
    }
  }
}

}  // namespace

TEST_CASE("central binomial leading term") {
  auto ring = ring_of({"x", "y"});
  auto q = poly(ring, "1 - x - y");
  Direction r({1, 1});
  auto pts = affine_critical_points(q, r, kP);
  REQUIRE(pts.size() == 1);
  auto t = smooth_leading_term(poly(ring, "1"), q, pts[0], r, kP);
  CHECK(rel(t.base.center, Complex(num(4))) < 1e-60);
  CHECK(t.poly_order == Rational(-1, 2));
  Complex c(BigFloat(1L, kP) / sqrt(BigFloat::pi(kP)));
  CHECK(rel(t.constant.center, c) < 1e-60);
  BigFloat fine = BigFloat(1L, 512) / sqrt(BigFloat::pi(512));
  CHECK(t.constant.contains(Complex(fine)));
  check_hessian(q, pts[0], r);

  auto w = window(poly(ring, "1"), q, r, 50);
  double err = (abs(t.evaluate(50) - Complex(BigFloat(w.values[50], kP))) /
                BigFloat(w.values[50], kP)).to_double();
  CHECK(err < 0.02);
  auto sel = select_contributions({t}, w, 0.05);
  REQUIRE(sel.conclusive);
  REQUIRE(sel.terms.size() == 1);
  CHECK(*sel.terms[0].weight == 1);
}

TEST_CASE("1 - x - y - z - x*y: leading term and selection") {
  auto ring = ring_of({"x", "y", "z"});
  auto q = poly(ring, "1 - x - y - z - x*y");
  Direction r({1, 1, 1});
  auto pts = affine_critical_points(q, r, kP);
  REQUIRE(pts.size() == 2);
  const auto& pos = positive_point(pts);
  auto t = smooth_leading_term(poly(ring, "1"), q, pos, r, kP);
  BigFloat s17 = sqrt(num(17));
  BigFloat half = (num(3) + s17) / num(2);
  BigFloat base = half * half * (num(7) + s17) / num(4);
  CHECK(rel(t.base.center, Complex(base)) < 1e-9);
  CHECK(std::abs(t.base.center.re.to_double() - 35.2732) < 1e-3);
  BigFloat c = num(2) / (BigFloat::pi(kP) * sqrt(num(26) * s17 - num(102)));
  CHECK(rel(t.constant.center, Complex(c)) < 1e-6);
  CHECK(t.poly_order == Rational(-1));
  for (const auto& pt : pts) check_hessian(q, pt, r);

  auto terms = all_terms(poly(ring, "1"), q, r);
  auto w = window(poly(ring, "1"), q, r, 12);
  auto sel = select_contributions(terms, w, 0.1);
  REQUIRE(sel.conclusive);
  REQUIRE(sel.terms.size() == 1);
  CHECK(*sel.terms[0].weight == 1);
  CHECK(sel.terms[0].base.overlaps(t.base));
  CHECK(sel.final_error <= 0.03);
}

TEST_CASE("1 - x + y - z - 2*x*y^2*z: leading term") {
  auto ring = ring_of({"x", "y", "z"});
  auto q = poly(ring, "1 - x + y - z - 2*x*y^2*z");
  Direction r({1, 1, 1});
  auto pts = affine_critical_points(q, r, kP);
  REQUIRE(pts.size() == 2);
  BigFloat s105 = sqrt(num(105));
  const AlgebraicPoint* dom = nullptr;
  for (const auto& p : pts) {
    if (abs(p.coords[1].center - Complex((num(9) - s105) / num(4))) < BigFloat(1e-30, kP)) {
      dom = &p;
    }
  }
  REQUIRE(dom);
  auto t = smooth_leading_term(poly(ring, "1"), q, *dom, r, kP);
  BigFloat base = -(num(27) + num(3) * s105) / num(2);
  CHECK(rel(t.base.center, Complex(base)) < 1e-9);
  BigFloat c = sqrt(num(3)) / (num(2) * BigFloat::pi(kP));
  CHECK(rel(t.constant.center, Complex(c)) < 1e-6);
  for (const auto& pt : pts) check_hessian(q, pt, r);

  auto terms = all_terms(poly(ring, "1"), q, r);
  auto w = window(poly(ring, "1"), q, r, 16);
  auto sel = select_contributions(terms, w, 0.1);
  REQUIRE(sel.conclusive);
  REQUIRE(sel.terms.size() == 1);
  CHECK(sel.terms[0].base.overlaps(t.base));
}

TEST_CASE("conjugate terms sum to a real prediction") {
  auto ring = ring_of({"x", "y"});
  auto q = poly(ring, "-x^2*y - 10*x*y^2 - x^2 - 20*x*y - 9*x + 10*y + 20");
  Direction r({1, 1});
  auto terms = all_terms(poly(ring, "1"), q, r);
  REQUIRE(terms.size() == 4);
  for (std::size_t i = 0; i < terms.size(); i += 2) {
    for (long n : {5L, 17L}) {
      Complex s = terms[i].evaluate(n) + terms[i + 1].evaluate(n);
      CHECK((abs(s.im) / abs(s)).to_double() <= 1e-20);
    }
  }
}

TEST_CASE("relative error decreases along the window tail") {
  auto ring = ring_of({"x", "y"});
  auto q = poly(ring, "1 - x - y - x*y^2");
  Direction r({1, 1});
  auto pts = affine_critical_points(q, r, kP);
  auto t = smooth_leading_term(poly(ring, "1"), q, pts[0], r, kP);
  auto w = window(poly(ring, "1"), q, r, 30);
  double prev = 1e300;
  for (long n = 15; n <= 30; ++n) {
    BigFloat a(w.values[n], kP);
    double e = (abs(t.evaluate(n) - Complex(a)) / abs(a)).to_double();
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("errors") {
  auto ring = ring_of({"x", "y"});
  CHECK_THROWS_AS(select_contributions({}, {Direction({1, 1}), 0, {}}, 0.1), std::invalid_argument);

  AlgebraicPoint origin;
  for (int i = 0; i < 2; ++i) {
    origin.coords.push_back(Ball::exact(0, 128));
    origin.exact.push_back(Rational(0));
    origin.min_polys.push_back(UPoly({Rational(0), Rational(1)}));
  }
  CHECK_THROWS_AS(smooth_leading_term(poly(ring, "1"), poly(ring, "x*y"), origin, Direction({1, 1})),
                  NotSmooth);

  AlgebraicPoint half;
  for (int i = 0; i < 2; ++i) {
    half.coords.push_back(Ball::exact(Rational(1, 2), 128));
    half.exact.push_back(Rational(1, 2));
    half.min_polys.push_back(UPoly({Rational(-1, 2), Rational(1)}));
  }
  CHECK_THROWS_AS(smooth_leading_term(poly(ring, "1"), poly(ring, "(1 - x - y)^2"), half,
                                      Direction({1, 1})),
                  HigherOrderPole);
}
