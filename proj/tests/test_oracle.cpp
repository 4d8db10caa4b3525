#include <doctest.h>

#include <random>

#include "acsv/oracle.hpp"
#include "test_support.hpp"

using namespace acsv;
using namespace acsv::testing;

namespace {

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::vector<Rational> diagonal(const RingPtr& ring, const std::string& num, const std::string& den,
                               std::size_t n) {
  std::vector<long> r(ring->size(), 1);
  return coefficients({poly(ring, num), poly(ring, den), Direction(r), n});
}

}  // namespace

TEST_CASE("central binomials") {
  auto ring = ring_of({"x", "y"});
  auto a = diagonal(ring, "1", "1 - x - y", 20);
  REQUIRE(a.size() == 21);
  for (unsigned n = 0; n <= 20; ++n) CHECK(a[n] == binomial(2 * n, n));
  CHECK(std::vector<Rational>(a.begin(), a.begin() + 5) ==
        std::vector<Rational>{1, 2, 6, 20, 70});
}

TEST_CASE("diagonal of 2 - x*y^2 - 2*x*y - x + y is (1 - z)^(-1/2) / 2") {
  auto ring = ring_of({"x", "y"});
  auto a = diagonal(ring, "1", "2 - x*y^2 - 2*x*y - x + y", 20);
  for (unsigned n = 0; n <= 20; ++n) {
    Rational expect = binomial(2 * n, n) / Rational(mpz_class(1) << (2 * n)) / 2;
    CHECK(a[n] == expect);
  }
}

TEST_CASE("n = 0 gives P(0)/Q(0) and off-diagonal directions") {
  auto ring = ring_of({"x", "y"});
  auto a = coefficients({poly(ring, "3 + x"), poly(ring, "2 - x"), Direction({1, 0}), 4});
  CHECK(a[0] == Rational(3, 2));
  // (3 + x)/(2 - x) = (3 + x) sum x^n / 2^{n+1}
  for (unsigned n = 1; n <= 4; ++n) {
    Rational expect = Rational(3) / Rational(mpz_class(1) << (n + 1)) +
                      Rational(1) / Rational(mpz_class(1) << n);
    CHECK(a[n] == expect);
  }
  auto b = coefficients({poly(ring, "1"), poly(ring, "1 - x - y"), Direction({2, 1}), 6});
  for (unsigned n = 0; n <= 6; ++n) CHECK(b[n] == binomial(3 * n, n));
}

TEST_CASE("errors") {
  auto ring = ring_of({"x", "y"});
  CHECK_THROWS_AS(coefficients({poly(ring, "1"), poly(ring, "x - y"), Direction({1, 1}), 3}),
                  std::domain_error);
  CHECK_THROWS(coefficients({poly(ring, "1"), poly(ring, "1 - x"), Direction({1, -1}), 3}));
  CHECK_THROWS(coefficients({poly(ring, "1"), poly(ring, "1 - x"), Direction({1, 1}), 500}));
}

TEST_CASE("linearity and consistency on random instances") {
  std::mt19937 rng(11);
  auto ring = ring_of({"x", "y"});
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial q = Polynomial(ring, Rational(1 + trial)) + random_polynomial(rng, ring, 3, 4);
    if (q.constant_term() == 0) continue;
    Polynomial p1 = random_polynomial(rng, ring, 3, 4);
    Polynomial p2 = random_polynomial(rng, ring, 3, 4);
    Direction r({1, 2});
    auto a = coefficients({p1, q, r, 6});
    auto b = coefficients({p2, q, r, 6});
    auto c = coefficients({p1 + p2, q, r, 6});
    for (std::size_t n = 0; n < c.size(); ++n) CHECK(c[n] == a[n] + b[n]);
  }
  // 1/((1 - 2x)(1 - 3y)) has a_{n,n} = 6^n.
  auto six = diagonal(ring, "1", "(1 - 2*x)*(1 - 3*y)", 10);
  mpz_class power = 1;
  for (unsigned n = 0; n <= 10; ++n, power *= 6) CHECK(six[n] == Rational(power));
}

TEST_CASE("growth estimates") {
  std::vector<Rational> central;
  for (unsigned n = 0; n <= 40; ++n) central.push_back(binomial(2 * n, n));
  auto g = growth_estimate(central);
  CHECK(g.rate == doctest::Approx(4.0).epsilon(0.02));
  CHECK(g.poly_order == doctest::Approx(-0.5).epsilon(0.3));
  CHECK(std::abs(g.poly_order + 0.5) < 0.15);

  std::vector<Rational> geo;
  Rational x = 1;
  for (int n = 0; n <= 30; ++n, x *= 3) geo.push_back(x);
  auto h = growth_estimate(geo);
  CHECK(h.rate == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(std::abs(h.poly_order) < 1e-6);

  std::vector<Rational> zeros(20, Rational(0));
  CHECK(growth_estimate(zeros).zero);
  std::vector<Rational> sparse(20, Rational(0));
  sparse[19] = 1;
  CHECK_THROWS(growth_estimate(sparse));
}
