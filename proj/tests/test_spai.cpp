#include <doctest.h>

#include <chrono>
#include <set>

#include "acsv/spai.hpp"
#include "test_support.hpp"

using namespace acsv;
using namespace acsv::testing;

namespace {

Ideal expected(const SpaiReport& rep, const std::string& gens) {
  return Ideal(rep.saturated_ideal.ring(),
               parse_polynomial_list(gens, rep.saturated_ideal.ring()));
}

bool exists_by_radical(const SpaiReport& rep) {
  const Ideal& S = rep.saturated_ideal;
  const std::size_t d = S.ring()->size() - 2;
  for (std::size_t j = 0; j <= d; ++j) {
    if (!radical_member(Polynomial::variable(S.ring(), j), S)) return true;
  }
  return false;
}

SpaiReport run1(const std::vector<std::string>& vars, const std::string& q, std::vector<long> r) {
  auto ring = ring_of(vars);
  return algorithm1({poly(ring, q), Direction(std::move(r)), {}, false});
}

}  // namespace

TEST_CASE("critical ideal: 2x2 determinant") {
  auto ring = ring_of({"x", "y"});
  std::vector<Rational> y{1, 1};
  Ideal c = critical_ideal({{poly(ring, "1 - x - y - x*y^2")}, 1}, y);
  REQUIRE(c.generators().size() == 2);
  Polynomial det = poly(ring, "x*(-1 - y^2) - y*(-1 - 2*x*y)");
  CHECK((c.generators()[1] == det || c.generators()[1] == -det));
}

TEST_CASE("critical ideal: 1 - x - y has the single solution (1/2, 1/2)") {
  auto ring = ring_of({"x", "y"});
  std::vector<Rational> y{1, 1};
  Ideal c = critical_ideal({{poly(ring, "1 - x - y")}, 1}, y);
  CHECK(c == Ideal(ring, {poly(ring, "x - 1/2"), poly(ring, "y - 1/2")}));
}

TEST_CASE("critical ideal: symbolic y and shape errors") {
  auto ring = ring_of({"x", "y", "z"});
  Ideal c = critical_ideal_symbolic({{poly(ring, "1 - x - y - z")}, 1});
  CHECK(c.ring()->size() == 6);
  CHECK(c.generators().size() == 4);
  StratumSpec point{{poly(ring, "x"), poly(ring, "y"), poly(ring, "z")}, 3};
  CHECK_THROWS_AS(critical_ideal_symbolic(point), std::invalid_argument);
}

TEST_CASE("stratum validation") {
  auto ring = ring_of({"x", "y"});
  CHECK_NOTHROW(check_stratum({{poly(ring, "1 - x - y")}, 1}));
  CHECK_THROWS_AS(check_stratum({{poly(ring, "1 - x - y")}, 2}, 3), StratumError);
  try {
    check_stratum({{poly(ring, "x")}, 2}, 5);
  } catch (const StratumError& e) {
    CHECK(e.index() == 5);
  }
}

TEST_CASE("SPAI at eta = 1") {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = run1({"x", "y"}, "2 - x*y^2 - 2*x*y - x + y", {1, 1});
  CHECK(rep.saturated_ideal == expected(rep, "(eta - 1)^2; z0; y*(eta - 1); x"));
  CHECK(rep.exists == true);
  CHECK(exists_by_radical(rep));
  REQUIRE(rep.heights.values.size() == 1);
  CHECK(rep.heights.values[0].eta.rational == Rational(1));
  CHECK(rep.heights.values[0].height.lo.is_zero());
  CHECK(rep.heights.values[0].height.hi.is_zero());
  REQUIRE(rep.witnesses.size() == 1);
  const auto& w = rep.witnesses[0];
  CHECK(w.chart == 2);
  REQUIRE(w.point);
  CHECK(w.point->exact[0] == Rational(0));
  CHECK(w.point->exact[1] == Rational(0));
  CHECK(w.point->exact[2] == Rational(1));
  CHECK(w.point->exact[3] == Rational(1));
  bool fast = std::chrono::steady_clock::now() - t0 < std::chrono::seconds(5);
  CHECK(fast);
}

TEST_CASE("SPAI at eta = -1") {
  auto rep = run1({"x", "y"}, "1 - x - y - x*y^2", {1, 1});
  CHECK(rep.saturated_ideal == expected(rep, "(eta + 1)*(4*eta^2 + 4*eta - 1); z0; y*(eta + 1); x"));
  CHECK(rep.exists == true);
  REQUIRE(rep.heights.values.size() == 1);
  CHECK(rep.heights.values[0].eta.rational == Rational(-1));
  CHECK(rep.heights.values[0].height.hi.is_zero());
}

TEST_CASE("SPAI with an extra quartic factor") {
  auto rep = run1({"x", "y"}, "-x^2*y - 10*x*y^2 - x^2 - 20*x*y - 9*x + 10*y + 20", {1, 1});
  CHECK(rep.saturated_ideal ==
        expected(rep, "(2*eta^4 - 11*eta^3 + 171*eta^2 - 1382*eta + 3220)*(eta - 1)^2; z0; "
                      "y*(eta - 1); x"));
  REQUIRE(rep.heights.values.size() == 1);
  CHECK(rep.heights.values[0].eta.rational == Rational(1));
}

TEST_CASE("1 - x - y - z - x*y has no SPAI") {
  auto rep = run1({"x", "y", "z"}, "1 - x - y - z - x*y", {1, 1, 1});
  CHECK(rep.exists == false);
  CHECK_FALSE(exists_by_radical(rep));
  CHECK(rep.witnesses.empty());
}

TEST_CASE("height log 2 at infinity") {
  auto rep = run1({"x", "y", "z"}, "1 - x + y - z - 2*x*y^2*z", {1, 1, 1});
  CHECK(rep.exists == true);
  REQUIRE(rep.heights.values.size() == 1);
  const auto& v = rep.heights.values[0];
  REQUIRE(v.eta.rational);
  CHECK(abs(*v.eta.rational) == Rational(1, 2));
  CHECK(v.height.contains(log(BigFloat(2L, 128))));
  for (const auto& w : rep.witnesses) {
    if (!w.point) continue;
    for (const auto& g : rep.saturated_ideal.basis()) {
      std::vector<Ball> coords = w.point->coords;
      if (!w.has_eta) continue;
      CHECK(evaluate(g, coords).contains_zero());
    }
  }
}

TEST_CASE("GRZ with the singular point removed") {
  auto ring = ring_of({"x", "y", "z", "w"});
  std::vector<Polynomial> point{poly(ring, "3*x - 1"), poly(ring, "3*y - 1"), poly(ring, "3*z - 1"),
                                poly(ring, "3*w - 1")};
  auto rep = algorithm1({poly(ring, "1 - x - y - z - w + 27*x*y*z*w"), Direction({1, 1, 1, 1}),
                         point, false});
  CHECK(rep.exists == false);
  CHECK_FALSE(exists_by_radical(rep));

  StratumSpec smooth{{poly(ring, "1 - x - y - z - w + 27*x*y*z*w")}, 1};
  StratumSpec singular{point, 4};
  auto reps = algorithm2({smooth, singular}, Direction({1, 1, 1, 1}));
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].exists == false);
  CHECK(reps[0].saturated_ideal == rep.saturated_ideal);
  CHECK(reps[1].exists == false);
}

TEST_CASE("algorithm2 on a single smooth stratum matches algorithm1") {
  auto ring = ring_of({"x", "y"});
  auto q = poly(ring, "2 - x*y^2 - 2*x*y - x + y");
  auto a = algorithm1({q, Direction({1, 1}), {}, false});
  auto b = algorithm2({{{q}, 1}}, Direction({1, 1}));
  REQUIRE(b.size() == 1);
  CHECK(a.saturated_ideal == b[0].saturated_ideal);
  CHECK(a.exists == b[0].exists);
  CHECK(algorithm2({}, Direction({1, 1})).empty());
}

TEST_CASE("conservativity: the saturated ideal contains the critical generators") {
  for (auto [vars, q] : std::vector<std::pair<std::vector<std::string>, std::string>>{
           {{"x", "y"}, "2 - x*y^2 - 2*x*y - x + y"},
           {{"x", "y"}, "1 - x - y - x*y^2"},
           {{"x", "y", "z"}, "1 - x + y - z - 2*x*y^2*z"}}) {
    std::vector<long> r(vars.size(), 1);
    auto rep = run1(vars, q, r);
    for (const auto& g : rep.critical_generators) CHECK(rep.saturated_ideal.contains(g));
  }
}

TEST_CASE("direction scaling keeps exists and witnesses") {
  for (long k : {2L, 3L}) {
    auto a = run1({"x", "y"}, "2 - x*y^2 - 2*x*y - x + y", {1, 1});
    auto b = run1({"x", "y"}, "2 - x*y^2 - 2*x*y - x + y", {k, k});
    CHECK(a.exists == b.exists);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(a.witnesses[i].point->coords[j].overlaps(b.witnesses[i].point->coords[j]));
      }
    }
  }
}

TEST_CASE("squarefree invariance") {
  auto a = run1({"x", "y"}, "1 - x - y - x*y^2", {1, 1});
  auto b = run1({"x", "y"}, "(1 - x - y - x*y^2)^2", {1, 1});
  CHECK(a.saturated_ideal == b.saturated_ideal);
  CHECK(a.exists == b.exists);
}

TEST_CASE("symbolic direction keeps y and reports no verdict") {
  auto ring = ring_of({"x", "y"});
  auto rep = algorithm1({poly(ring, "1 - x - y - x*y^2"), Direction({1, 1}), {}, true});
  CHECK_FALSE(rep.exists.has_value());
  CHECK(rep.saturated_ideal.ring()->size() == 5);
}

TEST_CASE("Laurent direction") {
  auto ring = ring_of({"x", "y"});
  auto rep = algorithm1({poly(ring, "1 - x - y"), Direction({1, -1}), {}, false});
  CHECK(rep.exists.has_value());
  const std::size_t eta = rep.saturated_ideal.ring()->size() - 1;
  for (const auto& g : rep.critical_generators) {
    std::set<unsigned> degrees;
    for (const auto& t : g.terms()) degrees.insert(t.monomial.degree() - t.monomial[eta]);
    CHECK(degrees.size() == 1);
  }
}
