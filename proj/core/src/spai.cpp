#include "acsv/spai.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace acsv {

namespace {

// Determinant by cofactor expansion along the first row.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det(m[0][0].ring());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(minor);
    if (col % 2 == 0) det += term; else det -= term;
  }
  return det;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Stratum generators plus the minors built from `yrow` (polynomials in the
// generators' ring).
std::vector<Polynomial> critical_generators(const StratumSpec& stratum,
                                            const std::vector<Polynomial>& gens,
                                            const std::vector<Polynomial>& yrow,
                                            std::size_t d) {
  const auto c = static_cast<std::size_t>(stratum.codimension);
  if (c + 1 > d) {
    throw std::invalid_argument("critical ideal: codimension " + std::to_string(c) +
                                " leaves no (c+1)-minors in dimension " + std::to_string(d));
  }
  const RingPtr& ring = gens.front().ring();
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& f : gens) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < d; ++j) row.push_back(Polynomial::variable(ring, j) * partial(f, j));
    rows.push_back(std::move(row));
  }
  std::vector<Polynomial> out = gens;
  for_each_subset(rows.size(), c, [&](const std::vector<std::size_t>& rsel) {
    for_each_subset(d, c + 1, [&](const std::vector<std::size_t>& csel) {
      std::vector<std::vector<Polynomial>> m;
      for (auto r : rsel) {
        std::vector<Polynomial> row;
        for (auto col : csel) row.push_back(rows[r][col]);
        m.push_back(std::move(row));
      }
      std::vector<Polynomial> last;
      for (auto col : csel) last.push_back(yrow[col]);
      m.push_back(std::move(last));
      Polynomial det = determinant(m);
      if (!det.is_zero()) out.push_back(std::move(det));
    });
  });
  return out;
}

std::vector<std::string> fresh_names(const Ring& ring, const std::string& base, std::size_t count) {
  std::vector<std::string> names;
  std::vector<std::string> all = ring.names();
  for (std::size_t j = 1; j <= count; ++j) {
    std::string name = Ring(all).fresh_name(base + std::to_string(j));
    all.push_back(name);
    names.push_back(name);
  }
  return names;
}

std::vector<Polynomial> lifted(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.mapped_to(ring));
  return out;
}

// Inputs of the homogenize / saturate / substitute pipeline.
struct Pipeline {
  RingPtr base;                    // z1..zd
  std::vector<Polynomial> affine;  // critical generators in base + y1..yd
  RingPtr affine_ring;
  std::vector<std::vector<Polynomial>> removals;  // affine generator lists in base
  const Direction* direction;
  bool symbolic = false;
};

SpaiReport run(const Pipeline& in, unsigned precision) {
  const Ring& base = *in.base;
  const std::size_t d = base.size();
  const auto& r = in.direction->r();
  if (r.size() != d) throw std::invalid_argument("direction length differs from ring size");

  std::vector<std::string> znames = base.names();
  std::vector<std::string> ynames(in.affine_ring->names().begin() + static_cast<long>(d),
                                  in.affine_ring->names().end());
  std::vector<std::string> all = in.affine_ring->names();
  std::string z0name = Ring(all).fresh_name("z0");
  all.push_back(z0name);
  std::string etaname = Ring(all).fresh_name("eta");

  // Report ring and working ring.
  std::vector<std::string> out_names{z0name};
  out_names.insert(out_names.end(), znames.begin(), znames.end());
  std::size_t chart = 0;
  while (r[chart] == 0) ++chart;
  std::vector<std::string> work_names = out_names;
  if (in.symbolic) {
    out_names.insert(out_names.end(), ynames.begin(), ynames.end());
    work_names = out_names;
  } else {
    out_names.push_back(etaname);
    work_names = out_names;
    for (std::size_t j = 0; j < d; ++j) {
      if (j != chart) work_names.push_back(ynames[j]);
    }
  }
  const std::size_t eta = d + 1;
  RingPtr out_ring = make_ring(out_names);
  RingPtr work = make_ring(work_names);
  std::vector<std::size_t> zvars(d);
  for (std::size_t j = 0; j < d; ++j) zvars[j] = j + 1;

  auto homog = [&](const Polynomial& p) { return homogenize(p.mapped_to(work), 0, zvars); };

  std::vector<Polynomial> gens;
  for (const auto& g : in.affine) {
    Polynomial p = g;
    if (!in.symbolic) {
      std::map<std::size_t, Rational> fix{{d + chart, Rational(r[chart])}};
      p = substitute(p, fix);
    }
    if (!p.is_zero()) gens.push_back(homog(p));
  }
  Monomial lhs;
  if (!in.symbolic) {
    Monomial rhs;
    long pos = 0, neg = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (r[j] > 0) {
        rhs.set(j + 1, static_cast<unsigned>(r[j]));
        pos += r[j];
      } else if (r[j] < 0) {
        lhs.set(j + 1, static_cast<unsigned>(-r[j]));
        neg -= r[j];
      }
    }
    lhs.set(0, static_cast<unsigned>(pos));
    rhs.set(0, static_cast<unsigned>(neg));
    Monomial eta_lhs = lhs;
    eta_lhs.set(eta, 1);
    gens.push_back(Polynomial::monomial(work, eta_lhs) - Polynomial::monomial(work, rhs));
  }

  // Every generator is homogeneous in z0..zd.
  std::vector<std::size_t> graded(d + 1);
  for (std::size_t j = 0; j <= d; ++j) graded[j] = j;
  Ideal sat(work, std::vector<Polynomial>(gens.begin(), gens.end() - (in.symbolic ? 0 : 1)));
  for (std::size_t j = 0; j <= d; ++j) sat = saturate_variable(sat, j, graded);
  for (const auto& removal : in.removals) {
    std::vector<Polynomial> hs;
    for (const auto& g : removal) {
      if (!g.is_zero()) hs.push_back(homog(g));
    }
    if (hs.empty()) continue;
    Ideal by(work, hs);
    if (by.is_unit()) throw std::invalid_argument("exclusion ideal is inconsistent");
    // I : <h1..hm>^inf is the intersection of the I : hi^inf.
    std::optional<Ideal> acc;
    for (const auto& h : hs) {
      Ideal part = saturate_linear(sat, h, graded);
      acc = acc ? intersect(*acc, part) : std::move(part);
    }
    sat = std::move(*acc);
  }
  if (!in.symbolic) {
    // Once I is saturated by D, no element of D is a zero divisor modulo I,
    // so (I + <eta*m - m'>) : D^inf = (I + <eta*m - m'>) : m^inf.
    std::vector<Polynomial> next = sat.basis();
    next.push_back(gens.back());
    sat = Ideal(work, std::move(next));
    for (std::size_t j = 0; j <= d; ++j) {
      if (lhs[j] > 0) sat = saturate_variable(sat, j, graded);
    }
  }

  std::map<std::size_t, Rational> yvalues;
  if (!in.symbolic) {
    for (std::size_t v = out_names.size(); v < work_names.size(); ++v) {
      std::size_t j = static_cast<std::size_t>(
          std::find(ynames.begin(), ynames.end(), work_names[v]) - ynames.begin());
      yvalues[v] = Rational(r[j]);
    }
  }
  auto to_out = [&](const Polynomial& p) { return substitute(p, yvalues).mapped_to(out_ring); };

  std::vector<Polynomial> slice;
  for (const auto& g : sat.basis()) {
    Polynomial p = to_out(g);
    if (!p.is_zero()) slice.push_back(std::move(p));
  }
  slice.push_back(Polynomial::variable(out_ring, 0));

  SpaiReport report{Ideal(out_ring, slice), std::nullopt, {}, {}, {}};
  for (const auto& g : gens) {
    Polynomial p = to_out(g);
    if (!p.is_zero()) report.critical_generators.push_back(std::move(p));
  }
  if (in.symbolic) return report;

  const Ideal& S = report.saturated_ideal;
  bool trivial = true;
  for (std::size_t j = 0; j <= d; ++j) {
    if (!radical_member(Polynomial::variable(out_ring, j), S)) trivial = false;
  }
  report.exists = !trivial;
  report.heights = heights_at_infinity(S, precision);

  std::vector<std::string> zonly(out_names.begin(), out_names.end() - 1);
  RingPtr zring = make_ring(zonly);
  for (std::size_t i = 1; i <= d && !trivial; ++i) {
    std::vector<Polynomial> g = S.basis();
    g.push_back(Polynomial::variable(out_ring, i) - Polynomial(out_ring, Rational(1)));
    for (std::size_t k = 1; k < i; ++k) g.push_back(Polynomial::variable(out_ring, k));
    Ideal J(out_ring, g);
    if (J.is_unit()) continue;
    if (dimension(J) == 0) {
      for (auto& pt : solve_zero_dim(J, precision)) {
        report.witnesses.push_back({i, 0, std::move(pt), true});
      }
      continue;
    }
    std::vector<std::size_t> keep(d + 1);
    for (std::size_t j = 0; j <= d; ++j) keep[j] = j;
    Ideal Jz = eliminate(J, keep).mapped_to(zring);
    int dim = dimension(Jz);
    if (dim == 0) {
      for (auto& pt : solve_zero_dim(Jz, precision)) {
        report.witnesses.push_back({i, 0, std::move(pt), false});
      }
    } else {
      report.witnesses.push_back({i, dim, std::nullopt, false});
    }
  }
  return report;
}

}  // namespace

void check_stratum(const StratumSpec& stratum, std::size_t index) {
  if (stratum.generators.empty()) throw StratumError(index, "no generators");
  const RingPtr& ring = stratum.generators.front().ring();
  for (const auto& g : stratum.generators) {
    if (!same_ring(g.ring(), ring)) throw StratumError(index, "generators in different rings");
  }
  const int d = static_cast<int>(ring->size());
  if (stratum.codimension < 1 || stratum.codimension > d) {
    throw StratumError(index, "codimension " + std::to_string(stratum.codimension) +
                                  " outside [1, " + std::to_string(d) + "]");
  }
  int dim = dimension(Ideal(ring, stratum.generators));
  if (dim != d - stratum.codimension) {
    throw StratumError(index, "declared codimension " + std::to_string(stratum.codimension) +
                                  " but the generators cut out dimension " +
                                  std::to_string(dim));
  }
}

Ideal critical_ideal_symbolic(const StratumSpec& stratum) {
  if (stratum.generators.empty()) throw std::invalid_argument("critical ideal: no generators");
  const RingPtr& base = stratum.generators.front().ring();
  const std::size_t d = base->size();
  RingPtr ring = extend_ring(base, fresh_names(*base, "y", d));
  std::vector<Polynomial> yrow;
  for (std::size_t j = 0; j < d; ++j) yrow.push_back(Polynomial::variable(ring, d + j));
  return Ideal(ring, critical_generators(stratum, lifted(stratum.generators, ring), yrow, d));
}

Ideal critical_ideal(const StratumSpec& stratum, std::span<const Rational> y) {
  if (stratum.generators.empty()) throw std::invalid_argument("critical ideal: no generators");
  const RingPtr& ring = stratum.generators.front().ring();
  const std::size_t d = ring->size();
  if (y.size() != d) throw std::invalid_argument("critical ideal: direction length");
  std::vector<Polynomial> yrow;
  for (const auto& v : y) yrow.push_back(Polynomial(ring, v));
  return Ideal(ring, critical_generators(stratum, stratum.generators, yrow, d));
}

HeightsAtInfinity heights_at_infinity(const Ideal& saturated, unsigned precision) {
  const RingPtr& ring = saturated.ring();
  const std::size_t eta = ring->size() - 1;
  std::vector<Polynomial> irrelevant;
  for (std::size_t j = 0; j < eta; ++j) irrelevant.push_back(Polynomial::variable(ring, j));
  Ideal pruned = saturate(saturated, Ideal(ring, irrelevant));
  HeightsAtInfinity out;
  if (pruned.is_unit()) {
    out.eliminant = UPoly({Rational(1)});
    return out;
  }
  out.eliminant = eliminant(pruned, eta);
  if (out.eliminant.is_zero()) {
    out.unconstrained = true;
    return out;
  }
  if (out.eliminant.degree() < 1) return out;
  auto roots = isolate_roots(out.eliminant, precision);
  UPoly irrational = out.eliminant;
  for (const auto& root : roots) {
    if (root.rational) {
      irrational = UPoly::divmod(irrational, UPoly({-*root.rational, Rational(1)})).first;
    }
  }
  irrational = irrational.primitive();
  for (const auto& root : roots) {
    if (root.rational && *root.rational == 0) continue;
    Interval l = log_abs(root.ball);
    EtaValue v{root,
               root.rational ? UPoly({-*root.rational, Rational(1)}).primitive() : irrational,
               {-l.hi, -l.lo}};
    if (root.rational && abs(*root.rational) == 1) {
      v.height = {BigFloat(precision), BigFloat(precision)};
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

SpaiReport algorithm1(const SpaiProblem& problem, unsigned precision) {
  if (problem.q.is_zero()) throw std::invalid_argument("Q must be nonzero");
  StratumSpec smooth{{squarefree_part(problem.q)}, 1};
  if (smooth.generators[0].is_constant()) throw std::invalid_argument("Q must be nonconstant");
  Ideal crit = critical_ideal_symbolic(smooth);
  Pipeline in{problem.q.ring(), crit.generators(), crit.ring(), {}, &problem.direction,
              problem.symbolic_direction};
  if (!problem.exclude.empty()) {
    for (const auto& e : problem.exclude) {
      if (!same_ring(e.ring(), problem.q.ring())) throw RingMismatch();
    }
    in.removals.push_back(problem.exclude);
  }
  return run(in, precision);
}

std::vector<SpaiReport> algorithm2(const std::vector<StratumSpec>& strata,
                                   const Direction& direction, unsigned precision) {
  for (std::size_t i = 0; i < strata.size(); ++i) check_stratum(strata[i], i);
  std::vector<SpaiReport> reports;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const StratumSpec& s = strata[i];
    const RingPtr& base = s.generators.front().ring();
    const std::size_t d = base->size();
    Pipeline in{base, {}, nullptr, {}, &direction, false};
    if (static_cast<std::size_t>(s.codimension) == d) {
      RingPtr ring = extend_ring(base, fresh_names(*base, "y", d));
      in.affine = lifted(s.generators, ring);
      in.affine_ring = ring;
    } else {
      Ideal crit = critical_ideal_symbolic(s);
      in.affine = crit.generators();
      in.affine_ring = crit.ring();
    }
    for (const auto& other : strata) {
      if (other.codimension > s.codimension) in.removals.push_back(other.generators);
    }
    reports.push_back(run(in, precision));
  }
  return reports;
}

}  // namespace acsv
