#include "acsv/groebner.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <optional>

namespace acsv {
namespace {

// Fraction-free working representation: integer coefficients, terms sorted
// descending under the working order.
struct GTerm {
  Monomial m;
  Integer c;
};

struct GPoly {
  std::vector<GTerm> terms;
  unsigned sugar = 0;

  bool empty() const { return terms.empty(); }
  const GTerm& lead() const { return terms.front(); }
};

void make_primitive(GPoly& p) {
  if (p.terms.empty()) return;
  Integer g = 0;
  for (const auto& t : p.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.terms.front().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

GPoly to_gpoly(const Polynomial& p, const TermOrder& order) {
  GPoly out;
  Integer den = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  out.terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer c = t.coefficient.get_num() * (den / t.coefficient.get_den());
    out.terms.push_back({t.monomial, std::move(c)});
  }
  std::sort(out.terms.begin(), out.terms.end(), [&](const GTerm& a, const GTerm& b) {
    return order.compare(a.m, b.m) > 0;
  });
  out.sugar = p.is_zero() ? 0 : static_cast<unsigned>(p.total_degree());
  make_primitive(out);
  return out;
}

Polynomial to_polynomial(const GPoly& p, const RingPtr& ring, bool monic) {
  std::vector<Term> terms;
  terms.reserve(p.terms.size());
  for (const auto& t : p.terms) terms.push_back({t.m, Rational(t.c)});
  Polynomial out(ring, std::move(terms));
  if (monic && !p.terms.empty()) {
    out *= Rational(Integer(1), p.terms.front().c);
  }
  return out;
}

// a*f - b*mono*g where the leading terms cancel; f starts at `from`.
std::vector<GTerm> combine(const std::vector<GTerm>& f, std::size_t from,
                           const Integer& a, const GPoly& g, const Monomial& mono,
                           const Integer& b, const TermOrder& order) {
  std::vector<GTerm> out;
  out.reserve(f.size() - from + g.terms.size());
  std::size_t i = from + 1, j = 1;
  Integer tmp;
  while (i < f.size() || j < g.terms.size()) {
    int c;
    Monomial gm;
    if (j < g.terms.size()) gm = g.terms[j].m * mono;
    if (i == f.size()) {
      c = -1;
    } else if (j == g.terms.size()) {
      c = 1;
    } else {
      c = order.compare(f[i].m, gm);
    }
    if (c > 0) {
      if (a == 1) {
        out.push_back(f[i]);
      } else {
        out.push_back({f[i].m, f[i].c * a});
      }
      ++i;
    } else if (c < 0) {
      out.push_back({gm, -(g.terms[j].c * b)});
      ++j;
    } else {
      tmp = f[i].c * a;
      mpz_submul(tmp.get_mpz_t(), g.terms[j].c.get_mpz_t(), b.get_mpz_t());
      if (tmp != 0) out.push_back({f[i].m, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

class Reducer {
 public:
  explicit Reducer(const TermOrder& order) : order_(order) {}

  void add(const GPoly* g) {
    basis_.push_back(g);
    support_.push_back(g->lead().m.support());
  }
  void clear() {
    basis_.clear();
    support_.clear();
  }

  const GPoly* find_divisor(const Monomial& m) const {
    std::uint32_t s = m.support();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if ((support_[k] & ~s) != 0) continue;
      if (basis_[k]->lead().m.divides(m)) return basis_[k];
    }
    return nullptr;
  }

  /// Full normal form, returned primitive.
  GPoly normal_form(GPoly f) const {
    GPoly rem;
    rem.sugar = f.sugar;
    std::vector<GTerm>& work = f.terms;
    std::size_t start = 0;
    unsigned steps = 0;
    Integer g, a, b;
    while (start < work.size()) {
      const GTerm& lt = work[start];
      const GPoly* div = find_divisor(lt.m);
      if (div == nullptr) {
        rem.terms.push_back(std::move(work[start]));
        ++start;
        continue;
      }
      Monomial mono = lt.m / div->lead().m;
      rem.sugar = std::max(rem.sugar, div->sugar + mono.degree());
      mpz_gcd(g.get_mpz_t(), lt.c.get_mpz_t(), div->lead().c.get_mpz_t());
      mpz_divexact(a.get_mpz_t(), div->lead().c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), lt.c.get_mpz_t(), g.get_mpz_t());
      if (a < 0) {
        a = -a;
        b = -b;
      }
      work = combine(work, start, a, *div, mono, b, order_);
      start = 0;
      if (a != 1) {
        for (auto& t : rem.terms) t.c *= a;
      }
      if (++steps % 8 == 0) remove_content(rem.terms, work);
    }
    make_primitive(rem);
    return rem;
  }

 private:
  static void remove_content(std::vector<GTerm>& r, std::vector<GTerm>& w) {
    Integer g = 0;
    for (const auto* v : {&r, &w}) {
      for (const auto& t : *v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0 || g == 1) return;
    for (auto* v : {&r, &w}) {
      for (auto& t : *v) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  const TermOrder& order_;
  std::vector<const GPoly*> basis_;
  std::vector<std::uint32_t> support_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  explicit Buchberger(const TermOrder& order) : order_(order) {}

  /// Returns false when the ideal turned out to be the unit ideal.
  bool run(std::vector<GPoly> input) {
    std::sort(input.begin(), input.end(), [&](const GPoly& a, const GPoly& b) {
      return order_.compare(a.lead().m, b.lead().m) < 0;
    });
    for (auto& f : input) {
      GPoly h = reducer().normal_form(std::move(f));
      if (h.empty()) continue;
      if (h.lead().m.is_one()) return false;
      insert(std::move(h));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (better(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      GPoly h = reducer().normal_form(spoly(p));
      if (h.empty()) continue;
      if (h.lead().m.is_one()) return false;
      insert(std::move(h));
    }
    return true;
  }

  const std::vector<std::size_t>& active() const { return active_; }
  const std::vector<GPoly>& polys() const { return polys_; }

 private:
  Reducer reducer() const {
    Reducer r(order_);
    for (auto k : active_) r.add(&polys_[k]);
    return r;
  }

  bool better(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  GPoly spoly(const Pair& p) const {
    const GPoly& f = polys_[p.i];
    const GPoly& g = polys_[p.j];
    Monomial mf = p.lcm / f.lead().m;
    Monomial mg = p.lcm / g.lead().m;
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.lead().c.get_mpz_t(), g.lead().c.get_mpz_t());
    Integer a = g.lead().c / d;
    Integer b = f.lead().c / d;
    GPoly shifted;
    shifted.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) shifted.terms.push_back({t.m * mf, t.c});
    GPoly out;
    out.terms = combine(shifted.terms, 0, a, g, mg, b, order_);
    out.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
    make_primitive(out);
    return out;
  }

  // Gebauer-Moeller installation of a new basis element.
  void insert(GPoly h) {
    std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].lead().m;

    std::vector<Pair> fresh;
    for (auto k : active_) {
      const GPoly& g = polys_[k];
      Monomial l = Monomial::lcm(lh, g.lead().m);
      unsigned s = std::max(polys_[hi].sugar + (l.degree() - lh.degree()),
                            g.sugar + (l.degree() - g.lead().m.degree()));
      fresh.push_back({k, hi, l, s});
    }
    // Chain criterion among the new pairs.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool disjoint = Monomial::coprime(lh, polys_[fresh[a].i].lead().m);
      if (disjoint) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm)) {
          if (!(fresh[b].lcm == fresh[a].lcm) || b < a) {
            keep[a] = false;
            break;
          }
        }
      }
    }
    // Product criterion: drop pairs with coprime leading monomials.
    std::vector<Pair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (Monomial::coprime(lh, polys_[fresh[a].i].lead().m)) continue;
      accepted.push_back(fresh[a]);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> remaining;
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        Monomial li = Monomial::lcm(polys_[p.i].lead().m, lh);
        Monomial lj = Monomial::lcm(polys_[p.j].lead().m, lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      remaining.push_back(p);
    }
    remaining.insert(remaining.end(), accepted.begin(), accepted.end());
    pairs_ = std::move(remaining);

    std::vector<std::size_t> next;
    for (auto k : active_) {
      if (!lh.divides(polys_[k].lead().m)) next.push_back(k);
    }
    next.push_back(hi);
    active_ = std::move(next);
  }

  const TermOrder& order_;
  std::vector<GPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

void check_order(const TermOrder& order, const RingPtr& ring) {
  if (order.nvars() != ring->size()) {
    throw std::invalid_argument("term order size does not match ring");
  }
}

}  // namespace

// ---------------------------------------------------------------- basics

const Term& leading_term(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis,
                  const TermOrder& order) {
  check_order(order, p.ring());
  std::vector<const Term*> leads;
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), p.ring())) throw RingMismatch();
    if (g.is_zero()) throw std::invalid_argument("reduce: zero divisor");
    leads.push_back(&leading_term(g, order));
  }
  Polynomial rem(p.ring());
  Polynomial work = p;
  std::vector<Term> kept;
  while (!work.is_zero()) {
    const Term lt = leading_term(work, order);
    bool divided = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (leads[k]->monomial.divides(lt.monomial)) {
        Monomial m = lt.monomial / leads[k]->monomial;
        work -= basis[k].mul_monomial(m, lt.coefficient / leads[k]->coefficient);
        divided = true;
        break;
      }
    }
    if (!divided) {
      kept.push_back(lt);
      work -= Polynomial::monomial(p.ring(), lt.monomial, lt.coefficient);
    }
  }
  return Polynomial(p.ring(), std::move(kept));
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b,
                        const TermOrder& order) {
  const Term& la = leading_term(a, order);
  const Term& lb = leading_term(b, order);
  Monomial l = Monomial::lcm(la.monomial, lb.monomial);
  return a.mul_monomial(l / la.monomial, 1 / la.coefficient) -
         b.mul_monomial(l / lb.monomial, 1 / lb.coefficient);
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       const TermOrder& order) {
  if (generators.empty()) return {};
  const RingPtr& ring = generators.front().ring();
  check_order(order, ring);
  std::vector<GPoly> input;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    if (!g.is_zero()) input.push_back(to_gpoly(g, order));
  }
  if (input.empty()) return {};
  Buchberger engine(order);
  if (!engine.run(std::move(input))) {
    return {Polynomial(ring, Rational(1))};
  }
  // Interreduce over Q so the result is the canonical monic basis.
  std::vector<Polynomial> minimal;
  for (auto k : engine.active()) {
    minimal.push_back(to_polynomial(engine.polys()[k], ring, true));
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    const Term& lt = leading_term(minimal[k], order);
    Polynomial head = Polynomial::monomial(ring, lt.monomial, lt.coefficient);
    Polynomial tail = minimal[k] - head;
    out.push_back(head + reduce(tail, others, order));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(leading_term(a, order).monomial,
                         leading_term(b, order).monomial) < 0;
  });
  return out;
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const TermOrder& order) {
  return groebner_basis(std::span<const Polynomial>(ideal.generators()), order);
}

bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Polynomial> basis;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
  }
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    if (generators_.empty()) return;
    cache_->basis = groebner_basis(std::span<const Polynomial>(generators_),
                                   TermOrder::grevlex(ring_->size()));
  });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant();
}

bool Ideal::contains(const Polynomial& p) const { return member(p, *this); }

Ideal Ideal::mapped_to(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.mapped_to(target));
  return Ideal(target, std::move(gens));
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.basis() == b.basis();
}

std::string Ideal::to_string() const {
  std::string out = "[";
  const auto& b = basis();
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k > 0) out += ", ";
    out += b[k].to_string();
  }
  return out + "]";
}

// ---------------------------------------------------------------- operations

bool member(const Polynomial& p, const Ideal& ideal) {
  if (!same_ring(p.ring(), ideal.ring())) throw RingMismatch();
  if (p.is_zero()) return true;
  return reduce(p, ideal.basis(), TermOrder::grevlex(p.nvars())).is_zero();
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("eliminate: empty keep set");
  const std::size_t n = ideal.ring()->size();
  std::vector<bool> kept(n, false);
  for (auto v : keep) {
    if (v >= n) throw std::out_of_range("eliminate: variable index");
    kept[v] = true;
  }
  std::vector<std::size_t> dropped;
  for (std::size_t v = 0; v < n; ++v) {
    if (!kept[v]) dropped.push_back(v);
  }
  if (dropped.empty()) return ideal;
  auto order = TermOrder::elimination(n, dropped);
  std::vector<Polynomial> out;
  for (auto& g : groebner_basis(ideal, order)) {
    bool ok = std::none_of(dropped.begin(), dropped.end(),
                           [&](std::size_t v) { return g.involves(v); });
    if (ok) out.push_back(std::move(g));
  }
  return Ideal(ideal.ring(), std::move(out));
}

Ideal saturate(const Ideal& ideal, const Polynomial& g) {
  if (!same_ring(g.ring(), ideal.ring())) throw RingMismatch();
  if (g.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  if (g.is_constant()) return ideal;
  const RingPtr& ring = ideal.ring();
  RingPtr ext = extend_ring(ring, {ring->fresh_name("w")});
  std::size_t w = ring->size();
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.mapped_to(ext));
  gens.push_back(Polynomial(ext, Rational(1)) -
                 Polynomial::variable(ext, w) * g.mapped_to(ext));
  std::vector<std::size_t> drop{w};
  std::vector<Polynomial> out;
  for (auto& h : groebner_basis(gens, TermOrder::elimination(ext->size(), drop))) {
    if (!h.involves(w)) out.push_back(h.mapped_to(ring));
  }
  return Ideal(ring, std::move(out));
}

Ideal saturate_product(const Ideal& ideal, std::span<const Polynomial> factors) {
  Ideal acc = ideal;
  for (const auto& f : factors) acc = saturate(acc, f);
  return acc;
}

Ideal saturate_variable(const Ideal& ideal, std::size_t var,
                        std::span<const std::size_t> graded) {
  const RingPtr& ring = ideal.ring();
  if (var >= ring->size()) throw std::invalid_argument("saturate_variable: bad variable");
  auto graded_degree = [&](const Monomial& m) {
    unsigned deg = 0;
    for (auto v : graded) deg += m[v];
    return deg;
  };
  bool homogeneous = std::find(graded.begin(), graded.end(), var) != graded.end();
  for (const auto& f : ideal.generators()) {
    if (!homogeneous) break;
    for (const auto& t : f.terms()) {
      if (graded_degree(t.monomial) != graded_degree(f.leading().monomial)) {
        homogeneous = false;
        break;
      }
    }
  }
  if (!homogeneous) return saturate(ideal, Polynomial::variable(ring, var));

  std::vector<Polynomial> out;
  for (auto& g : groebner_basis(ideal, TermOrder::saturation(ring->size(), graded, var))) {
    unsigned k = g.degree_in(var);
    for (const auto& t : g.terms()) k = std::min(k, static_cast<unsigned>(t.monomial[var]));
    if (k == 0) {
      out.push_back(std::move(g));
      continue;
    }
    Monomial m;
    m.set(var, k);
    out.push_back(exact_divide(g, Polynomial::monomial(ring, m)));
  }
  return Ideal(ring, std::move(out));
}

Ideal saturate_linear(const Ideal& ideal, const Polynomial& h,
                      std::span<const std::size_t> graded) {
  if (!same_ring(h.ring(), ideal.ring())) throw RingMismatch();
  const RingPtr& ring = ideal.ring();
  auto is_graded = [&](std::size_t v) {
    return std::find(graded.begin(), graded.end(), v) != graded.end();
  };
  auto single_variable = [](const Monomial& m) -> std::optional<std::size_t> {
    if (m.degree() != 1) return std::nullopt;
    return static_cast<std::size_t>(std::countr_zero(m.support()));
  };
  std::optional<std::size_t> pivot;
  Rational a;
  for (const auto& t : h.terms()) {
    auto var = single_variable(t.monomial);
    if (!var || !is_graded(*var)) return saturate(ideal, h);
    if (!pivot) {
      pivot = var;
      a = t.coefficient;
    }
  }
  if (!pivot) return saturate(ideal, h);
  const std::size_t v = *pivot;
  if (h.size() == 1) return saturate_variable(ideal, v, graded);

  // forward sends h to v; backward is its inverse v -> h.
  Polynomial rest = h - Polynomial::variable(ring, v) * a;
  Bindings forward{{v, (Polynomial::variable(ring, v) - rest) * (Rational(1) / a)}};
  Bindings backward{{v, h}};
  std::vector<Polynomial> moved;
  for (const auto& f : ideal.generators()) moved.push_back(substitute(f, forward));
  Ideal sat = saturate_variable(Ideal(ring, std::move(moved)), v, graded);
  std::vector<Polynomial> out;
  for (const auto& f : sat.generators()) out.push_back(substitute(f, backward));
  return Ideal(ring, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  const RingPtr& ring = a.ring();
  RingPtr ext = extend_ring(ring, {ring->fresh_name("t")});
  std::size_t t = ring->size();
  Polynomial tv = Polynomial::variable(ext, t);
  Polynomial one_minus_t = Polynomial(ext, Rational(1)) - tv;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(tv * f.mapped_to(ext));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * f.mapped_to(ext));
  std::vector<std::size_t> drop{t};
  std::vector<Polynomial> out;
  for (auto& h : groebner_basis(gens, TermOrder::elimination(ext->size(), drop))) {
    if (!h.involves(t)) out.push_back(h.mapped_to(ring));
  }
  return Ideal(ring, std::move(out));
}

Ideal sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  if (!same_ring(ideal.ring(), by.ring())) throw RingMismatch();
  std::vector<Polynomial> gens;
  for (const auto& g : by.generators()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) throw std::invalid_argument("saturate: zero ideal");
  if (by.is_unit()) return ideal;
  std::optional<Ideal> acc;
  for (const auto& g : gens) {
    Ideal part = saturate(ideal, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

bool radical_member(const Polynomial& p, const Ideal& ideal) {
  if (!same_ring(p.ring(), ideal.ring())) throw RingMismatch();
  if (p.is_zero()) return true;
  if (p.is_constant()) return ideal.is_unit();
  const RingPtr& ring = ideal.ring();
  RingPtr ext = extend_ring(ring, {ring->fresh_name("w")});
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.mapped_to(ext));
  gens.push_back(Polynomial(ext, Rational(1)) -
                 Polynomial::variable(ext, ring->size()) * p.mapped_to(ext));
  auto basis = groebner_basis(gens, TermOrder::grevlex(ext->size()));
  return basis.size() == 1 && basis.front().is_constant();
}

int dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->size();
  if (ideal.is_unit()) return -1;
  std::vector<std::uint32_t> leads;
  for (const auto& g : ideal.basis()) leads.push_back(g.leading().monomial.support());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(leads.begin(), leads.end(), [&](std::uint32_t s) {
      return (s & ~mask) == 0;
    });
    if (independent) best = size;
  }
  return best;
}

}  // namespace acsv
