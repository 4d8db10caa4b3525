#include "acsv/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace acsv {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) {
    throw std::invalid_argument("too many variables (limit 16)");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    set(i, static_cast<unsigned>(exponents[i]));
  }
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xffffu) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp_[i]) + other.exp_[i];
    if (e > 0xffffu) throw std::overflow_error("exponent overflow");
    out.exp_[i] = static_cast<Exponent>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.exp_[i] = static_cast<Exponent>(exp_[i] - other.exp_[i]);
  }
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    out.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    deg += out.exp_[i];
  }
  out.degree_ = deg;
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  return (a.support() & b.support()) == 0;
}

std::uint32_t Monomial::support() const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0) bits |= (1u << i);
  }
  return bits;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("too many variables (limit 16)");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
      }
    }
  }
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string Ring::fresh_name(std::string base) const {
  while (index_of(base) >= 0) base += "_";
  return base;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
  auto names = base->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_ring(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || *a == *b;
}

// ---------------------------------------------------------------- TermOrder

namespace {

int grevlex_identity(const Monomial& a, const Monomial& b, std::size_t n) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

struct GrevlexDesc {
  std::size_t n;
  bool operator()(const Term& a, const Term& b) const {
    return grevlex_identity(a.monomial, b.monomial, n) > 0;
  }
};

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> perm, std::size_t block)
    : kind_(kind), perm_(std::move(perm)), block_(block) {
  std::vector<bool> seen(perm_.size(), false);
  for (auto v : perm_) {
    if (v >= perm_.size() || seen[v]) {
      throw std::invalid_argument("term order: not a permutation");
    }
    seen[v] = true;
  }
}

TermOrder TermOrder::lex(std::size_t nvars) {
  return TermOrder(Kind::kLex, identity_perm(nvars), 0);
}
TermOrder TermOrder::grevlex(std::size_t nvars) {
  return TermOrder(Kind::kGrevLex, identity_perm(nvars), 0);
}
TermOrder TermOrder::lex(std::vector<std::size_t> perm) {
  return TermOrder(Kind::kLex, std::move(perm), 0);
}
TermOrder TermOrder::grevlex(std::vector<std::size_t> perm) {
  return TermOrder(Kind::kGrevLex, std::move(perm), 0);
}

TermOrder TermOrder::elimination(std::size_t nvars,
                                 std::span<const std::size_t> eliminated) {
  std::vector<std::size_t> perm;
  std::vector<bool> in_block(nvars, false);
  for (auto v : eliminated) {
    if (v >= nvars) throw std::invalid_argument("elimination: bad variable");
    if (!in_block[v]) {
      in_block[v] = true;
      perm.push_back(v);
    }
  }
  std::size_t block = perm.size();
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!in_block[v]) perm.push_back(v);
  }
  return TermOrder(Kind::kElimination, std::move(perm), block);
}

TermOrder TermOrder::saturation(std::size_t nvars, std::span<const std::size_t> graded,
                                std::size_t var) {
  if (var >= nvars) throw std::invalid_argument("saturation: bad variable");
  std::vector<std::size_t> perm;
  std::vector<bool> in_block(nvars, false);
  in_block[var] = true;
  for (auto v : graded) {
    if (v >= nvars) throw std::invalid_argument("saturation: bad variable");
    if (!in_block[v]) {
      in_block[v] = true;
      perm.push_back(v);
    }
  }
  perm.push_back(var);
  std::size_t block = perm.size();
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!in_block[v]) perm.push_back(v);
  }
  return TermOrder(Kind::kSaturation, std::move(perm), block);
}

int TermOrder::grevlex_range(const Monomial& a, const Monomial& b,
                             std::size_t begin, std::size_t end) const {
  unsigned da = 0, db = 0;
  for (std::size_t k = begin; k < end; ++k) {
    da += a[perm_[k]];
    db += b[perm_[k]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = end; k-- > begin;) {
    auto ea = a[perm_[k]], eb = b[perm_[k]];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::kLex:
      for (auto v : perm_) {
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      }
      return 0;
    case Kind::kGrevLex:
      return grevlex_range(a, b, 0, perm_.size());
    case Kind::kElimination: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, perm_.size());
    }
    case Kind::kSaturation: {
      unsigned da = 0, db = 0;
      for (std::size_t k = 0; k < block_; ++k) {
        da += a[perm_[k]];
        db += b[perm_[k]];
      }
      if (da != db) return da < db ? -1 : 1;
      auto va = a[perm_[block_ - 1]], vb = b[perm_[block_ - 1]];
      if (va != vb) return va > vb ? -1 : 1;
      return grevlex_range(a, b, 0, perm_.size());
    }
  }
  return 0;
}

std::string TermOrder::describe() const {
  switch (kind_) {
    case Kind::kLex: return "lex";
    case Kind::kGrevLex: return "grevlex";
    case Kind::kElimination: return "elim:" + std::to_string(block_);
    case Kind::kSaturation: return "sat:" + std::to_string(perm_[block_ - 1]);
  }
  return "?";
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring, const Rational& constant)
    : ring_(std::move(ring)) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
  std::sort(merged.begin(), merged.end(), GrevlexDesc{kMaxVars});
  terms_ = std::move(merged);
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index");
  Monomial m;
  m.set(index, 1);
  return monomial(ring, m);
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m,
                                const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return terms_.back().coefficient;
  }
  return 0;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.monomial[var]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = grevlex_identity(a[i].monomial, b[j].monomial, kMaxVars);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial,
                     sign > 0 ? b[j].coefficient : Rational(-b[j].coefficient)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].monomial, b.terms_[0].coefficient);
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].monomial, a.terms_[0].coefficient);
  struct Hash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
  };
  std::unordered_map<Monomial, Rational, Hash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), GrevlexDesc{kMaxVars});
  Polynomial out(a.ring_);
  out.terms_ = std::move(terms);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves a monomial order.
  for (const auto& t : terms_) {
    out.terms_.push_back({t.monomial * m, t.coefficient * c});
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::mapped_to(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial out = *this;
    out.ring_ = target;
    return out;
  }
  std::vector<int> where(ring_->size(), -1);
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    where[i] = target->index_of(ring_->name(i));
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (where[i] < 0) {
        throw std::invalid_argument("variable '" + ring_->name(i) +
                                    "' missing from target ring");
      }
      m.set(static_cast<std::size_t>(where[i]), t.monomial[i]);
    }
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  Rational inv = 1 / terms_.front().coefficient;
  for (auto& t : out.terms_) t.coefficient *= inv;
  return out;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (terms_.front().coefficient < 0) scale = -scale;
  return *this * scale;
}

namespace {

std::string rational_text(const Rational& q) {
  return q.get_str();
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    bool wrote = false;
    if (!unit || t.monomial.is_one()) {
      out << rational_text(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) out << "*";
      out << ring_->name(i);
      if (e > 1) out << "^" << e;
      wrote = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- Direction

Direction::Direction(std::vector<long> r) : r_(std::move(r)) {
  for (long v : r_) norm1_ += v < 0 ? -v : v;
  if (norm1_ == 0) throw std::invalid_argument("direction must be nonzero");
  for (long v : r_) unit_.emplace_back(Rational(v, norm1_));
  for (auto& u : unit_) u.canonicalize();
}

bool Direction::nonnegative() const {
  return std::all_of(r_.begin(), r_.end(), [](long v) { return v >= 0; });
}

Direction Direction::scaled(long k) const {
  if (k <= 0) throw std::invalid_argument("direction scale must be positive");
  std::vector<long> r = r_;
  for (auto& v : r) v *= k;
  return Direction(std::move(r));
}

// ---------------------------------------------------------------- operations

Polynomial partial(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("partial: variable index");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({m, t.coefficient * e});
  }
  return Polynomial(p.ring(), std::move(terms));
}

Polynomial homogenize(const Polynomial& p, const std::string& newvar) {
  if (p.is_zero()) throw std::invalid_argument("homogenize: zero polynomial");
  auto ring = extend_ring(p.ring(), {newvar});
  auto lifted = p.mapped_to(ring);
  std::vector<std::size_t> vars(p.nvars());
  std::iota(vars.begin(), vars.end(), 0);
  return homogenize(lifted, p.nvars(), vars);
}

Polynomial homogenize(const Polynomial& p, std::size_t hvar,
                      std::span<const std::size_t> vars) {
  if (p.is_zero()) throw std::invalid_argument("homogenize: zero polynomial");
  auto partial_degree = [&](const Monomial& m) {
    unsigned d = 0;
    for (auto v : vars) d += m[v];
    return d;
  };
  unsigned top = 0;
  for (const auto& t : p.terms()) top = std::max(top, partial_degree(t.monomial));
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    m.set(hvar, m[hvar] + top - partial_degree(m));
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(p.ring(), std::move(terms));
}

Polynomial dehomogenize(const Polynomial& p, std::size_t hvar,
                        const RingPtr& target) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    m.set(hvar, 0);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial(p.ring(), std::move(terms)).mapped_to(target);
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  for (const auto& [var, value] : bindings) {
    if (var >= p.nvars()) throw std::out_of_range("substitute: variable index");
    if (!same_ring(value.ring(), p.ring())) throw RingMismatch();
  }
  if (bindings.empty()) return p;
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, bindings.at(var).pow(e)).first;
    }
    return it->second;
  };
  Polynomial result(p.ring());
  for (const auto& t : p.terms()) {
    Monomial rest = t.monomial;
    Polynomial factor(p.ring(), Rational(1));
    for (const auto& [var, value] : bindings) {
      unsigned e = t.monomial[var];
      if (e == 0) continue;
      rest.set(var, 0);
      factor *= power(var, e);
    }
    result += factor.mul_monomial(rest, t.coefficient);
  }
  return result;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::size_t, Rational>& values) {
  Bindings b;
  for (const auto& [var, v] : values) b.emplace(var, Polynomial(p.ring(), v));
  return substitute(p, b);
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("evaluate: arity");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

bool divides(const Polynomial& b, const Polynomial& a, Polynomial* q) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial quotient(a.ring());
  Polynomial rem = a;
  const Term& lead = b.leading();
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& t = rem.leading();
    if (!lead.monomial.divides(t.monomial)) return false;
    Monomial m = t.monomial / lead.monomial;
    Rational c = t.coefficient / lead.coefficient;
    qterms.push_back({m, c});
    rem -= b.mul_monomial(m, c);
  }
  if (q != nullptr) *q = Polynomial(a.ring(), std::move(qterms));
  return true;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  Polynomial q(a.ring());
  if (!divides(b, a, &q)) throw std::domain_error("inexact polynomial division");
  return q;
}

namespace {

/// Coefficients of p viewed as a polynomial in `var`.
std::map<unsigned, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::map<unsigned, Polynomial> out;
  for (auto& [e, terms] : buckets) out.emplace(e, Polynomial(p.ring(), std::move(terms)));
  return out;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.ring());
  for (const auto& [e, c] : coefficients_in(p, var)) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
  auto coeffs = coefficients_in(p, var);
  return coeffs.rbegin()->second;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  int db = b.degree_in(var);
  Polynomial lcb = leading_coefficient_in(b, var);
  Polynomial r = a;
  int e = a.degree_in(var) - db + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Polynomial lcr = leading_coefficient_in(r, var);
    Monomial shift;
    shift.set(var, static_cast<unsigned>(dr - db));
    r = lcb * r - (lcr * b).mul_monomial(shift, 1);
    --e;
  }
  if (e > 0) r *= lcb.pow(static_cast<unsigned>(e));
  return r;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  return exact_divide(p, content_in(p, var)).primitive();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  int main_var = -1;
  for (std::size_t v = a.nvars(); v-- > 0;) {
    if (a.involves(v) || b.involves(v)) {
      main_var = static_cast<int>(v);
      break;
    }
  }
  if (main_var < 0) return Polynomial(a.ring(), Rational(1));
  auto var = static_cast<std::size_t>(main_var);
  if (!a.involves(var)) return gcd(a, content_in(b, var));
  if (!b.involves(var)) return gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial pa = exact_divide(a, ca).primitive();
  Polynomial pb = exact_divide(b, cb).primitive();
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  Polynomial g(a.ring(), Rational(1));
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(var) == 0) break;
    pa = std::move(pb);
    pb = primitive_part_in(r, var);
  }
  return (gcd(ca, cb) * primitive_part_in(g, var)).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  Polynomial g = p;
  for (std::size_t v = 0; v < p.nvars() && !g.is_constant(); ++v) {
    if (p.involves(v)) g = gcd(g, partial(p, v));
  }
  if (g.is_constant()) return p;
  return exact_divide(p, g);
}

}  // namespace acsv
