#ifndef ACSV_POLYNOMIAL_HPP
#define ACSV_POLYNOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace acsv {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::size_t kMaxVars = 16;

/// Thrown when two operands live in different polynomial rings.
class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("ring mismatch") {}
};

/// Exponent vector of fixed capacity. Unused slots stay zero, so monomials
/// from a ring and from any extension of it compare consistently.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Precondition: `other` divides *this.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  /// Bit i set iff exponent i is nonzero; used for fast divisibility rejection.
  std::uint32_t support() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp_ == b.exp_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exp_ < b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

/// Named variables of a polynomial ring over Q.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of `name`, or -1.
  int index_of(const std::string& name) const;

  /// Returns `base` if unused, otherwise `base` with underscores appended.
  std::string fresh_name(std::string base) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
/// New ring with `extra` appended after the variables of `base`.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Monomial order. `perm[k]` is the variable occupying position k, position 0
/// being the most significant. Elimination orders compare the first
/// `block` positions by grevlex first, then the remaining ones by grevlex.
class TermOrder {
 public:
  enum class Kind { kLex, kGrevLex, kElimination, kSaturation };

  static TermOrder lex(std::size_t nvars);
  static TermOrder grevlex(std::size_t nvars);
  /// Eliminates the variables in `eliminated` (they form the leading block).
  static TermOrder elimination(std::size_t nvars,
                               std::span<const std::size_t> eliminated);
  /// Degree in `graded`, then the lower power of `var` first, then grevlex.
  /// For polynomials homogeneous in `graded`, var divides the leading term
  /// only when it divides every term.
  static TermOrder saturation(std::size_t nvars, std::span<const std::size_t> graded,
                              std::size_t var);
  static TermOrder lex(std::vector<std::size_t> perm);
  static TermOrder grevlex(std::vector<std::size_t> perm);

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  std::size_t nvars() const { return perm_.size(); }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  std::string describe() const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_ && a.perm_ == b.perm_;
  }

 private:
  TermOrder(Kind kind, std::vector<std::size_t> perm, std::size_t block);
  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin,
                    std::size_t end) const;

  Kind kind_;
  std::vector<std::size_t> perm_;
  std::size_t block_;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// descending in the ring's grevlex order with no zero coefficients, so the
/// representation is canonical and equality is structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, const Rational& constant);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m,
                             const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  /// Leading term under grevlex. Precondition: nonzero.
  const Term& leading() const { return terms_.front(); }

  int total_degree() const;  // -1 for zero
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned e) const;
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Same polynomial viewed in a ring sharing variable names; throws if a
  /// variable actually used has no counterpart.
  Polynomial mapped_to(const RingPtr& target) const;

  /// Divides by the leading coefficient.
  Polynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  std::string to_string() const;

 private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Integer direction vector r with |r| = sum |r_j| and unit vector r/|r|.
class Direction {
 public:
  explicit Direction(std::vector<long> r);

  const std::vector<long>& r() const { return r_; }
  long norm1() const { return norm1_; }
  const std::vector<Rational>& unit() const { return unit_; }
  std::size_t size() const { return r_.size(); }
  bool nonnegative() const;
  Direction scaled(long k) const;

 private:
  std::vector<long> r_;
  long norm1_ = 0;
  std::vector<Rational> unit_;
};

Polynomial partial(const Polynomial& p, std::size_t var);

/// z0^{deg p} p(z/z0) in the ring extended by `newvar`.
Polynomial homogenize(const Polynomial& p, const std::string& newvar);
/// Homogenizes with respect to the variables `vars` using the existing
/// variable `hvar`; other variables are treated as coefficients.
Polynomial homogenize(const Polynomial& p, std::size_t hvar,
                      std::span<const std::size_t> vars);
/// Sets `hvar` to 1 and maps into the ring without it.
Polynomial dehomogenize(const Polynomial& p, std::size_t hvar,
                        const RingPtr& target);

using Bindings = std::map<std::size_t, Polynomial>;
/// Simultaneous substitution; unbound variables stay.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);
Polynomial substitute(const Polynomial& p,
                      const std::map<std::size_t, Rational>& values);
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Exact quotient; throws std::domain_error if `b` does not divide `a`.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
/// True with quotient in `q` iff b divides a.
bool divides(const Polynomial& b, const Polynomial& a, Polynomial* q = nullptr);
/// Monic gcd (under grevlex) by recursive primitive PRS.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p divided by the monic gcd of p and all its partial derivatives.
Polynomial squarefree_part(const Polynomial& p);

}  // namespace acsv

#endif  // ACSV_POLYNOMIAL_HPP
