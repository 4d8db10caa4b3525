#ifndef ACSV_GROEBNER_HPP
#define ACSV_GROEBNER_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "acsv/polynomial.hpp"

namespace acsv {

/// Polynomial ideal given by generators. The reduced Groebner basis under the
/// ring's grevlex order is computed once on demand and shared between copies;
/// two ideals are equal iff those bases coincide.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& basis() const;

  bool is_unit() const;
  bool is_zero() const { return basis().empty(); }
  bool contains(const Polynomial& p) const;

  /// Same ideal in a ring with the same variable names (reordered or
  /// extended); throws if a used variable is missing.
  Ideal mapped_to(const RingPtr& target) const;

  friend bool operator==(const Ideal& a, const Ideal& b);

  /// `[g1, g2, ...]` of the reduced basis.
  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Leading term of a nonzero polynomial under `order`.
const Term& leading_term(const Polynomial& p, const TermOrder& order);

/// Remainder of multivariate division of `p` by `basis`: no term of the
/// result is divisible by a leading term of the basis.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis,
                  const TermOrder& order);

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b,
                        const TermOrder& order);

/// Reduced (monic, auto-reduced) Groebner basis, sorted by increasing
/// leading monomial. The zero ideal yields an empty list.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       const TermOrder& order);
std::vector<Polynomial> groebner_basis(const Ideal& ideal, const TermOrder& order);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrder& order);

bool member(const Polynomial& p, const Ideal& ideal);

/// I intersected with the subring generated by `keep` (result lives in the
/// same ring and only involves kept variables).
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> keep);

/// I : g^infinity via the Rabinowitsch variable and elimination.
Ideal saturate(const Ideal& ideal, const Polynomial& g);
/// I : (f1 f2 ... fk)^infinity, saturating by one factor at a time.
Ideal saturate_product(const Ideal& ideal, std::span<const Polynomial> factors);
/// I : J^infinity as the intersection of the saturations by J's generators.
Ideal saturate(const Ideal& ideal, const Ideal& by);
/// I : var^inf for I homogeneous in the variables `graded` (var among them):
/// one Groebner basis under TermOrder::saturation, each element then
/// divided by its largest power of var. Falls back to saturate() when a
/// generator is not homogeneous.
Ideal saturate_variable(const Ideal& ideal, std::size_t var,
                        std::span<const std::size_t> graded);
/// I : h^inf for a linear form h in the variables `graded`, by a change of
/// coordinates that turns h into a variable. Falls back to saturate() when h
/// is not such a form or I is not homogeneous.
Ideal saturate_linear(const Ideal& ideal, const Polynomial& h,
                      std::span<const std::size_t> graded);

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const Ideal& b);

/// Some power of p lies in I.
bool radical_member(const Polynomial& p, const Ideal& ideal);

/// Krull dimension via maximal independent sets of leading monomials;
/// -1 for the unit ideal.
int dimension(const Ideal& ideal);

}  // namespace acsv

#endif  // ACSV_GROEBNER_HPP
