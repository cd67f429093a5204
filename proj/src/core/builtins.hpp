#ifndef SEMISYM_CORE_BUILTINS_HPP
#define SEMISYM_CORE_BUILTINS_HPP

#include "core/finite.hpp"

namespace semisym {

// Finite linearly ordered commutative monoid, written multiplicatively.
// Carrier indices are the order (0 least); op must be monotone in it.
struct OrderedMonoid {
  std::vector<Element> op; // size * size table
  Element unit = 0;
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  Element apply(Element a, Element b) const { return op[a * size() + b]; }

  void validate() const; // throws PreconditionError on a broken base

  // {0..len-1} under addition saturating at len-1, unit 0.
  static OrderedMonoid saturating_chain(std::size_t len);
};

FinitePtr make_boolean();
FinitePtr make_zn(std::size_t n);

// N modulo the smallest congruence identifying a and b (a < b); carrier
// {[0]..[b-1]}.
FinitePtr make_n_quotient(std::uint64_t a, std::uint64_t b);

// {0..k} with min(x+y,k) and min(x*y,k); the congruence quotient of N
// identifying everything above k with k.
FinitePtr make_saturated_natural(std::uint64_t k);

// {-inf,0..k}, addition = max, multiplication = addition saturating at k.
FinitePtr make_truncated_maxplus(std::uint64_t k);

// zero | tangible(g) | ghost(g) over the given base monoid; sums compare
// nu-images, products multiply base values with the ghost tag absorbing.
FinitePtr make_supertropical(const OrderedMonoid& base);
FinitePtr make_supertropical_chain(std::size_t len);

// Quotient by the mutual-order relation of the intrinsic preorder; always
// upper-bound. Classes are named after their least member.
FinitePtr make_quotient_by_approx(const FiniteSemiring& s);
std::vector<std::vector<Element>> approx_classes(const FiniteSemiring& s);

// Resolves specs like "boolean", "zn:4", "nquot:2:4", "satnat:3",
// "maxplus:3", "supertropical:2", "natural" or "natural:1000".
// Throws PreconditionError on an unknown spec.
SemiringPtr make_builtin(std::string_view spec);

bool looks_like_builtin_spec(std::string_view spec);

} // namespace semisym

#endif
