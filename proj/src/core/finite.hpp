#ifndef SEMISYM_CORE_FINITE_HPP
#define SEMISYM_CORE_FINITE_HPP

#include "core/semiring.hpp"

#include <functional>
#include <utility>

namespace semisym {

// First axiom instance that failed during table validation.
class AxiomViolation : public std::runtime_error {
public:
  AxiomViolation(std::string axiom, std::vector<Element> witness, const std::string& what)
      : std::runtime_error(what), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<Element>& witness() const { return witness_; }

private:
  std::string axiom_;
  std::vector<Element> witness_;
};

// Finite unital commutative semiring given by explicit operation tables.
// Construction goes through validated(), which checks every axiom over the
// whole carrier and reports the lexicographically first violation.
class FiniteSemiring final : public Semiring {
public:
  static FiniteSemiring validated(std::string name, std::vector<std::string> element_names,
                                  std::vector<Element> add_table, std::vector<Element> mul_table,
                                  Element zero, Element one);

  Element add(Element a, Element b) const override { return add_[a * m_ + b]; }
  Element mul(Element a, Element b) const override { return mul_[a * m_ + b]; }
  Element zero() const override { return zero_; }
  Element one() const override { return one_; }
  bool finite() const override { return true; }
  std::size_t order() const override { return m_; }
  std::string name() const override { return name_; }
  std::string element_name(Element e) const override { return names_[e]; }
  std::optional<Element> element_from_name(std::string_view token) const override;

  const std::vector<Element>& add_table() const { return add_; }
  const std::vector<Element>& mul_table() const { return mul_; }
  const std::vector<std::string>& element_names() const { return names_; }

  bool same_tables(const FiniteSemiring& other) const {
    return m_ == other.m_ && zero_ == other.zero_ && one_ == other.one_ &&
           add_ == other.add_ && mul_ == other.mul_;
  }

private:
  FiniteSemiring() = default;

  std::size_t m_ = 0;
  std::vector<Element> add_, mul_;
  Element zero_ = 0, one_ = 0;
  std::vector<std::string> names_;
  std::string name_;
};

using FinitePtr = std::shared_ptr<const FiniteSemiring>;

// Outcome of a single exhaustive property check. A `fails` verdict always
// carries a concrete witness that can be re-checked in O(1).
struct Verdict {
  enum class State { holds, fails, inconclusive };

  State state = State::holds;
  std::vector<Element> witness;
  std::string note;

  static Verdict pass(std::string note = {}) { return {State::holds, {}, std::move(note)}; }
  static Verdict fail(std::vector<Element> witness, std::string note = {}) {
    return {State::fails, std::move(witness), std::move(note)};
  }
  static Verdict unknown(std::string reason) {
    return {State::inconclusive, {}, std::move(reason)};
  }

  bool holds() const { return state == State::holds; }
  bool fails() const { return state == State::fails; }
  bool inconclusive() const { return state == State::inconclusive; }
  explicit operator bool() const { return holds(); }
};

std::string verdict_state_name(Verdict::State s);
std::string witness_string(const Semiring& s, const std::vector<Element>& witness);

// leq[a][b] iff a + x = b for some carrier element x. Always a preorder
// with zero as least element; antisymmetry is exactly the upper-bound
// property.
class IntrinsicOrder {
public:
  static IntrinsicOrder of(const FiniteSemiring& s);

  bool leq(Element a, Element b) const { return leq_[a * m_ + b] != 0; }
  bool approx(Element a, Element b) const { return leq(a, b) && leq(b, a); }
  bool strictly_below(Element a, Element b) const { return leq(a, b) && !leq(b, a); }
  std::size_t order() const { return m_; }

private:
  std::size_t m_ = 0;
  std::vector<char> leq_;
};

Verdict is_upper_bound(const FiniteSemiring& s);
Verdict is_linearly_ordered(const FiniteSemiring& s);
Verdict is_idempotent(const FiniteSemiring& s);
Verdict is_quasiidempotent(const FiniteSemiring& s);
Verdict is_supertropical(const FiniteSemiring& s);

// Scans exponents 1..m^3. The triple ((x+y)^n, x^n, y^n) evolves by a fixed
// deterministic step on a carrier of size m, so its orbit revisits states
// after at most m^3 exponents and the scan is complete.
Verdict is_frobenius(const FiniteSemiring& s);
std::uint64_t frobenius_exponent_bound(const FiniteSemiring& s);

struct NumeralRelations {
  Verdict two_eq_three;
  Verdict two_eq_four;
  Verdict two_approx_three;
};
NumeralRelations numeral_relations(const FiniteSemiring& s);

// 2=3 => 2=4; upper-bound and 2=4 => 2=3; Frobenius => 2=4.
Verdict numeral_lemma_check(const FiniteSemiring& s);

struct PropertyReport {
  std::string semiring_name;
  std::size_t order = 0;
  std::vector<std::pair<std::string, Verdict>> entries;

  const Verdict* find(std::string_view property) const;
  bool any_fails() const;
  bool any_inconclusive() const;
};

PropertyReport check_properties(const FiniteSemiring& s);

// Additively idempotent elements together with the doubling map.
struct GhostIdeal {
  std::vector<Element> members; // sorted, a == a + a
  std::vector<Element> nu;      // nu[x] = x + x

  bool contains(Element a) const;
};

GhostIdeal ghost_ideal(const FiniteSemiring& s);

struct FiberReport {
  struct Fiber {
    Element base = 0;
    std::vector<Element> members; // sorted carrier order
    bool base_is_max = false;     // meaningful under the quasiidempotent hypothesis
  };

  GhostIdeal ideal;
  std::vector<Fiber> fibers; // one per element in the image of nu, base ascending
  Verdict quasiidempotent;   // hypothesis for the maxima claims
  Verdict base_maxima;       // each fiber's base is its largest member
  Verdict linear_fiber_sizes; // sizes in {1,2}; inconclusive when hypotheses unmet
};

FiberReport fiber_analysis(const FiniteSemiring& s);

// xy(x+y) = 0 for all pairs; requires a finite ring (additive inverses are
// checked and their absence raises PreconditionError).
Verdict frobenius_ring_criterion(const FiniteSemiring& s);

// Every unital commutative semiring on m elements, one representative per
// isomorphism class (carrier bijections fixing zero and one). Deterministic
// order. Throws PreconditionError beyond the cap.
void enumerate_semirings(std::size_t m, const std::function<void(const FiniteSemiring&)>& emit,
                         std::size_t cap = 4);
std::vector<FiniteSemiring> enumerate_semirings(std::size_t m, std::size_t cap = 4);

} // namespace semisym

#endif
