#ifndef SEMISYM_CORE_ELEMENTARIZE_HPP
#define SEMISYM_CORE_ELEMENTARIZE_HPP

#include "core/poly.hpp"

#include <unordered_map>

namespace semisym {

// Product e_1^{c_1} * ... * e_n^{c_n} of elementary symmetric polynomials.
struct ElementaryWord {
  std::vector<std::uint8_t> exponents;

  std::string to_string() const;
  Polynomial expand(SemiringPtr ring) const; // substitute the e_i and multiply out
};

// Successive differences (d_1-d_2, ..., d_{n-1}-d_n, d_n); the candidate
// factorization of a segment into elementary polynomials.
ElementaryWord factor_segment(const DecreasingSeq& d);

// Polynomial r in n placeholder variables standing for e_1..e_n. Composing
// with the elementary polynomials is guaranteed to reproduce the source
// only over symhomomorphic semirings; the flag records that caveat.
struct ElementaryPolynomial {
  Polynomial representation;
  bool requires_symhomomorphic = true;

  std::string to_string() const; // rendered with e1..en variable names
};

ElementaryPolynomial elementarize_combination(const SegmentCombination& comb);
ElementaryPolynomial elementarize(const Polynomial& p); // throws when not symmetric

// Substitutes e_i(x_1..x_n) for the i-th placeholder of r and compares with
// p pointwise over the finite carrier.
Verdict verify_elementarization(const Polynomial& p, const ElementaryPolynomial& r,
                                std::uint64_t point_budget = 2'000'000);

// x^n + x^{n-1} y + y^n = x^n + y^n for all pairs and 2 <= n <= n_max.
Verdict variant_frobenius_check(const FiniteSemiring& s, std::uint64_t n_max);

// Single-segment collapse of segment(d) * e_k. Refuses semirings that are
// not (Frobenius and upper-bound) nor symhomomorphic.
struct FrobeniusCollapse {
  SegmentCombination result;
  Verdict verified; // exhaustive comparison against the brute-force product
};
FrobeniusCollapse frobenius_segment_times_elementary(const DecreasingSeq& d, std::size_t k,
                                                     FinitePtr ring, bool verify = true,
                                                     std::uint64_t point_budget = 2'000'000);

// Frobenius together with 2 = 3.
Verdict is_symhomomorphic(const FiniteSemiring& s);

// The segment map turns profile addition into function multiplication:
// segment(d' + d'') == segment(d') * segment(d'') pointwise, for all
// profiles of length n with entries bounded by max_entry.
Verdict segment_multiplicativity(FinitePtr ring, std::size_t n, std::uint8_t max_entry,
                                 std::uint64_t point_budget = 2'000'000);

// ---- function-algebra closure -------------------------------------------

// Value table of a function S^n -> S; the point (x_1..x_n) maps to index
// ((x_1 * m) + x_2) * m + ... + x_n.
using FunctionTable = std::vector<std::uint8_t>;

std::size_t point_index(std::span<const Element> point, std::size_t m);
FunctionTable function_table_of(const Polynomial& p);
FunctionTable segment_function_table(const FiniteSemiring& s, std::size_t n,
                                     std::span<const std::uint8_t> profile);

// Smallest set of functions containing the seeds and closed under pointwise
// addition and multiplication, generated breadth-first up to `cap` stored
// tables. Generation order is deterministic; the resulting member set does
// not depend on seed order.
class FunctionClosure {
public:
  struct Seed {
    std::string name;
    FunctionTable table;
  };

  static FunctionClosure generate(const FiniteSemiring& s, std::size_t n_vars,
                                  std::vector<Seed> seeds, std::size_t cap);

  bool truncated() const { return truncated_; }
  std::size_t size() const { return members_.size(); }
  const FunctionTable& member(std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> index_of(const FunctionTable& table) const;
  std::string expression(std::size_t index) const;

private:
  struct Node {
    enum class Kind { seed, sum, product } kind = Kind::seed;
    std::size_t left = 0, right = 0;
    std::string seed_name;
  };

  bool try_insert(FunctionTable table, Node node);

  std::vector<FunctionTable> members_;
  std::vector<Node> provenance_;
  std::unordered_map<std::string, std::size_t> index_; // keyed on raw table bytes
  bool truncated_ = false;
};

enum class Membership { member, non_member, inconclusive };
std::string membership_name(Membership m);

struct MembershipResult {
  Membership status = Membership::inconclusive;
  std::string expression; // generating expression when member
  std::size_t closure_size = 0;
  bool truncated = false;
};

// Is the target function a polynomial in the elementary symmetric
// polynomials? Seeds: every constant plus the tables of e_1..e_n.
MembershipResult semantic_elementarity(const FiniteSemiring& s, std::size_t n,
                                       const FunctionTable& target, std::size_t cap = 2'000'000);

// Smallest exponent bound B such that every power function x^e with e > B
// coincides with x^{e'} for some e' <= B (preperiod + period - 1 over the
// whole carrier).
std::uint64_t power_exponent_bound(const FiniteSemiring& s);

struct ElementarityDecision {
  Membership status = Membership::inconclusive; // member == n-elementary
  std::string witness_expression; // symmetric function outside the e-algebra
  std::size_t symmetric_count = 0;
  std::size_t elementary_count = 0;
  std::uint64_t exponent_bound = 0;
  bool truncated = false;
};

// Decides n-elementarity on a finite carrier by comparing the closure of
// all symmetric polynomial functions (segments with entries up to the
// power bound, scaled by constants) against the e-generated closure.
ElementarityDecision semantic_n_elementary(const FiniteSemiring& s, std::size_t n,
                                           std::size_t cap = 2'000'000);

// Invariance of a function table under all permutations of its arguments.
bool is_semantically_symmetric(const FiniteSemiring& s, std::size_t n,
                               const FunctionTable& table);

// ---- theorem suites ------------------------------------------------------

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, Verdict>> hypotheses;
  std::vector<std::pair<std::string, Verdict>> properties;
  Verdict equivalence;
  Verdict numeral_lemma;
  std::vector<std::string> notes;

  bool hypotheses_met() const;
};

// Frobenius if and only if semantically 2-elementary, on upper-bound
// carriers. Inconclusive closures make the equivalence unverified rather
// than assumed.
SuiteReport theorem_suite_upper_bound(const FiniteSemiring& s, std::size_t cap = 2'000'000);

// Four-way equivalence Frobenius / supertropical / quasiidempotent / 2=3 on
// linearly ordered upper-bound carriers.
SuiteReport theorem_suite_linear(const FiniteSemiring& s);

// All u with numeral(a) + u = numeral(b); exploratory plumbing only.
std::vector<Element> solve_numeral_equation(const FiniteSemiring& s, std::uint64_t a,
                                            std::uint64_t b);

} // namespace semisym

#endif
