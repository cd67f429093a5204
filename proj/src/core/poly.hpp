#ifndef SEMISYM_CORE_POLY_HPP
#define SEMISYM_CORE_POLY_HPP

#include "core/finite.hpp"

#include <map>
#include <span>
#include <variant>

namespace semisym {

// Dense exponent vector, one entry per variable.
using Exponents = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr std::uint32_t kMaxExponent = 16;

struct Monomial {
  Element coeff;
  Exponents exps;
};

// Multivariate polynomial in canonical merged form: a map from exponent
// vector to coefficient, zero coefficients dropped. Immutable value type.
class Polynomial {
public:
  Polynomial(SemiringPtr ring, std::size_t n_vars);

  static Polynomial constant(SemiringPtr ring, std::size_t n_vars, Element value);
  static Polynomial variable(SemiringPtr ring, std::size_t n_vars, std::size_t index);
  static Polynomial from_monomials(SemiringPtr ring, std::size_t n_vars,
                                   std::span<const Monomial> monomials);

  const SemiringPtr& ring() const { return ring_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::map<Exponents, Element>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Polynomial plus(const Polynomial& other) const;
  Polynomial times(const Polynomial& other) const;
  Polynomial pow(std::uint64_t n) const;

  Element evaluate(std::span<const Element> point) const;

  // Same canonical form (and variable count); contexts must match.
  bool operator==(const Polynomial& other) const;

  friend Polynomial drop_last_variable_at_zero(const Polynomial& p);

private:
  void insert_term(const Exponents& exps, Element coeff);
  void check_compatible(const Polynomial& other) const;

  SemiringPtr ring_;
  std::size_t n_vars_;
  std::map<Exponents, Element> terms_;
};

// Exponent profile d_1 >= ... >= d_n. Out-of-order input is accepted and
// sorted; `input_was_sorted` records whether a caller-facing warning is due.
struct DecreasingSeq {
  std::vector<std::uint8_t> values;
  bool input_was_sorted = true;

  static DecreasingSeq from(std::vector<std::uint8_t> raw);
  std::size_t size() const { return values.size(); }
};

// Sum over the distinct multiset permutations of d, all coefficients one.
Polynomial segment(SemiringPtr ring, const DecreasingSeq& d);

// e_k in n variables: k ones followed by n-k zeros.
Polynomial elementary(SemiringPtr ring, std::size_t n, std::size_t k);

// Formal sum of coefficient-weighted segments with pairwise distinct
// profiles; profiles kept in descending lexicographic order.
struct SegmentCombination {
  SemiringPtr ring;
  std::size_t n_vars = 0;
  std::vector<std::pair<Element, std::vector<std::uint8_t>>> parts;

  Polynomial expand() const;
  std::string to_string() const;
};

struct SymmetryFailure {
  Exponents present, missing_or_unequal;
  Element coeff_present, coeff_other;
  std::string describe(const Semiring& s) const;
};

// Groups monomials into permutation orbits; symmetric iff every orbit is
// fully populated with one shared coefficient.
std::variant<SegmentCombination, SymmetryFailure> detect_symmetric(const Polynomial& p);

// Exhaustive pointwise comparison over a finite carrier; witness is the
// first differing point in lexicographic order.
Verdict functions_equal(const Polynomial& p, const Polynomial& q,
                        std::uint64_t point_budget = 2'000'000);

// Sampled comparison for non-closed carriers (the capped naturals).
Verdict spot_check_equal(const Polynomial& p, const Polynomial& q, Element max_coordinate,
                         std::size_t samples, std::uint64_t seed);

// One regrouped orbit of the product segment(d) * e_k: profile d + alpha
// where alpha is binary with k ones, the last one at `last_one_index`
// (0-based), and the multiplicity counts how often the orbit's monomials
// arise among the raw products.
struct ExpansionTerm {
  std::vector<std::uint8_t> profile;
  std::vector<std::uint8_t> alpha;
  std::size_t last_one_index = 0;
  std::uint64_t multiplicity = 0;
  bool leading = false;
};

struct SegmentExpansion {
  std::vector<std::uint8_t> d;
  std::size_t k = 0;
  std::uint64_t segment_term_count = 0;    // |distinct arrangements of d|
  std::uint64_t elementary_term_count = 0; // C(n, k)
  std::uint64_t raw_product_count = 0;     // product of the two
  std::vector<ExpansionTerm> terms; // leading first, then descending lex profile

  SegmentCombination into(SemiringPtr ring) const; // multiplicities via numeral
  std::string to_string() const;
};

// Brute-force product over the naturals, regrouped into segments. Requires
// every nonzero entry of d among the first k positions.
SegmentExpansion segment_times_elementary_counts(const DecreasingSeq& d, std::size_t k);
SegmentCombination segment_times_elementary(const DecreasingSeq& d, std::size_t k,
                                            SemiringPtr ring);

// Appends a zero exponent to every profile (one fresh variable).
SegmentCombination extend_with_zero_variable(const SegmentCombination& comb);

// Substitutes zero for the last variable, yielding a polynomial in one
// variable fewer.
Polynomial drop_last_variable_at_zero(const Polynomial& p);

std::string profile_string(std::span<const std::uint8_t> profile);

// All decreasing profiles of the given length with entries in
// [0, max_entry], descending lexicographic order.
std::vector<std::vector<std::uint8_t>> decreasing_profiles(std::size_t length,
                                                           std::uint8_t max_entry);

} // namespace semisym

#endif
