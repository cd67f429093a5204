#include "core/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace semisym {

namespace {

void check_vars(std::size_t n_vars) {
  if (n_vars > kMaxVariables)
    throw PreconditionError("at most " + std::to_string(kMaxVariables) +
                            " variables are supported");
}

void check_exponents(const Exponents& exps) {
  for (auto e : exps)
    if (e > kMaxExponent)
      throw PreconditionError("exponent " + std::to_string(+e) + " exceeds the cap " +
                              std::to_string(kMaxExponent));
}

} // namespace

Polynomial::Polynomial(SemiringPtr ring, std::size_t n_vars)
    : ring_(std::move(ring)), n_vars_(n_vars) {
  if (!ring_) throw PreconditionError("polynomial needs a semiring context");
  check_vars(n_vars_);
}

Polynomial Polynomial::constant(SemiringPtr ring, std::size_t n_vars, Element value) {
  Polynomial p(std::move(ring), n_vars);
  p.insert_term(Exponents(n_vars, 0), value);
  return p;
}

Polynomial Polynomial::variable(SemiringPtr ring, std::size_t n_vars, std::size_t index) {
  Polynomial p(std::move(ring), n_vars);
  if (index >= n_vars)
    throw PreconditionError("variable index " + std::to_string(index + 1) + " out of range");
  Exponents exps(n_vars, 0);
  exps[index] = 1;
  p.insert_term(exps, p.ring_->one());
  return p;
}

Polynomial Polynomial::from_monomials(SemiringPtr ring, std::size_t n_vars,
                                      std::span<const Monomial> monomials) {
  Polynomial p(std::move(ring), n_vars);
  for (const auto& mono : monomials) {
    if (mono.exps.size() != n_vars)
      throw PreconditionError("monomial arity does not match the variable count");
    check_exponents(mono.exps);
    p.insert_term(mono.exps, mono.coeff);
  }
  return p;
}

void Polynomial::insert_term(const Exponents& exps, Element coeff) {
  auto it = terms_.find(exps);
  const Element merged = it == terms_.end() ? coeff : ring_->add(it->second, coeff);
  if (merged == ring_->zero()) {
    if (it != terms_.end()) terms_.erase(it);
    return;
  }
  if (it == terms_.end())
    terms_.emplace(exps, merged);
  else
    it->second = merged;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_)
    throw PreconditionError("variable counts differ: " + std::to_string(n_vars_) + " vs " +
                            std::to_string(other.n_vars_));
  if (ring_.get() != other.ring_.get())
    throw PreconditionError("polynomials come from different semiring contexts");
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out = *this;
  for (const auto& [exps, coeff] : other.terms_) out.insert_term(exps, coeff);
  return out;
}

Polynomial Polynomial::times(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out(ring_, n_vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      Exponents exps(n_vars_);
      for (std::size_t i = 0; i < n_vars_; ++i) {
        const std::uint32_t sum = std::uint32_t(ea[i]) + std::uint32_t(eb[i]);
        if (sum > kMaxExponent)
          throw PreconditionError("product exponent " + std::to_string(sum) +
                                  " exceeds the cap " + std::to_string(kMaxExponent));
        exps[i] = static_cast<std::uint8_t>(sum);
      }
      out.insert_term(exps, ring_->mul(ca, cb));
    }
  return out;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial acc = Polynomial::constant(ring_, n_vars_, ring_->one());
  for (std::uint64_t i = 0; i < n; ++i) acc = acc.times(*this);
  return acc;
}

Element Polynomial::evaluate(std::span<const Element> point) const {
  if (point.size() != n_vars_)
    throw PreconditionError("evaluation point arity does not match the variable count");
  Element acc = ring_->zero();
  for (const auto& [exps, coeff] : terms_) {
    Element term = coeff;
    for (std::size_t i = 0; i < n_vars_; ++i)
      if (exps[i] > 0) term = ring_->mul(term, ring_->pow(point[i], exps[i]));
    acc = ring_->add(acc, term);
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return n_vars_ == other.n_vars_ && terms_ == other.terms_;
}

DecreasingSeq DecreasingSeq::from(std::vector<std::uint8_t> raw) {
  DecreasingSeq d;
  d.input_was_sorted = std::is_sorted(raw.begin(), raw.end(), std::greater<>());
  std::sort(raw.begin(), raw.end(), std::greater<>());
  d.values = std::move(raw);
  return d;
}

namespace {

// Distinct multiset permutations, ascending lexicographic order.
std::vector<Exponents> distinct_arrangements(const std::vector<std::uint8_t>& profile) {
  Exponents current(profile.begin(), profile.end());
  std::sort(current.begin(), current.end());
  std::vector<Exponents> out;
  do {
    out.push_back(current);
  } while (std::next_permutation(current.begin(), current.end()));
  return out;
}

} // namespace

Polynomial segment(SemiringPtr ring, const DecreasingSeq& d) {
  check_vars(d.size());
  Polynomial p(ring, d.size());
  std::vector<Monomial> monomials;
  for (auto& arrangement : distinct_arrangements(d.values))
    monomials.push_back({ring->one(), std::move(arrangement)});
  return Polynomial::from_monomials(std::move(ring), d.size(), monomials);
}

Polynomial elementary(SemiringPtr ring, std::size_t n, std::size_t k) {
  if (k > n)
    throw PreconditionError("elementary index " + std::to_string(k) + " exceeds " +
                            std::to_string(n) + " variables");
  std::vector<std::uint8_t> profile(n, 0);
  std::fill(profile.begin(), profile.begin() + k, 1);
  return segment(std::move(ring), DecreasingSeq::from(std::move(profile)));
}

Polynomial SegmentCombination::expand() const {
  Polynomial acc(ring, n_vars);
  for (const auto& [coeff, profile] : parts) {
    const Polynomial scaled =
        Polynomial::constant(ring, n_vars, coeff)
            .times(segment(ring, DecreasingSeq::from(profile)));
    acc = acc.plus(scaled);
  }
  return acc;
}

std::string SegmentCombination::to_string() const {
  if (parts.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [coeff, profile] : parts) {
    if (!first) out << " + ";
    first = false;
    if (coeff != ring->one()) out << ring->element_name(coeff) << "*";
    out << "s" << profile_string(profile);
  }
  return out.str();
}

std::string SymmetryFailure::describe(const Semiring& s) const {
  return "orbit of " + profile_string(present) + ": coefficient " +
         s.element_name(coeff_present) + " at " + profile_string(present) + " vs " +
         s.element_name(coeff_other) + " at " + profile_string(missing_or_unequal);
}

std::variant<SegmentCombination, SymmetryFailure> detect_symmetric(const Polynomial& p) {
  SegmentCombination comb;
  comb.ring = p.ring();
  comb.n_vars = p.n_vars();

  std::map<std::vector<std::uint8_t>, Element, std::greater<>> by_profile;
  for (const auto& [exps, coeff] : p.terms()) {
    std::vector<std::uint8_t> profile(exps.begin(), exps.end());
    std::sort(profile.begin(), profile.end(), std::greater<>());
    auto [it, inserted] = by_profile.emplace(profile, coeff);
    if (!inserted && it->second != coeff) {
      // locate a representative with the recorded coefficient for the report
      for (auto& arrangement : distinct_arrangements(profile)) {
        const auto found = p.terms().find(arrangement);
        const Element c = found == p.terms().end() ? p.ring()->zero() : found->second;
        if (c == it->second)
          return SymmetryFailure{arrangement, exps, c, coeff};
      }
      return SymmetryFailure{exps, exps, it->second, coeff};
    }
  }

  for (const auto& [profile, coeff] : by_profile) {
    for (const auto& arrangement : distinct_arrangements(profile)) {
      const auto found = p.terms().find(arrangement);
      const Element c = found == p.terms().end() ? p.ring()->zero() : found->second;
      if (c != coeff) {
        Exponents present(profile.begin(), profile.end());
        return SymmetryFailure{present, arrangement, coeff, c};
      }
    }
    comb.parts.emplace_back(coeff, profile);
  }
  return comb;
}

namespace {

bool next_point(std::vector<Element>& point, std::size_t m) {
  for (std::size_t i = point.size(); i-- > 0;) {
    if (++point[i] < m) return true;
    point[i] = 0;
  }
  return false;
}

} // namespace

Verdict functions_equal(const Polynomial& p, const Polynomial& q, std::uint64_t point_budget) {
  if (p.n_vars() != q.n_vars())
    throw PreconditionError("variable counts differ for function comparison");
  const Semiring& s = *p.ring();
  if (!s.finite() || !s.closed())
    throw PreconditionError("exhaustive function comparison needs a finite carrier");
  const std::size_t m = s.order();
  double space = 1;
  for (std::size_t i = 0; i < p.n_vars(); ++i) space *= double(m);
  if (space > double(point_budget))
    return Verdict::unknown("point space of " + std::to_string(std::uint64_t(space)) +
                            " exceeds the budget " + std::to_string(point_budget));
  if (p.n_vars() == 0) {
    const Element a = p.evaluate({}), b = q.evaluate({});
    return a == b ? Verdict::pass()
                  : Verdict::fail({}, "constants differ: " + s.element_name(a) + " vs " +
                                          s.element_name(b));
  }
  std::vector<Element> point(p.n_vars(), 0);
  do {
    const Element a = p.evaluate(point), b = q.evaluate(point);
    if (a != b)
      return Verdict::fail(point, "witness " + witness_string(s, point) + ": " +
                                      s.element_name(a) + " vs " + s.element_name(b));
  } while (next_point(point, m));
  return Verdict::pass();
}

Verdict spot_check_equal(const Polynomial& p, const Polynomial& q, Element max_coordinate,
                         std::size_t samples, std::uint64_t seed) {
  if (p.n_vars() != q.n_vars())
    throw PreconditionError("variable counts differ for function comparison");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, max_coordinate);
  const Semiring& s = *p.ring();
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Element> point(p.n_vars());
    for (auto& x : point) x = pick(rng);
    const Element a = p.evaluate(point), b = q.evaluate(point);
    if (a != b)
      return Verdict::fail(point, "witness " + witness_string(s, point) + ": " +
                                      s.element_name(a) + " vs " + s.element_name(b));
  }
  return Verdict::pass("sampled " + std::to_string(samples) + " points (seed " +
                       std::to_string(seed) + ")");
}

SegmentExpansion segment_times_elementary_counts(const DecreasingSeq& d, std::size_t k) {
  const std::size_t n = d.size();
  check_vars(n);
  if (k < 1 || k > n) throw PreconditionError("need 1 <= k <= n");
  if (k < n && d.values[k] != 0)
    throw PreconditionError("every nonzero entry of the profile must sit among the first " +
                            std::to_string(k) + " positions");

  const auto segment_terms = distinct_arrangements(d.values);
  std::vector<std::uint8_t> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  std::sort(mask.begin(), mask.end());
  std::vector<Exponents> elementary_terms;
  do {
    elementary_terms.emplace_back(mask.begin(), mask.end());
  } while (std::next_permutation(mask.begin(), mask.end()));

  std::map<Exponents, std::uint64_t> counts;
  for (const auto& u : segment_terms)
    for (const auto& alpha : elementary_terms) {
      Exponents sum(n);
      for (std::size_t i = 0; i < n; ++i) sum[i] = static_cast<std::uint8_t>(u[i] + alpha[i]);
      ++counts[sum];
    }

  SegmentExpansion expansion;
  expansion.d = d.values;
  expansion.k = k;
  expansion.segment_term_count = segment_terms.size();
  expansion.elementary_term_count = elementary_terms.size();
  expansion.raw_product_count =
      static_cast<std::uint64_t>(segment_terms.size()) * elementary_terms.size();

  std::map<std::vector<std::uint8_t>, std::uint64_t, std::greater<>> orbits;
  for (const auto& [exps, count] : counts) {
    std::vector<std::uint8_t> profile(exps.begin(), exps.end());
    std::sort(profile.begin(), profile.end(), std::greater<>());
    auto [it, inserted] = orbits.emplace(profile, count);
    if (!inserted && it->second != count)
      throw std::logic_error("product of symmetric polynomials broke orbit symmetry");
  }

  for (const auto& [profile, count] : orbits) {
    ExpansionTerm term;
    term.profile = profile;
    term.multiplicity = count;
    term.alpha.resize(n);
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (profile[i] < d.values[i] || profile[i] - d.values[i] > 1)
        throw std::logic_error("regrouped profile is not the base profile plus a binary mask");
      term.alpha[i] = static_cast<std::uint8_t>(profile[i] - d.values[i]);
      if (term.alpha[i]) {
        term.last_one_index = i;
        ++ones;
      }
    }
    if (ones != k) throw std::logic_error("binary mask does not have exactly k ones");
    term.leading = term.last_one_index == k - 1;
    if (term.leading && term.multiplicity != 1)
      throw std::logic_error("leading segment must have multiplicity one");
    expansion.terms.push_back(std::move(term));
  }

  // leading term first, then the order given by descending profiles
  std::stable_partition(expansion.terms.begin(), expansion.terms.end(),
                        [](const ExpansionTerm& t) { return t.leading; });
  return expansion;
}

SegmentCombination SegmentExpansion::into(SemiringPtr ring) const {
  SegmentCombination comb;
  comb.ring = ring;
  comb.n_vars = d.size();
  for (const auto& term : terms) {
    const Element coeff = ring->numeral(term.multiplicity);
    if (coeff == ring->zero()) continue;
    comb.parts.emplace_back(coeff, term.profile);
  }
  return comb;
}

std::string SegmentExpansion::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& term : terms) {
    if (!first) out << " + ";
    first = false;
    if (term.multiplicity != 1) out << term.multiplicity << "*";
    out << "s" << profile_string(term.profile);
  }
  return out.str();
}

SegmentCombination segment_times_elementary(const DecreasingSeq& d, std::size_t k,
                                            SemiringPtr ring) {
  return segment_times_elementary_counts(d, k).into(std::move(ring));
}

SegmentCombination extend_with_zero_variable(const SegmentCombination& comb) {
  SegmentCombination out;
  out.ring = comb.ring;
  out.n_vars = comb.n_vars + 1;
  check_vars(out.n_vars);
  for (const auto& [coeff, profile] : comb.parts) {
    auto extended = profile;
    extended.push_back(0);
    out.parts.emplace_back(coeff, std::move(extended));
  }
  return out;
}

Polynomial drop_last_variable_at_zero(const Polynomial& p) {
  if (p.n_vars() == 0) throw PreconditionError("no variable to substitute");
  Polynomial out(p.ring(), p.n_vars() - 1);
  for (const auto& [exps, coeff] : p.terms()) {
    if (exps.back() != 0) continue; // coeff * 0^e vanishes
    out.insert_term(Exponents(exps.begin(), exps.end() - 1), coeff);
  }
  return out;
}

std::string profile_string(std::span<const std::uint8_t> profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(+profile[i]);
  }
  out += ")";
  return out;
}

namespace {

void collect_profiles(std::size_t length, std::uint8_t max_entry,
                      std::vector<std::uint8_t>& current,
                      std::vector<std::vector<std::uint8_t>>& out) {
  if (current.size() == length) {
    out.push_back(current);
    return;
  }
  const std::uint8_t limit = current.empty() ? max_entry : current.back();
  for (std::uint32_t v = limit + 1u; v-- > 0;) {
    current.push_back(static_cast<std::uint8_t>(v));
    collect_profiles(length, max_entry, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<std::vector<std::uint8_t>> decreasing_profiles(std::size_t length,
                                                           std::uint8_t max_entry) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> current;
  collect_profiles(length, max_entry, current, out);
  return out;
}

} // namespace semisym
