#include "core/elementarize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semisym {

std::string ElementaryWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "e" + std::to_string(i + 1);
    if (exponents[i] > 1) out += "^" + std::to_string(+exponents[i]);
  }
  return out.empty() ? "1" : out;
}

Polynomial ElementaryWord::expand(SemiringPtr ring) const {
  const std::size_t n = exponents.size();
  Polynomial acc = Polynomial::constant(ring, n, ring->one());
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint8_t rep = 0; rep < exponents[i]; ++rep)
      acc = acc.times(elementary(ring, n, i + 1));
  return acc;
}

ElementaryWord factor_segment(const DecreasingSeq& d) {
  const std::size_t n = d.size();
  ElementaryWord word;
  word.exponents.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t next = i + 1 < n ? d.values[i + 1] : 0;
    word.exponents[i] = static_cast<std::uint8_t>(d.values[i] - next);
  }
  return word;
}

std::string ElementaryPolynomial::to_string() const {
  if (representation.is_zero()) return "0";
  const Semiring& s = *representation.ring();
  std::ostringstream out;
  bool first = true;
  for (auto it = representation.terms().rbegin(); it != representation.terms().rend(); ++it) {
    const auto& [exps, coeff] = *it;
    if (!first) out << " + ";
    first = false;
    const bool constant_term =
        std::all_of(exps.begin(), exps.end(), [](std::uint8_t e) { return e == 0; });
    bool printed = false;
    if (coeff != s.one() || constant_term) {
      out << s.element_name(coeff);
      printed = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (printed) out << "*";
      printed = true;
      out << "e" << (i + 1);
      if (exps[i] > 1) out << "^" << +exps[i];
    }
  }
  return out.str();
}

ElementaryPolynomial elementarize_combination(const SegmentCombination& comb) {
  std::vector<Monomial> monomials;
  for (const auto& [coeff, profile] : comb.parts) {
    const auto word = factor_segment(DecreasingSeq::from(profile));
    monomials.push_back({coeff, Exponents(word.exponents.begin(), word.exponents.end())});
  }
  ElementaryPolynomial out{
      Polynomial::from_monomials(comb.ring, comb.n_vars, monomials), true};
  return out;
}

ElementaryPolynomial elementarize(const Polynomial& p) {
  auto detected = detect_symmetric(p);
  if (auto* failure = std::get_if<SymmetryFailure>(&detected))
    throw PreconditionError("polynomial is not symmetric: " + failure->describe(*p.ring()));
  return elementarize_combination(std::get<SegmentCombination>(detected));
}

Verdict verify_elementarization(const Polynomial& p, const ElementaryPolynomial& r,
                                std::uint64_t point_budget) {
  const Semiring& s = *p.ring();
  if (!s.finite() || !s.closed())
    throw PreconditionError("exhaustive verification needs a finite carrier");
  if (r.representation.n_vars() != p.n_vars())
    throw PreconditionError("representation arity does not match the source polynomial");
  const std::size_t n = p.n_vars();
  const std::size_t m = s.order();

  double space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= double(m);
  if (space > double(point_budget))
    return Verdict::unknown("point space exceeds the budget " + std::to_string(point_budget));

  std::vector<Polynomial> elementaries;
  for (std::size_t k = 1; k <= n; ++k) elementaries.push_back(elementary(p.ring(), n, k));

  if (n == 0) {
    const Element lhs = p.evaluate({}), rhs = r.representation.evaluate({});
    return lhs == rhs ? Verdict::pass() : Verdict::fail({}, "constants differ");
  }

  std::vector<Element> point(n, 0);
  while (true) {
    std::vector<Element> e_values(n);
    for (std::size_t k = 0; k < n; ++k) e_values[k] = elementaries[k].evaluate(point);
    const Element lhs = p.evaluate(point);
    const Element rhs = r.representation.evaluate(e_values);
    if (lhs != rhs)
      return Verdict::fail(point, "witness " + witness_string(s, point) + ": polynomial gives " +
                                      s.element_name(lhs) + ", composition gives " +
                                      s.element_name(rhs));
    std::size_t i = n;
    while (i-- > 0) {
      if (++point[i] < m) break;
      point[i] = 0;
      if (i == 0) return Verdict::pass();
    }
  }
}

Verdict variant_frobenius_check(const FiniteSemiring& s, std::uint64_t n_max) {
  if (n_max < 2) throw PreconditionError("need n_max >= 2");
  for (Element x = 0; x < s.order(); ++x)
    for (Element y = 0; y < s.order(); ++y) {
      Element x_pow = s.mul(x, x); // x^2
      Element x_prev = x;          // x^1
      Element y_pow = s.mul(y, y);
      for (std::uint64_t n = 2; n <= n_max; ++n) {
        const Element plain = s.add(x_pow, y_pow);
        const Element with_mixed = s.add(s.add(x_pow, s.mul(x_prev, y)), y_pow);
        if (plain != with_mixed)
          return Verdict::fail({x, y, static_cast<Element>(n)},
                               "witness (" + s.element_name(x) + ", " + s.element_name(y) +
                                   "), exponent " + std::to_string(n) + ": x^n + x^(n-1)y + y^n = " +
                                   s.element_name(with_mixed) + " but x^n + y^n = " +
                                   s.element_name(plain));
        x_prev = x_pow;
        x_pow = s.mul(x_pow, x);
        y_pow = s.mul(y_pow, y);
      }
    }
  return Verdict::pass("pairs scanned up to exponent " + std::to_string(n_max));
}

FrobeniusCollapse frobenius_segment_times_elementary(const DecreasingSeq& d, std::size_t k,
                                                     FinitePtr ring, bool verify,
                                                     std::uint64_t point_budget) {
  const std::size_t n = d.size();
  if (k < 1 || k > n) throw PreconditionError("need 1 <= k <= n");
  if (k < n && d.values[k] != 0)
    throw PreconditionError("every nonzero entry of the profile must sit among the first " +
                            std::to_string(k) + " positions");

  const auto frob = is_frobenius(*ring);
  const bool symhom = frob.holds() && ring->numeral(2) == ring->numeral(3);
  const bool upper = is_upper_bound(*ring).holds();
  if (!(frob.holds() && (upper || symhom))) {
    std::string why = !frob.holds() ? "it is not Frobenius (" + frob.note + ")"
                                    : "it is neither upper-bound nor satisfies 2 = 3";
    throw PreconditionError("the collapse hypothesis fails for " + ring->name() + ": " + why);
  }

  SegmentCombination result;
  result.ring = ring;
  result.n_vars = n;
  std::vector<std::uint8_t> profile(n, 0);
  for (std::size_t i = 0; i < k; ++i) profile[i] = static_cast<std::uint8_t>(d.values[i] + 1);
  result.parts.emplace_back(ring->one(), profile);

  FrobeniusCollapse collapse{std::move(result), Verdict::unknown("verification skipped")};
  if (verify) {
    const Polynomial product =
        segment(ring, d).times(elementary(ring, n, k));
    collapse.verified = functions_equal(product, collapse.result.expand(), point_budget);
  }
  return collapse;
}

Verdict is_symhomomorphic(const FiniteSemiring& s) {
  const auto frob = is_frobenius(s);
  if (!frob) return Verdict::fail(frob.witness, "not Frobenius: " + frob.note);
  const Element two = s.numeral(2), three = s.numeral(3);
  if (two != three)
    return Verdict::fail({two, three}, "2 = " + s.element_name(two) + " differs from 3 = " +
                                           s.element_name(three));
  return Verdict::pass();
}

Verdict segment_multiplicativity(FinitePtr ring, std::size_t n, std::uint8_t max_entry,
                                 std::uint64_t point_budget) {
  const auto profiles = decreasing_profiles(n, max_entry);
  for (const auto& left : profiles)
    for (const auto& right : profiles) {
      std::vector<std::uint8_t> sum(n);
      for (std::size_t i = 0; i < n; ++i)
        sum[i] = static_cast<std::uint8_t>(left[i] + right[i]);
      const Polynomial lhs = segment(ring, DecreasingSeq::from(sum));
      const Polynomial rhs = segment(ring, DecreasingSeq::from(left))
                                 .times(segment(ring, DecreasingSeq::from(right)));
      const auto verdict = functions_equal(lhs, rhs, point_budget);
      if (!verdict.holds())
        return Verdict{verdict.state, verdict.witness,
                       "profiles " + profile_string(left) + " and " + profile_string(right) +
                           ": " + verdict.note};
    }
  return Verdict::pass(std::to_string(profiles.size() * profiles.size()) +
                       " profile pairs checked");
}

std::size_t point_index(std::span<const Element> point, std::size_t m) {
  std::size_t idx = 0;
  for (const Element x : point) idx = idx * m + static_cast<std::size_t>(x);
  return idx;
}

namespace {

template <typename Fn>
void for_each_point(std::size_t m, std::size_t n, Fn&& fn) {
  std::vector<Element> point(n, 0);
  if (n == 0) {
    fn(point);
    return;
  }
  while (true) {
    fn(point);
    std::size_t i = n;
    while (i-- > 0) {
      if (++point[i] < m) break;
      point[i] = 0;
      if (i == 0) return;
    }
  }
}

} // namespace

FunctionTable function_table_of(const Polynomial& p) {
  const Semiring& s = *p.ring();
  if (!s.finite()) throw PreconditionError("function tables need a finite carrier");
  const std::size_t m = s.order();
  std::size_t size = 1;
  for (std::size_t i = 0; i < p.n_vars(); ++i) size *= m;
  FunctionTable table(size);
  for_each_point(m, p.n_vars(), [&](const std::vector<Element>& point) {
    table[point_index(point, m)] = static_cast<std::uint8_t>(p.evaluate(point));
  });
  return table;
}

FunctionTable segment_function_table(const FiniteSemiring& s, std::size_t n,
                                     std::span<const std::uint8_t> profile) {
  const std::size_t m = s.order();
  std::vector<std::uint64_t> sorted(profile.begin(), profile.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<std::uint64_t>> arrangements;
  do {
    arrangements.emplace_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));

  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= m;
  FunctionTable table(size);
  for_each_point(m, n, [&](const std::vector<Element>& point) {
    Element acc = s.zero();
    for (const auto& exps : arrangements) {
      Element term = s.one();
      for (std::size_t i = 0; i < n; ++i)
        if (exps[i] > 0) term = s.mul(term, s.pow(point[i], exps[i]));
      acc = s.add(acc, term);
    }
    table[point_index(point, m)] = static_cast<std::uint8_t>(acc);
  });
  return table;
}

bool FunctionClosure::try_insert(FunctionTable table, Node node) {
  std::string key(table.begin(), table.end());
  if (index_.count(key)) return false;
  index_.emplace(std::move(key), members_.size());
  members_.push_back(std::move(table));
  provenance_.push_back(std::move(node));
  return true;
}

FunctionClosure FunctionClosure::generate(const FiniteSemiring& s, std::size_t n_vars,
                                          std::vector<Seed> seeds, std::size_t cap) {
  FunctionClosure closure;
  for (auto& seed : seeds) {
    if (closure.members_.size() >= cap) {
      closure.truncated_ = true;
      return closure;
    }
    Node node;
    node.kind = Node::Kind::seed;
    node.seed_name = seed.name;
    closure.try_insert(std::move(seed.table), std::move(node));
  }

  for (std::size_t i = 0; i < closure.members_.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto& a = closure.members_[i];
      const auto& b = closure.members_[j];
      FunctionTable sum(a.size()), product(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) {
        sum[t] = static_cast<std::uint8_t>(s.add(a[t], b[t]));
        product[t] = static_cast<std::uint8_t>(s.mul(a[t], b[t]));
      }
      if (closure.members_.size() >= cap) {
        closure.truncated_ = true;
        return closure;
      }
      closure.try_insert(std::move(sum), Node{Node::Kind::sum, j, i, {}});
      if (closure.members_.size() >= cap) {
        closure.truncated_ = true;
        return closure;
      }
      closure.try_insert(std::move(product), Node{Node::Kind::product, j, i, {}});
    }
  }
  return closure;
}

std::optional<std::size_t> FunctionClosure::index_of(const FunctionTable& table) const {
  const auto it = index_.find(std::string(table.begin(), table.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string FunctionClosure::expression(std::size_t index) const {
  const Node& node = provenance_[index];
  switch (node.kind) {
    case Node::Kind::seed: return node.seed_name;
    case Node::Kind::sum:
      return "(" + expression(node.left) + " + " + expression(node.right) + ")";
    case Node::Kind::product:
      return "(" + expression(node.left) + " * " + expression(node.right) + ")";
  }
  return "?";
}

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non-member";
    case Membership::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::vector<FunctionClosure::Seed> elementary_seeds(const FiniteSemiring& s, std::size_t n) {
  std::vector<FunctionClosure::Seed> seeds;
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= s.order();
  for (Element c = 0; c < s.order(); ++c)
    seeds.push_back({s.element_name(c), FunctionTable(size, static_cast<std::uint8_t>(c))});
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint8_t> profile(n, 0);
    std::fill(profile.begin(), profile.begin() + k, 1);
    seeds.push_back({"e" + std::to_string(k), segment_function_table(s, n, profile)});
  }
  return seeds;
}

} // namespace

MembershipResult semantic_elementarity(const FiniteSemiring& s, std::size_t n,
                                       const FunctionTable& target, std::size_t cap) {
  const auto closure = FunctionClosure::generate(s, n, elementary_seeds(s, n), cap);
  MembershipResult result;
  result.closure_size = closure.size();
  result.truncated = closure.truncated();
  if (const auto idx = closure.index_of(target)) {
    result.status = Membership::member;
    result.expression = closure.expression(*idx);
  } else {
    result.status = closure.truncated() ? Membership::inconclusive : Membership::non_member;
  }
  return result;
}

std::uint64_t power_exponent_bound(const FiniteSemiring& s) {
  std::uint64_t preperiod = 1, period = 1;
  for (Element x = 0; x < s.order(); ++x) {
    std::vector<Element> seen; // seen[i] = x^(i+1)
    Element value = x;
    while (true) {
      const auto it = std::find(seen.begin(), seen.end(), value);
      if (it != seen.end()) {
        const std::uint64_t first = static_cast<std::uint64_t>(it - seen.begin()) + 1;
        const std::uint64_t cycle = seen.size() + 1 - first;
        preperiod = std::max(preperiod, first);
        period = std::lcm(period, cycle);
        break;
      }
      seen.push_back(value);
      value = s.mul(value, x);
    }
  }
  return preperiod + period - 1;
}

ElementarityDecision semantic_n_elementary(const FiniteSemiring& s, std::size_t n,
                                           std::size_t cap) {
  ElementarityDecision decision;
  decision.exponent_bound = power_exponent_bound(s);
  if (decision.exponent_bound > 64)
    throw PreconditionError("power periodicity bound is unreasonably large");

  const auto elem_closure = FunctionClosure::generate(s, n, elementary_seeds(s, n), cap);
  decision.elementary_count = elem_closure.size();
  if (elem_closure.truncated()) {
    decision.truncated = true;
    return decision;
  }

  std::vector<FunctionClosure::Seed> sym_seeds;
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= s.order();
  for (Element c = 0; c < s.order(); ++c)
    sym_seeds.push_back({s.element_name(c), FunctionTable(size, static_cast<std::uint8_t>(c))});
  for (const auto& profile :
       decreasing_profiles(n, static_cast<std::uint8_t>(decision.exponent_bound)))
    sym_seeds.push_back({"s" + profile_string(profile), segment_function_table(s, n, profile)});

  const auto sym_closure = FunctionClosure::generate(s, n, std::move(sym_seeds), cap);
  decision.symmetric_count = sym_closure.size();
  if (sym_closure.truncated()) {
    decision.truncated = true;
    return decision;
  }

  for (std::size_t i = 0; i < elem_closure.size(); ++i)
    if (!sym_closure.index_of(elem_closure.member(i)))
      throw std::logic_error("elementary-generated function escaped the symmetric algebra");

  for (std::size_t i = 0; i < sym_closure.size(); ++i) {
    if (!elem_closure.index_of(sym_closure.member(i))) {
      decision.status = Membership::non_member;
      decision.witness_expression = sym_closure.expression(i);
      return decision;
    }
  }
  decision.status = Membership::member;
  return decision;
}

bool is_semantically_symmetric(const FiniteSemiring& s, std::size_t n,
                               const FunctionTable& table) {
  const std::size_t m = s.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool symmetric = true;
  do {
    for_each_point(m, n, [&](const std::vector<Element>& point) {
      std::vector<Element> permuted(n);
      for (std::size_t i = 0; i < n; ++i) permuted[i] = point[perm[i]];
      if (table[point_index(point, m)] != table[point_index(permuted, m)]) symmetric = false;
    });
    if (!symmetric) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

bool SuiteReport::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const auto& h) { return h.second.holds(); });
}

SuiteReport theorem_suite_upper_bound(const FiniteSemiring& s, std::size_t cap) {
  SuiteReport report;
  report.suite = "upper-bound";
  report.hypotheses.emplace_back("upper-bound", is_upper_bound(s));
  report.numeral_lemma = numeral_lemma_check(s);

  const auto frob = is_frobenius(s);
  report.properties.emplace_back("frobenius", frob);

  const auto decision = semantic_n_elementary(s, 2, cap);
  Verdict elem;
  switch (decision.status) {
    case Membership::member:
      elem = Verdict::pass("2-elementary; symmetric algebra has " +
                           std::to_string(decision.symmetric_count) + " functions");
      break;
    case Membership::non_member:
      elem = Verdict::fail({}, "symmetric function outside the e-algebra: " +
                                   decision.witness_expression);
      break;
    case Membership::inconclusive:
      elem = Verdict::unknown("closure cap " + std::to_string(cap) + " hit before a fixpoint");
      break;
  }
  report.properties.emplace_back("2-elementary", elem);

  if (!report.hypotheses_met()) {
    report.equivalence = Verdict::unknown("the equivalence is only claimed for upper-bound "
                                          "semirings");
    report.notes.push_back("hypotheses not met; property verdicts are informational");
  } else if (elem.inconclusive()) {
    report.equivalence =
        Verdict::unknown("2-elementarity undecided (closure truncated); equivalence unverified");
  } else if (frob.holds() == elem.holds()) {
    report.equivalence = Verdict::pass("Frobenius and 2-elementarity agree");
  } else {
    report.equivalence =
        Verdict::fail({}, "Frobenius and 2-elementarity disagree; this is a defect in the "
                          "implementation, not the theorem");
  }
  return report;
}

SuiteReport theorem_suite_linear(const FiniteSemiring& s) {
  SuiteReport report;
  report.suite = "linear";
  report.hypotheses.emplace_back("linearly-ordered", is_linearly_ordered(s));
  report.hypotheses.emplace_back("upper-bound", is_upper_bound(s));
  report.numeral_lemma = numeral_lemma_check(s);

  const auto rel = numeral_relations(s);
  report.properties.emplace_back("frobenius", is_frobenius(s));
  report.properties.emplace_back("supertropical", is_supertropical(s));
  report.properties.emplace_back("quasiidempotent", is_quasiidempotent(s));
  report.properties.emplace_back("2=3", rel.two_eq_three);

  if (!report.hypotheses_met()) {
    report.equivalence = Verdict::unknown(
        "the four-way equivalence is only claimed for linearly ordered upper-bound semirings");
    report.notes.push_back("hypotheses not met; property verdicts are informational");
    return report;
  }

  const bool first = report.properties.front().second.holds();
  for (const auto& [name, verdict] : report.properties)
    if (verdict.holds() != first) {
      std::string summary;
      for (const auto& [pname, pverdict] : report.properties)
        summary += pname + "=" + verdict_state_name(pverdict.state) + " ";
      report.equivalence =
          Verdict::fail({}, "properties disagree (" + summary +
                                "); this is a defect in the implementation, not the theorem");
      return report;
    }
  report.equivalence =
      Verdict::pass(first ? "all four properties hold" : "all four properties fail together");
  return report;
}

std::vector<Element> solve_numeral_equation(const FiniteSemiring& s, std::uint64_t a,
                                            std::uint64_t b) {
  const Element lhs = s.numeral(a), rhs = s.numeral(b);
  std::vector<Element> solutions;
  for (Element u = 0; u < s.order(); ++u)
    if (s.add(lhs, u) == rhs) solutions.push_back(u);
  return solutions;
}

} // namespace semisym
