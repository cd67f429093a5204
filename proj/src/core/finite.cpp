#include "core/finite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semisym {

namespace {

std::string elem_list(const std::vector<std::string>& names, const std::vector<Element>& elems) {
  std::string out = "(";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += names[elems[i]];
  }
  out += ")";
  return out;
}

} // namespace

std::string verdict_state_name(Verdict::State s) {
  switch (s) {
    case Verdict::State::holds: return "holds";
    case Verdict::State::fails: return "fails";
    case Verdict::State::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string witness_string(const Semiring& s, const std::vector<Element>& witness) {
  std::string out = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += s.element_name(witness[i]);
  }
  out += ")";
  return out;
}

FiniteSemiring FiniteSemiring::validated(std::string name, std::vector<std::string> element_names,
                                         std::vector<Element> add_table,
                                         std::vector<Element> mul_table, Element zero,
                                         Element one) {
  const std::size_t m = element_names.size();
  if (m == 0) throw PreconditionError("carrier must be non-empty");
  if (add_table.size() != m * m || mul_table.size() != m * m)
    throw PreconditionError("operation tables must be " + std::to_string(m) + "x" +
                            std::to_string(m));
  if (zero >= m || one >= m) throw PreconditionError("zero/one out of carrier range");
  for (Element v : add_table)
    if (v >= m) throw PreconditionError("addition table entry out of carrier range");
  for (Element v : mul_table)
    if (v >= m) throw PreconditionError("multiplication table entry out of carrier range");

  auto at = [m](const std::vector<Element>& t, Element a, Element b) { return t[a * m + b]; };
  auto fail = [&](const char* axiom, std::vector<Element> w, const std::string& detail) {
    throw AxiomViolation(axiom, w,
                         std::string(axiom) + " violated at " + elem_list(element_names, w) +
                             (detail.empty() ? "" : ": " + detail));
  };

  for (Element a = 0; a < m; ++a)
    for (Element b = a + 1; b < m; ++b)
      if (at(add_table, a, b) != at(add_table, b, a)) fail("add-commutativity", {a, b}, "");
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element c = 0; c < m; ++c)
        if (at(add_table, at(add_table, a, b), c) != at(add_table, a, at(add_table, b, c)))
          fail("add-associativity", {a, b, c}, "");
  for (Element a = 0; a < m; ++a)
    if (at(add_table, zero, a) != a) fail("add-identity", {a}, "0 + x != x");

  for (Element a = 0; a < m; ++a)
    if (at(mul_table, zero, a) != zero || at(mul_table, a, zero) != zero)
      fail("zero-absorption", {a}, "0 * x != 0");
  for (Element a = 0; a < m; ++a)
    for (Element b = a + 1; b < m; ++b)
      if (at(mul_table, a, b) != at(mul_table, b, a)) fail("mul-commutativity", {a, b}, "");
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element c = 0; c < m; ++c)
        if (at(mul_table, at(mul_table, a, b), c) != at(mul_table, a, at(mul_table, b, c)))
          fail("mul-associativity", {a, b, c}, "");
  for (Element a = 0; a < m; ++a)
    if (at(mul_table, one, a) != a) fail("mul-identity", {a}, "1 * x != x");

  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element c = 0; c < m; ++c)
        if (at(mul_table, a, at(add_table, b, c)) !=
            at(add_table, at(mul_table, a, b), at(mul_table, a, c)))
          fail("distributivity", {a, b, c}, "");

  FiniteSemiring s;
  s.m_ = m;
  s.add_ = std::move(add_table);
  s.mul_ = std::move(mul_table);
  s.zero_ = zero;
  s.one_ = one;
  s.names_ = std::move(element_names);
  s.name_ = std::move(name);
  return s;
}

std::optional<Element> FiniteSemiring::element_from_name(std::string_view token) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == token) return static_cast<Element>(i);
  return std::nullopt;
}

IntrinsicOrder IntrinsicOrder::of(const FiniteSemiring& s) {
  IntrinsicOrder o;
  const std::size_t m = s.order();
  o.m_ = m;
  o.leq_.assign(m * m, 0);
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element x = 0; x < m; ++x)
        if (s.add(a, x) == b) {
          o.leq_[a * m + b] = 1;
          break;
        }
  return o;
}

Verdict is_upper_bound(const FiniteSemiring& s) {
  const auto ord = IntrinsicOrder::of(s);
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = a + 1; b < s.order(); ++b)
      if (ord.approx(a, b))
        return Verdict::fail({a, b}, "witness " + witness_string(s, {a, b}) +
                                         ": each is below the other in the intrinsic order");
  return Verdict::pass();
}

Verdict is_linearly_ordered(const FiniteSemiring& s) {
  const auto ord = IntrinsicOrder::of(s);
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = a + 1; b < s.order(); ++b)
      if (!ord.leq(a, b) && !ord.leq(b, a))
        return Verdict::fail({a, b},
                             "witness " + witness_string(s, {a, b}) + ": incomparable pair");
  return Verdict::pass();
}

Verdict is_idempotent(const FiniteSemiring& s) {
  for (Element x = 0; x < s.order(); ++x)
    if (s.add(x, x) != x)
      return Verdict::fail({x}, "witness " + s.element_name(x) + ": x + x = " +
                                    s.element_name(s.add(x, x)));
  return Verdict::pass();
}

Verdict is_quasiidempotent(const FiniteSemiring& s) {
  for (Element x = 0; x < s.order(); ++x) {
    const Element twice = s.add(x, x);
    const Element quadruple = s.add(twice, twice);
    if (quadruple != twice)
      return Verdict::fail({x}, "witness " + s.element_name(x) + ": 4x = " +
                                    s.element_name(quadruple) + " but 2x = " +
                                    s.element_name(twice));
  }
  return Verdict::pass();
}

Verdict is_supertropical(const FiniteSemiring& s) {
  if (auto quasi = is_quasiidempotent(s); !quasi)
    return Verdict::fail(quasi.witness, "not quasiidempotent; " + quasi.note);
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b) {
      const Element na = s.add(a, a), nb = s.add(b, b);
      const Element sum = s.add(a, b);
      if (na != nb) {
        if (sum != a && sum != b)
          return Verdict::fail({a, b}, "witness " + witness_string(s, {a, b}) +
                                           ": nu-images differ but the sum " +
                                           s.element_name(sum) + " is neither summand");
      } else {
        if (sum != na)
          return Verdict::fail({a, b}, "witness " + witness_string(s, {a, b}) +
                                           ": nu-images agree but the sum " +
                                           s.element_name(sum) + " is not the ghost " +
                                           s.element_name(na));
      }
    }
  return Verdict::pass();
}

std::uint64_t frobenius_exponent_bound(const FiniteSemiring& s) {
  const std::uint64_t m = s.order();
  return m * m * m;
}

Verdict is_frobenius(const FiniteSemiring& s) {
  const std::uint64_t bound = frobenius_exponent_bound(s);
  for (Element x = 0; x < s.order(); ++x)
    for (Element y = 0; y < s.order(); ++y) {
      const Element base = s.add(x, y);
      Element sum_pow = base, x_pow = x, y_pow = y;
      for (std::uint64_t n = 1; n <= bound; ++n) {
        if (s.add(x_pow, y_pow) != sum_pow)
          return Verdict::fail({x, y, static_cast<Element>(n)},
                               "witness (" + s.element_name(x) + ", " + s.element_name(y) +
                                   "), exponent " + std::to_string(n) + ": (x+y)^n = " +
                                   s.element_name(sum_pow) + " but x^n + y^n = " +
                                   s.element_name(s.add(x_pow, y_pow)));
        sum_pow = s.mul(sum_pow, base);
        x_pow = s.mul(x_pow, x);
        y_pow = s.mul(y_pow, y);
      }
    }
  return Verdict::pass("exponents 1.." + std::to_string(bound) + " scanned");
}

NumeralRelations numeral_relations(const FiniteSemiring& s) {
  const Element two = s.numeral(2), three = s.numeral(3), four = s.numeral(4);
  NumeralRelations r;
  r.two_eq_three = (two == three)
                       ? Verdict::pass()
                       : Verdict::fail({two, three}, "2 = " + s.element_name(two) +
                                                         " but 3 = " + s.element_name(three));
  r.two_eq_four = (two == four)
                      ? Verdict::pass()
                      : Verdict::fail({two, four}, "2 = " + s.element_name(two) + " but 4 = " +
                                                       s.element_name(four));
  const auto ord = IntrinsicOrder::of(s);
  r.two_approx_three =
      ord.approx(two, three)
          ? Verdict::pass()
          : Verdict::fail({two, three}, "2 and 3 are not mutually below each other");
  return r;
}

Verdict numeral_lemma_check(const FiniteSemiring& s) {
  const auto rel = numeral_relations(s);
  const bool eq23 = rel.two_eq_three.holds();
  const bool eq24 = rel.two_eq_four.holds();
  if (eq23 && !eq24)
    return Verdict::fail({s.numeral(2), s.numeral(4)}, "2 = 3 holds but 2 = 4 fails");
  if (is_upper_bound(s) && eq24 && !eq23)
    return Verdict::fail({s.numeral(2), s.numeral(3)},
                         "upper-bound with 2 = 4, yet 2 = 3 fails");
  if (is_frobenius(s) && !eq24)
    return Verdict::fail({s.numeral(2), s.numeral(4)}, "Frobenius, yet 2 = 4 fails");
  return Verdict::pass();
}

const Verdict* PropertyReport::find(std::string_view property) const {
  for (const auto& [name, verdict] : entries)
    if (name == property) return &verdict;
  return nullptr;
}

bool PropertyReport::any_fails() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.second.fails(); });
}

bool PropertyReport::any_inconclusive() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.second.inconclusive(); });
}

PropertyReport check_properties(const FiniteSemiring& s) {
  PropertyReport report;
  report.semiring_name = s.name();
  report.order = s.order();
  const auto rel = numeral_relations(s);
  const auto frob = is_frobenius(s);
  Verdict symhom =
      (frob.holds() && rel.two_eq_three.holds())
          ? Verdict::pass()
          : Verdict::fail({}, frob.holds() ? "2 = 3 fails" : "Frobenius fails");
  report.entries = {
      {"idempotent", is_idempotent(s)},
      {"upper-bound", is_upper_bound(s)},
      {"linearly-ordered", is_linearly_ordered(s)},
      {"quasiidempotent", is_quasiidempotent(s)},
      {"supertropical", is_supertropical(s)},
      {"frobenius", frob},
      {"2=3", rel.two_eq_three},
      {"2=4", rel.two_eq_four},
      {"2~3", rel.two_approx_three},
      {"symhomomorphic", symhom},
  };
  return report;
}

bool GhostIdeal::contains(Element a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

GhostIdeal ghost_ideal(const FiniteSemiring& s) {
  GhostIdeal g;
  g.nu.resize(s.order());
  for (Element x = 0; x < s.order(); ++x) {
    g.nu[x] = s.add(x, x);
    if (g.nu[x] == x) g.members.push_back(x);
  }
  return g;
}

FiberReport fiber_analysis(const FiniteSemiring& s) {
  FiberReport report;
  report.ideal = ghost_ideal(s);
  report.quasiidempotent = is_quasiidempotent(s);

  std::vector<Element> image = report.ideal.nu;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  const auto ord = IntrinsicOrder::of(s);
  for (Element base : image) {
    FiberReport::Fiber fiber;
    fiber.base = base;
    for (Element x = 0; x < s.order(); ++x)
      if (report.ideal.nu[x] == base) fiber.members.push_back(x);
    fiber.base_is_max =
        report.ideal.contains(base) &&
        std::all_of(fiber.members.begin(), fiber.members.end(),
                    [&](Element x) { return ord.leq(x, base); });
    report.fibers.push_back(std::move(fiber));
  }

  if (report.quasiidempotent.holds()) {
    report.base_maxima = Verdict::pass();
    for (const auto& fiber : report.fibers)
      if (!fiber.base_is_max) {
        report.base_maxima = Verdict::fail(
            {fiber.base}, "fiber over " + s.element_name(fiber.base) +
                              " does not have its base as largest element");
        break;
      }
  } else {
    report.base_maxima = Verdict::unknown("quasiidempotent hypothesis fails");
  }

  const bool linear_hyp = report.quasiidempotent.holds() && is_upper_bound(s).holds() &&
                          is_linearly_ordered(s).holds();
  if (!linear_hyp) {
    report.linear_fiber_sizes =
        Verdict::unknown("needs a linearly ordered upper-bound quasiidempotent semiring");
  } else {
    report.linear_fiber_sizes = Verdict::pass();
    for (const auto& fiber : report.fibers)
      if (fiber.members.size() != 1 && fiber.members.size() != 2) {
        report.linear_fiber_sizes = Verdict::fail(
            {fiber.base}, "fiber over " + s.element_name(fiber.base) + " has " +
                              std::to_string(fiber.members.size()) + " elements");
        break;
      }
  }
  return report;
}

Verdict frobenius_ring_criterion(const FiniteSemiring& s) {
  for (Element x = 0; x < s.order(); ++x) {
    bool invertible = false;
    for (Element y = 0; y < s.order(); ++y)
      if (s.add(x, y) == s.zero()) {
        invertible = true;
        break;
      }
    if (!invertible)
      throw PreconditionError("not a ring: " + s.element_name(x) + " has no additive inverse");
  }
  for (Element x = 0; x < s.order(); ++x)
    for (Element y = 0; y < s.order(); ++y) {
      const Element value = s.mul(s.mul(x, y), s.add(x, y));
      if (value != s.zero())
        return Verdict::fail({x, y}, "witness " + witness_string(s, {x, y}) + ": xy(x+y) = " +
                                         s.element_name(value));
    }
  return Verdict::pass();
}

namespace {

// Backtracking search over the free table cells with incremental
// associativity/distributivity pruning on the filled part.
class Enumerator {
public:
  Enumerator(std::size_t m, const std::function<void(const FiniteSemiring&)>& emit)
      : m_(m), emit_(emit) {
    add_.assign(m * m, UNSET);
    mul_.assign(m * m, UNSET);
    for (Element a = 0; a < m; ++a) {
      set(add_, 0, a, a); // zero is the additive identity
      set(mul_, 0, a, 0); // zero absorbs
      if (m > 1) set(mul_, 1, a, a); // one is the multiplicative identity
    }
    for (Element i = 1; i < m; ++i)
      for (Element j = i; j < m; ++j) add_cells_.push_back({i, j});
    for (Element i = 2; i < m; ++i)
      for (Element j = i; j < m; ++j) mul_cells_.push_back({i, j});
  }

  void run() { fill_add(0); }

private:
  static constexpr Element UNSET = ~Element(0);

  std::size_t m_;
  const std::function<void(const FiniteSemiring&)>& emit_;
  std::vector<Element> add_, mul_;
  std::vector<std::pair<Element, Element>> add_cells_, mul_cells_;
  std::size_t emitted_ = 0;

  Element get(const std::vector<Element>& t, Element a, Element b) const {
    return t[a * m_ + b];
  }
  void set(std::vector<Element>& t, Element a, Element b, Element v) {
    t[a * m_ + b] = v;
    t[b * m_ + a] = v;
  }

  bool assoc_consistent(const std::vector<Element>& t) const {
    for (Element a = 0; a < m_; ++a)
      for (Element b = 0; b < m_; ++b)
        for (Element c = 0; c < m_; ++c) {
          const Element ab = get(t, a, b), bc = get(t, b, c);
          if (ab == UNSET || bc == UNSET) continue;
          const Element left = get(t, ab, c), right = get(t, a, bc);
          if (left == UNSET || right == UNSET) continue;
          if (left != right) return false;
        }
    return true;
  }

  bool distrib_consistent() const {
    for (Element a = 0; a < m_; ++a)
      for (Element b = 0; b < m_; ++b)
        for (Element c = 0; c < m_; ++c) {
          const Element bc = get(add_, b, c);
          if (bc == UNSET) continue;
          const Element left = get(mul_, a, bc);
          const Element ab = get(mul_, a, b), ac = get(mul_, a, c);
          if (left == UNSET || ab == UNSET || ac == UNSET) continue;
          const Element right = get(add_, ab, ac);
          if (right == UNSET) continue;
          if (left != right) return false;
        }
    return true;
  }

  void fill_add(std::size_t idx) {
    if (idx == add_cells_.size()) {
      fill_mul(0);
      return;
    }
    const auto [i, j] = add_cells_[idx];
    for (Element v = 0; v < m_; ++v) {
      set(add_, i, j, v);
      if (assoc_consistent(add_)) fill_add(idx + 1);
    }
    set(add_, i, j, UNSET);
  }

  void fill_mul(std::size_t idx) {
    if (idx == mul_cells_.size()) {
      finish();
      return;
    }
    const auto [i, j] = mul_cells_[idx];
    for (Element v = 0; v < m_; ++v) {
      set(mul_, i, j, v);
      if (assoc_consistent(mul_) && distrib_consistent()) fill_mul(idx + 1);
    }
    set(mul_, i, j, UNSET);
  }

  bool canonical() const {
    std::vector<Element> perm(m_);
    std::iota(perm.begin(), perm.end(), 0);
    // permutations of the carrier fixing zero and one
    std::vector<Element> rest(perm.begin() + std::min<std::size_t>(2, m_), perm.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<Element> sigma(m_);
      sigma[0] = 0;
      if (m_ > 1) sigma[1] = 1;
      std::copy(rest.begin(), rest.end(), sigma.begin() + std::min<std::size_t>(2, m_));
      std::vector<Element> padd(m_ * m_), pmul(m_ * m_);
      for (Element a = 0; a < m_; ++a)
        for (Element b = 0; b < m_; ++b) {
          padd[sigma[a] * m_ + sigma[b]] = sigma[get(add_, a, b)];
          pmul[sigma[a] * m_ + sigma[b]] = sigma[get(mul_, a, b)];
        }
      if (std::make_pair(padd, pmul) < std::make_pair(add_, mul_)) return false;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return true;
  }

  void finish() {
    if (!canonical()) return;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == 0) names.push_back("0");
      else if (i == 1) names.push_back("1");
      else names.push_back(std::string(1, static_cast<char>('a' + i - 2)));
    }
    auto s = FiniteSemiring::validated("order" + std::to_string(m_) + "#" +
                                           std::to_string(emitted_),
                                       std::move(names), add_, mul_, 0, m_ > 1 ? 1 : 0);
    ++emitted_;
    emit_(s);
  }
};

} // namespace

void enumerate_semirings(std::size_t m, const std::function<void(const FiniteSemiring&)>& emit,
                         std::size_t cap) {
  if (m < 1) throw PreconditionError("order must be at least 1");
  if (m > cap)
    throw PreconditionError("enumeration order " + std::to_string(m) + " exceeds cap " +
                            std::to_string(cap));
  if (m == 1) {
    emit(FiniteSemiring::validated("order1#0", {"0"}, {0}, {0}, 0, 0));
    return;
  }
  Enumerator(m, emit).run();
}

std::vector<FiniteSemiring> enumerate_semirings(std::size_t m, std::size_t cap) {
  std::vector<FiniteSemiring> out;
  enumerate_semirings(m, [&](const FiniteSemiring& s) { out.push_back(s); }, cap);
  return out;
}

} // namespace semisym
