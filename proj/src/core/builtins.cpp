#include "core/builtins.hpp"

#include <algorithm>
#include <charconv>

namespace semisym {

namespace {

FinitePtr from_tables(std::string name, std::vector<std::string> names,
                      std::vector<Element> add, std::vector<Element> mul, Element zero,
                      Element one) {
  return std::make_shared<FiniteSemiring>(FiniteSemiring::validated(
      std::move(name), std::move(names), std::move(add), std::move(mul), zero, one));
}

} // namespace

void OrderedMonoid::validate() const {
  const std::size_t n = size();
  if (n == 0) throw PreconditionError("monoid carrier must be non-empty");
  if (op.size() != n * n) throw PreconditionError("monoid table has wrong size");
  if (unit >= n) throw PreconditionError("monoid unit out of range");
  for (Element v : op)
    if (v >= n) throw PreconditionError("monoid table entry out of range");
  for (Element a = 0; a < n; ++a) {
    if (apply(unit, a) != a) throw PreconditionError("monoid unit is not neutral");
    for (Element b = 0; b < n; ++b) {
      if (apply(a, b) != apply(b, a)) throw PreconditionError("monoid is not commutative");
      for (Element c = 0; c < n; ++c)
        if (apply(apply(a, b), c) != apply(a, apply(b, c)))
          throw PreconditionError("monoid is not associative");
      if (b + 1 < n && apply(a, b) > apply(a, b + 1))
        throw PreconditionError("monoid operation is not monotone in the chain order");
    }
  }
}

OrderedMonoid OrderedMonoid::saturating_chain(std::size_t len) {
  if (len < 1) throw PreconditionError("chain length must be at least 1");
  OrderedMonoid base;
  base.op.assign(len * len, 0);
  for (Element a = 0; a < len; ++a)
    for (Element b = 0; b < len; ++b)
      base.op[a * len + b] = std::min<Element>(a + b, len - 1);
  base.unit = 0;
  for (std::size_t i = 0; i < len; ++i) base.names.push_back(std::to_string(i));
  return base;
}

FinitePtr make_boolean() {
  return from_tables("boolean", {"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
}

FinitePtr make_zn(std::size_t n) {
  if (n < 1) throw PreconditionError("modulus must be at least 1");
  std::vector<Element> add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  return from_tables("Z" + std::to_string(n), std::move(names), std::move(add), std::move(mul),
                     0, n > 1 ? 1 : 0);
}

FinitePtr make_n_quotient(std::uint64_t a, std::uint64_t b) {
  if (a >= b) throw PreconditionError("identification needs a < b");
  const std::uint64_t m = b;
  const std::uint64_t period = b - a;
  auto normalize = [&](std::uint64_t v) -> Element {
    return v < b ? v : a + ((v - a) % period);
  };
  std::vector<Element> add(m * m), mul(m * m);
  std::vector<std::string> names;
  for (std::uint64_t i = 0; i < m; ++i) names.push_back("[" + std::to_string(i) + "]");
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y) {
      add[x * m + y] = normalize(x + y);
      mul[x * m + y] = normalize(x * y);
    }
  return from_tables("N_" + std::to_string(a) + "eq" + std::to_string(b), std::move(names),
                     std::move(add), std::move(mul), 0, m > 1 ? 1 : 0);
}

FinitePtr make_saturated_natural(std::uint64_t k) {
  if (k < 1) throw PreconditionError("saturation bound must be at least 1");
  const std::uint64_t m = k + 1;
  std::vector<Element> add(m * m), mul(m * m);
  std::vector<std::string> names;
  for (std::uint64_t i = 0; i < m; ++i) names.push_back(std::to_string(i));
  for (std::uint64_t x = 0; x < m; ++x)
    for (std::uint64_t y = 0; y < m; ++y) {
      add[x * m + y] = std::min(x + y, k);
      mul[x * m + y] = std::min(x * y, k);
    }
  return from_tables("N_sat" + std::to_string(k), std::move(names), std::move(add),
                     std::move(mul), 0, 1);
}

FinitePtr make_truncated_maxplus(std::uint64_t k) {
  const std::uint64_t m = k + 2; // -inf plus 0..k
  std::vector<Element> add(m * m), mul(m * m);
  std::vector<std::string> names{"inf-"};
  for (std::uint64_t i = 0; i <= k; ++i) names.push_back(std::to_string(i));
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) {
      add[x * m + y] = std::max(x, y);
      if (x == 0 || y == 0)
        mul[x * m + y] = 0;
      else
        mul[x * m + y] = std::min((x - 1) + (y - 1), k) + 1;
    }
  return from_tables("maxplus" + std::to_string(k), std::move(names), std::move(add),
                     std::move(mul), 0, 1);
}

FinitePtr make_supertropical(const OrderedMonoid& base) {
  base.validate();
  const std::size_t g = base.size();
  const std::size_t m = 1 + 2 * g;
  // index 0 = zero, then (tangible g_i, ghost g_i) in base order
  auto tangible = [](Element i) { return 1 + 2 * i; };
  auto ghost = [](Element i) { return 2 + 2 * i; };
  auto base_of = [](Element e) { return (e - 1) / 2; };
  auto is_ghost = [](Element e) { return e != 0 && e % 2 == 0; };

  std::vector<std::string> names(m);
  names[0] = "0";
  for (Element i = 0; i < g; ++i) {
    names[tangible(i)] = "t" + base.names[i];
    names[ghost(i)] = "g" + base.names[i];
  }

  // A product of tangibles stays tangible only where the base operation is
  // strictly increasing in both arguments; a collapsed product would break
  // distributivity unless it lands in the ghost ideal (compare the
  // truncation quotients of the extended tropical semiring).
  auto strictly_monotone_at = [&](Element a, Element b) {
    const bool left = a == 0 || base.apply(a - 1, b) < base.apply(a, b);
    const bool right = b == 0 || base.apply(a, b - 1) < base.apply(a, b);
    return left && right;
  };

  std::vector<Element> add(m * m), mul(m * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) {
      if (x == 0) {
        add[x * m + y] = y;
        mul[x * m + y] = 0;
        continue;
      }
      if (y == 0) {
        add[x * m + y] = x;
        mul[x * m + y] = 0;
        continue;
      }
      const Element bx = base_of(x), by = base_of(y);
      if (bx != by)
        add[x * m + y] = bx > by ? x : y;
      else
        add[x * m + y] = ghost(bx);
      const Element prod = base.apply(bx, by);
      const bool ghostly = is_ghost(x) || is_ghost(y) || !strictly_monotone_at(bx, by);
      mul[x * m + y] = ghostly ? ghost(prod) : tangible(prod);
    }
  return from_tables("supertrop" + std::to_string(g), std::move(names), std::move(add),
                     std::move(mul), 0, tangible(base.unit));
}

FinitePtr make_supertropical_chain(std::size_t len) {
  return make_supertropical(OrderedMonoid::saturating_chain(len));
}

std::vector<std::vector<Element>> approx_classes(const FiniteSemiring& s) {
  const auto ord = IntrinsicOrder::of(s);
  std::vector<std::vector<Element>> classes;
  std::vector<bool> seen(s.order(), false);
  for (Element a = 0; a < s.order(); ++a) {
    if (seen[a]) continue;
    std::vector<Element> cls;
    for (Element b = a; b < s.order(); ++b)
      if (ord.approx(a, b)) {
        cls.push_back(b);
        seen[b] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

FinitePtr make_quotient_by_approx(const FiniteSemiring& s) {
  const auto classes = approx_classes(s);
  const std::size_t m = classes.size();
  std::vector<Element> cls_of(s.order());
  for (std::size_t c = 0; c < m; ++c)
    for (Element e : classes[c]) cls_of[e] = c;

  std::vector<std::string> names;
  for (const auto& cls : classes) names.push_back(s.element_name(cls.front()));

  std::vector<Element> add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const Element a = classes[x].front(), b = classes[y].front();
      add[x * m + y] = cls_of[s.add(a, b)];
      mul[x * m + y] = cls_of[s.mul(a, b)];
    }
  return from_tables(s.name() + "/approx", std::move(names), std::move(add), std::move(mul),
                     cls_of[s.zero()], cls_of[s.one()]);
}

namespace {

std::vector<std::string> split(std::string_view spec, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(spec.substr(start));
      return parts;
    }
    parts.emplace_back(spec.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t parse_number(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw PreconditionError(std::string("bad number for ") + what + ": '" + text + "'");
  return value;
}

} // namespace

bool looks_like_builtin_spec(std::string_view spec) {
  const auto head = split(spec, ':').front();
  static const char* kinds[] = {"boolean",  "zn",      "nquot",        "satnat",
                                "maxplus",  "natural", "supertropical"};
  return std::any_of(std::begin(kinds), std::end(kinds),
                     [&](const char* k) { return head == k; });
}

SemiringPtr make_builtin(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts.front();
  auto arity = [&](std::size_t want) {
    if (parts.size() != want + 1)
      throw PreconditionError("builtin '" + kind + "' takes " + std::to_string(want) +
                              " parameter(s)");
  };
  if (kind == "boolean") {
    arity(0);
    return make_boolean();
  }
  if (kind == "zn") {
    arity(1);
    return make_zn(parse_number(parts[1], "zn"));
  }
  if (kind == "nquot") {
    arity(2);
    return make_n_quotient(parse_number(parts[1], "nquot"), parse_number(parts[2], "nquot"));
  }
  if (kind == "satnat") {
    arity(1);
    return make_saturated_natural(parse_number(parts[1], "satnat"));
  }
  if (kind == "maxplus") {
    arity(1);
    return make_truncated_maxplus(parse_number(parts[1], "maxplus"));
  }
  if (kind == "supertropical") {
    arity(1);
    return make_supertropical_chain(parse_number(parts[1], "supertropical"));
  }
  if (kind == "natural") {
    if (parts.size() == 1) return make_natural();
    arity(1);
    return make_natural(parse_number(parts[1], "natural"));
  }
  throw PreconditionError("unknown builtin semiring '" + std::string(spec) + "'");
}

} // namespace semisym
