#include "core/semiring.hpp"

#include <charconv>

namespace semisym {

Element Semiring::pow(Element x, std::uint64_t n) const {
  Element acc = one();
  Element base = x;
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

Element Semiring::numeral(std::uint64_t n) const {
  Element acc = zero();
  for (std::uint64_t i = 0; i < n; ++i) acc = add(acc, one());
  return acc;
}

NaturalSemiring::NaturalSemiring(std::uint64_t cap) : cap_(cap) {
  if (cap < 1) throw PreconditionError("natural window needs cap >= 1");
}

Element NaturalSemiring::checked(unsigned __int128 v, const char* op) const {
  if (v > cap_)
    throw OverflowError(std::string("natural ") + op + " exceeds sampling cap " +
                        std::to_string(cap_));
  return static_cast<Element>(v);
}

Element NaturalSemiring::add(Element a, Element b) const {
  return checked(static_cast<unsigned __int128>(a) + b, "addition");
}

Element NaturalSemiring::mul(Element a, Element b) const {
  return checked(static_cast<unsigned __int128>(a) * b, "multiplication");
}

std::string NaturalSemiring::element_name(Element e) const { return std::to_string(e); }

std::optional<Element> NaturalSemiring::element_from_name(std::string_view token) const {
  if (token.empty()) return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  if (value > cap_) return std::nullopt;
  return value;
}

std::shared_ptr<const NaturalSemiring> make_natural(std::uint64_t cap) {
  return std::make_shared<NaturalSemiring>(cap);
}

} // namespace semisym
