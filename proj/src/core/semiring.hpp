#ifndef SEMISYM_CORE_SEMIRING_HPP
#define SEMISYM_CORE_SEMIRING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semisym {

// Elements are small values: carrier indices for finite semirings, plain
// natural numbers for the capped model of the naturals.
using Element = std::uint64_t;

class OverflowError : public std::runtime_error {
public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Unital commutative semiring. Implementations are immutable after
// construction and safe to share across threads; every operation is a pure
// function of its inputs.
class Semiring {
public:
  virtual ~Semiring() = default;

  virtual Element add(Element a, Element b) const = 0;
  virtual Element mul(Element a, Element b) const = 0;
  virtual Element zero() const = 0;
  virtual Element one() const = 0;

  // True when the carrier is finite; order() is its size (0 when infinite).
  virtual bool finite() const = 0;
  virtual std::size_t order() const = 0;

  // False for carriers that are merely sampled windows of an infinite
  // semiring (the capped naturals): operations may overflow out of the
  // window, and exhaustive checkers must refuse such carriers.
  virtual bool closed() const { return true; }

  virtual std::string name() const = 0;
  virtual std::string element_name(Element e) const = 0;
  virtual std::optional<Element> element_from_name(std::string_view token) const = 0;

  // n-fold product, pow(x, 0) == one. Valid in any commutative monoid.
  Element pow(Element x, std::uint64_t n) const;

  // n-fold sum of one, numeral(0) == zero.
  Element numeral(std::uint64_t n) const;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

// The naturals restricted to {0..cap}. Not closed: results beyond the cap
// raise OverflowError instead of wrapping, so the window never
// misrepresents the infinite carrier.
class NaturalSemiring final : public Semiring {
public:
  explicit NaturalSemiring(std::uint64_t cap);

  Element add(Element a, Element b) const override;
  Element mul(Element a, Element b) const override;
  Element zero() const override { return 0; }
  Element one() const override { return 1; }
  bool finite() const override { return false; }
  std::size_t order() const override { return 0; }
  bool closed() const override { return false; }
  std::string name() const override { return "natural"; }
  std::string element_name(Element e) const override;
  std::optional<Element> element_from_name(std::string_view token) const override;

  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
  Element checked(unsigned __int128 v, const char* op) const;
};

std::shared_ptr<const NaturalSemiring> make_natural(std::uint64_t cap = 1'000'000'000ULL);

} // namespace semisym

#endif
