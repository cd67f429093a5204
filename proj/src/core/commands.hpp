#ifndef SEMISYM_CORE_COMMANDS_HPP
#define SEMISYM_CORE_COMMANDS_HPP

#include "core/elementarize.hpp"
#include "core/parse.hpp"

namespace semisym {

// Shared evaluation budgets and the seed for sampled checks on non-closed
// carriers.
struct Budget {
  std::uint64_t points = 2'000'000;
  std::size_t closure_cap = 2'000'000;
  std::uint64_t nmax = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 64;
};

// Outcome of one front-end command: human-readable text, the same content
// as a JSON document, and the exit status (0 success, 1 a property failed
// or a witness was found, 3 inconclusive under the budget). Usage and input
// errors surface as exceptions instead.
struct CommandResult {
  std::string text;
  std::string json;
  int outcome = 0;
};

CommandResult cmd_check(const SemiringPtr& ring);
CommandResult cmd_elementarize(const SemiringPtr& ring, const std::string& poly_text,
                               std::size_t n_vars_override, const Budget& budget);
CommandResult cmd_expand(const SemiringPtr& ring, const std::vector<std::uint8_t>& d,
                         std::size_t k, const Budget& budget);
CommandResult cmd_verify(const SemiringPtr& ring, const std::string& lemma,
                         const Budget& budget);
CommandResult cmd_suite(const SemiringPtr& ring, bool linear, const Budget& budget);
CommandResult cmd_enumerate(std::size_t order, bool classify, std::size_t order_cap,
                            const Budget& budget);
CommandResult cmd_quotient(const SemiringPtr& ring);

// The finite carrier behind a pointer, or a precondition failure for
// commands that require exhaustive checking.
const FiniteSemiring& require_finite(const SemiringPtr& ring);

} // namespace semisym

#endif
