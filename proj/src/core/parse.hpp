#ifndef SEMISYM_CORE_PARSE_HPP
#define SEMISYM_CORE_PARSE_HPP

#include "core/poly.hpp"

namespace semisym {

class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

// Semiring table file:
//
//   format 1
//   name n2eq4            (optional)
//   order 4
//   elements [0] [1] [2] [3]
//   zero [0]
//   one [1]
//   add
//   ... m rows of m tokens ...
//   mul
//   ... m rows of m tokens ...
//
// '#' starts a comment. Alternatively a single directive
//   builtin <spec>
// after the format line loads a built-in construction (the only way to name
// an infinite carrier in a file). Finite tables are validated on load.
SemiringPtr parse_semiring_text(std::string_view text, std::string_view fallback_name = "semiring");
SemiringPtr load_semiring_file(const std::string& path);

// Inverse of the finite-table parser; output re-parses to identical tables.
std::string format_semiring_table(const FiniteSemiring& s);

// Resolves a CLI argument: an existing file path, else a builtin spec.
SemiringPtr resolve_semiring(const std::string& spec_or_path);

// Expression grammar over a semiring's element tokens:
//   expr   := term ('+' term)*
//   term   := factor (('*')? factor)*        juxtaposition multiplies
//   factor := atom ('^' nat)?
//   atom   := '(' expr ')' | x<index> | element token
Polynomial parse_polynomial(std::string_view text, SemiringPtr ring, std::size_t n_vars);

// Largest x<i> index mentioned in the text (0 when none); convenience for
// choosing a variable count before parsing.
std::size_t max_variable_index(std::string_view text);

// Canonical rendering; parse(print(p)) == p.
std::string print_polynomial(const Polynomial& p);

} // namespace semisym

#endif
