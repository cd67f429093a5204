#include "core/parse.hpp"

#include "core/builtins.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace semisym {

namespace {

struct Token {
  std::string text;
  std::size_t line, column;
};

// Whitespace-separated tokens with '#' line comments.
std::vector<Token> tokenize_table(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1;
  std::string current;
  std::size_t tok_line = 0, tok_column = 0;
  auto flush = [&]() {
    if (!current.empty()) {
      tokens.push_back({current, tok_line, tok_column});
      current.clear();
    }
  };
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line;
      column = 1;
      continue;
    }
    if (in_comment) {
      ++column;
      continue;
    }
    if (c == '#') {
      flush();
      in_comment = true;
      ++column;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      if (current.empty()) {
        tok_line = line;
        tok_column = column;
      }
      current += c;
    }
    ++column;
  }
  flush();
  return tokens;
}

class TableReader {
public:
  explicit TableReader(std::string_view text) : tokens_(tokenize_table(text)) {}

  bool done() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (done()) throw ParseError("unexpected end of file", last_line(), 1);
    return tokens_[pos_];
  }

  Token next() {
    const Token t = peek();
    ++pos_;
    return t;
  }

  Token expect_keyword(std::string_view keyword) {
    const Token t = next();
    if (t.text != keyword)
      throw ParseError("expected '" + std::string(keyword) + "', found '" + t.text + "'", t.line,
                       t.column);
    return t;
  }

  std::uint64_t expect_number(std::string_view what) {
    const Token t = next();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw ParseError("expected a number for " + std::string(what) + ", found '" + t.text + "'",
                       t.line, t.column);
    return value;
  }

  std::size_t last_line() const {
    return tokens_.empty() ? 1 : tokens_.back().line;
  }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

SemiringPtr parse_semiring_text(std::string_view text, std::string_view fallback_name) {
  TableReader reader(text);
  reader.expect_keyword("format");
  const std::uint64_t version = reader.expect_number("format version");
  if (version != 1) {
    const Token& t = reader.peek();
    throw ParseError("unsupported format version " + std::to_string(version), t.line, t.column);
  }

  std::string name(fallback_name);
  if (!reader.done() && reader.peek().text == "name") {
    reader.next();
    name = reader.next().text;
  }

  if (!reader.done() && reader.peek().text == "builtin") {
    reader.next();
    const Token spec = reader.next();
    try {
      return make_builtin(spec.text);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), spec.line, spec.column);
    }
  }

  reader.expect_keyword("order");
  const std::uint64_t m = reader.expect_number("order");
  if (m == 0 || m > 255) {
    throw ParseError("order must be between 1 and 255", 1, 1);
  }

  reader.expect_keyword("elements");
  std::vector<std::string> names;
  std::vector<Token> name_tokens;
  for (std::uint64_t i = 0; i < m; ++i) {
    const Token t = reader.next();
    if (std::find(names.begin(), names.end(), t.text) != names.end())
      throw ParseError("duplicate element token '" + t.text + "'", t.line, t.column);
    names.push_back(t.text);
    name_tokens.push_back(t);
  }

  auto element_of = [&](const Token& t) -> Element {
    const auto it = std::find(names.begin(), names.end(), t.text);
    if (it == names.end())
      throw ParseError("unknown element token '" + t.text + "'", t.line, t.column);
    return static_cast<Element>(it - names.begin());
  };

  reader.expect_keyword("zero");
  const Element zero = element_of(reader.next());
  reader.expect_keyword("one");
  const Element one = element_of(reader.next());

  auto read_block = [&](std::string_view keyword) {
    reader.expect_keyword(keyword);
    std::vector<Element> table(m * m);
    for (std::uint64_t row = 0; row < m; ++row)
      for (std::uint64_t col = 0; col < m; ++col) table[row * m + col] = element_of(reader.next());
    return table;
  };
  std::vector<Element> add = read_block("add");
  std::vector<Element> mul = read_block("mul");

  if (!reader.done()) {
    const Token& t = reader.peek();
    throw ParseError("trailing content '" + t.text + "'", t.line, t.column);
  }

  return std::make_shared<FiniteSemiring>(FiniteSemiring::validated(
      std::move(name), std::move(names), std::move(add), std::move(mul), zero, one));
}

SemiringPtr load_semiring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string stem = path;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (const auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_semiring_text(buffer.str(), stem);
}

std::string format_semiring_table(const FiniteSemiring& s) {
  std::ostringstream out;
  const std::size_t m = s.order();
  out << "format 1\n";
  out << "name " << s.name() << "\n";
  out << "order " << m << "\n";
  out << "elements";
  for (std::size_t i = 0; i < m; ++i) out << " " << s.element_name(i);
  out << "\n";
  out << "zero " << s.element_name(s.zero()) << "\n";
  out << "one " << s.element_name(s.one()) << "\n";
  out << "add\n";
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) out << (b ? " " : "") << s.element_name(s.add(a, b));
    out << "\n";
  }
  out << "mul\n";
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) out << (b ? " " : "") << s.element_name(s.mul(a, b));
    out << "\n";
  }
  return out.str();
}

SemiringPtr resolve_semiring(const std::string& spec_or_path) {
  if (std::ifstream probe(spec_or_path); probe.good()) return load_semiring_file(spec_or_path);
  if (looks_like_builtin_spec(spec_or_path)) return make_builtin(spec_or_path);
  throw PreconditionError("'" + spec_or_path +
                          "' is neither a readable table file nor a builtin spec");
}

// ---- polynomial expressions -----------------------------------------------

namespace {

struct ExprToken {
  enum class Kind { plus, star, caret, lparen, rparen, word, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t column = 0;
};

std::vector<ExprToken> tokenize_expression(std::string_view text) {
  std::vector<ExprToken> tokens;
  std::size_t column = 1;
  std::string word;
  std::size_t word_col = 0;
  auto flush = [&]() {
    if (!word.empty()) {
      tokens.push_back({ExprToken::Kind::word, word, word_col});
      word.clear();
    }
  };
  for (char c : text) {
    ExprToken::Kind kind;
    switch (c) {
      case '+': kind = ExprToken::Kind::plus; break;
      case '*': kind = ExprToken::Kind::star; break;
      case '^': kind = ExprToken::Kind::caret; break;
      case '(': kind = ExprToken::Kind::lparen; break;
      case ')': kind = ExprToken::Kind::rparen; break;
      default:
        if (std::isspace(static_cast<unsigned char>(c))) {
          flush();
        } else {
          if (word.empty()) word_col = column;
          word += c;
        }
        ++column;
        continue;
    }
    flush();
    tokens.push_back({kind, std::string(1, c), column});
    ++column;
  }
  flush();
  tokens.push_back({ExprToken::Kind::end, "", column});
  return tokens;
}

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, SemiringPtr ring, std::size_t n_vars)
      : tokens_(tokenize_expression(text)), ring_(std::move(ring)), n_vars_(n_vars) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    const auto& t = peek();
    if (t.kind != ExprToken::Kind::end)
      throw ParseError("unexpected '" + t.text + "'", 1, t.column);
    return p;
  }

private:
  std::vector<ExprToken> tokens_;
  std::size_t pos_ = 0;
  SemiringPtr ring_;
  std::size_t n_vars_;

  const ExprToken& peek() const { return tokens_[pos_]; }
  ExprToken next() { return tokens_[pos_++]; }

  bool starts_atom(const ExprToken& t) const {
    return t.kind == ExprToken::Kind::lparen || t.kind == ExprToken::Kind::word;
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    while (peek().kind == ExprToken::Kind::plus) {
      next();
      acc = acc.plus(parse_term());
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (true) {
      if (peek().kind == ExprToken::Kind::star) {
        next();
        acc = acc.times(parse_factor());
      } else if (starts_atom(peek())) {
        acc = acc.times(parse_factor());
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (peek().kind != ExprToken::Kind::caret) return base;
    const auto caret = next();
    const auto t = next();
    if (t.kind != ExprToken::Kind::word)
      throw ParseError("expected an exponent after '^'", 1, caret.column);
    std::uint64_t exponent = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), exponent);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw ParseError("exponent must be a natural number, found '" + t.text + "'", 1, t.column);
    if (exponent > kMaxExponent)
      throw ParseError("exponent " + std::to_string(exponent) + " exceeds the cap " +
                           std::to_string(kMaxExponent),
                       1, t.column);
    return base.pow(exponent);
  }

  Polynomial parse_atom() {
    const auto t = next();
    if (t.kind == ExprToken::Kind::lparen) {
      Polynomial inner = parse_expr();
      const auto closing = next();
      if (closing.kind != ExprToken::Kind::rparen)
        throw ParseError("expected ')'", 1, closing.column);
      return inner;
    }
    if (t.kind != ExprToken::Kind::word)
      throw ParseError("expected a variable, element or '('; found '" + t.text + "'", 1,
                       t.column);
    if (t.text.size() >= 2 && t.text[0] == 'x' &&
        std::all_of(t.text.begin() + 1, t.text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      std::size_t index = 0;
      std::from_chars(t.text.data() + 1, t.text.data() + t.text.size(), index);
      if (index == 0 || index > n_vars_)
        throw ParseError("variable '" + t.text + "' out of range (have " +
                             std::to_string(n_vars_) + " variables)",
                         1, t.column);
      return Polynomial::variable(ring_, n_vars_, index - 1);
    }
    const auto element = ring_->element_from_name(t.text);
    if (!element)
      throw ParseError("'" + t.text + "' is not an element of " + ring_->name(), 1, t.column);
    return Polynomial::constant(ring_, n_vars_, *element);
  }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, SemiringPtr ring, std::size_t n_vars) {
  return ExpressionParser(text, std::move(ring), n_vars).parse();
}

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (const auto& t : tokenize_expression(text)) {
    if (t.kind != ExprToken::Kind::word) continue;
    if (t.text.size() < 2 || t.text[0] != 'x') continue;
    if (!std::all_of(t.text.begin() + 1, t.text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      continue;
    std::size_t index = 0;
    std::from_chars(t.text.data() + 1, t.text.data() + t.text.size(), index);
    best = std::max(best, index);
  }
  return best;
}

std::string print_polynomial(const Polynomial& p) {
  const Semiring& s = *p.ring();
  if (p.is_zero()) return s.element_name(s.zero());
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
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
      out << "x" << (i + 1);
      if (exps[i] > 1) out << "^" << +exps[i];
    }
  }
  return out.str();
}

} // namespace semisym
