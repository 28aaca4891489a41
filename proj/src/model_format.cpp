#include "hnil/model_format.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace hnil {

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string s;
  for (const auto& d : diagnostics) {
    if (!s.empty()) s += '\n';
    s += d.to_string();
  }
  return s;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

struct Position {
  int line = 1;
  int column = 1;
};

enum class TokenKind { identifier, integer, symbol, separator, end };

struct Token {
  TokenKind kind;
  std::string text;
  Position pos;
};

const std::set<std::string, std::less<>> kReserved = {"base", "fiber", "gen", "d", "D", "truncate"};

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<Diagnostic>& diagnostics) : text_(text), diagnostics_(diagnostics) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (i_ < text_.size()) {
      const char c = text_[i_];
      const Position here = pos_;
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (c == '\n' || c == ';') {
        tokens.push_back({TokenKind::separator, std::string(1, c), here});
        advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_' ||
                                     text_[i_] == '\'')) {
          word += text_[i_];
          advance();
        }
        tokens.push_back({TokenKind::identifier, std::move(word), here});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          digits += text_[i_];
          advance();
        }
        tokens.push_back({TokenKind::integer, std::move(digits), here});
      } else if (std::string_view("{}:=+-*/^").find(c) != std::string_view::npos) {
        tokens.push_back({TokenKind::symbol, std::string(1, c), here});
        advance();
      } else {
        diagnostics_.push_back({here.line, here.column, std::string("unexpected character '") + c + "'"});
        advance();
      }
    }
    tokens.push_back({TokenKind::end, "", pos_});
    return tokens;
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
      ++pos_.column;  // count UTF-8 code points, not bytes
    }
    ++i_;
  }

  std::string_view text_;
  std::vector<Diagnostic>& diagnostics_;
  std::size_t i_ = 0;
  Position pos_;
};

struct FactorAst {
  std::string name;
  int exponent = 1;
  Position pos;
};

struct TermAst {
  Rational coefficient = 1;
  std::vector<FactorAst> factors;
  Position pos;
};

struct ExprAst {
  std::vector<TermAst> terms;
  Position pos;
};

struct GenAst {
  std::string name;
  int degree = 0;
  Position pos;
};

struct DiffAst {
  std::string target;
  ExprAst value;
  Position pos;
};

struct BlockAst {
  std::vector<GenAst> gens;
  std::vector<DiffAst> diffs;
  std::vector<std::pair<int, Position>> truncations;
};

/// Thrown inside the parser to abandon the current statement.
struct StatementError {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diagnostics)
      : tokens_(std::move(tokens)), diagnostics_(diagnostics) {}

  std::optional<std::pair<BlockAst, BlockAst>> document() {
    skip_separators();
    auto base = block("base", "d");
    if (!base) return std::nullopt;
    skip_separators();
    auto fiber = block("fiber", "D");
    if (!fiber) return std::nullopt;
    skip_separators();
    if (peek().kind != TokenKind::end) {
      error(peek().pos, "unexpected '" + peek().text + "' after the fiber block");
      return std::nullopt;
    }
    return std::make_pair(std::move(*base), std::move(*fiber));
  }

  std::optional<ExprAst> standalone_expression() {
    try {
      skip_separators();
      ExprAst e = expression();
      skip_separators();
      if (peek().kind != TokenKind::end) error_at_token("unexpected '" + peek().text + "'");
      return e;
    } catch (const StatementError&) {
      return std::nullopt;
    }
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  const Token& take() { return tokens_[i_ < tokens_.size() - 1 ? i_++ : i_]; }
  bool is_symbol(char c) const { return peek().kind == TokenKind::symbol && peek().text[0] == c; }

  void skip_separators() {
    while (peek().kind == TokenKind::separator) take();
  }

  void error(Position p, std::string message) { diagnostics_.push_back({p.line, p.column, std::move(message)}); }

  [[noreturn]] void error_at_token(std::string message) {
    error(peek().pos, std::move(message));
    throw StatementError{};
  }

  void expect_symbol(char c) {
    if (!is_symbol(c)) {
      error_at_token(std::string("expected '") + c + "'" +
                     (peek().kind == TokenKind::end ? " before end of input" : ", found '" + describe(peek()) + "'"));
    }
    take();
  }

  static std::string describe(const Token& t) { return t.kind == TokenKind::separator ? "end of line" : t.text; }

  std::string identifier(const char* what) {
    if (peek().kind != TokenKind::identifier) error_at_token(std::string("expected ") + what);
    return take().text;
  }

  int small_integer(const char* what) {
    if (peek().kind != TokenKind::integer) error_at_token(std::string("expected ") + what);
    const Token& t = take();
    if (t.text.size() > 6) {
      error(t.pos, std::string(what) + " is too large");
      throw StatementError{};
    }
    return std::stoi(t.text);
  }

  std::optional<BlockAst> block(const char* keyword, const char* diff_keyword) {
    if (peek().kind != TokenKind::identifier || peek().text != keyword) {
      error(peek().pos, std::string("expected '") + keyword + "' block");
      return std::nullopt;
    }
    take();
    skip_separators();
    if (!is_symbol('{')) {
      error(peek().pos, std::string("expected '{' after '") + keyword + "'");
      return std::nullopt;
    }
    take();
    BlockAst out;
    while (true) {
      skip_separators();
      if (is_symbol('}')) {
        take();
        return out;
      }
      if (peek().kind == TokenKind::end) {
        error(peek().pos, std::string("unterminated '") + keyword + "' block");
        return std::nullopt;
      }
      try {
        statement(out, keyword, diff_keyword);
        if (peek().kind != TokenKind::separator && !is_symbol('}') && peek().kind != TokenKind::end) {
          error_at_token("unexpected '" + peek().text + "'");
        }
      } catch (const StatementError&) {
        while (peek().kind != TokenKind::separator && !is_symbol('}') && peek().kind != TokenKind::end) take();
      }
    }
  }

  void statement(BlockAst& out, std::string_view block_name, std::string_view diff_keyword) {
    const Token& head = peek();
    if (head.kind != TokenKind::identifier) error_at_token("expected a declaration");
    if (head.text == "gen") {
      take();
      GenAst g;
      g.pos = peek().pos;
      g.name = identifier("generator name");
      expect_symbol(':');
      g.degree = small_integer("degree");
      out.gens.push_back(std::move(g));
    } else if (head.text == diff_keyword) {
      take();
      DiffAst d;
      d.pos = peek().pos;
      d.target = identifier("generator name");
      expect_symbol('=');
      d.value = expression();
      out.diffs.push_back(std::move(d));
    } else if (head.text == "truncate" && block_name == "base") {
      const Position p = head.pos;
      take();
      out.truncations.emplace_back(small_integer("truncation degree"), p);
    } else if (head.text == "d" || head.text == "D") {
      error_at_token("'" + head.text + "' declarations are not allowed in the " + std::string(block_name) + " block");
    } else {
      error_at_token("unknown declaration '" + head.text + "'");
    }
  }

  ExprAst expression() {
    ExprAst e;
    e.pos = peek().pos;
    bool negative = false;
    if (is_symbol('-') || is_symbol('+')) negative = take().text == "-";
    while (true) {
      TermAst t = term();
      if (negative) t.coefficient = -t.coefficient;
      e.terms.push_back(std::move(t));
      if (!is_symbol('+') && !is_symbol('-')) break;
      negative = take().text == "-";
    }
    return e;
  }

  TermAst term() {
    TermAst t;
    t.pos = peek().pos;
    if (peek().kind == TokenKind::integer) {
      const Token num = take();
      Rational value(boost::multiprecision::mpz_int(num.text));
      if (is_symbol('/')) {
        take();
        if (peek().kind != TokenKind::integer) error_at_token("expected a denominator");
        const Token den = take();
        const boost::multiprecision::mpz_int q(den.text);
        if (q == 0) {
          error(num.pos, "malformed rational: zero denominator");
          throw StatementError{};
        }
        value /= Rational(q);
      }
      t.coefficient = value;
      if (!is_symbol('*')) return t;
      take();
    }
    t.factors.push_back(factor());
    while (is_symbol('*')) {
      take();
      t.factors.push_back(factor());
    }
    return t;
  }

  FactorAst factor() {
    FactorAst f;
    f.pos = peek().pos;
    f.name = identifier("a generator");
    if (is_symbol('^')) {
      take();
      const Position p = peek().pos;
      f.exponent = small_integer("exponent");
      if (f.exponent < 1) {
        error(p, "exponent must be positive");
        throw StatementError{};
      }
    }
    return f;
  }

  std::vector<Token> tokens_;
  std::vector<Diagnostic>& diagnostics_;
  std::size_t i_ = 0;
};

/// Resolves an expression against a signature. When `expected_degree` is set,
/// every nonzero term must have that degree. `foreign` lists known names that
/// are not allowed here, with the message to give.
std::optional<Element> resolve(const ExprAst& e, const SignaturePtr& sig, std::optional<int> expected_degree,
                               const std::map<std::string, std::string>& foreign,
                               std::vector<Diagnostic>& diagnostics) {
  Element out(sig);
  bool ok = true;
  for (const auto& t : e.terms) {
    if (t.coefficient == 0) continue;
    std::vector<std::pair<std::size_t, int>> factors;
    int degree = 0;
    bool term_ok = true;
    for (const auto& f : t.factors) {
      const auto idx = sig->find(f.name);
      if (!idx) {
        auto it = foreign.find(f.name);
        diagnostics.push_back({f.pos.line, f.pos.column,
                               it != foreign.end() ? it->second + f.name : "unknown generator " + f.name});
        term_ok = false;
        continue;
      }
      factors.emplace_back(*idx, f.exponent);
      degree += f.exponent * (*sig)[*idx].degree;
    }
    if (!term_ok) {
      ok = false;
      continue;
    }
    if (expected_degree && degree != *expected_degree) {
      diagnostics.push_back({t.pos.line, t.pos.column,
                             "degree mismatch: expected " + std::to_string(*expected_degree) + ", found " +
                                 std::to_string(degree)});
      ok = false;
      continue;
    }
    const auto sm = normalize_monomial(*sig, factors);
    if (sm.sign == 0 || !sig->within_budget(degree)) continue;
    out.add_term(sm.monomial, sm.sign * t.coefficient);
  }
  if (!ok) return std::nullopt;
  return out;
}

void check_generators(const std::vector<GenAst>& gens, std::set<std::string>& seen,
                      std::vector<Diagnostic>& diagnostics) {
  for (const auto& g : gens) {
    if (kReserved.count(g.name)) {
      diagnostics.push_back({g.pos.line, g.pos.column, "'" + g.name + "' is a reserved word"});
    } else if (!seen.insert(g.name).second) {
      diagnostics.push_back({g.pos.line, g.pos.column, "duplicate generator " + g.name});
    }
    if (g.degree < 1) {
      diagnostics.push_back({g.pos.line, g.pos.column, "generator degree must be positive"});
    }
  }
}

}  // namespace

BundleModel parse_model(std::string_view text) {
  std::vector<Diagnostic> diagnostics;
  Parser parser(Lexer(text, diagnostics).run(), diagnostics);
  auto doc = parser.document();
  if (!doc || !diagnostics.empty()) {
    if (diagnostics.empty()) diagnostics.push_back({1, 1, "malformed model"});
    throw ParseError(std::move(diagnostics));
  }
  const auto& [base, fiber] = *doc;

  std::set<std::string> seen;
  check_generators(base.gens, seen, diagnostics);
  check_generators(fiber.gens, seen, diagnostics);

  std::optional<int> truncation;
  for (const auto& [t, pos] : base.truncations) {
    if (truncation) {
      diagnostics.push_back({pos.line, pos.column, "duplicate truncate declaration"});
    } else if (t < 1) {
      diagnostics.push_back({pos.line, pos.column, "truncation degree must be positive"});
    } else {
      truncation = t;
    }
  }
  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));

  std::vector<GeneratorSymbol> base_gens;
  for (const auto& g : base.gens) base_gens.push_back({g.name, g.degree, Origin::base});
  const SignaturePtr base_sig = make_signature(base_gens, truncation);

  std::map<std::string, std::string> fiber_names;
  std::map<std::string, int> fiber_degree;
  for (const auto& g : fiber.gens) {
    fiber_names[g.name] = "D-value must use base generators only: ";
    fiber_degree[g.name] = g.degree;
  }

  std::vector<Element> d_values(base_gens.size(), Element::zero(base_sig));
  std::set<std::string> assigned;
  for (const auto& d : base.diffs) {
    const auto idx = base_sig->find(d.target);
    if (!idx) {
      diagnostics.push_back({d.pos.line, d.pos.column,
                             fiber_degree.count(d.target) ? "d declared for fiber generator " + d.target +
                                                                " (use D in the fiber block)"
                                                          : "unknown generator " + d.target});
      continue;
    }
    if (!assigned.insert(d.target).second) {
      diagnostics.push_back({d.pos.line, d.pos.column, "duplicate differential for " + d.target});
      continue;
    }
    std::map<std::string, std::string> foreign;
    for (const auto& [name, msg] : fiber_names) foreign[name] = "base differential cannot use fiber generator ";
    if (auto value = resolve(d.value, base_sig, base_gens[*idx].degree + 1, foreign, diagnostics)) {
      d_values[*idx] = std::move(*value);
    }
  }

  std::vector<GeneratorSymbol> fiber_gens;
  for (const auto& g : fiber.gens) fiber_gens.push_back({g.name, g.degree, Origin::fiber});
  std::vector<Element> fiber_d(fiber_gens.size(), Element::zero(base_sig));
  for (const auto& d : fiber.diffs) {
    auto it = fiber_degree.find(d.target);
    if (it == fiber_degree.end()) {
      diagnostics.push_back({d.pos.line, d.pos.column,
                             base_sig->find(d.target) ? "D declared for base generator " + d.target +
                                                            " (use d in the base block)"
                                                      : "unknown generator " + d.target});
      continue;
    }
    if (!assigned.insert(d.target).second) {
      diagnostics.push_back({d.pos.line, d.pos.column, "duplicate differential for " + d.target});
      continue;
    }
    std::size_t idx = 0;
    while (fiber_gens[idx].name != d.target) ++idx;
    if (auto value = resolve(d.value, base_sig, it->second + 1, fiber_names, diagnostics)) {
      fiber_d[idx] = std::move(*value);
    }
  }
  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));

  return BundleModel(Cdga(base_sig, std::move(d_values)), std::move(fiber_gens), std::move(fiber_d));
}

Element parse_expression(std::string_view text, const SignaturePtr& sig) {
  std::vector<Diagnostic> diagnostics;
  Parser parser(Lexer(text, diagnostics).run(), diagnostics);
  auto e = parser.standalone_expression();
  if (!e || !diagnostics.empty()) throw ParseError(std::move(diagnostics));
  auto value = resolve(*e, sig, std::nullopt, {}, diagnostics);
  if (!value) throw ParseError(std::move(diagnostics));
  return *value;
}

std::string format_model(const BundleModel& b) {
  const Signature& base = *b.base_signature();
  std::string s = "base {\n";
  for (const auto& g : base.generators()) s += "  gen " + g.name + " : " + std::to_string(g.degree) + "\n";
  if (base.truncation()) s += "  truncate " + std::to_string(*base.truncation()) + "\n";
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Element& dv = b.base().d_value(i);
    if (!dv.is_zero()) s += "  d " + base[i].name + " = " + format_element(dv) + "\n";
  }
  s += "}\nfiber {\n";
  for (const auto& g : b.fiber()) s += "  gen " + g.name + " : " + std::to_string(g.degree) + "\n";
  for (std::size_t i = 0; i < b.fiber_size(); ++i) {
    const Element& dv = b.fiber_d_value(i);
    if (!dv.is_zero()) s += "  D " + b.fiber_generator(i).name + " = " + format_element(dv) + "\n";
  }
  s += "}\n";
  return s;
}

}  // namespace hnil
