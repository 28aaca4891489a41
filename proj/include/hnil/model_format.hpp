#pragma once

#include "hnil/bundle_model.hpp"
#include "hnil/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hnil {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;

  std::string to_string() const;
};

/// Raised by parse_model; carries every diagnostic found.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Model file grammar ('#' starts a comment; statements end at a newline or ';'):
///
///   document   := "base" "{" (gen | d | truncate)* "}" "fiber" "{" (gen | D)* "}"
///   gen        := "gen" IDENT ":" INT
///   d          := "d" IDENT "=" expr        differential of a base generator
///   D          := "D" IDENT "=" expr        fiber generator, base symbols only
///   truncate   := "truncate" INT
///   expr       := "0" | ["-"] term (("+" | "-") term)*
///   term       := [coeff "*"] factor ("*" factor)*
///   coeff      := INT ["/" INT]
///   factor     := IDENT ["^" INT]
///
/// Undeclared differentials are zero.
BundleModel parse_model(std::string_view text);

/// Canonical text of a model; parse_model(format_model(b)) reproduces b.
std::string format_model(const BundleModel& b);

/// Parses one expression against a signature (used by tests and tools).
Element parse_expression(std::string_view text, const SignaturePtr& sig);

}  // namespace hnil
