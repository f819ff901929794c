#pragma once

// The .opd presentation language:
//
//   presentation := "operad" NAME "{" generator relation* "}"
//   generator    := "generator" NAME "arity" INT "degree" INT ";"
//   relation     := "relation" sum "=" "0" ";"
//   sum          := ["+"|"-"] term (("+"|"-") term)*
//   term         := [RATIONAL "*"] monomial
//   monomial     := "(" atom+ ")"      atom := "x" INT | monomial
//
// '#' starts a comment that runs to the end of the line.

#include "opkit/presentation.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opkit::dsl {

struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int column = 1;
};

enum class DiagnosticCode {
  lexical,                // E001
  syntax,                 // E002
  unsupported_generator,  // E010
  invalid_coefficient,    // E011
  zero_relation,          // E012
  arity_mismatch,         // E101
  labels_not_permutation, // E102
  non_quadratic,          // E103
};

std::string_view code_string(DiagnosticCode code);

struct Diagnostic {
  DiagnosticCode code;
  std::string message;
  SourceSpan span;

  /// "origin:line:col: error[E103]: message"
  std::string format(std::string_view origin) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(Diagnostic d, const std::string& origin)
      : std::runtime_error(d.format(origin)), diagnostic_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

struct SourceText {
  std::string text;
  std::string origin = "<input>";

  static SourceText from_file(const std::filesystem::path& path);
  /// Line and column (1-based, bytes) of an offset.
  SourceSpan span_at(std::size_t offset, std::size_t length) const;
};

QuadraticPresentation parse(const SourceText& src);
SourceText print(const QuadraticPresentation& p);

}  // namespace opkit::dsl
