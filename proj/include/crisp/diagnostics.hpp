#ifndef CRISP_DIAGNOSTICS_HPP
#define CRISP_DIAGNOSTICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crisp {

// Byte range [begin, end) into the source of one file.
struct Span {
  size_t begin = 0;
  size_t end = 0;
};

enum class DiagCode {
  Lex,       // E-LEX
  Parse,     // E-PARSE
  Scope,     // E-SCOPE
  Conv,      // E-CONV
  Univ,      // E-UNIV
  CrispVar,  // E-CRISP-VAR
  Duplicate, // E-DUPLICATE
  Import,    // E-IMPORT
};

const char* diag_code_name(DiagCode c);

struct Diagnostic {
  DiagCode code;
  std::string message;
  std::string file;
  Span span;
  std::string decl;     // declaration the error is attributed to; "-" for file-level
  std::string context;  // pretty-printed telescope snapshot, may be empty
};

// Thrown by the lexer/parser/checker; the driver converts it into a Diagnostic.
struct CheckError : std::runtime_error {
  DiagCode code;
  std::string message;
  Span span;
  std::string context;
  CheckError(DiagCode c, std::string msg, Span sp = {}, std::string ctx = {})
      : std::runtime_error(std::string(diag_code_name(c)) + ": " + msg),
        code(c), message(std::move(msg)), span(sp), context(std::move(ctx)) {}
};

// Internal invariant violations; never expected on any input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace crisp

#endif
