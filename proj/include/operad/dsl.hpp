#pragma once

// Text format for presentations:
//
//   operad As {
//     ops: m;
//     rel: (x m y) m z = x m (y m z);
//   }
//
// Variables are always x, y, z in this order; "#" starts a comment.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "operad/presentation.hpp"

namespace operad {

enum class Severity { error, warning };

struct Diagnostic {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in code points
  std::string message;
  Severity severity = Severity::error;
};

std::string format_diagnostic(const Diagnostic& d, std::string_view source_name = "<input>");

struct ParseResult {
  std::vector<Presentation> operads;
  std::vector<Diagnostic> diagnostics;

  bool ok() const;
  const Presentation* find(std::string_view name) const;
};

ParseResult parse(std::string_view text);

class relation_parse_error : public std::runtime_error {
 public:
  explicit relation_parse_error(Diagnostic d) : std::runtime_error(d.message), diagnostic(std::move(d)) {}
  Diagnostic diagnostic;
};

// A single "lincomb = lincomb" over existing generators (aliases accepted).
RelVector parse_relation(std::string_view text, const GeneratorSet& generators);

// Emits the RREF basis rows of the relation space.
std::string print(const Presentation& p);
std::string format_relation(const RelVector& v, const GeneratorSet& g);

// Names usable as identifiers in the format; aliases are preferred when they
// are all valid, other names are sanitized and deduplicated.
std::vector<std::string> printable_names(const GeneratorSet& g);
bool is_identifier(std::string_view s);

}  // namespace operad
