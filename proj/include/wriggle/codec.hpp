#pragma once

#include <string>
#include <variant>

#include "wriggle/polynomial.hpp"
#include "wriggle/tangle.hpp"
#include "wriggle/vassiliev.hpp"

namespace wriggle {

// A parsed file: classical unless any P/Q token appears.
using ParsedTangle = std::variant<TangleDiagram, SingularTangle>;

// Syntax is enforced (SyntaxError), semantic problems are returned as data.
// When the report is not ok() the value carries the best-effort structures.
struct ParseOutcome {
  ParsedTangle value;
  ValidationReport report;
};
ParseOutcome parse_tangle_lenient(const std::string& text);

// Throws SyntaxError on malformed text, SemanticError on the first
// validation violation.
ParsedTangle parse_tangle(const std::string& text);

// Canonical text: ids relabeled in first-encounter order, single spaces,
// one component per line, LF endings.
std::string serialize_tangle(const TangleDiagram& diagram);
std::string serialize_tangle(const SingularTangle& tangle);
std::string serialize_tangle(const ParsedTangle& parsed);

// Canonical form, e.g. "t1 + t1^-1 - 2"; multi-variable monomials join
// factors with '*'; the zero polynomial prints "0".
std::string polynomial_to_text(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_text(const std::string& text);

// JSON array of {"coeff": c, "exps": {"<variable>": exponent}} in canonical
// term order; zero prints "[]".
std::string polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const std::string& text);

}  // namespace wriggle
