#include "wriggle/codec.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace wriggle {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct LineScanner {
  const std::string& text;
  int line;
  int pos = 0;

  int column() const { return pos + 1; }
  bool at_end() const { return pos >= static_cast<int>(text.size()); }
  char peek() const { return text[pos]; }

  void skip_spaces() {
    while (!at_end() && is_space(text[pos])) ++pos;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(line, column(), expected);
  }

  void expect_literal(const std::string& literal) {
    if (text.compare(pos, literal.size(), literal) != 0) fail("\"" + literal + "\"");
    pos += static_cast<int>(literal.size());
  }

  std::string read_word() {
    const int start = pos;
    while (!at_end() && std::islower(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }

  int read_int() {
    const int start = pos;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("an integer");
    if (pos - start > 9) {
      pos = start;
      fail("an integer below 10^9");
    }
    return std::stoi(text.substr(start, pos - start));
  }

  Side read_side() {
    if (!at_end() && (peek() == 'T' || peek() == 'B')) {
      return text[pos++] == 'T' ? Side::Top : Side::Bottom;
    }
    fail("side T or B");
  }
};

struct RawLine {
  std::string text;
  int number = 0;
};

std::vector<RawLine> significant_lines(const std::string& input) {
  std::vector<RawLine> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= input.size()) {
    const std::size_t end = input.find('\n', start);
    const std::string line = input.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    ++number;
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first < line.size() && line[first] != '#') lines.push_back({line, number});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return lines;
}

struct ParsedComponent {
  SComponent component;
  // Sign claimed by each classical token, in token order.
  std::vector<std::pair<int, int>> sign_claims;
};

ParsedComponent parse_component_line(const RawLine& raw) {
  LineScanner scan{raw.text, raw.number};
  ParsedComponent out;

  scan.skip_spaces();
  const int kind_column = scan.column();
  const std::string kind = scan.read_word();
  if (kind == "closed") {
    out.component.kind = ComponentKind::Closed;
  } else if (kind == "long") {
    out.component.kind = ComponentKind::Long;
    scan.skip_spaces();
    scan.expect_literal("start=");
    EndPoint start;
    start.side = scan.read_side();
    scan.expect_literal(".");
    start.position = scan.read_int();
    scan.skip_spaces();
    scan.expect_literal("end=");
    EndPoint stop;
    stop.side = scan.read_side();
    scan.expect_literal(".");
    stop.position = scan.read_int();
    out.component.start = start;
    out.component.stop = stop;
  } else {
    throw SyntaxError(raw.number, kind_column, "\"closed\" or \"long\"");
  }

  scan.skip_spaces();
  scan.expect_literal(":");

  while (true) {
    scan.skip_spaces();
    if (scan.at_end()) break;
    const char role_char = scan.peek();
    if (role_char != 'O' && role_char != 'U' && role_char != 'P' && role_char != 'Q') {
      scan.fail("a passage token O/U/P/Q");
    }
    ++scan.pos;
    const int id = scan.read_int();
    if (role_char == 'O' || role_char == 'U') {
      if (scan.at_end() || (scan.peek() != '+' && scan.peek() != '-')) scan.fail("+ or -");
      const int sign = scan.peek() == '+' ? 1 : -1;
      ++scan.pos;
      out.component.passages.push_back({id, role_char == 'O' ? SRole::Over : SRole::Under});
      out.sign_claims.push_back({id, sign});
    } else {
      scan.expect_literal("*");
      out.component.passages.push_back({id, role_char == 'P' ? SRole::P : SRole::Q});
    }
  }
  return out;
}

// Builds the crossing maps without rejecting anything; validation reports
// the problems afterwards.
SingularTangle build_lenient(std::vector<SComponent> components,
                             const std::map<int, int>& signs) {
  SingularTangle tangle;
  tangle.components = std::move(components);
  for (int i = 0; i < static_cast<int>(tangle.components.size()); ++i) {
    const auto& passages = tangle.components[i].passages;
    for (int pos = 0; pos < static_cast<int>(passages.size()); ++pos) {
      const SPassage& passage = passages[pos];
      const Location here{i, pos};
      if (passage.role == SRole::Over || passage.role == SRole::Under) {
        Crossing& crossing = tangle.classical[passage.crossing];
        crossing.id = passage.crossing;
        auto it = signs.find(passage.crossing);
        crossing.sign = it == signs.end() ? 1 : it->second;
        (passage.role == SRole::Over ? crossing.over : crossing.under) = here;
      } else {
        SingularCrossing& crossing = tangle.singular[passage.crossing];
        crossing.id = passage.crossing;
        (passage.role == SRole::P ? crossing.passage_p : crossing.passage_q) = here;
      }
    }
  }
  return tangle;
}

TangleDiagram strip_singular(const SingularTangle& tangle) {
  TangleDiagram diagram;
  for (const SComponent& scomp : tangle.components) {
    Component comp;
    comp.kind = scomp.kind;
    comp.start = scomp.start;
    comp.stop = scomp.stop;
    for (const SPassage& passage : scomp.passages) {
      comp.passages.push_back(
          {passage.crossing, passage.role == SRole::Over ? Role::Over : Role::Under});
    }
    diagram.components.push_back(std::move(comp));
  }
  diagram.crossings = tangle.classical;
  return diagram;
}

}  // namespace

ParseOutcome parse_tangle_lenient(const std::string& text) {
  const std::vector<RawLine> lines = significant_lines(text);
  if (lines.empty()) throw SyntaxError(1, 1, "\"tangle\" header");
  {
    LineScanner scan{lines[0].text, lines[0].number};
    scan.skip_spaces();
    const int column = scan.column();
    if (scan.read_word() != "tangle") {
      throw SyntaxError(lines[0].number, column, "\"tangle\" header");
    }
    scan.skip_spaces();
    if (!scan.at_end()) scan.fail("end of line");
  }

  std::vector<SComponent> components;
  std::map<int, int> signs;
  ValidationReport report;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    ParsedComponent parsed = parse_component_line(lines[k]);
    for (const auto& [id, sign] : parsed.sign_claims) {
      auto [it, inserted] = signs.emplace(id, sign);
      if (!inserted && it->second != sign) {
        const bool already_reported =
            std::any_of(report.violations.begin(), report.violations.end(),
                        [&](const Violation& violation) {
                          return violation.kind == ViolationKind::SignInconsistency &&
                                 violation.crossing_id == id;
                        });
        if (!already_reported) {
          report.violations.push_back({ViolationKind::SignInconsistency, id, -1,
                                       "sign tokens of this crossing disagree"});
        }
      }
    }
    components.push_back(std::move(parsed.component));
  }

  SingularTangle tangle = build_lenient(std::move(components), signs);
  const bool singular = !tangle.singular.empty() ||
                        std::any_of(tangle.components.begin(), tangle.components.end(),
                                    [](const SComponent& comp) {
                                      return std::any_of(comp.passages.begin(),
                                                         comp.passages.end(),
                                                         [](const SPassage& passage) {
                                                           return passage.role == SRole::P ||
                                                                  passage.role == SRole::Q;
                                                         });
                                    });
  ParseOutcome outcome{TangleDiagram{}, std::move(report)};
  if (singular) {
    for (const Violation& violation : validate_singular(tangle).violations) {
      outcome.report.violations.push_back(violation);
    }
    outcome.value = std::move(tangle);
  } else {
    TangleDiagram diagram = strip_singular(tangle);
    for (const Violation& violation : validate(diagram).violations) {
      outcome.report.violations.push_back(violation);
    }
    outcome.value = std::move(diagram);
  }
  return outcome;
}

ParsedTangle parse_tangle(const std::string& text) {
  ParseOutcome outcome = parse_tangle_lenient(text);
  if (!outcome.report.ok()) throw SemanticError(outcome.report.violations.front());
  return std::move(outcome.value);
}

namespace {

std::string endpoint_token(const EndPoint& end) {
  return std::string(end.side == Side::Top ? "T" : "B") + "." + std::to_string(end.position);
}

std::string component_head(ComponentKind kind, const std::optional<EndPoint>& start,
                           const std::optional<EndPoint>& stop) {
  if (kind == ComponentKind::Closed) return "closed";
  return "long start=" + endpoint_token(start.value()) + " end=" + endpoint_token(stop.value());
}

}  // namespace

std::string serialize_tangle(const TangleDiagram& diagram) {
  require_valid(diagram);
  const TangleDiagram canonical = relabel_canonical(diagram);
  std::string out = "tangle\n";
  for (const Component& comp : canonical.components) {
    out += component_head(comp.kind, comp.start, comp.stop) + " :";
    for (const Passage& passage : comp.passages) {
      const Crossing& crossing = canonical.crossings.at(passage.crossing);
      out += ' ';
      out += passage.role == Role::Over ? 'O' : 'U';
      out += std::to_string(passage.crossing);
      out += crossing.sign > 0 ? '+' : '-';
    }
    out += '\n';
  }
  return out;
}

std::string serialize_tangle(const SingularTangle& tangle) {
  require_valid_singular(tangle);
  const SingularTangle canonical = relabel_canonical_singular(tangle);
  std::string out = "tangle\n";
  for (const SComponent& comp : canonical.components) {
    out += component_head(comp.kind, comp.start, comp.stop) + " :";
    for (const SPassage& passage : comp.passages) {
      out += ' ';
      switch (passage.role) {
        case SRole::Over:
        case SRole::Under: {
          const Crossing& crossing = canonical.classical.at(passage.crossing);
          out += passage.role == SRole::Over ? 'O' : 'U';
          out += std::to_string(passage.crossing);
          out += crossing.sign > 0 ? '+' : '-';
          break;
        }
        case SRole::P:
        case SRole::Q:
          out += passage.role == SRole::P ? 'P' : 'Q';
          out += std::to_string(passage.crossing);
          out += '*';
          break;
      }
    }
    out += '\n';
  }
  return out;
}

std::string serialize_tangle(const ParsedTangle& parsed) {
  return std::visit([](const auto& value) { return serialize_tangle(value); }, parsed);
}

std::string polynomial_to_text(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [monomial, coeff] : p.terms()) {
    if (first) {
      if (coeff < 0) out += '-';
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    const unsigned long long magnitude =
        coeff < 0 ? static_cast<unsigned long long>(-(coeff + 1)) + 1
                  : static_cast<unsigned long long>(coeff);
    if (monomial.empty()) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += std::to_string(magnitude);
    bool first_factor = true;
    for (const auto& [variable, exponent] : monomial) {
      if (!first_factor) out += '*';
      first_factor = false;
      out += 't' + std::to_string(variable);
      if (exponent != 1) out += '^' + std::to_string(exponent);
    }
  }
  return out;
}

namespace {

struct PolyScanner {
  const std::string& text;
  int pos = 0;

  bool at_end() const { return pos >= static_cast<int>(text.size()); }
  char peek() const { return text[pos]; }
  void skip_spaces() {
    while (!at_end() && (is_space(text[pos]) || text[pos] == '\n')) ++pos;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(1, pos + 1, expected);
  }

  std::int64_t read_digits() {
    const int start = pos;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("digits");
    if (pos - start > 18) fail("a 64-bit integer");
    return std::stoll(text.substr(start, pos - start));
  }
};

}  // namespace

LaurentPolynomial polynomial_from_text(const std::string& text) {
  PolyScanner scan{text};
  LaurentPolynomial result;
  scan.skip_spaces();
  if (scan.at_end()) scan.fail("a polynomial");

  bool first = true;
  while (true) {
    scan.skip_spaces();
    if (scan.at_end()) break;
    std::int64_t sign = 1;
    if (scan.peek() == '+' || scan.peek() == '-') {
      sign = scan.peek() == '-' ? -1 : 1;
      ++scan.pos;
      scan.skip_spaces();
    } else if (!first) {
      scan.fail("+ or - between terms");
    }

    std::int64_t coeff = 1;
    bool saw_number = false;
    if (!scan.at_end() && std::isdigit(static_cast<unsigned char>(scan.peek()))) {
      coeff = scan.read_digits();
      saw_number = true;
    }
    Monomial monomial;
    bool saw_factor = false;
    while (true) {
      scan.skip_spaces();
      if (!scan.at_end() && scan.peek() == '*') {
        ++scan.pos;
        scan.skip_spaces();
      }
      if (scan.at_end() || scan.peek() != 't') break;
      ++scan.pos;
      const std::int64_t variable = scan.read_digits();
      if (variable < 1) scan.fail("a 1-based variable index");
      std::int64_t exponent = 1;
      if (!scan.at_end() && scan.peek() == '^') {
        ++scan.pos;
        std::int64_t esign = 1;
        if (!scan.at_end() && scan.peek() == '-') {
          esign = -1;
          ++scan.pos;
        }
        exponent = esign * scan.read_digits();
      }
      saw_factor = true;
      const std::int64_t total = checked_add(monomial[static_cast<int>(variable)], exponent);
      if (total == 0) {
        monomial.erase(static_cast<int>(variable));
      } else {
        monomial[static_cast<int>(variable)] = total;
      }
    }
    if (!saw_number && !saw_factor) scan.fail("a term");
    result.add_term(monomial, checked_mul(sign, coeff));
    first = false;
  }
  return result;
}

std::string polynomial_to_json(const LaurentPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [monomial, coeff] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [variable, exponent] : monomial) {
      exps[std::to_string(variable)] = exponent;
    }
    terms.push_back({{"coeff", coeff}, {"exps", exps}});
  }
  return terms.dump();
}

LaurentPolynomial polynomial_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw SyntaxError(1, 1, "a JSON polynomial");
  }
  if (!parsed.is_array()) throw SyntaxError(1, 1, "a JSON array of terms");
  LaurentPolynomial result;
  try {
    for (const auto& term : parsed) {
      Monomial monomial;
      for (const auto& [key, value] : term.at("exps").items()) {
        monomial[std::stoi(key)] = value.get<std::int64_t>();
      }
      result.add_term(monomial, term.at("coeff").get<std::int64_t>());
    }
  } catch (const nlohmann::json::exception&) {
    throw SyntaxError(1, 1, "terms with coeff and exps");
  } catch (const std::invalid_argument&) {
    throw SyntaxError(1, 1, "numeric variable indices");
  }
  return result;
}

}  // namespace wriggle
