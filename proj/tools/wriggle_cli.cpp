// Command-line front-end for the wriggle library. Exit codes: 0 success,
// 1 domain error, 2 usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wriggle/codec.hpp"
#include "wriggle/invariants.hpp"
#include "wriggle/moves.hpp"
#include "wriggle/vassiliev.hpp"

namespace {

// Thrown for problems that are the caller's fault (unreadable file, bad
// flag combination); mapped to exit code 2 like CLI11 parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

wriggle::TangleDiagram read_classical(const std::string& path) {
  wriggle::ParsedTangle parsed = wriggle::parse_tangle(read_input(path));
  if (std::holds_alternative<wriggle::SingularTangle>(parsed)) {
    throw wriggle::Error("this command needs a classical diagram, not a singular one");
  }
  return std::get<wriggle::TangleDiagram>(parsed);
}

wriggle::SingularTangle read_singular(const std::string& path) {
  wriggle::ParsedTangle parsed = wriggle::parse_tangle(read_input(path));
  if (auto* diagram = std::get_if<wriggle::TangleDiagram>(&parsed)) {
    return wriggle::as_singular(*diagram);
  }
  return std::get<wriggle::SingularTangle>(parsed);
}

std::string polynomial_output(const wriggle::LaurentPolynomial& p, const std::string& format) {
  return (format == "json" ? wriggle::polynomial_to_json(p) : wriggle::polynomial_to_text(p)) +
         "\n";
}

int run_validate(const std::string& input) {
  const std::string text = read_input(input);
  wriggle::ParseOutcome outcome = wriggle::parse_tangle_lenient(text);
  if (!outcome.report.ok()) {
    for (const wriggle::Violation& violation : outcome.report.violations) {
      std::cout << wriggle::to_string(violation) << "\n";
    }
    return 1;
  }
  if (auto* tangle = std::get_if<wriggle::SingularTangle>(&outcome.value)) {
    std::cout << "ok components=" << tangle->components.size()
              << " crossings=" << tangle->classical.size()
              << " singular=" << tangle->singular.size() << "\n";
  } else {
    auto& diagram = std::get<wriggle::TangleDiagram>(outcome.value);
    std::cout << "ok components=" << diagram.components.size()
              << " crossings=" << diagram.crossings.size() << "\n";
  }
  return 0;
}

int run_invariant(const std::string& input, const std::string& which, int a, int b,
                  const std::string& format) {
  const wriggle::TangleDiagram diagram = read_classical(input);
  if (which == "selfwriggle") {
    std::cout << polynomial_output(wriggle::self_crossing_wriggle(diagram), format);
  } else if (which == "writhe") {
    std::cout << wriggle::writhe(diagram) << "\n";
  } else if (which == "vlk" || which == "wriggle") {
    if (a < 0 || b < 0) {
      throw UsageError("--which " + which + " needs -a and -b component indices");
    }
    const std::int64_t value = which == "vlk" ? wriggle::vlk(diagram, a, b)
                                              : wriggle::wriggle_number(diagram, a, b);
    std::cout << value << "\n";
  } else {
    throw UsageError("unknown invariant: " + which);
  }
  return 0;
}

int run_scramble(const std::string& input, int moves, std::uint64_t seed) {
  const wriggle::TangleDiagram diagram = read_classical(input);
  std::cout << wriggle::serialize_tangle(wriggle::scramble(diagram, moves, seed));
  return 0;
}

int run_vassiliev(const std::string& input, const std::string& format) {
  const wriggle::SingularTangle tangle = read_singular(input);
  std::cout << polynomial_output(wriggle::extension(tangle), format);
  return 0;
}

// One line per witness: its single component line plus the extension value.
std::string witness_line(const wriggle::Witness& witness) {
  std::string serialized = wriggle::serialize_tangle(witness.tangle);
  serialized.erase(0, serialized.find('\n') + 1);  // drop the header
  if (!serialized.empty() && serialized.back() == '\n') serialized.pop_back();
  std::replace(serialized.begin(), serialized.end(), '\n', ';');
  return serialized + " => " + wriggle::polynomial_to_text(witness.value);
}

int run_witness_search(int bound, int components, const std::string& target,
                       std::optional<std::uint64_t> seed, int samples) {
  const std::vector<wriggle::Witness> witnesses =
      wriggle::order_witness_search(bound, components, seed, samples);
  std::vector<std::string> lines;
  for (const wriggle::Witness& witness : witnesses) lines.push_back(witness_line(witness));
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  for (const std::string& line : lines) std::cout << line << "\n";

  if (!target.empty()) {
    const wriggle::LaurentPolynomial wanted = wriggle::polynomial_from_text(target);
    const bool attained = std::any_of(
        witnesses.begin(), witnesses.end(),
        [&](const wriggle::Witness& witness) { return witness.value == wanted; });
    if (attained) {
      std::cout << "target " << wriggle::polynomial_to_text(wanted) << ": attained\n";
    } else {
      std::size_t smallest = SIZE_MAX;
      for (const wriggle::Witness& witness : witnesses) {
        smallest = std::min(smallest, static_cast<std::size_t>(witness.tangle.classical.size()));
      }
      std::cout << "target " << wriggle::polynomial_to_text(wanted) << ": not attained";
      if (!witnesses.empty()) {
        std::cout << "; smallest nonzero witness has " << smallest << " classical crossings";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_connect(const std::string& top_path, const std::string& bottom_path) {
  const wriggle::TangleDiagram top = read_classical(top_path);
  const wriggle::TangleDiagram bottom = read_classical(bottom_path);
  const wriggle::ConnectedSum sum = wriggle::connected_sum(top, bottom);
  std::cout << "# sigma:";
  for (const auto& [left, right] : sum.plan.sigma) std::cout << " " << left << ":" << right;
  std::cout << "\n" << wriggle::serialize_tangle(sum.diagram);
  return 0;
}

int run_reverse(const std::string& input, int component) {
  const wriggle::TangleDiagram diagram = read_classical(input);
  std::cout << wriggle::serialize_tangle(wriggle::reverse_orientation(diagram, component));
  return 0;
}

int run_closure(const std::string& input) {
  const wriggle::TangleDiagram diagram = read_classical(input);
  std::cout << wriggle::serialize_tangle(wriggle::closure(diagram));
  return 0;
}

int run_random(int closed, int long_count, int crossings, std::uint64_t seed) {
  const wriggle::TangleDiagram diagram =
      wriggle::random_tangle({closed, long_count, crossings}, seed);
  std::cout << wriggle::serialize_tangle(diagram);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss-code virtual tangles: wriggle polynomial, moves, Vassiliev extension"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string second_input = "-";
  std::string which = "selfwriggle";
  std::string format = "text";
  std::string target;
  int component_a = -1;
  int component_b = -1;
  int moves = 20;
  int bound = 3;
  int max_components = 1;
  int samples = 2000;
  int component = 0;
  int closed_count = 1;
  int long_count = 0;
  int crossing_count = 0;
  std::uint64_t seed = 1;
  bool seed_given = false;

  auto* cmd_validate = app.add_subcommand("validate", "check a tangle file");
  cmd_validate->add_option("input", input, "tangle file, or - for stdin")->required();

  auto* cmd_invariant = app.add_subcommand("invariant", "compute an invariant");
  cmd_invariant->add_option("input", input)->required();
  cmd_invariant->add_option("--which", which, "selfwriggle|writhe|vlk|wriggle");
  cmd_invariant->add_option("-a", component_a, "first component index (vlk/wriggle)");
  cmd_invariant->add_option("-b", component_b, "second component index (vlk/wriggle)");
  cmd_invariant->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmd_scramble = app.add_subcommand("scramble", "apply random Reidemeister moves");
  cmd_scramble->add_option("input", input)->required();
  cmd_scramble->add_option("--moves", moves, "number of moves");
  cmd_scramble->add_option("--seed", seed, "PRNG seed");

  auto* cmd_vassiliev = app.add_subcommand("vassiliev", "Vassiliev extension of a tangle");
  cmd_vassiliev->add_option("input", input)->required();
  cmd_vassiliev->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_witness = app.add_subcommand("witness-search", "hunt 1-double-point witnesses");
  cmd_witness->add_option("--bound", bound, "max classical crossings");
  cmd_witness->add_option("--components", max_components, "max components");
  cmd_witness->add_option("--target", target, "report whether this value is attained");
  auto* seed_opt = cmd_witness->add_option("--seed", seed, "sample randomly with this seed");
  cmd_witness->add_option("--samples", samples, "random sample count");

  auto* cmd_connect = app.add_subcommand("connect", "stack two tangles");
  cmd_connect->add_option("top", input)->required();
  cmd_connect->add_option("bottom", second_input)->required();

  auto* cmd_reverse = app.add_subcommand("reverse", "reverse one component");
  cmd_reverse->add_option("input", input)->required();
  cmd_reverse->add_option("--component", component, "component index");

  auto* cmd_closure = app.add_subcommand("closure", "close a one-component long diagram");
  cmd_closure->add_option("input", input)->required();

  auto* cmd_random = app.add_subcommand("random", "generate a random diagram");
  cmd_random->add_option("--closed", closed_count, "closed component count");
  cmd_random->add_option("--long", long_count, "long component count");
  cmd_random->add_option("--crossings", crossing_count, "crossing count");
  cmd_random->add_option("--seed", seed, "PRNG seed");

  try {
    app.parse(argc, argv);
    seed_given = seed_opt->count() > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_validate->parsed()) return run_validate(input);
    if (cmd_invariant->parsed()) {
      return run_invariant(input, which, component_a, component_b, format);
    }
    if (cmd_scramble->parsed()) return run_scramble(input, moves, seed);
    if (cmd_vassiliev->parsed()) return run_vassiliev(input, format);
    if (cmd_witness->parsed()) {
      return run_witness_search(bound, max_components, target,
                                seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt,
                                samples);
    }
    if (cmd_connect->parsed()) return run_connect(input, second_input);
    if (cmd_reverse->parsed()) return run_reverse(input, component);
    if (cmd_closure->parsed()) return run_closure(input);
    if (cmd_random->parsed()) {
      return run_random(closed_count, long_count, crossing_count, seed);
    }
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wriggle::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wriggle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
