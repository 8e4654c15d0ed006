#pragma once

// Shared fixtures and seeded generators for the unit and acceptance suites.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "wriggle/codec.hpp"
#include "wriggle/moves.hpp"
#include "wriggle/tangle.hpp"
#include "wriggle/vassiliev.hpp"

namespace wriggle::testsupport {

// Parses codec text, insisting on a classical / singular result.
TangleDiagram diagram(const std::string& text);
SingularTangle singular(const std::string& text);

inline TangleDiagram closed(const std::string& passages) {
  return diagram("tangle\nclosed : " + passages + "\n");
}

// Seeded diagram with 1..max_components components (random closed/long mix)
// and 0..max_crossings crossings.
TangleDiagram random_diagram(int max_components, int max_crossings, std::uint64_t seed);

// `strands` long components all running top to bottom in identity boundary
// order, with `crossings` random crossings.
TangleDiagram random_string_link(int strands, int crossings, std::uint64_t seed);

// A pair (T, U) with connected_sum(T, U) defined: U's top boundary is built
// to mirror T's bottom boundary, directions mix and glue positions are
// shuffled, so the pair is generally not a string-link pair. Neither summand
// puts both ends of a component on the glued boundary.
std::pair<TangleDiagram, TangleDiagram> random_compatible_pair(std::uint64_t seed);

// Random singular tangle with exactly two double points on 1..2 components
// and at most max_classical classical crossings. Double points may join two
// components.
SingularTangle random_two_double_points(int max_classical, std::uint64_t seed);

// Calls fn for every singular tangle with exactly two double points, at most
// max_classical classical crossings and at most two components (closed or
// long, empty components included), up to crossing relabeling, component
// reordering and rotation of closed components. Long-component endpoints are
// fixed canonically; no invariant reads them. Returns the number of
// pairwise-distinct tangles visited.
long for_each_two_double_point(int max_classical,
                               const std::function<void(const SingularTangle&)>& fn);

}  // namespace wriggle::testsupport
