#pragma once

#include <cstdint>
#include <set>

#include "wriggle/polynomial.hpp"
#include "wriggle/tangle.hpp"

namespace wriggle {

// Result of orientedly smoothing one self-crossing: the surviving passages of
// the smoothed component, split into the two strands of the resulting
// two-component object. piece1 is the strand that arrives at the Under
// passage (the dotted strand); passage order inside each piece follows the
// traversal order of the smoothed strand.
struct SmoothingBipartition {
  std::vector<Location> piece1;
  std::vector<Location> piece2;
  ComponentKind piece1_kind = ComponentKind::Closed;
  ComponentKind piece2_kind = ComponentKind::Closed;
};

std::int64_t writhe(const TangleDiagram& diagram);

// Sum of signs over crossings passing Over on component a and Under on b.
std::int64_t vlk(const TangleDiagram& diagram, int a, int b);

// vlk(a, b) - vlk(b, a); antisymmetric in (a, b).
std::int64_t wriggle_number(const TangleDiagram& diagram, int a, int b);

SmoothingBipartition smooth_self_crossing(const TangleDiagram& diagram, int crossing_id);

// Materializes the two-component diagram L_c obtained by smoothing:
// component 0 is piece1, component 1 is piece2; every crossing not living
// entirely on the surviving passages is dropped.
TangleDiagram smoothing_diagram(const TangleDiagram& diagram, int crossing_id);

// W(L_c) via the materialized diagram and wriggle_number.
std::int64_t wriggle_contribution_constructive(const TangleDiagram& diagram, int crossing_id);
// W(L_c) via signed chord counting against piece1.
std::int64_t wriggle_contribution_chord_count(const TangleDiagram& diagram, int crossing_id);
// Both paths, asserted equal; a mismatch is always an internal bug.
std::int64_t wriggle_contribution(const TangleDiagram& diagram, int crossing_id);

// Sum over components i and self-crossings c of T_i of sgn(c) (t_i^{W(L_c)} - 1),
// with t_i indexed 1-based by component.
LaurentPolynomial self_crossing_wriggle(const TangleDiagram& diagram);

}  // namespace wriggle
