#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wriggle/errors.hpp"

namespace wriggle {

enum class Role { Over, Under };

// One visit of a component through a classical crossing.
struct Passage {
  int crossing = 0;
  Role role = Role::Over;
  friend bool operator==(const Passage&, const Passage&) = default;
};

enum class ComponentKind { Closed, Long };

enum class Side { Top, Bottom };

// Boundary slot of a long component end. position is 1-based along the side.
struct EndPoint {
  Side side = Side::Top;
  int position = 1;
  friend bool operator==(const EndPoint&, const EndPoint&) = default;
};

// Closed components are cyclic sequences, long components run start -> stop
// in orientation order.
struct Component {
  ComponentKind kind = ComponentKind::Closed;
  std::vector<Passage> passages;
  std::optional<EndPoint> start;  // engaged iff kind == Long
  std::optional<EndPoint> stop;
  friend bool operator==(const Component&, const Component&) = default;
};

// (component index, position in its passage sequence), both 0-based.
struct Location {
  int component = 0;
  int position = 0;
  friend bool operator==(const Location&, const Location&) = default;
  friend auto operator<=>(const Location&, const Location&) = default;
};

struct Crossing {
  int id = 0;
  int sign = +1;
  Location over;
  Location under;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct TangleDiagram {
  std::vector<Component> components;
  std::map<int, Crossing> crossings;
  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;
};

enum class ViolationKind {
  MissingMate,
  DuplicateRole,
  SignInconsistency,
  BoundaryMismatch,
};

struct Violation {
  ViolationKind kind = ViolationKind::MissingMate;
  int crossing_id = -1;  // -1 when not tied to a crossing
  int component = -1;    // -1 when not tied to a component
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

std::string to_string(ViolationKind kind);
std::string to_string(const Violation& violation);

// Structurally well-formed text that describes an invalid diagram.
struct SemanticError : Error {
  explicit SemanticError(Violation violation_);
  Violation violation;
};

// Checks all structural invariants; violations are data, not failures.
ValidationReport validate(const TangleDiagram& diagram);

// Throws InvalidDiagramError unless validate(diagram).ok().
void require_valid(const TangleDiagram& diagram);

// Both components of a self-crossing coincide.
struct CrossingClass {
  int over_component = 0;
  int under_component = 0;
  bool is_self() const { return over_component == under_component; }
};

std::map<int, CrossingClass> classify_crossings(const TangleDiagram& diagram);

bool is_self_crossing(const TangleDiagram& diagram, int crossing_id);

// Reverses the orientation of one component: its passage sequence flips,
// its ends swap, mixed crossings touching it flip sign, self-crossings keep
// theirs.
TangleDiagram reverse_orientation(const TangleDiagram& diagram, int component);

// Turns a one-component long diagram into the closed diagram with the same
// passage sequence.
TangleDiagram closure(const TangleDiagram& diagram);

// Records how the components of T and U were matched by connected_sum.
// sigma maps each glued long component of T to its partner in U; the two
// component maps send original component indices to result indices (glued
// pairs share one result index, which carries the variable identification
// t_i = u_sigma(i)).
struct ConnectedSumPlan {
  std::map<int, int> sigma;
  std::map<int, int> left_component_map;
  std::map<int, int> right_component_map;
  int right_id_offset = 0;  // U's crossing ids were shifted by this much
};

struct ConnectedSum {
  TangleDiagram diagram;
  ConnectedSumPlan plan;
};

// Stacks T above U, gluing T's bottom boundary to U's top boundary.
ConnectedSum connected_sum(const TangleDiagram& top, const TangleDiagram& bottom);

// Renumbers crossing ids 1..k in first-encounter order; idempotent.
TangleDiagram relabel_canonical(const TangleDiagram& diagram);

// Direction of a long end as seen from the boundary: a component flows into
// the tangle at its start and out at its stop.
enum class EndDirection { In, Out };

struct BoundaryEntry {
  int component = 0;
  bool is_start = false;
  int position = 0;
  EndDirection direction() const { return is_start ? EndDirection::In : EndDirection::Out; }
};

// Ends sitting on one side, sorted by position.
std::vector<BoundaryEntry> boundary_word(const TangleDiagram& diagram, Side side);

// Rebuilds the crossing map of a diagram whose components and per-id signs
// are known. Throws InvalidDiagramError if the passages do not pair up.
TangleDiagram assemble_diagram(std::vector<Component> components,
                               const std::map<int, int>& signs);

}  // namespace wriggle
