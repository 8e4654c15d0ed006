#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wriggle/invariants.hpp"
#include "wriggle/tangle.hpp"

namespace wriggle {

// Passage roles of a singular (double-point) tangle. P marks the passage
// that goes over in the positive resolution of its crossing, Q its mate.
enum class SRole { Over, Under, P, Q };

struct SPassage {
  int crossing = 0;
  SRole role = SRole::Over;
  friend bool operator==(const SPassage&, const SPassage&) = default;
};

struct SComponent {
  ComponentKind kind = ComponentKind::Closed;
  std::vector<SPassage> passages;
  std::optional<EndPoint> start;
  std::optional<EndPoint> stop;
  friend bool operator==(const SComponent&, const SComponent&) = default;
};

struct SingularCrossing {
  int id = 0;
  Location passage_p;
  Location passage_q;
  friend bool operator==(const SingularCrossing&, const SingularCrossing&) = default;
};

// A tangle diagram with transverse double points. Classical and singular
// crossing ids share one number space and stay disjoint.
struct SingularTangle {
  std::vector<SComponent> components;
  std::map<int, Crossing> classical;
  std::map<int, SingularCrossing> singular;
  friend bool operator==(const SingularTangle&, const SingularTangle&) = default;
};

// Embeds a classical diagram as a singular tangle with no double points.
SingularTangle as_singular(const TangleDiagram& diagram);

ValidationReport validate_singular(const SingularTangle& tangle);
void require_valid_singular(const SingularTangle& tangle);

// Rebuilds the crossing maps from passage sequences plus per-classical-id
// signs; singular ids carry no sign.
SingularTangle assemble_singular(std::vector<SComponent> components,
                                 const std::map<int, int>& signs);

SingularTangle relabel_canonical_singular(const SingularTangle& tangle);

// +1 resolves a double point with P over (sign +1); -1 swaps the roles and
// takes sign -1 (a crossing switch). The assignment must cover every
// singular id.
using ResolutionAssignment = std::map<int, int>;

TangleDiagram resolve(const SingularTangle& tangle, const ResolutionAssignment& assignment);

// Resolves one double point, keeping the others singular.
SingularTangle resolve_one(const SingularTangle& tangle, int singular_id, int value);

// Vassiliev extension: alternating-sign sum of self_crossing_wriggle over
// all 2^k resolutions.
LaurentPolynomial extension(const SingularTangle& tangle);

struct Witness {
  SingularTangle tangle;
  LaurentPolynomial value;
};

// Searches one-component closed tangles carrying exactly one double point
// and at most max_classical extra crossings for nonzero extensions. Without
// a seed the search is exhaustive up to cyclic rotation; with a seed it
// samples `samples` random candidates instead. max_components is accepted
// for forward compatibility; the enumeration itself is one-component, which
// already realizes every attainable extension value.
std::vector<Witness> order_witness_search(int max_classical, int max_components,
                                          std::optional<std::uint64_t> seed = std::nullopt,
                                          int samples = 2000);

}  // namespace wriggle
