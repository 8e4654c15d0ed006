#include "wriggle/invariants.hpp"

#include <algorithm>
#include <string>

namespace wriggle {

std::int64_t writhe(const TangleDiagram& diagram) {
  require_valid(diagram);
  std::int64_t total = 0;
  for (const auto& [id, crossing] : diagram.crossings) total += crossing.sign;
  return total;
}

namespace {

void check_pair(const TangleDiagram& diagram, int a, int b) {
  const int n = static_cast<int>(diagram.components.size());
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::out_of_range("component index out of range");
  }
  if (a == b) throw std::invalid_argument("vlk needs two distinct components");
}

}  // namespace

std::int64_t vlk(const TangleDiagram& diagram, int a, int b) {
  require_valid(diagram);
  check_pair(diagram, a, b);
  std::int64_t total = 0;
  for (const auto& [id, crossing] : diagram.crossings) {
    if (crossing.over.component == a && crossing.under.component == b) total += crossing.sign;
  }
  return total;
}

std::int64_t wriggle_number(const TangleDiagram& diagram, int a, int b) {
  return vlk(diagram, a, b) - vlk(diagram, b, a);
}

SmoothingBipartition smooth_self_crossing(const TangleDiagram& diagram, int crossing_id) {
  require_valid(diagram);
  auto it = diagram.crossings.find(crossing_id);
  if (it == diagram.crossings.end() || !is_self_crossing(diagram, crossing_id)) {
    throw NotASelfCrossingError("crossing " + std::to_string(crossing_id) +
                                " is not a self-crossing");
  }
  const Crossing& crossing = it->second;
  const int k = crossing.over.component;
  const Component& comp = diagram.components[k];
  const int n = static_cast<int>(comp.passages.size());
  const int over_pos = crossing.over.position;
  const int under_pos = crossing.under.position;

  SmoothingBipartition bipartition;
  if (comp.kind == ComponentKind::Closed) {
    // The arc from the over passage to the under passage arrives at the
    // under passage, so it carries the dot.
    for (int p = (over_pos + 1) % n; p != under_pos; p = (p + 1) % n) {
      bipartition.piece1.push_back({k, p});
    }
    for (int p = (under_pos + 1) % n; p != over_pos; p = (p + 1) % n) {
      bipartition.piece2.push_back({k, p});
    }
    bipartition.piece1_kind = ComponentKind::Closed;
    bipartition.piece2_kind = ComponentKind::Closed;
    return bipartition;
  }

  const int first = std::min(over_pos, under_pos);
  const int second = std::max(over_pos, under_pos);
  std::vector<Location> middle;
  for (int p = first + 1; p < second; ++p) middle.push_back({k, p});
  std::vector<Location> outer;
  for (int p = 0; p < first; ++p) outer.push_back({k, p});
  for (int p = second + 1; p < n; ++p) outer.push_back({k, p});

  // The incoming understrand carries the dot: the middle piece arrives at
  // position `second`, the outer piece at position `first`.
  if (under_pos == second) {
    bipartition.piece1 = std::move(middle);
    bipartition.piece1_kind = ComponentKind::Closed;
    bipartition.piece2 = std::move(outer);
    bipartition.piece2_kind = ComponentKind::Long;
  } else {
    bipartition.piece1 = std::move(outer);
    bipartition.piece1_kind = ComponentKind::Long;
    bipartition.piece2 = std::move(middle);
    bipartition.piece2_kind = ComponentKind::Closed;
  }
  return bipartition;
}

TangleDiagram smoothing_diagram(const TangleDiagram& diagram, int crossing_id) {
  const SmoothingBipartition bipartition = smooth_self_crossing(diagram, crossing_id);
  const int k = diagram.crossings.at(crossing_id).over.component;
  const Component& source = diagram.components[k];

  std::set<Location> kept(bipartition.piece1.begin(), bipartition.piece1.end());
  kept.insert(bipartition.piece2.begin(), bipartition.piece2.end());

  auto surviving = [&](int id) {
    const Crossing& crossing = diagram.crossings.at(id);
    return id != crossing_id && kept.count(crossing.over) && kept.count(crossing.under);
  };

  auto build = [&](const std::vector<Location>& piece, ComponentKind kind) {
    Component comp;
    comp.kind = kind;
    for (const Location& loc : piece) {
      const Passage& passage = source.passages[loc.position];
      if (surviving(passage.crossing)) comp.passages.push_back(passage);
    }
    return comp;
  };

  Component piece1 = build(bipartition.piece1, bipartition.piece1_kind);
  Component piece2 = build(bipartition.piece2, bipartition.piece2_kind);
  if (bipartition.piece1_kind == ComponentKind::Long) {
    piece1.start = EndPoint{source.start->side, 1};
    piece1.stop = EndPoint{source.stop->side, source.start->side == source.stop->side ? 2 : 1};
  }
  if (bipartition.piece2_kind == ComponentKind::Long) {
    piece2.start = EndPoint{source.start->side, 1};
    piece2.stop = EndPoint{source.stop->side, source.start->side == source.stop->side ? 2 : 1};
  }

  std::map<int, int> signs;
  for (const auto& [id, crossing] : diagram.crossings) {
    if (surviving(id)) signs[id] = crossing.sign;
  }
  return assemble_diagram({std::move(piece1), std::move(piece2)}, signs);
}

std::int64_t wriggle_contribution_constructive(const TangleDiagram& diagram, int crossing_id) {
  return wriggle_number(smoothing_diagram(diagram, crossing_id), 0, 1);
}

std::int64_t wriggle_contribution_chord_count(const TangleDiagram& diagram, int crossing_id) {
  const SmoothingBipartition bipartition = smooth_self_crossing(diagram, crossing_id);
  const int k = diagram.crossings.at(crossing_id).over.component;
  const std::set<Location> dotted(bipartition.piece1.begin(), bipartition.piece1.end());

  std::int64_t total = 0;
  for (const auto& [id, crossing] : diagram.crossings) {
    if (id == crossing_id) continue;
    if (crossing.over.component != k || crossing.under.component != k) continue;
    const bool over_in = dotted.count(crossing.over) != 0;
    const bool under_in = dotted.count(crossing.under) != 0;
    if (over_in == under_in) continue;
    total += over_in ? crossing.sign : -crossing.sign;
  }
  return total;
}

std::int64_t wriggle_contribution(const TangleDiagram& diagram, int crossing_id) {
  const std::int64_t constructive = wriggle_contribution_constructive(diagram, crossing_id);
  const std::int64_t chords = wriggle_contribution_chord_count(diagram, crossing_id);
  if (constructive != chords) {
    throw OracleMismatchError("wriggle contribution paths disagree on crossing " +
                              std::to_string(crossing_id) + ": " +
                              std::to_string(constructive) + " vs " + std::to_string(chords));
  }
  return constructive;
}

LaurentPolynomial self_crossing_wriggle(const TangleDiagram& diagram) {
  require_valid(diagram);
  LaurentPolynomial result;
  for (const auto& [id, crossing] : diagram.crossings) {
    if (crossing.over.component != crossing.under.component) continue;
    const std::int64_t w = wriggle_contribution(diagram, id);
    if (w == 0) continue;  // sgn (t^0 - 1) = 0
    const int variable = crossing.over.component + 1;
    result.add_term({{variable, w}}, crossing.sign);
    result.add_term({}, -crossing.sign);
  }
  return result;
}

}  // namespace wriggle
