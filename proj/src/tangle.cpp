#include "wriggle/tangle.hpp"

#include <algorithm>
#include <sstream>

namespace wriggle {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingMate: return "MissingMate";
    case ViolationKind::DuplicateRole: return "DuplicateRole";
    case ViolationKind::SignInconsistency: return "SignInconsistency";
    case ViolationKind::BoundaryMismatch: return "BoundaryMismatch";
  }
  return "?";
}

std::string to_string(const Violation& violation) {
  std::ostringstream out;
  out << to_string(violation.kind);
  if (violation.crossing_id >= 0) out << " crossing=" << violation.crossing_id;
  if (violation.component >= 0) out << " component=" << violation.component;
  if (!violation.detail.empty()) out << " (" << violation.detail << ")";
  return out.str();
}

SemanticError::SemanticError(Violation violation_)
    : Error("semantic error: " + to_string(violation_)), violation(std::move(violation_)) {}

namespace {

struct Occurrence {
  Location location;
  Role role;
};

void check_boundary(const TangleDiagram& diagram, ValidationReport& report) {
  std::vector<int> engaged;
  for (int i = 0; i < static_cast<int>(diagram.components.size()); ++i) {
    const Component& comp = diagram.components[i];
    const bool is_long = comp.kind == ComponentKind::Long;
    if (is_long != (comp.start.has_value() && comp.stop.has_value())) {
      report.violations.push_back({ViolationKind::BoundaryMismatch, -1, i,
                                   is_long ? "long component without two ends"
                                           : "closed component with ends"});
      continue;
    }
    if (is_long) engaged.push_back(i);
  }
  for (Side side : {Side::Top, Side::Bottom}) {
    std::vector<std::pair<int, int>> slots;  // (position, component)
    for (int i : engaged) {
      const Component& comp = diagram.components[i];
      for (const EndPoint& end : {*comp.start, *comp.stop}) {
        if (end.side == side) slots.emplace_back(end.position, i);
      }
    }
    std::sort(slots.begin(), slots.end());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k].first != static_cast<int>(k) + 1) {
        report.violations.push_back(
            {ViolationKind::BoundaryMismatch, -1, slots[k].second,
             "boundary positions must be 1..k without repeats"});
        break;
      }
    }
  }
}

}  // namespace

ValidationReport validate(const TangleDiagram& diagram) {
  ValidationReport report;

  std::map<int, std::vector<Occurrence>> by_id;
  for (int i = 0; i < static_cast<int>(diagram.components.size()); ++i) {
    const auto& passages = diagram.components[i].passages;
    for (int p = 0; p < static_cast<int>(passages.size()); ++p) {
      by_id[passages[p].crossing].push_back({{i, p}, passages[p].role});
    }
  }

  for (const auto& [id, occurrences] : by_id) {
    if (id <= 0) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "crossing id must be positive"});
      continue;
    }
    int overs = 0;
    int unders = 0;
    for (const Occurrence& occ : occurrences) {
      (occ.role == Role::Over ? overs : unders)++;
    }
    if (overs > 1 || unders > 1) {
      report.violations.push_back({ViolationKind::DuplicateRole, id, -1,
                                   "crossing visited twice in the same role"});
      continue;
    }
    if (overs + unders != 2) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "crossing needs one over and one under passage"});
      continue;
    }

    auto it = diagram.crossings.find(id);
    if (it == diagram.crossings.end()) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "no crossing record for this id"});
      continue;
    }
    const Crossing& crossing = it->second;
    if (crossing.sign != 1 && crossing.sign != -1) {
      report.violations.push_back(
          {ViolationKind::SignInconsistency, id, -1, "sign must be +1 or -1"});
    }
    for (const Occurrence& occ : occurrences) {
      const Location expected = occ.role == Role::Over ? crossing.over : crossing.under;
      if (!(expected == occ.location)) {
        report.violations.push_back({ViolationKind::DuplicateRole, id, -1,
                                     "crossing record disagrees with passage sequence"});
        break;
      }
    }
  }

  for (const auto& [id, crossing] : diagram.crossings) {
    if (!by_id.count(id)) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "crossing record without passages"});
    }
    (void)crossing;
  }

  check_boundary(diagram, report);
  return report;
}

void require_valid(const TangleDiagram& diagram) {
  ValidationReport report = validate(diagram);
  if (!report.ok()) {
    throw InvalidDiagramError("invalid diagram: " + to_string(report.violations.front()));
  }
}

std::map<int, CrossingClass> classify_crossings(const TangleDiagram& diagram) {
  require_valid(diagram);
  std::map<int, CrossingClass> classes;
  for (const auto& [id, crossing] : diagram.crossings) {
    classes[id] = {crossing.over.component, crossing.under.component};
  }
  return classes;
}

bool is_self_crossing(const TangleDiagram& diagram, int crossing_id) {
  auto it = diagram.crossings.find(crossing_id);
  if (it == diagram.crossings.end()) return false;
  return it->second.over.component == it->second.under.component;
}

TangleDiagram assemble_diagram(std::vector<Component> components,
                               const std::map<int, int>& signs) {
  TangleDiagram diagram;
  diagram.components = std::move(components);
  for (int i = 0; i < static_cast<int>(diagram.components.size()); ++i) {
    const auto& passages = diagram.components[i].passages;
    for (int p = 0; p < static_cast<int>(passages.size()); ++p) {
      const Passage& passage = passages[p];
      Crossing& crossing = diagram.crossings[passage.crossing];
      crossing.id = passage.crossing;
      auto it = signs.find(passage.crossing);
      if (it == signs.end()) {
        throw InvalidDiagramError("no sign for crossing " + std::to_string(passage.crossing));
      }
      crossing.sign = it->second;
      (passage.role == Role::Over ? crossing.over : crossing.under) = {i, p};
    }
  }
  ValidationReport report = validate(diagram);
  if (!report.ok()) {
    throw InvalidDiagramError("assembled diagram is invalid: " +
                              to_string(report.violations.front()));
  }
  return diagram;
}

namespace {

std::map<int, int> sign_map(const TangleDiagram& diagram) {
  std::map<int, int> signs;
  for (const auto& [id, crossing] : diagram.crossings) signs[id] = crossing.sign;
  return signs;
}

}  // namespace

TangleDiagram reverse_orientation(const TangleDiagram& diagram, int component) {
  require_valid(diagram);
  if (component < 0 || component >= static_cast<int>(diagram.components.size())) {
    throw std::out_of_range("component index " + std::to_string(component) + " out of range");
  }

  std::vector<Component> components = diagram.components;
  Component& target = components[component];
  std::reverse(target.passages.begin(), target.passages.end());
  std::swap(target.start, target.stop);

  std::map<int, int> signs = sign_map(diagram);
  for (const auto& [id, crossing] : diagram.crossings) {
    const bool over_hits = crossing.over.component == component;
    const bool under_hits = crossing.under.component == component;
    if (over_hits != under_hits) signs[id] = -crossing.sign;
  }
  return assemble_diagram(std::move(components), signs);
}

TangleDiagram closure(const TangleDiagram& diagram) {
  require_valid(diagram);
  if (diagram.components.size() != 1 ||
      diagram.components[0].kind != ComponentKind::Long) {
    throw UnsupportedClosureError("closure needs exactly one long component");
  }
  std::vector<Component> components = diagram.components;
  components[0].kind = ComponentKind::Closed;
  components[0].start.reset();
  components[0].stop.reset();
  return assemble_diagram(std::move(components), sign_map(diagram));
}

std::vector<BoundaryEntry> boundary_word(const TangleDiagram& diagram, Side side) {
  std::vector<BoundaryEntry> word;
  for (int i = 0; i < static_cast<int>(diagram.components.size()); ++i) {
    const Component& comp = diagram.components[i];
    if (comp.kind != ComponentKind::Long) continue;
    if (comp.start && comp.start->side == side) word.push_back({i, true, comp.start->position});
    if (comp.stop && comp.stop->side == side) word.push_back({i, false, comp.stop->position});
  }
  std::sort(word.begin(), word.end(),
            [](const BoundaryEntry& a, const BoundaryEntry& b) { return a.position < b.position; });
  return word;
}

ConnectedSum connected_sum(const TangleDiagram& top, const TangleDiagram& bottom) {
  require_valid(top);
  require_valid(bottom);

  const auto glue_top = boundary_word(top, Side::Bottom);
  const auto glue_bottom = boundary_word(bottom, Side::Top);
  if (glue_top.size() != glue_bottom.size()) {
    throw BoundaryMismatchError("glued boundaries have " + std::to_string(glue_top.size()) +
                                " and " + std::to_string(glue_bottom.size()) + " endpoints");
  }
  for (std::size_t k = 0; k < glue_top.size(); ++k) {
    if (glue_top[k].direction() == glue_bottom[k].direction()) {
      throw BoundaryMismatchError("orientations clash at glued position " +
                                  std::to_string(k + 1));
    }
  }
  for (const BoundaryEntry& entry : glue_top) {
    const Component& comp = top.components[entry.component];
    if (comp.start->side == Side::Bottom && comp.stop->side == Side::Bottom) {
      throw CupCapForbiddenError("top tangle component " + std::to_string(entry.component) +
                                 " has both ends on the glued boundary");
    }
  }
  for (const BoundaryEntry& entry : glue_bottom) {
    const Component& comp = bottom.components[entry.component];
    if (comp.start->side == Side::Top && comp.stop->side == Side::Top) {
      throw CupCapForbiddenError("bottom tangle component " + std::to_string(entry.component) +
                                 " has both ends on the glued boundary");
    }
  }

  int max_id = 0;
  for (const auto& [id, crossing] : top.crossings) max_id = std::max(max_id, id);
  ConnectedSumPlan plan;
  plan.right_id_offset = max_id;

  auto shift = [&](const std::vector<Passage>& passages) {
    std::vector<Passage> shifted = passages;
    for (Passage& p : shifted) p.crossing += plan.right_id_offset;
    return shifted;
  };

  std::map<int, int> signs = sign_map(top);
  for (const auto& [id, crossing] : bottom.crossings) {
    signs[id + plan.right_id_offset] = crossing.sign;
  }

  // Partner of each glued component, looked up from the shared position.
  std::map<int, std::pair<int, bool>> glued;  // top comp -> (bottom comp, top flows out)
  for (std::size_t k = 0; k < glue_top.size(); ++k) {
    glued[glue_top[k].component] = {glue_bottom[k].component, !glue_top[k].is_start};
    plan.sigma[glue_top[k].component] = glue_bottom[k].component;
  }

  std::vector<Component> components;
  for (int i = 0; i < static_cast<int>(top.components.size()); ++i) {
    const Component& t = top.components[i];
    auto it = glued.find(i);
    if (it == glued.end()) {
      components.push_back(t);
      plan.left_component_map[i] = static_cast<int>(components.size()) - 1;
      continue;
    }
    const Component& u = bottom.components[it->second.first];
    Component merged;
    merged.kind = ComponentKind::Long;
    if (it->second.second) {
      // Downward strand: traverse T's part first, then U's.
      merged.passages = t.passages;
      const auto tail = shift(u.passages);
      merged.passages.insert(merged.passages.end(), tail.begin(), tail.end());
      merged.start = t.start;
      merged.stop = u.stop;
    } else {
      merged.passages = shift(u.passages);
      merged.passages.insert(merged.passages.end(), t.passages.begin(), t.passages.end());
      merged.start = u.start;
      merged.stop = t.stop;
    }
    components.push_back(std::move(merged));
    plan.left_component_map[i] = static_cast<int>(components.size()) - 1;
    plan.right_component_map[it->second.first] = static_cast<int>(components.size()) - 1;
  }
  std::vector<int> glued_bottom_components;
  for (const auto& [t_comp, u_comp] : plan.sigma) glued_bottom_components.push_back(u_comp);
  for (int j = 0; j < static_cast<int>(bottom.components.size()); ++j) {
    if (std::find(glued_bottom_components.begin(), glued_bottom_components.end(), j) !=
        glued_bottom_components.end()) {
      continue;
    }
    Component u = bottom.components[j];
    u.passages = shift(u.passages);
    components.push_back(std::move(u));
    plan.right_component_map[j] = static_cast<int>(components.size()) - 1;
  }

  ConnectedSum result{assemble_diagram(std::move(components), signs), plan};

  // The stacking must not invent crossings between the two summands: every
  // result crossing is one summand's crossing, sign included.
  for (const auto& [id, crossing] : result.diagram.crossings) {
    const bool from_bottom = id > plan.right_id_offset;
    const TangleDiagram& source = from_bottom ? bottom : top;
    auto it = source.crossings.find(from_bottom ? id - plan.right_id_offset : id);
    if (it == source.crossings.end() || it->second.sign != crossing.sign) {
      throw Error("connected sum produced a crossing from neither summand");
    }
  }
  return result;
}

TangleDiagram relabel_canonical(const TangleDiagram& diagram) {
  std::map<int, int> mapping;
  int next = 1;
  for (const Component& comp : diagram.components) {
    for (const Passage& passage : comp.passages) {
      if (!mapping.count(passage.crossing)) mapping[passage.crossing] = next++;
    }
  }
  TangleDiagram result;
  result.components = diagram.components;
  for (Component& comp : result.components) {
    for (Passage& passage : comp.passages) passage.crossing = mapping.at(passage.crossing);
  }
  for (const auto& [id, crossing] : diagram.crossings) {
    auto it = mapping.find(id);
    if (it == mapping.end()) continue;  // dangling records dropped
    Crossing renamed = crossing;
    renamed.id = it->second;
    result.crossings[it->second] = renamed;
  }
  return result;
}

}  // namespace wriggle
