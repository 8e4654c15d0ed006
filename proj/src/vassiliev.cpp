#include "wriggle/vassiliev.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "wriggle/moves.hpp"

namespace wriggle {

SingularTangle as_singular(const TangleDiagram& diagram) {
  require_valid(diagram);
  SingularTangle tangle;
  for (const Component& comp : diagram.components) {
    SComponent scomp;
    scomp.kind = comp.kind;
    scomp.start = comp.start;
    scomp.stop = comp.stop;
    for (const Passage& passage : comp.passages) {
      scomp.passages.push_back(
          {passage.crossing, passage.role == Role::Over ? SRole::Over : SRole::Under});
    }
    tangle.components.push_back(std::move(scomp));
  }
  tangle.classical = diagram.crossings;
  return tangle;
}

namespace {

// Shared boundary-word check, reusing the classical validator on a
// passage-free skeleton.
void check_singular_boundary(const SingularTangle& tangle, ValidationReport& report) {
  TangleDiagram skeleton;
  for (const SComponent& comp : tangle.components) {
    Component bare;
    bare.kind = comp.kind;
    bare.start = comp.start;
    bare.stop = comp.stop;
    skeleton.components.push_back(std::move(bare));
  }
  for (const Violation& violation : validate(skeleton).violations) {
    report.violations.push_back(violation);
  }
}

}  // namespace

ValidationReport validate_singular(const SingularTangle& tangle) {
  ValidationReport report;

  struct Seen {
    int overs = 0, unders = 0, ps = 0, qs = 0;
    Location over, under, p, q;
  };
  std::map<int, Seen> by_id;
  for (int i = 0; i < static_cast<int>(tangle.components.size()); ++i) {
    const auto& passages = tangle.components[i].passages;
    for (int pos = 0; pos < static_cast<int>(passages.size()); ++pos) {
      Seen& seen = by_id[passages[pos].crossing];
      const Location here{i, pos};
      switch (passages[pos].role) {
        case SRole::Over: seen.overs++; seen.over = here; break;
        case SRole::Under: seen.unders++; seen.under = here; break;
        case SRole::P: seen.ps++; seen.p = here; break;
        case SRole::Q: seen.qs++; seen.q = here; break;
      }
    }
  }

  for (const auto& [id, seen] : by_id) {
    if (id <= 0) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "crossing id must be positive"});
      continue;
    }
    const bool classical = seen.overs + seen.unders > 0;
    const bool singular = seen.ps + seen.qs > 0;
    if (classical && singular) {
      report.violations.push_back({ViolationKind::DuplicateRole, id, -1,
                                   "id used both classically and singularly"});
      continue;
    }
    if (seen.overs > 1 || seen.unders > 1 || seen.ps > 1 || seen.qs > 1) {
      report.violations.push_back({ViolationKind::DuplicateRole, id, -1,
                                   "crossing visited twice in the same role"});
      continue;
    }
    if (classical && (seen.overs != 1 || seen.unders != 1)) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "crossing needs one over and one under passage"});
      continue;
    }
    if (singular && (seen.ps != 1 || seen.qs != 1)) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "double point needs one P and one Q passage"});
      continue;
    }

    if (classical) {
      auto it = tangle.classical.find(id);
      if (it == tangle.classical.end()) {
        report.violations.push_back(
            {ViolationKind::MissingMate, id, -1, "no crossing record for this id"});
      } else if (it->second.sign != 1 && it->second.sign != -1) {
        report.violations.push_back(
            {ViolationKind::SignInconsistency, id, -1, "sign must be +1 or -1"});
      } else if (!(it->second.over == seen.over) || !(it->second.under == seen.under)) {
        report.violations.push_back({ViolationKind::DuplicateRole, id, -1,
                                     "crossing record disagrees with passage sequence"});
      }
    } else {
      auto it = tangle.singular.find(id);
      if (it == tangle.singular.end()) {
        report.violations.push_back(
            {ViolationKind::MissingMate, id, -1, "no double-point record for this id"});
      } else if (!(it->second.passage_p == seen.p) || !(it->second.passage_q == seen.q)) {
        report.violations.push_back({ViolationKind::DuplicateRole, id, -1,
                                     "double-point record disagrees with passage sequence"});
      }
    }
  }
  for (const auto& [id, crossing] : tangle.classical) {
    if (!by_id.count(id)) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "crossing record without passages"});
    }
    (void)crossing;
  }
  for (const auto& [id, crossing] : tangle.singular) {
    if (!by_id.count(id)) {
      report.violations.push_back(
          {ViolationKind::MissingMate, id, -1, "double-point record without passages"});
    }
    (void)crossing;
  }

  check_singular_boundary(tangle, report);
  return report;
}

void require_valid_singular(const SingularTangle& tangle) {
  ValidationReport report = validate_singular(tangle);
  if (!report.ok()) {
    throw InvalidDiagramError("invalid singular tangle: " + to_string(report.violations.front()));
  }
}

SingularTangle assemble_singular(std::vector<SComponent> components,
                                 const std::map<int, int>& signs) {
  SingularTangle tangle;
  tangle.components = std::move(components);
  for (int i = 0; i < static_cast<int>(tangle.components.size()); ++i) {
    const auto& passages = tangle.components[i].passages;
    for (int pos = 0; pos < static_cast<int>(passages.size()); ++pos) {
      const SPassage& passage = passages[pos];
      const Location here{i, pos};
      switch (passage.role) {
        case SRole::Over:
        case SRole::Under: {
          Crossing& crossing = tangle.classical[passage.crossing];
          crossing.id = passage.crossing;
          auto it = signs.find(passage.crossing);
          if (it == signs.end()) {
            throw InvalidDiagramError("no sign for crossing " + std::to_string(passage.crossing));
          }
          crossing.sign = it->second;
          (passage.role == SRole::Over ? crossing.over : crossing.under) = here;
          break;
        }
        case SRole::P:
        case SRole::Q: {
          SingularCrossing& crossing = tangle.singular[passage.crossing];
          crossing.id = passage.crossing;
          (passage.role == SRole::P ? crossing.passage_p : crossing.passage_q) = here;
          break;
        }
      }
    }
  }
  ValidationReport report = validate_singular(tangle);
  if (!report.ok()) {
    throw InvalidDiagramError("assembled singular tangle is invalid: " +
                              to_string(report.violations.front()));
  }
  return tangle;
}

SingularTangle relabel_canonical_singular(const SingularTangle& tangle) {
  std::map<int, int> mapping;
  int next = 1;
  for (const SComponent& comp : tangle.components) {
    for (const SPassage& passage : comp.passages) {
      if (!mapping.count(passage.crossing)) mapping[passage.crossing] = next++;
    }
  }
  SingularTangle result;
  result.components = tangle.components;
  for (SComponent& comp : result.components) {
    for (SPassage& passage : comp.passages) passage.crossing = mapping.at(passage.crossing);
  }
  for (const auto& [id, crossing] : tangle.classical) {
    auto it = mapping.find(id);
    if (it == mapping.end()) continue;
    Crossing renamed = crossing;
    renamed.id = it->second;
    result.classical[it->second] = renamed;
  }
  for (const auto& [id, crossing] : tangle.singular) {
    auto it = mapping.find(id);
    if (it == mapping.end()) continue;
    SingularCrossing renamed = crossing;
    renamed.id = it->second;
    result.singular[it->second] = renamed;
  }
  return result;
}

TangleDiagram resolve(const SingularTangle& tangle, const ResolutionAssignment& assignment) {
  require_valid_singular(tangle);
  for (const auto& [id, crossing] : tangle.singular) {
    auto it = assignment.find(id);
    if (it == assignment.end() || (it->second != 1 && it->second != -1)) {
      throw PartialAssignmentError("double point " + std::to_string(id) +
                                   " has no +1/-1 resolution");
    }
    (void)crossing;
  }

  std::vector<Component> components;
  for (const SComponent& scomp : tangle.components) {
    Component comp;
    comp.kind = scomp.kind;
    comp.start = scomp.start;
    comp.stop = scomp.stop;
    for (const SPassage& passage : scomp.passages) {
      Role role = Role::Over;
      switch (passage.role) {
        case SRole::Over: role = Role::Over; break;
        case SRole::Under: role = Role::Under; break;
        case SRole::P:
          role = assignment.at(passage.crossing) == 1 ? Role::Over : Role::Under;
          break;
        case SRole::Q:
          role = assignment.at(passage.crossing) == 1 ? Role::Under : Role::Over;
          break;
      }
      comp.passages.push_back({passage.crossing, role});
    }
    components.push_back(std::move(comp));
  }

  std::map<int, int> signs;
  for (const auto& [id, crossing] : tangle.classical) signs[id] = crossing.sign;
  for (const auto& [id, crossing] : tangle.singular) {
    signs[id] = assignment.at(id);
    (void)crossing;
  }
  return assemble_diagram(std::move(components), signs);
}

SingularTangle resolve_one(const SingularTangle& tangle, int singular_id, int value) {
  require_valid_singular(tangle);
  if (!tangle.singular.count(singular_id)) {
    throw PartialAssignmentError("no double point with id " + std::to_string(singular_id));
  }
  if (value != 1 && value != -1) {
    throw PartialAssignmentError("resolution value must be +1 or -1");
  }
  std::vector<SComponent> components = tangle.components;
  for (SComponent& comp : components) {
    for (SPassage& passage : comp.passages) {
      if (passage.crossing != singular_id) continue;
      const bool over = (passage.role == SRole::P) == (value == 1);
      passage.role = over ? SRole::Over : SRole::Under;
    }
  }
  std::map<int, int> signs;
  for (const auto& [id, crossing] : tangle.classical) signs[id] = crossing.sign;
  signs[singular_id] = value;
  return assemble_singular(std::move(components), signs);
}

LaurentPolynomial extension(const SingularTangle& tangle) {
  require_valid_singular(tangle);
  std::vector<int> ids;
  for (const auto& [id, crossing] : tangle.singular) {
    ids.push_back(id);
    (void)crossing;
  }
  const int k = static_cast<int>(ids.size());
  if (k >= 63) throw Error("too many double points to expand");

  LaurentPolynomial total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ResolutionAssignment assignment;
    for (int j = 0; j < k; ++j) {
      assignment[ids[j]] = (mask >> j) & 1 ? 1 : -1;
    }
    const int negatives = k - std::popcount(mask);
    const LaurentPolynomial value = self_crossing_wriggle(resolve(tangle, assignment));
    if (negatives % 2 == 0) {
      total += value;
    } else {
      total -= value;
    }
  }
  return total;
}

namespace {

// Enumerates the perfect matchings of `slots`, invoking visit on each list
// of pairs.
void for_each_matching(std::vector<int>& slots,
                       std::vector<std::pair<int, int>>& pairs,
                       const std::function<void()>& visit) {
  if (slots.empty()) {
    visit();
    return;
  }
  const int first = slots.front();
  for (std::size_t j = 1; j < slots.size(); ++j) {
    const int partner = slots[j];
    std::vector<int> rest;
    for (std::size_t t = 1; t < slots.size(); ++t) {
      if (t != j) rest.push_back(slots[t]);
    }
    pairs.push_back({first, partner});
    for_each_matching(rest, pairs, visit);
    pairs.pop_back();
  }
}

SingularTangle one_component_candidate(int length, int q_pos,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       std::uint64_t decoration) {
  SComponent comp;
  comp.kind = ComponentKind::Closed;
  comp.passages.resize(length);
  const int singular_id = static_cast<int>(pairs.size()) + 1;
  comp.passages[0] = {singular_id, SRole::P};
  comp.passages[q_pos] = {singular_id, SRole::Q};
  std::map<int, int> signs;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const int id = static_cast<int>(j) + 1;
    const bool over_first = decoration & 1;
    decoration >>= 1;
    signs[id] = decoration & 1 ? 1 : -1;
    decoration >>= 1;
    comp.passages[pairs[j].first] = {id, over_first ? SRole::Over : SRole::Under};
    comp.passages[pairs[j].second] = {id, over_first ? SRole::Under : SRole::Over};
  }
  return assemble_singular({std::move(comp)}, signs);
}

std::vector<Witness> exhaustive_witness_search(int max_classical) {
  std::vector<Witness> witnesses;
  for (int m = 0; m <= max_classical; ++m) {
    const int length = 2 * m + 2;
    for (int q_pos = 1; q_pos < length; ++q_pos) {
      std::vector<int> slots;
      for (int p = 1; p < length; ++p) {
        if (p != q_pos) slots.push_back(p);
      }
      std::vector<std::pair<int, int>> pairs;
      for_each_matching(slots, pairs, [&] {
        const std::uint64_t decorations = std::uint64_t{1} << (2 * m);
        for (std::uint64_t d = 0; d < decorations; ++d) {
          SingularTangle candidate = one_component_candidate(length, q_pos, pairs, d);
          LaurentPolynomial value = extension(candidate);
          if (!value.is_zero()) {
            witnesses.push_back({std::move(candidate), std::move(value)});
          }
        }
      });
    }
  }
  return witnesses;
}

std::vector<Witness> random_witness_search(int max_classical, std::uint64_t seed, int samples) {
  std::vector<Witness> witnesses;
  SplitMix64 rng(seed);
  for (int trial = 0; trial < samples; ++trial) {
    const int m = static_cast<int>(rng.below(max_classical + 1));
    const TangleDiagram base = random_tangle({1, 0, m}, rng.next());
    SingularTangle candidate = as_singular(base);
    auto& passages = candidate.components[0].passages;
    const int singular_id = m + 1;
    passages.insert(passages.begin() + rng.below(passages.size() + 1), {singular_id, SRole::P});
    passages.insert(passages.begin() + rng.below(passages.size() + 1), {singular_id, SRole::Q});
    std::map<int, int> signs;
    for (const auto& [id, crossing] : base.crossings) signs[id] = crossing.sign;
    std::vector<SComponent> components = candidate.components;
    candidate = assemble_singular(std::move(components), signs);
    LaurentPolynomial value = extension(candidate);
    if (!value.is_zero()) {
      witnesses.push_back({std::move(candidate), std::move(value)});
    }
  }
  return witnesses;
}

}  // namespace

std::vector<Witness> order_witness_search(int max_classical, int max_components,
                                          std::optional<std::uint64_t> seed, int samples) {
  if (max_classical < 0 || max_components < 0) {
    throw InfeasibleRequestError("search bounds must be nonnegative");
  }
  if (seed) return random_witness_search(max_classical, *seed, samples);
  return exhaustive_witness_search(max_classical);
}

}  // namespace wriggle
