#include "wriggle/moves.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace wriggle {

namespace {

int component_size(const TangleDiagram& diagram, int component) {
  return static_cast<int>(diagram.components[component].passages.size());
}

// Immediate successor position along the strand, if any.
std::optional<int> next_position(const TangleDiagram& diagram, int component, int position) {
  const Component& comp = diagram.components[component];
  const int n = static_cast<int>(comp.passages.size());
  if (n < 2) return std::nullopt;
  if (comp.kind == ComponentKind::Closed) return (position + 1) % n;
  return position + 1 < n ? std::optional<int>(position + 1) : std::nullopt;
}

std::optional<int> prev_position(const TangleDiagram& diagram, int component, int position) {
  const Component& comp = diagram.components[component];
  const int n = static_cast<int>(comp.passages.size());
  if (n < 2) return std::nullopt;
  if (comp.kind == ComponentKind::Closed) return (position + n - 1) % n;
  return position > 0 ? std::optional<int>(position - 1) : std::nullopt;
}

// True when `second` immediately follows `first` on one strand.
bool follows(const TangleDiagram& diagram, const Location& first, const Location& second) {
  if (first.component != second.component) return false;
  auto next = next_position(diagram, first.component, first.position);
  return next && *next == second.position;
}

bool adjacent_either_way(const TangleDiagram& diagram, const Location& a, const Location& b) {
  return follows(diagram, a, b) || follows(diagram, b, a);
}

std::map<int, int> sign_map(const TangleDiagram& diagram) {
  std::map<int, int> signs;
  for (const auto& [id, crossing] : diagram.crossings) signs[id] = crossing.sign;
  return signs;
}

int max_crossing_id(const TangleDiagram& diagram) {
  return diagram.crossings.empty() ? 0 : diagram.crossings.rbegin()->first;
}

std::vector<Gap> all_gaps(const TangleDiagram& diagram) {
  std::vector<Gap> gaps;
  for (int i = 0; i < static_cast<int>(diagram.components.size()); ++i) {
    const Component& comp = diagram.components[i];
    const int n = static_cast<int>(comp.passages.size());
    const int count = comp.kind == ComponentKind::Closed ? std::max(n, 1) : n + 1;
    for (int p = 0; p < count; ++p) gaps.push_back({i, p});
  }
  return gaps;
}

bool gap_valid(const TangleDiagram& diagram, const Gap& gap) {
  if (gap.component < 0 || gap.component >= static_cast<int>(diagram.components.size())) {
    return false;
  }
  return gap.position >= 0 && gap.position <= component_size(diagram, gap.component);
}

void append_r3_candidates(const TangleDiagram& diagram, int a, int b, int eps_p,
                          std::vector<MoveDescriptor>& out) {
  const Location under_a = diagram.crossings.at(a).under;
  for (int eps_q : {1, -1}) {
    const auto neighbor = eps_q == 1
                              ? next_position(diagram, under_a.component, under_a.position)
                              : prev_position(diagram, under_a.component, under_a.position);
    if (!neighbor) continue;
    const Passage& other = diagram.components[under_a.component].passages[*neighbor];
    if (other.role != Role::Over) continue;
    const int c = other.crossing;
    if (c == a || c == b) continue;

    const Location under_b = diagram.crossings.at(b).under;
    const Location under_c = diagram.crossings.at(c).under;
    int eps_r = 0;
    if (follows(diagram, under_b, under_c)) eps_r = 1;
    else if (follows(diagram, under_c, under_b)) eps_r = -1;
    else continue;

    auto matches = [&](int eps_r_choice) {
      return diagram.crossings.at(a).sign == eps_p * eps_q &&
             diagram.crossings.at(b).sign == eps_p * eps_r_choice &&
             diagram.crossings.at(c).sign == eps_q * eps_r_choice;
    };
    for (int choice : {eps_r, -eps_r}) {
      const bool order_ok = choice == 1 ? follows(diagram, under_b, under_c)
                                        : follows(diagram, under_c, under_b);
      if (order_ok && matches(choice)) {
        out.push_back(R3Move{a, b, c, {eps_p, eps_q, choice}});
      }
    }
  }
}

}  // namespace

std::vector<MoveDescriptor> enumerate_reductions(const TangleDiagram& diagram) {
  require_valid(diagram);
  std::vector<MoveDescriptor> moves;

  for (const auto& [id, crossing] : diagram.crossings) {
    if (crossing.over.component != crossing.under.component) continue;
    if (adjacent_either_way(diagram, crossing.over, crossing.under)) {
      moves.push_back(R1Delete{id});
    }
  }

  for (auto it = diagram.crossings.begin(); it != diagram.crossings.end(); ++it) {
    for (auto jt = std::next(it); jt != diagram.crossings.end(); ++jt) {
      const Crossing& c = it->second;
      const Crossing& d = jt->second;
      if (c.sign + d.sign != 0) continue;
      if (adjacent_either_way(diagram, c.over, d.over) &&
          adjacent_either_way(diagram, c.under, d.under)) {
        moves.push_back(R2Delete{c.id, d.id});
      }
    }
  }

  for (int i = 0; i < static_cast<int>(diagram.components.size()); ++i) {
    const Component& comp = diagram.components[i];
    const int n = static_cast<int>(comp.passages.size());
    for (int p = 0; p < n; ++p) {
      auto q = next_position(diagram, i, p);
      if (!q) continue;
      const Passage& x = comp.passages[p];
      const Passage& y = comp.passages[*q];
      if (x.role != Role::Over || y.role != Role::Over) continue;
      append_r3_candidates(diagram, x.crossing, y.crossing, 1, moves);
      append_r3_candidates(diagram, y.crossing, x.crossing, -1, moves);
    }
  }
  return moves;
}

std::vector<MoveDescriptor> enumerate_moves(const TangleDiagram& diagram) {
  std::vector<MoveDescriptor> moves = enumerate_reductions(diagram);
  for (const Gap& gap : all_gaps(diagram)) {
    moves.push_back(R1Insert{gap, 1, true});
    moves.push_back(R2Insert{gap, gap, 1, true});
  }
  return moves;
}

namespace {

TangleDiagram apply_r1_insert(const TangleDiagram& diagram, const R1Insert& move) {
  if (!gap_valid(diagram, move.gap) || (move.sign != 1 && move.sign != -1)) {
    throw MoveNotApplicableError("first move: invalid insertion site");
  }
  const int id = max_crossing_id(diagram) + 1;
  std::vector<Component> components = diagram.components;
  auto& passages = components[move.gap.component].passages;
  const Passage over{id, Role::Over};
  const Passage under{id, Role::Under};
  const std::vector<Passage> block =
      move.over_first ? std::vector<Passage>{over, under} : std::vector<Passage>{under, over};
  passages.insert(passages.begin() + move.gap.position, block.begin(), block.end());
  std::map<int, int> signs = sign_map(diagram);
  signs[id] = move.sign;
  return assemble_diagram(std::move(components), signs);
}

TangleDiagram apply_r1_delete(const TangleDiagram& diagram, const R1Delete& move) {
  auto it = diagram.crossings.find(move.crossing);
  if (it == diagram.crossings.end() ||
      it->second.over.component != it->second.under.component ||
      !adjacent_either_way(diagram, it->second.over, it->second.under)) {
    throw MoveNotApplicableError("first move: crossing " + std::to_string(move.crossing) +
                                 " is not an adjacent kink");
  }
  std::vector<Component> components = diagram.components;
  auto& passages = components[it->second.over.component].passages;
  std::vector<int> positions{it->second.over.position, it->second.under.position};
  std::sort(positions.rbegin(), positions.rend());
  for (int p : positions) passages.erase(passages.begin() + p);
  std::map<int, int> signs = sign_map(diagram);
  signs.erase(move.crossing);
  return assemble_diagram(std::move(components), signs);
}

TangleDiagram apply_r2_insert(const TangleDiagram& diagram, const R2Insert& move) {
  if (!gap_valid(diagram, move.over_gap) || !gap_valid(diagram, move.under_gap) ||
      (move.first_sign != 1 && move.first_sign != -1)) {
    throw MoveNotApplicableError("second move: invalid insertion site");
  }
  const int c1 = max_crossing_id(diagram) + 1;
  const int c2 = c1 + 1;
  const std::vector<Passage> over_block{{c1, Role::Over}, {c2, Role::Over}};
  const std::vector<Passage> under_block =
      move.parallel ? std::vector<Passage>{{c1, Role::Under}, {c2, Role::Under}}
                    : std::vector<Passage>{{c2, Role::Under}, {c1, Role::Under}};

  std::vector<Component> components = diagram.components;
  auto insert_block = [&](const Gap& gap, const std::vector<Passage>& block) {
    auto& passages = components[gap.component].passages;
    passages.insert(passages.begin() + gap.position, block.begin(), block.end());
  };
  if (move.over_gap.component != move.under_gap.component) {
    insert_block(move.over_gap, over_block);
    insert_block(move.under_gap, under_block);
  } else if (move.over_gap.position > move.under_gap.position) {
    insert_block(move.over_gap, over_block);
    insert_block(move.under_gap, under_block);
  } else if (move.over_gap.position < move.under_gap.position) {
    insert_block(move.under_gap, under_block);
    insert_block(move.over_gap, over_block);
  } else {
    insert_block(move.under_gap, under_block);
    insert_block(move.over_gap, over_block);
  }

  std::map<int, int> signs = sign_map(diagram);
  signs[c1] = move.first_sign;
  signs[c2] = -move.first_sign;
  return assemble_diagram(std::move(components), signs);
}

TangleDiagram apply_r2_delete(const TangleDiagram& diagram, const R2Delete& move) {
  auto it = diagram.crossings.find(move.crossing1);
  auto jt = diagram.crossings.find(move.crossing2);
  if (it == diagram.crossings.end() || jt == diagram.crossings.end() ||
      move.crossing1 == move.crossing2 || it->second.sign + jt->second.sign != 0 ||
      !adjacent_either_way(diagram, it->second.over, jt->second.over) ||
      !adjacent_either_way(diagram, it->second.under, jt->second.under)) {
    throw MoveNotApplicableError("second move: crossings do not form a bigon");
  }
  std::vector<Component> components = diagram.components;
  std::map<int, std::vector<int>> doomed;  // component -> positions
  for (const Location& loc :
       {it->second.over, it->second.under, jt->second.over, jt->second.under}) {
    doomed[loc.component].push_back(loc.position);
  }
  for (auto& [component, positions] : doomed) {
    std::sort(positions.rbegin(), positions.rend());
    for (int p : positions) {
      components[component].passages.erase(components[component].passages.begin() + p);
    }
  }
  std::map<int, int> signs = sign_map(diagram);
  signs.erase(move.crossing1);
  signs.erase(move.crossing2);
  return assemble_diagram(std::move(components), signs);
}

TangleDiagram apply_r3(const TangleDiagram& diagram, const R3Move& move) {
  const auto bad = [] {
    return MoveNotApplicableError("third move: crossings do not form the braid pattern");
  };
  if (move.a == move.b || move.a == move.c || move.b == move.c) throw bad();
  for (int id : {move.a, move.b, move.c}) {
    if (!diagram.crossings.count(id)) throw bad();
  }
  for (int eps : move.eps) {
    if (eps != 1 && eps != -1) throw bad();
  }
  const Crossing& ca = diagram.crossings.at(move.a);
  const Crossing& cb = diagram.crossings.at(move.b);
  const Crossing& cc = diagram.crossings.at(move.c);
  const auto& [eps_p, eps_q, eps_r] = move.eps;
  if (ca.sign != eps_p * eps_q || cb.sign != eps_p * eps_r || cc.sign != eps_q * eps_r) {
    throw bad();
  }
  auto ordered = [&](const Location& x, const Location& y, int eps) {
    return eps == 1 ? follows(diagram, x, y) : follows(diagram, y, x);
  };
  if (!ordered(ca.over, cb.over, eps_p) || !ordered(ca.under, cc.over, eps_q) ||
      !ordered(cb.under, cc.under, eps_r)) {
    throw bad();
  }

  std::vector<Component> components = diagram.components;
  auto swap_pair = [&](const Location& x, const Location& y) {
    std::swap(components[x.component].passages[x.position],
              components[y.component].passages[y.position]);
  };
  swap_pair(ca.over, cb.over);
  swap_pair(ca.under, cc.over);
  swap_pair(cb.under, cc.under);
  return assemble_diagram(std::move(components), sign_map(diagram));
}

}  // namespace

TangleDiagram apply_move(const TangleDiagram& diagram, const MoveDescriptor& move) {
  require_valid(diagram);
  return std::visit(
      [&](const auto& m) -> TangleDiagram {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, R1Insert>) return apply_r1_insert(diagram, m);
        else if constexpr (std::is_same_v<T, R1Delete>) return apply_r1_delete(diagram, m);
        else if constexpr (std::is_same_v<T, R2Insert>) return apply_r2_insert(diagram, m);
        else if constexpr (std::is_same_v<T, R2Delete>) return apply_r2_delete(diagram, m);
        else return apply_r3(diagram, m);
      },
      move);
}

namespace {

Gap random_gap(const TangleDiagram& diagram, SplitMix64& rng) {
  const int component = static_cast<int>(rng.below(diagram.components.size()));
  const Component& comp = diagram.components[component];
  const int n = static_cast<int>(comp.passages.size());
  const int count = comp.kind == ComponentKind::Closed ? std::max(n, 1) : n + 1;
  return {component, static_cast<int>(rng.below(count))};
}

MoveDescriptor random_insertion(const TangleDiagram& diagram, SplitMix64& rng) {
  if (rng.below(2) == 0) {
    return R1Insert{random_gap(diagram, rng), rng.pick_sign(), rng.below(2) == 0};
  }
  const Gap over = random_gap(diagram, rng);
  const Gap under = random_gap(diagram, rng);
  return R2Insert{over, under, rng.pick_sign(), rng.below(2) == 0};
}

}  // namespace

TangleDiagram scramble(const TangleDiagram& diagram, int count, std::uint64_t seed) {
  require_valid(diagram);
  TangleDiagram current = diagram;
  if (current.components.empty()) return current;
  SplitMix64 rng(seed);
  for (int step = 0; step < count; ++step) {
    const std::vector<MoveDescriptor> reductions = enumerate_reductions(current);
    if (reductions.empty() || rng.chance_percent(60)) {
      current = apply_move(current, random_insertion(current, rng));
    } else {
      current = apply_move(current, reductions[rng.below(reductions.size())]);
    }
  }
  return current;
}

TangleDiagram random_tangle(const RandomTangleSpec& spec, std::uint64_t seed) {
  if (spec.closed_components < 0 || spec.long_components < 0 || spec.crossings < 0) {
    throw InfeasibleRequestError("component and crossing counts must be nonnegative");
  }
  const int component_count = spec.closed_components + spec.long_components;
  if (spec.crossings > 0 && component_count == 0) {
    throw InfeasibleRequestError("crossings need at least one component");
  }

  SplitMix64 rng(seed);
  std::vector<int> sizes(component_count, 0);
  int remaining = 2 * spec.crossings;
  for (int i = 0; i < spec.closed_components && remaining > 0; ++i) {
    ++sizes[i];
    --remaining;
  }
  while (remaining > 0) {
    ++sizes[rng.below(component_count)];
    --remaining;
  }

  std::vector<Location> slots;
  for (int i = 0; i < component_count; ++i) {
    for (int p = 0; p < sizes[i]; ++p) slots.push_back({i, p});
  }
  for (std::size_t j = slots.size(); j > 1; --j) {
    std::swap(slots[j - 1], slots[rng.below(j)]);
  }

  std::vector<Component> components(component_count);
  for (int i = 0; i < component_count; ++i) {
    components[i].kind = i < spec.closed_components ? ComponentKind::Closed : ComponentKind::Long;
    components[i].passages.resize(sizes[i]);
  }
  std::map<int, int> signs;
  for (int id = 1; id <= spec.crossings; ++id) {
    Location first = slots[2 * (id - 1)];
    Location second = slots[2 * (id - 1) + 1];
    if (rng.below(2) == 1) std::swap(first, second);
    components[first.component].passages[first.position] = {id, Role::Over};
    components[second.component].passages[second.position] = {id, Role::Under};
    signs[id] = rng.pick_sign();
  }

  std::vector<std::pair<int, bool>> top_ends;     // (component, is_start)
  std::vector<std::pair<int, bool>> bottom_ends;
  for (int i = spec.closed_components; i < component_count; ++i) {
    for (bool is_start : {true, false}) {
      (rng.below(2) == 0 ? top_ends : bottom_ends).push_back({i, is_start});
    }
  }
  for (auto* ends : {&top_ends, &bottom_ends}) {
    for (std::size_t j = ends->size(); j > 1; --j) {
      std::swap((*ends)[j - 1], (*ends)[rng.below(j)]);
    }
  }
  auto place_ends = [&](const std::vector<std::pair<int, bool>>& ends, Side side) {
    for (std::size_t k = 0; k < ends.size(); ++k) {
      const EndPoint end{side, static_cast<int>(k) + 1};
      auto& comp = components[ends[k].first];
      (ends[k].second ? comp.start : comp.stop) = end;
    }
  };
  place_ends(top_ends, Side::Top);
  place_ends(bottom_ends, Side::Bottom);

  return assemble_diagram(std::move(components), signs);
}

}  // namespace wriggle
