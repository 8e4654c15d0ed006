#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <variant>

namespace wriggle::testsupport {

TangleDiagram diagram(const std::string& text) {
  auto parsed = parse_tangle(text);
  if (!std::holds_alternative<TangleDiagram>(parsed)) {
    throw std::runtime_error("test fixture is singular, expected classical");
  }
  return std::get<TangleDiagram>(parsed);
}

SingularTangle singular(const std::string& text) {
  auto parsed = parse_tangle(text);
  if (!std::holds_alternative<SingularTangle>(parsed)) {
    throw std::runtime_error("test fixture is classical, expected singular");
  }
  return std::get<SingularTangle>(parsed);
}

namespace {

std::map<int, int> signs_of(const TangleDiagram& d) {
  std::map<int, int> signs;
  for (const auto& [id, crossing] : d.crossings) signs[id] = crossing.sign;
  return signs;
}

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

}  // namespace

TangleDiagram random_diagram(int max_components, int max_crossings, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int comps = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_components)));
  const int longs = static_cast<int>(rng.below(static_cast<std::uint64_t>(comps) + 1));
  const int crossings = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_crossings) + 1));
  return random_tangle({comps - longs, longs, crossings}, rng.next());
}

TangleDiagram random_string_link(int strands, int crossings, std::uint64_t seed) {
  TangleDiagram d = random_tangle({0, strands, crossings}, seed);
  for (int i = 0; i < static_cast<int>(d.components.size()); ++i) {
    d.components[i].start = EndPoint{Side::Top, i + 1};
    d.components[i].stop = EndPoint{Side::Bottom, i + 1};
  }
  return assemble_diagram(d.components, signs_of(d));
}

std::pair<TangleDiagram, TangleDiagram> random_compatible_pair(std::uint64_t seed) {
  SplitMix64 rng(seed);
  struct Slot {
    int component = 0;
    bool is_start = false;
  };
  const auto place = [&rng](TangleDiagram& d, Side side, std::vector<Slot> slots) {
    shuffle(slots, rng);
    for (int pos = 1; pos <= static_cast<int>(slots.size()); ++pos) {
      Component& c = d.components[slots[pos - 1].component];
      (slots[pos - 1].is_start ? c.start : c.stop) = EndPoint{side, pos};
    }
  };

  const int t_long = 1 + static_cast<int>(rng.below(3));
  TangleDiagram t = random_tangle({static_cast<int>(rng.below(2)), t_long,
                                   static_cast<int>(rng.below(7))},
                                  rng.next());
  std::vector<Slot> top, bottom;
  int seen_long = 0;
  for (int i = 0; i < static_cast<int>(t.components.size()); ++i) {
    if (t.components[i].kind != ComponentKind::Long) continue;
    // 0 = top to bottom, 1 = bottom to top, 2 = cap (both ends on top). The
    // first long component never caps, so the glued boundary is nonempty;
    // cups (both ends on the glued bottom) are never produced.
    const int pattern = static_cast<int>(rng.below(seen_long == 0 ? 2 : 3));
    ++seen_long;
    if (pattern == 0) {
      top.push_back({i, true});
      bottom.push_back({i, false});
    } else if (pattern == 1) {
      bottom.push_back({i, true});
      top.push_back({i, false});
    } else {
      top.push_back({i, true});
      top.push_back({i, false});
    }
  }
  place(t, Side::Top, top);
  place(t, Side::Bottom, bottom);
  t = assemble_diagram(t.components, signs_of(t));

  const auto word = boundary_word(t, Side::Bottom);
  const int m = static_cast<int>(word.size());
  TangleDiagram u = random_tangle({static_cast<int>(rng.below(2)), m,
                                   static_cast<int>(rng.below(7))},
                                  rng.next());
  std::vector<int> u_long;
  for (int i = 0; i < static_cast<int>(u.components.size()); ++i) {
    if (u.components[i].kind == ComponentKind::Long) u_long.push_back(i);
  }
  std::vector<Slot> u_bottom;
  for (int k = 0; k < m; ++k) {
    Component& c = u.components[u_long[k]];
    if (word[k].direction() == EndDirection::Out) {
      c.start = EndPoint{Side::Top, k + 1};
      u_bottom.push_back({u_long[k], false});
    } else {
      c.stop = EndPoint{Side::Top, k + 1};
      u_bottom.push_back({u_long[k], true});
    }
  }
  place(u, Side::Bottom, u_bottom);
  u = assemble_diagram(u.components, signs_of(u));
  return {t, u};
}

SingularTangle random_two_double_points(int max_classical, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int comps = 1 + static_cast<int>(rng.below(2));
  const int longs = static_cast<int>(rng.below(static_cast<std::uint64_t>(comps) + 1));
  const int classical = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_classical) + 1));
  TangleDiagram base = random_tangle({comps - longs, longs, classical}, rng.next());
  SingularTangle s = as_singular(base);

  int next_id = 1;
  for (const auto& [id, crossing] : s.classical) next_id = std::max(next_id, id + 1);
  for (int dp = 0; dp < 2; ++dp) {
    for (SRole role : {SRole::P, SRole::Q}) {
      auto& passages = s.components[rng.below(static_cast<std::uint64_t>(comps))].passages;
      const auto at = static_cast<std::ptrdiff_t>(rng.below(passages.size() + 1));
      passages.insert(passages.begin() + at, SPassage{next_id, role});
    }
    ++next_id;
  }
  std::map<int, int> signs;
  for (const auto& [id, crossing] : s.classical) signs[id] = crossing.sign;
  return assemble_singular(std::move(s.components), signs);
}

namespace {

// Exhaustive two-double-point enumeration. A candidate is an arrangement of
// the 2m + 4 passage tokens (m classical crossings contributing Over/Under,
// two double points contributing P/Q) into one or two ordered components,
// plus a kind per component and a sign per classical crossing. Candidates
// equal up to crossing relabeling, component reordering, or rotation of a
// closed component describe the same tangle, so only one representative per
// orbit is visited: each candidate is reduced to a packed canonical key
// (minimum over component orders and closed rotations of the
// first-occurrence relabeling) and skipped when the key was seen before.

struct Token {
  int id = 0;
  SRole role = SRole::Over;
};

// One byte per token: role(2) | sign(1) | id(5). Ids stay below 7 here.
unsigned char pack(const Token& t, const std::vector<int>& relabel, const std::vector<int>& signs) {
  const int id = relabel[t.id];
  const int sign_bit = t.role == SRole::Over || t.role == SRole::Under
                           ? (signs[t.id] > 0 ? 1 : 0)
                           : 0;
  return static_cast<unsigned char>((static_cast<int>(t.role) << 6) | (sign_bit << 5) | id);
}

using Comp = std::vector<Token>;

// Encodes one rotation/order choice with first-occurrence relabeling.
std::string encode(const std::vector<const Comp*>& comps, const std::vector<int>& rotations,
                   const std::vector<ComponentKind>& kinds, const std::vector<int>& signs,
                   int max_id) {
  std::string out;
  out.push_back(static_cast<char>(((comps.size() - 1) << 7) |
                                  (static_cast<int>(kinds[0]) << 6) |
                                  ((comps.size() > 1 ? static_cast<int>(kinds[1]) : 0) << 5) |
                                  static_cast<int>(comps[0]->size())));
  std::vector<int> relabel(max_id + 1, 0);
  int next = 1;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Comp& c = *comps[ci];
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Token& t = c[(i + rotations[ci]) % (n == 0 ? 1 : n)];
      if (relabel[t.id] == 0) relabel[t.id] = next++;
      out.push_back(static_cast<char>(pack(t, relabel, signs)));
    }
  }
  return out;
}

std::string canonical_key(const std::vector<const Comp*>& comps,
                          const std::vector<ComponentKind>& kinds, const std::vector<int>& signs,
                          int max_id) {
  std::string best;
  std::vector<std::size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<const Comp*> ordered;
    std::vector<ComponentKind> ordered_kinds;
    for (std::size_t i : order) {
      ordered.push_back(comps[i]);
      ordered_kinds.push_back(kinds[i]);
    }
    const std::size_t r0 = ordered_kinds[0] == ComponentKind::Closed && ordered[0]->size() > 1
                               ? ordered[0]->size()
                               : 1;
    const std::size_t r1 = ordered.size() > 1 && ordered_kinds[1] == ComponentKind::Closed &&
                                   ordered[1]->size() > 1
                               ? ordered[1]->size()
                               : 1;
    for (std::size_t a = 0; a < r0; ++a) {
      for (std::size_t b = 0; b < r1; ++b) {
        std::vector<int> rotations{static_cast<int>(a), static_cast<int>(b)};
        std::string key = encode(ordered, rotations, ordered_kinds, signs, max_id);
        if (best.empty() || key < best) best = std::move(key);
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

SingularTangle materialize(const std::vector<const Comp*>& comps,
                           const std::vector<ComponentKind>& kinds,
                           const std::vector<int>& signs) {
  std::vector<SComponent> built;
  int long_index = 0;
  std::map<int, int> sign_map;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    SComponent c;
    c.kind = kinds[ci];
    for (const Token& t : *comps[ci]) {
      c.passages.push_back(SPassage{t.id, t.role});
      if (t.role == SRole::Over) sign_map[t.id] = signs[t.id];
    }
    if (c.kind == ComponentKind::Long) {
      ++long_index;
      c.start = EndPoint{Side::Top, long_index};
      c.stop = EndPoint{Side::Bottom, long_index};
    }
    built.push_back(std::move(c));
  }
  return assemble_singular(std::move(built), sign_map);
}

}  // namespace

long for_each_two_double_point(int max_classical,
                               const std::function<void(const SingularTangle&)>& fn) {
  long visited = 0;
  std::unordered_set<std::string> seen;
  for (int m = 0; m <= max_classical; ++m) {
    std::vector<Token> tokens;
    for (int id = 1; id <= m; ++id) {
      tokens.push_back({id, SRole::Over});
      tokens.push_back({id, SRole::Under});
    }
    for (int s = 0; s < 2; ++s) {
      tokens.push_back({m + 1 + s, SRole::P});
      tokens.push_back({m + 1 + s, SRole::Q});
    }
    const int n = static_cast<int>(tokens.size());
    const int max_id = m + 2;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> signs(max_id + 1, 1);

    const auto consider = [&](const std::vector<const Comp*>& comps,
                              std::vector<ComponentKind> kinds) {
      // Closed components are enumerated in every rotation; keep only the
      // rotation starting at the smallest token index (the key still
      // minimizes over all rotations, so this is a pure accelerator).
      // A closed component's tokens are distinct, hence the minimum is
      // unique and every rotation orbit passes exactly once.
      for (std::size_t sv = 0; sv < (1u << m); ++sv) {
        for (int id = 1; id <= m; ++id) signs[id] = (sv >> (id - 1)) & 1 ? 1 : -1;
        std::string key = canonical_key(comps, kinds, signs, max_id);
        if (!seen.insert(std::move(key)).second) continue;
        fn(materialize(comps, kinds, signs));
        ++visited;
      }
    };

    const auto min_first = [&tokens](const Comp& c) {
      if (c.size() < 2) return true;
      const auto least = std::min_element(c.begin(), c.end(), [](const Token& a, const Token& b) {
        return a.id != b.id ? a.id < b.id : a.role < b.role;
      });
      return least == c.begin();
    };

    do {
      Comp whole;
      for (int i : perm) whole.push_back(tokens[i]);
      for (ComponentKind kind : {ComponentKind::Closed, ComponentKind::Long}) {
        if (kind == ComponentKind::Closed && !min_first(whole)) continue;
        consider({&whole}, {kind});
      }
      for (int k = 0; k <= n; ++k) {
        const Comp first(whole.begin(), whole.begin() + k);
        const Comp second(whole.begin() + k, whole.end());
        for (int kinds_bits = 0; kinds_bits < 4; ++kinds_bits) {
          const auto kind0 = kinds_bits & 1 ? ComponentKind::Long : ComponentKind::Closed;
          const auto kind1 = kinds_bits & 2 ? ComponentKind::Long : ComponentKind::Closed;
          if (kind0 == ComponentKind::Closed && !min_first(first)) continue;
          if (kind1 == ComponentKind::Closed && !min_first(second)) continue;
          consider({&first, &second}, {kind0, kind1});
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return visited;
}

}  // namespace wriggle::testsupport
