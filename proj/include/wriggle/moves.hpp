#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "wriggle/tangle.hpp"

namespace wriggle {

// Insertion point: before the passage at `position` (0..n for long
// components; 0..n-1 cyclically for closed ones, where 0 is the seam).
struct Gap {
  int component = 0;
  int position = 0;
  friend bool operator==(const Gap&, const Gap&) = default;
};

// Adds one kink: adjacent passages [O U] (over_first) or [U O] of one new
// crossing with the chosen sign.
struct R1Insert {
  Gap gap;
  int sign = 1;
  bool over_first = true;
  friend bool operator==(const R1Insert&, const R1Insert&) = default;
};

// Removes a crossing whose two passages are adjacent on one component.
struct R1Delete {
  int crossing = 0;
  friend bool operator==(const R1Delete&, const R1Delete&) = default;
};

// Pokes one strand over another: the over gap receives [O1 O2], the under
// gap [U1 U2] (parallel) or [U2 U1] (antiparallel); crossing 1 takes
// first_sign, crossing 2 its negation. When both gaps coincide the over
// block lands immediately before the under block.
struct R2Insert {
  Gap over_gap;
  Gap under_gap;
  int first_sign = 1;
  bool parallel = true;
  friend bool operator==(const R2Insert&, const R2Insert&) = default;
};

// Removes two opposite-sign crossings whose over passages are adjacent and
// whose under passages are adjacent.
struct R2Delete {
  int crossing1 = 0;  // smaller id
  int crossing2 = 0;
  friend bool operator==(const R2Delete&, const R2Delete&) = default;
};

// Braid-like third move. Strand P is over at crossings a and b, strand Q is
// under at a and over at c, strand R is under at b and c; eps gives each
// strand's direction relative to the all-ascending braid picture, which
// fixes both the order of each adjacent passage pair and the crossing signs
// (sgn a = eps_P eps_Q, sgn b = eps_P eps_R, sgn c = eps_Q eps_R). Applying
// the move swaps the three pairs simultaneously.
struct R3Move {
  int a = 0;
  int b = 0;
  int c = 0;
  std::array<int, 3> eps{1, 1, 1};
  friend bool operator==(const R3Move&, const R3Move&) = default;
};

using MoveDescriptor = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Move>;

// All applicable deletions and third moves, concretely; insertions are
// reported schematically, one representative per gap.
std::vector<MoveDescriptor> enumerate_moves(const TangleDiagram& diagram);
// The deletion/R3 subset only.
std::vector<MoveDescriptor> enumerate_reductions(const TangleDiagram& diagram);

TangleDiagram apply_move(const TangleDiagram& diagram, const MoveDescriptor& move);

// SplitMix64; fixed for reproducible golden tests.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
  int pick_sign() { return below(2) == 0 ? 1 : -1; }
  bool chance_percent(std::uint64_t percent) { return below(100) < percent; }
};

// Applies `count` random moves (biased 60% insertions when reductions
// exist); deterministic per seed. A diagram with no components has no gaps
// and is returned unchanged.
TangleDiagram scramble(const TangleDiagram& diagram, int count, std::uint64_t seed);

struct RandomTangleSpec {
  int closed_components = 0;
  int long_components = 0;
  int crossings = 0;
};

// Uniform random pairing of passage slots into signed crossings across the
// requested components; every output validates.
TangleDiagram random_tangle(const RandomTangleSpec& spec, std::uint64_t seed);

}  // namespace wriggle
