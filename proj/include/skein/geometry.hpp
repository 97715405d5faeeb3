#pragma once

#include <vector>

#include "skein/common.hpp"
#include "skein/curve_word.hpp"

namespace skein {

struct Pt {
  Rat x, y;
};

// Closed polyline; segment i runs v[i] -> v[(i+1) % v.size()].
struct Polyline {
  std::vector<Pt> v;
  std::vector<int> subset;  // punctures enclosed, strictly increasing
  int level = 1;            // 1 = top of the stack
};

struct Crossing {
  Pt p;
  int over_curve = -1;   // index into Diagram::curves (smaller level)
  int under_curve = -1;
  bool aligned = false;  // cross(dir_over, dir_under) > 0 at the crossing
};

// One event along a curve walk: a ray letter or a crossing stub.
struct GeomEvent {
  int letter = 0;      // nonzero: +-v
  int crossing = -1;   // else: crossing id
};

struct Diagram {
  int n = 4;
  std::vector<Polyline> curves;            // index = level - 1
  std::vector<Crossing> crossings;         // ids sorted by (x, y)
  std::vector<std::vector<GeomEvent>> events;  // cyclic, per curve

  Word letters_of_curve(int c) const;
};

// Number of distinct offset schedules available (offset-invariance tests).
constexpr int kScheduleCount = 5;

// Axis-aligned box around the subset's span with a triangular tent over every
// excluded puncture strictly inside the span. All offsets shrink geometrically
// with the level so deeper curves nest strictly inside shallower ones.
Polyline standard_curve(const std::vector<int>& subset, int level, int variant,
                        int retry = 0);

// Lays out one curve per factor (first factor on top, level 1), intersects
// everything exactly, checks genericity, and builds the event lists.
// Throws InternalError when the deterministic perturbation retries run out,
// which construction-level invariants make unreachable.
Diagram stack(const std::vector<std::vector<int>>& factors, int n, int variant);

}  // namespace skein
