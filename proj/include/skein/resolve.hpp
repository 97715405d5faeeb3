#pragma once

#include "skein/geometry.hpp"
#include "skein/skein_element.hpp"

namespace skein {

struct ResolveOptions {
  long long max_states = 1LL << 24;
  // Swaps the two smoothing weights; the default is pinned by the
  // calibration test and must not change.
  bool flip_smoothing_convention = false;
};

SkeinElement resolve_diagram(const Diagram& d, const ResolveOptions& opt = {});

}  // namespace skein
