// Greedy Reidemeister I/II reduction.
#pragma once

#include "lensball/diagram.hpp"

namespace lensball {

struct SimplifyStats {
  int r1 = 0;
  int r2 = 0;
  int r3 = 0;
};

/// Removes every marker except one per crossingless loop.
PDCode strip_markers(const PDCode& d);

/// One Reidemeister I move if any kink exists.
bool r1_step(PDCode& d);
/// One Reidemeister II move if any bigon bounded by an over-over strand exists.
bool r2_step(PDCode& d);

/// Reidemeister III across the triangular face to the left of h, if that face
/// has three distinct crossings and one side passes over (or under) at both
/// of its ends. Returns false and leaves d alone otherwise.
bool r3_move(PDCode& d, int h);
/// One R3 move that makes an R1 or R2 move available, if any exists.
bool untongue_step(PDCode& d);
/// Applies R1 and R2 moves until none is left. Markers are stripped.
PDCode simplify(const PDCode& d, SimplifyStats* stats = nullptr);
/// simplify, then alternates untongue steps with simplify while that helps.
PDCode simplify_with_r3(const PDCode& d, SimplifyStats* stats = nullptr);

}  // namespace lensball
