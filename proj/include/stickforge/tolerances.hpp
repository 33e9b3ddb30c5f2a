#pragma once

namespace stickforge {

/// Every floating-point threshold of the equilateral pipeline.  Relative
/// values are multiplied by the stick length M.
struct Tolerances {
  double length_rel = 1e-9;        // |length - M| <= length_rel * M
  double clearance_rel = 1e-6;     // non-adjacent sticks at least this far apart
  double node_rel = 1e-9;          // stick ends vs. their node positions
  double axis_approach_rel = 1e-3; // rotated e_1 ends this close to the axis
  double bisection_rel = 1e-12;    // rotation-angle bracket width
  double sweep_step_rad = 1e-2;    // certificate sampling of rotations
  int sweep_min_samples = 100;     // certificate sampling of the glue slide
  double sweep_floor_rel = 1e-12;  // sampled sweep distances must exceed this
  double page_residual_rad = 1e-12;
  int max_retries = 8;             // M doubles on each retry
};

}  // namespace stickforge
