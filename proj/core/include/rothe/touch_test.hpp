#pragma once

#include "rothe/rothe_driver.hpp"

namespace rothe {

/// Spot check that a time-marched candidate behaves like a (discrete)
/// viscosity solution: random space-time quadratics with a definite pointwise
/// residual sign are shifted to touch the candidate over a local space-time
/// window; a touch at a point strictly inside the window contradicts the
/// candidate's implicit step equation, so any such touch where the quadratic's
/// own discrete residual keeps its sign convicts the candidate.
struct TouchTestConfig {
  int trials = 200;
  unsigned long long seed = 12345;
  int window_radius = 2;     // 5 nodes per axis
  double q_range = 2.0;      // |Q entries| bound
  double b_range = 1.0;      // |gradient coefficient| bound per axis
  double beta_range = 1.0;   // |time slope| bound
  double eps0 = 0.1;         // required residual margin for a trial to qualify
  double jet_jitter = 0.3;   // sampling spread around the candidate's local jet
  double candidate_scale = 1.0;  // != 1 produces a deliberate negative control
};

struct TouchTrial {
  bool qualified = false;      // residual sign condition held on the window
  bool subsolution_side = true;  // direction drawn: residual >= eps0, touch above
  bool interior_touch = false;
  bool failed = false;         // interior touch whose discrete residual kept sign
  double contradiction = 0;    // discrete step residual of the quadratic at touch
};

struct TouchTestReport {
  int trials = 0;
  int qualified = 0;
  int discarded = 0;
  int interior_touches = 0;
  int failed = 0;
  std::vector<TouchTrial> detail;

  bool pass() const { return failed == 0; }
};

/// Requires a marched sequence with >= 3 levels and a grid wide enough for
/// the window.  Trials are seeded individually (seed + index) so the report
/// does not depend on evaluation order.
TouchTestReport viscosity_touch_test(const EllipticOperator& op,
                                     const Discretization& disc,
                                     const RotheSequence& seq,
                                     const TouchTestConfig& cfg);

}  // namespace rothe
