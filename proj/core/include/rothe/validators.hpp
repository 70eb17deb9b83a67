#pragma once

#include <cstdint>
#include <string>

#include "rothe/elliptic_operator.hpp"

namespace rothe {

/// Outcome of a randomized structure-condition search.  The conditions are
/// universally quantified, so the samplers can only falsify them; a negative
/// worst margin comes with the witness that produced it.
struct StructureReport {
  bool pass = true;
  double worst_lower_margin = 0;  // min over samples of (difference - lower bound)
  double worst_upper_margin = 0;  // min over samples of (upper bound - difference)
  int samples = 0;
  std::string witness;  // description of the violating sample, if any
};

/// Uniform ellipticity: for random (M,p,r,x,t) and random positive definite N,
///   -Lambda ||N|| <= F(M+N,...) - F(M,...) <= -lambda ||N||.
/// ||N|| is the nuclear norm (= Tr(N) for positive definite N); see the
/// project notes for why this is the convention consistent with the Pucci
/// bracketing.
StructureReport check_uniform_ellipticity(const EllipticOperator& op,
                                          int sample_count, std::uint64_t seed);

/// Two-sided structure condition: for random pairs (M,P,r), (N,Q,s) with
/// |r|,|s| <= R,
///   P^-(M-N) - gamma|P-Q| - omega_R((s-r)+)
///     <= F(M,P,r,x,t) - F(N,Q,s,x,t)
///     <= P^+(M-N) + gamma|P-Q| + omega_R((r-s)+).
StructureReport check_structure_condition(const EllipticOperator& op, double R,
                                          int sample_count, std::uint64_t seed);

/// Boundedness on compact sets: F finite on a random compact sample set.
StructureReport check_boundedness(const EllipticOperator& op, int sample_count,
                                  std::uint64_t seed);

}  // namespace rothe
