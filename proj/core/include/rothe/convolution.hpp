#pragma once

#include "rothe/grid.hpp"

namespace rothe {

/// u^eps(x) = max_y [ u(y) - |x - y|^2 / (2 eps) ], the max taken over every
/// lattice node of the closed grid -- interior values plus the zero boundary
/// layer -- by exhaustive scan.  Produces the semiconvex upper envelope used
/// by the regularization diagnostics.
GridFunction sup_convolution(const GridFunction& u, double eps);

/// u_eps(x) = min_y [ u(y) + |x - y|^2 / (2 eps) ].
GridFunction inf_convolution(const GridFunction& u, double eps);

/// Same envelopes evaluated at an arbitrary point (boundary evaluation).
double sup_convolution_value(const GridFunction& u, const Vec& x, double eps);
double inf_convolution_value(const GridFunction& u, const Vec& x, double eps);

}  // namespace rothe
