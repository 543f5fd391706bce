#pragma once

#include <vector>

#include "dewet/profile.hpp"

namespace dewet {

// Intrinsic geometry of the graph of h.
struct SurfaceGeometry {
  std::vector<double> s;      // arclength at nodes, s[0] = 0
  std::vector<double> J;      // sqrt(1 + h'^2)
  std::vector<double> kappa;  // signed curvature h''/J^3
  double theta_alpha = 0.0;   // oriented contact angles
  double theta_beta = 0.0;
};

// gamma * integral J - gamma0 * (beta-alpha)
//   + nu0/2 * integral h''^2 / (1+h'^2)^(5/2),
// composite trapezoid on the nodal grid.
double surface_energy(const Profile& p, const PhysicalParams& params);

// Exact gradient of the discrete surface energy.
// dh holds d/dh_j for interior nodes j = 1..n-2; d_alpha and d_beta are the
// derivatives under the grid-stretch parameterization (nodal values fixed,
// x_j = alpha + j*(beta-alpha)/(n-1)).
struct SurfaceGradient {
  std::vector<double> dh;  // size n, entries 0 and n-1 are zero
  double d_alpha = 0.0;
  double d_beta = 0.0;
};

// Throws Error(DegenerateSlope) if either endpoint slope is below 1e-8 in
// magnitude (the boundary force normalization degenerates there).
SurfaceGradient surface_gradient(const Profile& p, const PhysicalParams& params);

SurfaceGeometry geometry(const Profile& p);

}  // namespace dewet
