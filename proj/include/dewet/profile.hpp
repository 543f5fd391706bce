#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dewet/params.hpp"

namespace dewet {

// Island profile: contact points plus nodal heights on the uniform grid
// x_j = alpha + j*(beta-alpha)/(n-1). Values are immutable after
// construction; operations return new objects.
struct Profile {
  double alpha = 0.0;
  double beta = 1.0;
  std::vector<double> h;

  std::size_t n() const { return h.size(); }
  double width() const { return beta - alpha; }
  double dx() const { return (beta - alpha) / double(h.size() - 1); }
  double x(std::size_t j) const { return alpha + double(j) * dx(); }
  std::vector<double> grid() const;

  // Piecewise-linear evaluation of the zero extension.
  double value(double x) const;
  // Exact integral of the zero extension over (-inf, x].
  double mass_below(double x) const;
};

struct ValidationCheck {
  std::string name;
  bool pass;
  double slack;  // >= 0 means satisfied with this margin
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool pass = false;
  std::string summary() const;
};

struct CumulativeMass {
  std::vector<double> grid;  // shared abscissae, sorted
  std::vector<double> H;     // running integral of the zero-extended profile
};

// Admissibility of (alpha, beta, h): endpoint zeros, nonnegativity,
// discrete Lipschitz cap, trapezoid area A0, and the width lower bound
// beta - alpha >= sqrt(2 A0 / L0).
ValidationReport validate_admissible(const Profile& p,
                                     const PhysicalParams& params,
                                     double area_rtol = 1e-10);

// Trapezoid-rule area; exact for the piecewise-linear profile.
double area(const Profile& p);

// Largest |h_{j+1}-h_j|/dx.
double lipschitz_constant(const Profile& p);

struct Interval {
  double lo;
  double hi;
};

// Cumulative mass H on the sorted union of this profile's nodes, the other
// support's endpoints, and the other grid's nodes when supplied.
CumulativeMass cumulative_mass(const Profile& p, Interval other_support,
                               std::span<const double> other_nodes = {});

// Nodal derivative of the given order: central stencils in the interior,
// second-order one-sided stencils at and near the endpoints.
// order in {1,2,3}; requires n >= 2*order + 1 (GridTooCoarse otherwise).
std::vector<double> discrete_derivatives(const Profile& p, int order);

// Same stencils applied to an arbitrary nodal array on the profile's grid.
std::vector<double> discrete_derivatives(std::span<const double> values,
                                         double dx, int order);

struct ResampleResult {
  Profile profile;
  double renorm_factor;  // vertical scaling applied to restore area A0
};

// Monotone-cubic resampling of the zero extension onto a new uniform grid;
// endpoints clamped to zero, then vertical renormalization to area A0.
ResampleResult resample(const Profile& p, double new_alpha, double new_beta,
                        std::size_t n, double A0);

// Named initial shapes. Both renormalize the trapezoid area to exactly A0.
Profile make_triangle(double center, double width, std::size_t n, double A0);
// Single cosine arch: nonzero contact slopes, positive interior.
Profile make_cosine_bump(double center, double width, std::size_t n, double A0);

// Deterministic admissible profile for property tests: perturbed cosine
// arch with slopes at most frac*L0 and exact area.
Profile random_admissible_profile(class Rng& rng, const PhysicalParams& params,
                                  std::size_t n, double slope_fraction = 0.85);

}  // namespace dewet
