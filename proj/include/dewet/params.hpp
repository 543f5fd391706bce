#pragma once

#include <string>
#include <vector>

namespace dewet {

// Model constants. rho0 is the mobility, renormalized to one.
struct PhysicalParams {
  double gamma = 1.0;    // film/vapor surface density
  double gamma0 = 0.5;   // vapor/substrate minus film/substrate density
  double sigma0 = 1.0;   // contact-point drag
  double nu0 = 0.05;     // curvature regularization
  double A0 = 1.0;       // island area
  double e0 = 0.2;       // mismatch strain (0 allowed for degenerate tests)
  double lambda = 1.0;   // Lame modulus
  double mu = 1.0;       // Lame modulus, > 0
  double L0 = 2.0;       // Lipschitz cap, >= 1
  double rho0 = 1.0;     // fixed

  // Returns human-readable violations; empty means valid.
  std::vector<std::string> violations() const;
  bool valid() const { return violations().empty(); }
  // Throws Error(AdmissibilityError) listing all violations.
  void require_valid() const;
};

}  // namespace dewet
