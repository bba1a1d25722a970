#ifndef FRACTEL_STATIONARY_HPP
#define FRACTEL_STATIONARY_HPP

#include <Eigen/Core>
#include <vector>

#include "fractel/telegraph.hpp"

namespace fractel {

struct StationaryResult {
  GridFunction u_star;
  double value = 0.0;        // I(u*)
  double el_residual = 0.0;  // sup norm of the discrete gradient
  int iterations = 0;
  bool converged = false;
};

/// I(v) = int (1/p)|D v|^{p(x)} dx - int g v dx for boundary-vanishing v.
double stationary_energy(const GridFunction& v, const ProblemSetup& setup);

/// Discrete gradient of I with respect to the interior nodal values,
/// assembled through the same weak pairing as the time-dependent stiffness.
/// Boundary entries of the returned function are zero.
GridFunction stationary_gradient(const GridFunction& v,
                                 const ProblemSetup& setup);

struct StationarySolveOptions {
  double tol = 1e-8;     // sup-norm gradient tolerance
  int max_iters = 200000;
  std::vector<double>* value_trace = nullptr;  // optional descent history
};

/// Gradient descent with Armijo backtracking (shrink 0.5, slope 1e-4) from
/// v = 0. The discrete functional is convex (p^- >= 2), so the stationary
/// point is the global minimizer. Non-convergence is flagged, not thrown.
StationaryResult solve_stationary(const ProblemSetup& setup,
                                  const StationarySolveOptions& opts = {});

}  // namespace fractel

#endif
