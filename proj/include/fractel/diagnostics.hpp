#ifndef FRACTEL_DIAGNOSTICS_HPP
#define FRACTEL_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "fractel/stationary.hpp"
#include "fractel/telegraph.hpp"

namespace fractel {

/// The decay-constant chain. C_hat is the single computable surrogate for
/// the embedding constants the estimates leave unspecified; every value
/// carries a provenance note saying how it was produced.
struct ConstantChain {
  double C_hat = 0.0;
  double theta0 = 0.0;
  double theta1 = 0.0;  // 2^{p+} theta0
  double theta2 = 0.0;
  double C_tilde = 0.0;
  double C4 = 0.0;
  double Theta = 0.0;        // theorem-statement constant
  double Theta_proof = 0.0;  // proof-end variant, extra factor p+/2^{3-p+}
  double g_norm_conj = 0.0;  // ||g||_{p'(.)}
  double E0 = 0.0;
  std::vector<std::string> provenance;
};

/// theta0 = 2|E(0)| + 2 C_hat max{ ||g||^{p'+}, ||g||^{p'-} } with Luxemburg
/// norms in the conjugate exponent.
double theta0(const ProblemSetup& setup, double E0, double C_hat);

/// phi(t) = 1/2 int (u - u*)^2 dx.
double half_l2_distance(const GridFunction& u, const GridFunction& u_star);

/// G(t) = int( w^2/(2 eps) + w w_t + eps w_t^2 ) + 2 I(u) - 2 I(u*),
/// w = u - u*, w_t = u_t.
double error_functional_G(const SimulationState& state,
                          const ProblemSetup& setup,
                          const GridFunction& u_star, double I_star);

struct ConvexityGap {
  double lhs = 0.0;  // (2^{2-p+}/p+) int |Dw|^{p(x)}
  double rhs = 0.0;  // I(u) - I(u*)
};
ConvexityGap convexity_gap_check(const GridFunction& u,
                                 const GridFunction& u_star,
                                 const ProblemSetup& setup);

/// Evaluates the whole chain on a computed trajectory and stationary
/// solution. Every surrogated constant is flagged in the provenance notes.
ConstantChain constant_chain(const ProblemSetup& setup,
                             const Trajectory& trajectory,
                             const StationaryResult& star);

struct DecayRow {
  double t = 0.0;
  double lhs = 0.0;            // int |Du(.,t) - Du*|^{p(x)} dx
  double bound_theorem = 0.0;  // Theta t^{1/(1-p+)}
  double bound_proof = 0.0;
  bool pass_theorem = true;
  bool pass_proof = true;
};

struct DecayReport {
  std::vector<DecayRow> rows;       // every recorded time
  double t_min = 1.0;               // rows with t >= t_min are judged
  int judged = 0;
  int failed_theorem = 0;
  int failed_proof = 0;
  double fitted_exponent = 0.0;     // log-log tail slope of lhs
  bool fit_valid = false;
  double final_ut_l2sq = 0.0;       // Lemma 4 (i) indicator
  double final_modular_gap = 0.0;   // Lemma 4 (ii) indicator
  double final_energy_gap = 0.0;    // |I(u(T)) - I(u*)|, Lemma 3 indicator
};

DecayReport decay_bound_report(const Trajectory& trajectory,
                               const ProblemSetup& setup,
                               const StationaryResult& star,
                               const ConstantChain& chain, double t_min = 1.0);

/// G(t) per recorded sample.
std::vector<double> g_functional_series(const Trajectory& trajectory,
                                        const ProblemSetup& setup,
                                        const StationaryResult& star);

/// lhs int|Du - Du*|^{p} per recorded sample.
std::vector<double> decay_lhs_series(const Trajectory& trajectory,
                                     const ProblemSetup& setup,
                                     const GridFunction& u_star);

/// (3/2) int_0^T int_0^t int |u_t|^2 e^{(tau-t)/eps} dx dtau dt by discrete
/// double time-quadrature over the recorded samples; its bound (3 eps/4) theta0.
struct AffirmationCheck {
  double lhs = 0.0;
  double bound = 0.0;
  bool pass = false;
};
AffirmationCheck affirmation_check(const Trajectory& trajectory,
                                   const ProblemSetup& setup,
                                   const ConstantChain& chain);

/// Cumulative time integral of a recorded per-sample quantity (trapezoid
/// over the recorded times).
std::vector<double> cumulative_time_integral(const Trajectory& trajectory,
                                             const std::vector<double>& values);

}  // namespace fractel

#endif
