#ifndef FRACTEL_TELEGRAPH_HPP
#define FRACTEL_TELEGRAPH_HPP

#include <Eigen/Core>
#include <memory>
#include <vector>

#include "fractel/frac_ops.hpp"
#include "fractel/grid.hpp"
#include "fractel/varexp.hpp"

namespace fractel {

/// Interior nodal hat functions vanishing at both endpoints, together with
/// the discrete machinery every right-hand-side evaluation needs.
///
/// All L^2 pairings use the same composite-trapezoid rule as the energy and
/// the varexp module, so the semi-discrete system has an exact energy
/// identity: d/dt(E_kin + E_pot) = int g u_t - int u_t^2 holds at the ODE
/// level. The quadrature Gram matrix of the hats is therefore diagonal.
struct Basis {
  Eigen::Index n = 0;                 // interior function count
  Eigen::MatrixXd frac_deriv;         // N x n, column k = D phi_k on the grid
  Eigen::MatrixXd frac_deriv_full;    // N x N left Hilfer matrix
  Eigen::VectorXd mass_diag;          // n, trapezoid Gram diagonal
  Eigen::VectorXd weights;            // N, trapezoid weights
};

struct ProblemSetup {
  GridPtr grid;
  PsiMap psi;
  FracOrder order;
  ExponentField p;
  double epsilon = 1.0;
  GridFunction g;       // static forcing
  GridFunction u0, u1;  // initial displacement and velocity
  Basis basis;

  Eigen::VectorXd load_g;      // n, trapezoid pairing of g with each hat
  double dt_cap = 0.0;         // stability cap for explicit stepping

  Eigen::Index interior() const { return basis.n; }
};

/// Validates the data (epsilon > 0, u0 vanishing at the endpoints,
/// alpha > 1/p(x) nodewise, psi valid on the grid), assembles the basis and
/// the stability cap. Throws std::invalid_argument on violations.
ProblemSetup make_problem_setup(GridPtr grid, const PsiMap& psi,
                                const FracOrder& order, const ExponentField& p,
                                double epsilon, GridFunction g,
                                GridFunction u0, GridFunction u1);

struct SimulationState {
  double t = 0.0;
  Eigen::VectorXd coeffs;      // interior nodal values of u
  Eigen::VectorXd velocities;  // interior nodal values of u_t
};

/// Reconstruction with exact zero boundary values.
GridFunction reconstruct(const Eigen::VectorXd& interior,
                         const ProblemSetup& setup);

/// L^2 projection of the initial data onto the hat space (diagonal mass
/// solve; equals nodal interpolation in the trapezoid Gram).
SimulationState project_initial(const ProblemSetup& setup);

/// Accelerations a with mass * (epsilon * a) = -S(u) + G - D(u_t), where
/// S_k = int |Du|^{p(x)-2} (Du)(D phi_k) dx. The stiffness enters with a
/// negative sign so the energy identity dissipates.
Eigen::VectorXd galerkin_rhs(const SimulationState& state,
                             const ProblemSetup& setup);

/// One classical RK4 step of the first-order system. Requires
/// 0 < dt <= setup.dt_cap. Aborts (std::runtime_error) if any coefficient
/// exceeds 1e12 in magnitude.
SimulationState step(const SimulationState& state, const ProblemSetup& setup,
                     double dt);

struct TrajectorySample {
  double t = 0.0;
  Eigen::VectorXd coeffs;
  Eigen::VectorXd velocities;
  double energy = 0.0;            // full three-term energy E(t)
  double kinetic_potential = 0.0; // E(t) without the forcing term
  double dissipation = 0.0;       // int |u_t|^2 at this instant
  double forcing_power = 0.0;     // int g u_t at this instant
  double balance_residual = 0.0;  // interval residual against previous sample
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double dt = 0.0;          // actual step used
  Eigen::Index steps = 0;   // total steps taken
};

/// Integrates to horizon T. dt <= 0 selects the stability cap; an explicit
/// dt above the cap is rejected. record_stride 0 targets about 2000 samples.
/// The balance residual of sample i is
///   |d(E_kin+E_pot)/dt + avg dissipation - avg forcing power|
/// with the time derivative and averages taken over [t_{i-1}, t_i].
Trajectory simulate(const ProblemSetup& setup, double T, double dt,
                    Eigen::Index record_stride = 0);

/// Three-term energy from explicit displacement/velocity fields:
///   eps/2 int|ut|^2 + int (1/p)|Du|^{p(x)} - int u g, composite trapezoid.
double energy(const GridFunction& u, const GridFunction& ut,
              const ProblemSetup& setup);
double energy(const SimulationState& state, const ProblemSetup& setup);

/// Potential part int (1/p)|Du|^{p(x)} dx of an interior coefficient vector.
double potential_energy(const Eigen::VectorXd& coeffs,
                        const ProblemSetup& setup);

}  // namespace fractel

#endif
