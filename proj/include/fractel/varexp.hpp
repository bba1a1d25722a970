#ifndef FRACTEL_VAREXP_HPP
#define FRACTEL_VAREXP_HPP

#include <Eigen/Core>

#include "fractel/frac_ops.hpp"
#include "fractel/grid.hpp"

namespace fractel {

/// Variable exponent p(x) with 2 <= p^- <= p(x) <= p^+ < inf.
/// The extremes are recomputed from the nodal values.
struct ExponentField {
  GridPtr grid;
  Eigen::VectorXd values;
  double p_minus = 2.0;
  double p_plus = 2.0;

  bool is_constant() const { return p_minus == p_plus; }
};

ExponentField make_exponent_field(const GridPtr& grid, Eigen::VectorXd values);
ExponentField constant_exponent(const GridPtr& grid, double p);

/// Conjugate exponent p'(x) = p(x)/(p(x)-1).
struct ConjugateExponentField {
  GridPtr grid;
  Eigen::VectorXd values;
  double p_minus = 2.0;
  double p_plus = 2.0;
};

ConjugateExponentField conjugate(const ExponentField& p);

/// Modular rho(u) = int |u(x)|^{p(x)} dx, composite trapezoid.
double modular(const GridFunction& u, const ExponentField& p);
double modular(const GridFunction& u, const ConjugateExponentField& p);

/// Luxemburg norm inf{ mu > 0 : rho(u/mu) <= 1 } by bisection; the modular
/// is strictly decreasing in mu for u != 0. Absolute tolerance 1e-12 on mu.
double luxemburg_norm(const GridFunction& u, const ExponentField& p);
double luxemburg_norm(const GridFunction& u, const ConjugateExponentField& p);

/// lhs = |int u v dx|, rhs = 2 ||u||_{p(x)} ||v||_{p'(x)}.
struct HolderBound {
  double lhs = 0.0;
  double rhs = 0.0;
};
HolderBound holder_bound_check(const GridFunction& u, const GridFunction& v,
                               const ExponentField& p);

/// Norm-modular relation: ||u|| >= 1 implies ||u||^{p-} <= rho(u) <= ||u||^{p+},
/// reversed for ||u|| < 1. slack is the most negative margin of the chain.
struct ModularNormReport {
  double norm = 0.0;
  double mod = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double slack = 0.0;
  bool pass = false;
};
ModularNormReport modular_norm_relation_check(const GridFunction& u,
                                              const ExponentField& p);

struct PoincareProbeStats {
  int probes = 0;
  int degenerate_skipped = 0;
  double max_ratio = 0.0;
};

/// Numerical estimate of C in ||u||_{p(.)} <= C ||D^{alpha,beta;psi} u||_{p(.)}:
/// max of the ratio over the first 20 sine modes and 200 seeded random smooth
/// boundary-vanishing probes, times a 1.25 safety factor. Stands in for the
/// otherwise unspecified embedding constants in the decay-constant chain.
double poincare_constant_estimate(const FracOrder& order, const PsiMap& psi,
                                  const ExponentField& p, const GridPtr& grid,
                                  PoincareProbeStats* stats = nullptr,
                                  std::uint64_t seed = 0x5eedf00dULL);

}  // namespace fractel

#endif
